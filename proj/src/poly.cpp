#include "curvesys/poly.hpp"

#include <sstream>

namespace curvesys {

Poly::Poly(FieldPtr f, std::vector<FieldElement> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!same_field(c.field(), field_)) fail(ErrorCode::DescriptorMismatch, "polynomial coefficient outside " + field_->name());
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const FieldPtr& f) { return monomial(FieldElement::one(f), 1); }

Poly Poly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(degree + 1, FieldElement::zero(c.field()));
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear_root(const FieldElement& root) {
  return Poly(root.field(), {-root, FieldElement::one(root.field())});
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement::zero(field_);
  return coeffs_[i];
}

FieldElement Poly::lead() const {
  require(!is_zero(), ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lead().inverse() * *this;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(field_);
  std::vector<FieldElement> d;
  d.reserve(coeffs_.size() - 1);
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * FieldElement::from_int(field_, i));
  return Poly(field_, std::move(d));
}

FieldElement Poly::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(x.field());
  for (int i = degree(); i >= 0; --i) {
    acc *= x;
    acc += coeffs_[i].embed(x.field());
  }
  return acc;
}

Poly Poly::embed(const FieldPtr& target) const {
  std::vector<FieldElement> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.embed(target));
  return Poly(target, std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!same_field(field_, o.field_)) fail(ErrorCode::DescriptorMismatch, "polynomial fields differ");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!same_field(field_, o.field_)) fail(ErrorCode::DescriptorMismatch, "polynomial fields differ");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!same_field(a.field_, b.field_)) fail(ErrorCode::DescriptorMismatch, "polynomial fields differ");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly operator*(const FieldElement& c, const Poly& a) {
  Poly r = a;
  for (auto& v : r.coeffs_) v *= c;
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !coeffs_[i].is_one()) os << "(" << coeffs_[i].to_string() << ")";
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!same_field(a.field(), b.field())) fail(ErrorCode::DescriptorMismatch, "polynomial fields differ");
  const FieldPtr& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(a.degree() - b.degree() + 1, FieldElement::zero(f));
  const FieldElement lead_inv = b.lead().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    FieldElement c = r[i] * lead_inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db > 0 ? db : 0, FieldElement::zero(f));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a_in, const Poly& b_in) {
  Poly a = a_in, b = b_in;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m) {
  Poly result = Poly::constant(FieldElement::one(m.field())) % m;
  Poly base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
  }
  return result;
}

Poly pow(const Poly& a, int e) {
  Poly result = Poly::constant(FieldElement::one(a.field()));
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement resultant(const Poly& f_in, const Poly& g_in) {
  require(!f_in.is_zero() && !g_in.is_zero(), ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  const FieldPtr& F = f_in.field();
  Poly f = f_in, g = g_in;
  FieldElement acc = FieldElement::one(F);
  // Res(f, g) = (-1)^(deg f deg g) lc(g)^(deg f - deg r) Res(g, r), r = f mod g.
  while (g.degree() > 0) {
    Poly r = f % g;
    if (r.is_zero()) return FieldElement::zero(F);
    const int df = f.degree(), dg = g.degree(), dr = r.degree();
    if ((df * dg) % 2 == 1) acc = -acc;
    acc *= g.lead().pow(static_cast<std::uint64_t>(df - dr));
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: Res(f, c) = c^deg f.
  return acc * g.lead().pow(static_cast<std::uint64_t>(f.degree()));
}

FieldElement resultant_formal(const Poly& f, int nf, const Poly& g, int ng) {
  const FieldPtr& F = f.field();
  require(f.degree() <= nf && g.degree() <= ng, ErrorCode::PreconditionViolation, "formal degree below actual degree");
  if (f.is_zero() || g.is_zero()) return FieldElement::zero(F);
  const bool f_full = f.degree() == nf, g_full = g.degree() == ng;
  if (!f_full && !g_full) return FieldElement::zero(F);
  if (f_full) {
    // Expanding the Sylvester matrix along its leading columns.
    return f.lead().pow(static_cast<std::uint64_t>(ng - g.degree())) * resultant(f, g);
  }
  FieldElement r = g.lead().pow(static_cast<std::uint64_t>(nf - f.degree())) * resultant(f, g);
  // Res_{nf,ng}(f,g) = (-1)^(nf ng) Res_{ng,nf}(g,f), and Res(g,f) = (-1)^(deg f ng) Res(f,g).
  const long sign = static_cast<long>(nf) * ng + static_cast<long>(f.degree()) * ng;
  return sign % 2 ? -r : r;
}

Poly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
  require(xs.size() == ys.size() && !xs.empty(), ErrorCode::PreconditionViolation, "interpolation needs matching nonempty data");
  const FieldPtr F = xs.front().field();
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<FieldElement> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Poly::linear_root(xs[i]) + Poly::constant(dd[i]);
  }
  return result;
}

Poly minimal_polynomial(const FieldElement& a) {
  const FieldPtr& K = a.field();
  require(K->is_finite(), ErrorCode::UnsupportedField, "minimal polynomial needs a finite field");
  Poly acc = Poly::linear_root(a);
  FieldElement conj = a.frobenius();
  while (conj != a) {
    acc = acc * Poly::linear_root(conj);
    conj = conj.frobenius();
  }
  const FieldPtr base = K->prime_subfield();
  std::vector<FieldElement> c;
  for (const auto& v : acc.coeffs()) c.push_back(v.to_prime_subfield());
  return Poly(base, std::move(c));
}

}  // namespace curvesys
