#include "curvesys/forms.hpp"

#include <sstream>

namespace curvesys {

std::vector<Exponent> monomials(int m) {
  std::vector<Exponent> out;
  out.reserve(monomial_count(m));
  for (int i = m; i >= 0; --i)
    for (int j = m - i; j >= 0; --j) out.push_back({i, j, m - i - j});
  return out;
}

int monomial_count(int m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

int monomial_index(const Exponent& e) {
  const int m = e[0] + e[1] + e[2];
  return (m - e[0]) * (m - e[0] + 1) / 2 + e[2];
}

// ---------------------------------------------------------------------------

TernaryForm::TernaryForm(FieldPtr f, int degree) : field_(std::move(f)), degree_(degree) {
  require(degree_ >= 0, ErrorCode::PreconditionViolation, "negative form degree");
}

TernaryForm TernaryForm::constant(const FieldElement& c) {
  TernaryForm f(c.field(), 0);
  f.set({0, 0, 0}, c);
  return f;
}

TernaryForm TernaryForm::variable(const FieldPtr& f, int i) {
  Exponent e{0, 0, 0};
  e[i] = 1;
  return monomial(FieldElement::one(f), e);
}

TernaryForm TernaryForm::monomial(const FieldElement& c, const Exponent& e) {
  TernaryForm f(c.field(), e[0] + e[1] + e[2]);
  f.set(e, c);
  return f;
}

TernaryForm TernaryForm::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  TernaryForm f(a.field(), 1);
  f.set({1, 0, 0}, a);
  f.set({0, 1, 0}, b);
  f.set({0, 0, 1}, c);
  return f;
}

TernaryForm TernaryForm::from_vector(const FieldPtr& f, int degree, const std::vector<FieldElement>& coeffs) {
  require(static_cast<int>(coeffs.size()) == monomial_count(degree), ErrorCode::PreconditionViolation,
          "coefficient vector length does not match degree");
  TernaryForm out(f, degree);
  const auto mons = monomials(degree);
  for (std::size_t i = 0; i < mons.size(); ++i) out.set(mons[i], coeffs[i]);
  return out;
}

FieldElement TernaryForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void TernaryForm::set(const Exponent& e, const FieldElement& c) {
  require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[0] + e[1] + e[2] == degree_, ErrorCode::PreconditionViolation,
          "exponent does not match form degree");
  if (!same_field(c.field(), field_)) fail(ErrorCode::DescriptorMismatch, "form coefficient outside " + field_->name());
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::vector<FieldElement> TernaryForm::to_vector() const {
  std::vector<FieldElement> v(monomial_count(degree_), FieldElement::zero(field_));
  for (const auto& [e, c] : terms_) v[monomial_index(e)] = c;
  return v;
}

namespace {

std::vector<FieldElement> powers(const FieldElement& x, int n) {
  std::vector<FieldElement> p;
  p.reserve(n + 1);
  p.push_back(FieldElement::one(x.field()));
  for (int i = 1; i <= n; ++i) p.push_back(p.back() * x);
  return p;
}

}  // namespace

FieldElement TernaryForm::operator()(const Coords& p) const {
  const FieldPtr& K = p[0].field();
  std::array<std::vector<FieldElement>, 3> pw;
  for (int i = 0; i < 3; ++i) pw[i] = powers(p[i], degree_);
  FieldElement acc = FieldElement::zero(K);
  for (const auto& [e, c] : terms_) acc += c.embed(K) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return acc;
}

TernaryForm TernaryForm::partial(int i) const {
  TernaryForm out(field_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    FieldElement v = c * FieldElement::from_int(field_, e[i]);
    if (!v.is_zero()) out.terms_[d] = v;
  }
  return out;
}

TernaryForm TernaryForm::substitute(const Matrix& m) const {
  require(m.rows() == 3 && m.cols() == 3, ErrorCode::PreconditionViolation, "substitution needs a 3x3 matrix");
  std::array<std::vector<TernaryForm>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    TernaryForm li = linear(m(i, 0), m(i, 1), m(i, 2));
    pw[i].push_back(constant(FieldElement::one(field_)));
    for (int k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * li);
  }
  TernaryForm out(field_, degree_);
  for (const auto& [e, c] : terms_) out += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return out;
}

TernaryForm TernaryForm::embed(const FieldPtr& target) const {
  if (same_field(target, field_)) return *this;
  TernaryForm out(target, degree_);
  for (const auto& [e, c] : terms_) out.terms_[e] = c.embed(target);
  return out;
}

TernaryForm TernaryForm::normalized() const {
  if (is_zero()) return *this;
  return terms_.begin()->second.inverse() * *this;
}

Poly TernaryForm::fiber(const FieldElement& x0) const {
  const FieldPtr& K = x0.field();
  const auto px = powers(x0, degree_);
  std::vector<FieldElement> c(degree_ + 1, FieldElement::zero(K));
  for (const auto& [e, v] : terms_) c[e[1]] += v.embed(K) * px[e[0]];
  return Poly(K, std::move(c));
}

TernaryForm TernaryForm::operator-() const {
  TernaryForm r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (!same_field(field_, o.field_)) fail(ErrorCode::DescriptorMismatch, "form fields differ");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  require(degree_ == o.degree_, ErrorCode::DegreeMismatch, "adding forms of different degrees");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) { return *this += -o; }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  if (!same_field(a.field_, b.field_)) fail(ErrorCode::DescriptorMismatch, "form fields differ");
  TernaryForm out(a.field_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto it = out.terms_.find(e);
      if (it == out.terms_.end())
        out.terms_.emplace(e, ca * cb);
      else
        it->second += ca * cb;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (it->second.is_zero())
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

TernaryForm operator*(const FieldElement& c, const TernaryForm& a) {
  TernaryForm out(a.field_, a.degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, c * v);
  return out;
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
  return same_field(a.field_, b.field_) && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string TernaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names = "xyz";
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare = e == Exponent{0, 0, 0};
    if (!c.is_one() || bare) os << (bare ? "" : "(") << c.to_string() << (bare ? "" : ")");
    bool any = false;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (any || !c.is_one()) os << "*";
      any = true;
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

TernaryForm pow(const TernaryForm& f, int e) {
  TernaryForm acc = TernaryForm::constant(FieldElement::one(f.field()));
  for (int i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(FieldPtr f, int degree)
    : field_(std::move(f)), degree_(degree), c_(degree + 1, FieldElement::zero(field_)) {}

BinaryForm::BinaryForm(FieldPtr f, int degree, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), degree_(degree), c_(std::move(coeffs)) {
  require(static_cast<int>(c_.size()) == degree_ + 1, ErrorCode::PreconditionViolation, "binary form length mismatch");
}

BinaryForm BinaryForm::linear(const FieldElement& a, const FieldElement& b) { return BinaryForm(a.field(), 1, {a, b}); }

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

FieldElement BinaryForm::operator()(const FieldElement& s, const FieldElement& t) const {
  const auto ps = powers(s, degree_), pt = powers(t, degree_);
  FieldElement acc = FieldElement::zero(s.field());
  for (int k = 0; k <= degree_; ++k) acc += c_[k].embed(s.field()) * ps[degree_ - k] * pt[k];
  return acc;
}

Poly BinaryForm::dehomogenize() const {
  std::vector<FieldElement> v(degree_ + 1, FieldElement::zero(field_));
  for (int k = 0; k <= degree_; ++k) v[degree_ - k] = c_[k];
  return Poly(field_, std::move(v));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.field_, a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  require(a.degree_ == b.degree_, ErrorCode::DegreeMismatch, "adding binary forms of different degrees");
  BinaryForm out = a;
  for (int i = 0; i <= a.degree_; ++i) out.c_[i] += b.c_[i];
  return out;
}

BinaryForm operator*(const FieldElement& k, const BinaryForm& a) {
  BinaryForm out = a;
  for (auto& c : out.c_) c *= k;
  return out;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return same_field(a.field_, b.field_) && a.degree_ == b.degree_ && a.c_ == b.c_;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].to_string() << ")";
    if (degree_ - k) os << "*s^" << degree_ - k;
    if (k) os << "*t^" << k;
  }
  return first ? "0" : os.str();
}

BinaryForm restrict_to_param(const TernaryForm& f, const Coords& a, const Coords& b) {
  const FieldPtr& K = a[0].field();
  const int m = f.degree();
  std::array<std::vector<BinaryForm>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    BinaryForm li = BinaryForm::linear(a[i], b[i]);
    pw[i].push_back(BinaryForm(K, 0, {FieldElement::one(K)}));
    for (int k = 1; k <= m; ++k) pw[i].push_back(pw[i].back() * li);
  }
  BinaryForm out(K, m);
  for (const auto& [e, c] : f.terms()) out = out + c.embed(K) * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return out;
}

RootReconstruction reconstruct_from_roots(const std::vector<std::pair<FieldElement, int>>& roots, int m) {
  require(m >= 1, ErrorCode::DegreeMismatch, "degree must be at least 1");
  require(!roots.empty(), ErrorCode::DegreeMismatch, "no roots given for degree " + std::to_string(m));
  int total = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    require(roots[i].second >= 1, ErrorCode::DegreeMismatch, "root multiplicities must be positive");
    total += roots[i].second;
    for (std::size_t j = 0; j < i; ++j)
      require(roots[i].first != roots[j].first, ErrorCode::DuplicateRoots, "root " + roots[i].first.to_string() + " repeated");
  }
  require(total == m, ErrorCode::DegreeMismatch,
          "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(m));
  const FieldPtr& F = roots.front().first.field();
  Poly acc = Poly::constant(FieldElement::one(F));
  FieldElement prod = FieldElement::one(F), sum = FieldElement::zero(F);
  for (const auto& [x, mult] : roots) {
    acc = acc * pow(Poly::linear_root(x), mult);
    prod *= x.pow(static_cast<std::uint64_t>(mult));
    sum += FieldElement::from_int(F, mult) * x;
  }
  RootReconstruction out{acc, m % 2 ? -prod : prod, -sum};
  require(acc.coeff(0) == out.a0 && acc.coeff(m - 1) == out.a_top, ErrorCode::InvariantViolation,
          "coefficient identities failed for reconstructed polynomial");
  return out;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(FieldPtr f, int precision)
    : field_(std::move(f)), n_(precision), c_(precision, FieldElement::zero(field_)) {}

TruncatedSeries::TruncatedSeries(FieldPtr f, int precision, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), n_(precision), c_(std::move(coeffs)) {
  c_.resize(n_, FieldElement::zero(field_));
}

TruncatedSeries TruncatedSeries::constant(const FieldElement& c, int precision) {
  TruncatedSeries s(c.field(), precision);
  if (precision > 0) s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::shifted_variable(const FieldElement& c, int precision) {
  TruncatedSeries s = constant(c, precision);
  if (precision > 1) s.c_[1] = FieldElement::one(c.field());
  return s;
}

std::optional<int> TruncatedSeries::valuation() const {
  for (int i = 0; i < n_; ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(int precision) const {
  TruncatedSeries s(field_, precision);
  for (int i = 0; i < precision && i < n_; ++i) s.c_[i] = c_[i];
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  require(n_ > 0 && !c_[0].is_zero(), ErrorCode::DivisionByZero, "series with zero constant term is not invertible");
  TruncatedSeries inv(field_, n_);
  const FieldElement c0 = c_[0].inverse();
  inv.c_[0] = c0;
  for (int k = 1; k < n_; ++k) {
    FieldElement acc = FieldElement::zero(field_);
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * inv.c_[k - j];
    inv.c_[k] = -acc * c0;
  }
  return inv;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  n_ = std::min(n_, o.n_);
  c_.resize(n_);
  for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  n_ = std::min(n_, o.n_);
  c_.resize(n_);
  for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.n_, b.n_);
  TruncatedSeries out(a.field_, n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j)
      if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedSeries operator*(const FieldElement& k, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& c : out.c_) c *= k;
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return same_field(a.field_, b.field_) && a.n_ == b.n_ && a.c_ == b.c_;
}

TruncatedSeries compose(const TernaryForm& f, const std::array<TruncatedSeries, 3>& xyz) {
  const FieldPtr& K = xyz[0].field();
  const int n = std::min({xyz[0].precision(), xyz[1].precision(), xyz[2].precision()});
  const int m = f.degree();
  std::array<std::vector<TruncatedSeries>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(TruncatedSeries::constant(FieldElement::one(K), n));
    for (int k = 1; k <= m; ++k) pw[i].push_back(pw[i].back() * xyz[i]);
  }
  // Group by the x exponent: sum_i X^i * (sum_j c Y^j Z^k).
  std::vector<TruncatedSeries> inner(m + 1, TruncatedSeries(K, n));
  std::vector<bool> used(m + 1, false);
  for (const auto& [e, c] : f.terms()) {
    inner[e[0]] += c.embed(K) * (pw[1][e[1]] * pw[2][e[2]]);
    used[e[0]] = true;
  }
  TruncatedSeries acc(K, n);
  for (int i = 0; i <= m; ++i)
    if (used[i]) acc += pw[0][i] * inner[i];
  return acc;
}

std::array<TruncatedSeries, 3> Branch::homogeneous() const {
  const int n = affine[0].precision();
  const FieldPtr& K = affine[0].field();
  std::array<TruncatedSeries, 3> out{affine[0], affine[0], affine[0]};
  int k = 0;
  for (int i = 0; i < 3; ++i) out[i] = i == chart ? TruncatedSeries::constant(FieldElement::one(K), n) : affine[k++];
  return out;
}

Coords normalize_coords(const Coords& p) {
  for (int i = 2; i >= 0; --i) {
    if (p[i].is_zero()) continue;
    const FieldElement inv = p[i].inverse();
    return {p[0] * inv, p[1] * inv, p[2] * inv};
  }
  fail(ErrorCode::PreconditionViolation, "(0:0:0) is not a projective point");
}

Branch branch_expansion(const TernaryForm& c_in, const Coords& p_in, int precision) {
  require(precision >= 1, ErrorCode::PreconditionViolation, "series precision must be positive");
  const FieldPtr& K = p_in[0].field();
  const TernaryForm c = c_in.embed(K);
  require(c(p_in).is_zero(), ErrorCode::PointNotOnCurve, "point is not on the curve");
  int chart = -1;
  for (int i : {2, 1, 0})
    if (!p_in[i].is_zero()) {
      chart = i;
      break;
    }
  require(chart >= 0, ErrorCode::PreconditionViolation, "(0:0:0) is not a projective point");
  const FieldElement inv = p_in[chart].inverse();
  const Coords p{p_in[0] * inv, p_in[1] * inv, p_in[2] * inv};
  std::array<int, 2> vars{};
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != chart) vars[k++] = i;
  // Parametrize by the first affine coordinate when the curve is not vertical
  // there, otherwise by the second.
  int param = vars[0], solved = vars[1];
  TernaryForm dv = c.partial(solved);
  if (dv(p).is_zero()) {
    std::swap(param, solved);
    dv = c.partial(solved);
    require(!dv(p).is_zero(), ErrorCode::SingularPoint, "curve is singular at the point");
  }
  auto coords_at = [&](const TruncatedSeries& v, int n) {
    std::array<TruncatedSeries, 3> xyz{TruncatedSeries(K, n), TruncatedSeries(K, n), TruncatedSeries(K, n)};
    xyz[chart] = TruncatedSeries::constant(FieldElement::one(K), n);
    xyz[param] = TruncatedSeries::shifted_variable(p[param], n);
    xyz[solved] = v.truncate(n);
    return xyz;
  };
  TruncatedSeries v = TruncatedSeries::constant(p[solved], 1);
  int prec = 1;
  while (prec < precision) {
    prec = std::min(2 * prec, precision);
    auto xyz = coords_at(v, prec);
    TruncatedSeries f = compose(c, xyz);
    TruncatedSeries d = compose(dv, xyz);
    v = xyz[solved] - f * d.inverse();
  }
  auto xyz = coords_at(v, precision);
  Branch b{chart, {xyz[vars[0]], xyz[vars[1]]}};
  return b;
}

std::optional<int> intersection_multiplicity(const TernaryForm& g, const TernaryForm& c, const Coords& p,
                                             std::optional<int> hint) {
  const FieldPtr& K = p[0].field();
  require(c.embed(K)(p).is_zero(), ErrorCode::PointNotOnCurve, "point is not on the curve");
  if (g.is_zero()) return std::nullopt;
  const int cap = g.degree() * c.degree() + 1;
  int n = hint ? std::max(*hint + 1, 2) : 8;
  n = std::min(n, cap);
  const TernaryForm gk = g.embed(K);
  if (!gk(p).is_zero()) {
    // Still certify smoothness so the contract does not depend on G.
    branch_expansion(c, p, 1);
    return 0;
  }
  for (;;) {
    Branch b = branch_expansion(c, p, n);
    auto v = compose(gk, b.homogeneous()).valuation();
    if (v) return *v;
    if (n >= cap) return std::nullopt;
    n = std::min(2 * n, cap);
  }
}

}  // namespace curvesys
