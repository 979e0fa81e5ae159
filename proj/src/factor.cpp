#include "curvesys/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "curvesys/detail/embedding.hpp"

namespace curvesys {

namespace {

Poly one_poly(const FieldPtr& f) { return Poly::constant(FieldElement::one(f)); }

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const FieldPtr& F = f.field();
  const std::uint64_t p = F->characteristic();
  mpz_class e = F->order() / p;  // a^(q/p) is the p-th root of a in F_q
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
    FieldElement a = f.coeff(i);
    c.push_back(F->degree() == 1 ? a : a.pow(e));
  }
  return Poly(F, std::move(c));
}

void squarefree_into(const Poly& f_in, int scale, std::vector<Factor>& out) {
  const FieldPtr& F = f_in.field();
  Poly f = f_in.monic();
  if (f.degree() < 1) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    squarefree_into(pth_root(c.monic()), scale * static_cast<int>(F->characteristic()), out);
  }
}

// Matrix of the q-power Frobenius on F_q[x]/(f): row i holds x^(q i) mod f.
struct Frobenius {
  Poly modulus;
  std::vector<std::vector<FieldElement>> rows;

  explicit Frobenius(const Poly& f) : modulus(f) {
    const FieldPtr& F = f.field();
    const int n = f.degree();
    Poly xq = powmod(Poly::x(F), F->order(), f);
    Poly cur = one_poly(F);
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
      std::vector<FieldElement> r(n, FieldElement::zero(F));
      for (int j = 0; j <= cur.degree(); ++j) r[j] = cur.coeff(j);
      rows.push_back(std::move(r));
      cur = mulmod(cur, xq, f);
    }
  }

  Poly apply(const Poly& h) const {
    const FieldPtr& F = modulus.field();
    const int n = modulus.degree();
    std::vector<FieldElement> acc(n, FieldElement::zero(F));
    for (int i = 0; i <= h.degree(); ++i) {
      const FieldElement& hi = h.coeffs()[i];
      if (hi.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!rows[i][j].is_zero()) acc[j] += hi * rows[i][j];
    }
    return Poly(F, std::move(acc));
  }
};

std::vector<Factor> distinct_degree(const Poly& f_in) {
  std::vector<Factor> out;
  Poly f = f_in;
  const FieldPtr& F = f.field();
  Frobenius frob(f);
  Poly h = Poly::x(F) % f;
  const Poly x = Poly::x(F);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = frob.apply(h) % f;
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
      if (2 * (d + 1) <= f.degree()) frob = Frobenius(f);
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& F = f.field();
  const Frobenius frob(f);
  const bool even = F->characteristic() == 2;
  for (;;) {
    std::vector<FieldElement> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(FieldElement::random(F, rng));
    Poly a(F, std::move(c));
    if (a.degree() < 1) continue;
    Poly b(F);
    if (!even) {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly s = a, t = a;
      for (int i = 1; i < d; ++i) {
        t = frob.apply(t);
        s = mulmod(s, t, f);
      }
      b = powmod(s, (F->order() - 1) / 2, f) - one_poly(F);
    } else {
      // Absolute trace of F_{q^d} over F_2 applied to a.
      const int bits = d * F->degree();
      Poly t = a, s = a;
      for (int i = 1; i < bits; ++i) {
        t = mulmod(t, t, f);
        s += t;
      }
      b = s;
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  if (a.poly.degree() == 1 && a.poly != b.poly) return -a.poly.coeff(0) < -b.poly.coeff(0);
  if (a.poly != b.poly) return a.poly < b.poly;
  return a.multiplicity < b.multiplicity;
}

// ---- rational roots -------------------------------------------------------

using ZPoly = std::vector<mpz_class>;

ZPoly primitive_integer(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly z;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.rational().get_num() * (l / c.rational().get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

mpz_class zeval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = (acc * x + f[i]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

bool rational_reconstruct(const mpz_class& r, const mpz_class& m, mpq_class& out) {
  // Find a/b with a = b r mod m, |a|, |b| <= sqrt(m/2).
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = r % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  require(f.field()->is_finite(), ErrorCode::UnsupportedField, "squarefree decomposition needs a finite field");
  std::vector<Factor> out;
  squarefree_into(f, 1, out);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<Factor> factor_univariate(const Poly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "factoring the zero polynomial");
  require(f.field()->is_finite(), ErrorCode::UnsupportedField, "factorization is only available over finite fields");
  Rng rng(seed);
  std::vector<Factor> out;
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& dd : distinct_degree(sq.poly)) {
      std::vector<Poly> parts;
      equal_degree(dd.poly, dd.multiplicity, rng, parts);
      for (auto& p : parts) out.push_back({std::move(p), sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

Poly expand_factors(const FieldElement& lead, const std::vector<Factor>& factors) {
  Poly acc = Poly::constant(lead);
  for (const auto& fac : factors) acc = acc * pow(fac.poly, fac.multiplicity);
  return acc;
}

bool is_irreducible(const Poly& f) {
  require(f.field()->is_finite(), ErrorCode::UnsupportedField, "irreducibility test needs a finite field");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  auto dd = distinct_degree(f.monic());
  return dd.size() == 1 && dd.front().multiplicity == f.degree();
}

std::vector<FieldElement> roots(const Poly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FieldPtr& F = f.field();
  if (!F->is_finite()) {
    std::vector<FieldElement> out;
    for (const auto& r : rational_roots(f)) out.push_back(r.value);
    return out;
  }
  if (f.degree() < 1) return {};
  Poly m = f.monic();
  Poly g = gcd(powmod(Poly::x(F), F->order(), m) - Poly::x(F), m);
  std::vector<FieldElement> out;
  if (g.degree() < 1) return out;
  Rng rng(seed);
  std::vector<Poly> parts;
  equal_degree(g, 1, rng, parts);
  for (const auto& p : parts) out.push_back(-p.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootWithMultiplicity> rational_roots(const Poly& f_in) {
  require(!f_in.is_zero(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FieldPtr& Q = f_in.field();
  require(Q->kind() == FieldKind::Rationals, ErrorCode::DescriptorMismatch, "rational roots need a polynomial over Q");
  std::vector<RootWithMultiplicity> out;
  Poly f = f_in;
  int zero_mult = 0;
  while (f.degree() > 0 && f.coeff(0).is_zero()) {
    f = f / Poly::x(Q);
    ++zero_mult;
  }
  if (zero_mult) out.push_back({FieldElement::zero(Q), zero_mult});
  if (f.degree() >= 1) {
    Poly s = f / gcd(f, f.derivative());
    ZPoly z = primitive_integer(s);
    if (s.degree() == 1) {
      FieldElement r = -s.coeff(0) / s.coeff(1);
      int mult = 0;
      Poly t = f;
      for (;;) {
        auto [q, rem] = divmod(t, Poly::linear_root(r));
        if (!rem.is_zero()) break;
        t = q;
        ++mult;
      }
      out.push_back({r, mult});
    } else {
      // A prime keeping s squarefree with the same degree.
      mpz_class p = 1000003;
      FieldPtr Fp;
      Poly sp(Q);
      for (;;) {
        if (z.back() % p != 0) {
          Fp = Field::prime(p.get_ui());
          std::vector<FieldElement> c;
          for (const auto& v : z) c.push_back(FieldElement::from_mpz(Fp, v));
          sp = Poly(Fp, std::move(c));
          if (gcd(sp, sp.derivative()).degree() == 0) break;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      }
      mpz_class bound = abs(z.front());
      if (abs(z.back()) > bound) bound = abs(z.back());
      mpz_class target = 2 * bound * bound + 1;
      ZPoly dz;
      for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));
      for (const auto& r0 : roots(sp)) {
        mpz_class m = p, r = r0.residue();
        while (m <= target) {
          mpz_class m2 = m * m;
          mpz_class fv = zeval_mod(z, r, m2), dv = zeval_mod(dz, r, m2), inv;
          if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t()) == 0) break;
          r = (r - fv * inv) % m2;
          if (r < 0) r += m2;
          m = m2;
        }
        mpq_class cand;
        if (!rational_reconstruct(r, m, cand)) continue;
        FieldElement root = FieldElement::from_mpq(Q, cand);
        if (!s(root).is_zero()) continue;
        int mult = 0;
        Poly t = f;
        for (;;) {
          auto [q, rem] = divmod(t, Poly::linear_root(root));
          if (!rem.is_zero()) break;
          t = q;
          ++mult;
        }
        out.push_back({root, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<ClosedRoot> closed_roots(const Poly& f, std::uint64_t seed) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FieldPtr& F = f.field();
  std::vector<ClosedRoot> out;
  if (F->kind() == FieldKind::Rationals) {
    int total = 0;
    for (const auto& r : rational_roots(f)) {
      out.push_back({r.value, Poly::linear_root(r.value), r.multiplicity, 1});
      total += r.multiplicity;
    }
    require(total == f.degree(), ErrorCode::UnsupportedField, "polynomial over Q has irrational roots");
    return out;
  }
  for (const auto& fac : factor_univariate(f, seed)) {
    if (fac.poly.degree() == 1) {
      out.push_back({-fac.poly.coeff(0), fac.poly, fac.multiplicity, 1});
      continue;
    }
    if (F->kind() == FieldKind::Prime) {
      std::vector<std::uint64_t> mod;
      for (const auto& c : fac.poly.coeffs()) mod.push_back(c.residue());
      FieldPtr K = Field::extension(F->characteristic(), std::move(mod));
      out.push_back({FieldElement::generator(K), fac.poly, fac.multiplicity, fac.poly.degree()});
      continue;
    }
    const FieldPtr K = make_extension(F->characteristic(), F->degree() * fac.poly.degree());
    const auto r = roots(fac.poly.embed(K), seed);
    require(!r.empty(), ErrorCode::InvariantViolation, "irreducible factor has no root in its splitting field");
    out.push_back({r.front(), fac.poly, fac.multiplicity, fac.poly.degree()});
  }
  return out;
}

namespace detail {

FieldElement generator_image(const FieldPtr& from, const FieldPtr& to) {
  using Key = std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
  static std::mutex mu;
  static std::map<Key, FieldElement> cache;
  Key key{from->characteristic(), from->modulus(), to->modulus()};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<FieldElement> c;
  for (auto a : from->modulus()) c.push_back(FieldElement::from_int(to, static_cast<long long>(a)));
  const auto r = roots(Poly(to, std::move(c)));
  require(!r.empty(), ErrorCode::DescriptorMismatch, "cannot embed " + from->name() + " into " + to->name());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, r.front()).first->second;
}

}  // namespace detail

}  // namespace curvesys
