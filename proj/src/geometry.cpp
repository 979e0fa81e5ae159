#include "curvesys/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curvesys/factor.hpp"

namespace curvesys {

namespace {

int orbit_length(const FieldElement& a) {
  int n = 1;
  for (FieldElement b = a.frobenius(); b != a; b = b.frobenius()) ++n;
  return n;
}

FieldElement lift_poly(const std::vector<FieldElement>& h, const FieldElement& t) {
  FieldElement acc = FieldElement::zero(t.field());
  for (std::size_t i = h.size(); i-- > 0;) acc = acc * t + h[i].embed(t.field());
  return acc;
}

}  // namespace

ProjPoint canonical_point(const Coords& c, const FieldPtr& base) {
  const Coords n = normalize_coords(c);
  const FieldPtr& K = n[0].field();
  if (same_field(K, base)) return ProjPoint(n);
  require(K->kind() == FieldKind::Extension && base->kind() == FieldKind::Prime &&
              K->characteristic() == base->characteristic(),
          ErrorCode::UnsupportedField, "points over " + K->name() + " cannot be described over " + base->name());
  int chart = 2;
  while (n[chart].is_zero()) --chart;
  std::array<int, 2> idx{};
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != chart) idx[k++] = i;
  const FieldElement& u = n[idx[0]];
  const FieldElement& v = n[idx[1]];
  const int e = std::lcm(orbit_length(u), orbit_length(v));
  if (e == 1) return ProjPoint(Coords{n[0].to_prime_subfield(), n[1].to_prime_subfield(), n[2].to_prime_subfield()});
  const std::uint64_t p = base->characteristic();
  std::optional<FieldElement> lambda;
  for (std::uint64_t k = 0; k < p && k < 100000; ++k) {
    FieldElement cand = u + FieldElement::from_int(K, static_cast<long long>(k)) * v;
    if (orbit_length(cand) == e) {
      lambda = cand;
      break;
    }
  }
  // Small p: widen to F_p-polynomials in u and v, enumerated by base-p digits
  // over the monomials u^i v^j.
  std::vector<FieldElement> mons;
  if (!lambda) {
    FieldElement ui = FieldElement::one(K);
    for (int i = 0; i < e; ++i, ui *= u) {
      FieldElement m = ui;
      for (int j = 0; j < e; ++j, m *= v)
        if (i + j > 0) mons.push_back(m);
    }
  }
  for (std::uint64_t idx = 1; !lambda && idx < 200000; ++idx) {
    FieldElement cand = FieldElement::zero(K);
    std::uint64_t r = idx;
    for (std::size_t m = 0; r && m < mons.size(); ++m, r /= p)
      if (r % p) cand += FieldElement::from_int(K, static_cast<long long>(r % p)) * mons[m];
    if (orbit_length(cand) == e) lambda = cand;
  }
  require(lambda.has_value(), ErrorCode::UnsupportedField, "field too small to pick a primitive coordinate combination");
  const Poly mu = minimal_polynomial(*lambda);
  std::vector<std::uint64_t> mod;
  for (const auto& a : mu.coeffs()) mod.push_back(a.residue());
  const FieldPtr L = Field::extension(p, std::move(mod));
  // Coordinates of u and v in the basis 1, lambda, ..., lambda^(e-1).
  const int k = K->degree();
  Matrix basis(base, k, e);
  FieldElement pw = FieldElement::one(K);
  for (int j = 0; j < e; ++j) {
    const auto& cv = pw.coeffs();
    for (int r = 0; r < k; ++r) basis(r, j) = FieldElement::from_int(base, static_cast<long long>(cv[r]));
    pw *= *lambda;
  }
  auto express = [&](const FieldElement& a) {
    std::vector<FieldElement> rhs;
    for (auto x : a.coeffs()) rhs.push_back(FieldElement::from_int(base, static_cast<long long>(x)));
    return lift_poly(solve(basis, rhs), FieldElement::generator(L));
  };
  Coords out;
  out[chart] = FieldElement::one(L);
  out[idx[0]] = express(u);
  out[idx[1]] = express(v);
  return ProjPoint(out);
}

// ---------------------------------------------------------------------------

namespace {

void merge_sorted(std::vector<DivisorEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const DivisorEntry& a, const DivisorEntry& b) { return a.point < b.point; });
  std::vector<DivisorEntry> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().point == e.point)
      out.back().mult += e.mult;
    else
      out.push_back(e);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const DivisorEntry& e) { return e.mult == 0; }), out.end());
  entries = std::move(out);
}

std::string entries_to_string(const std::vector<DivisorEntry>& entries) {
  if (entries.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << " + ";
    os << entries[i].mult << "*" << entries[i].point.to_string();
    if (entries[i].resdeg > 1) os << "[deg " << entries[i].resdeg << "]";
  }
  return os.str();
}

}  // namespace

DivisorOnCurve::DivisorOnCurve(TernaryForm curve, const std::vector<DivisorEntry>& entries) : curve_(std::move(curve)) {
  for (const auto& e : entries) add(e.point, e.mult);
}

int DivisorOnCurve::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.mult * e.resdeg;
  return d;
}

int DivisorOnCurve::multiplicity(const ProjPoint& p) const {
  for (const auto& e : entries_)
    if (e.point == p) return e.mult;
  return 0;
}

void DivisorOnCurve::add(const ProjPoint& p, int mult) {
  require(mult >= 0, ErrorCode::PreconditionViolation, "negative multiplicity");
  if (mult == 0) return;
  require(p.on(curve_), ErrorCode::PointNotOnCurve, p.to_string() + " is not on the curve");
  entries_.push_back({p, mult, p.residue_degree(curve_.field())});
  merge_sorted(entries_);
}

bool DivisorOnCurve::contains(const DivisorOnCurve& other) const {
  for (const auto& e : other.entries_)
    if (multiplicity(e.point) < e.mult) return false;
  return true;
}

DivisorOnCurve operator+(const DivisorOnCurve& a, const DivisorOnCurve& b) {
  DivisorOnCurve out = a;
  for (const auto& e : b.entries_) out.entries_.push_back(e);
  merge_sorted(out.entries_);
  return out;
}

DivisorOnCurve operator-(const DivisorOnCurve& a, const DivisorOnCurve& b) {
  require(a.contains(b), ErrorCode::InvariantViolation, "difference of divisors is not effective");
  DivisorOnCurve out = a;
  for (auto& e : out.entries_) e.mult -= b.multiplicity(e.point);
  merge_sorted(out.entries_);
  return out;
}

bool operator==(const DivisorOnCurve& a, const DivisorOnCurve& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].point != b.entries_[i].point || a.entries_[i].mult != b.entries_[i].mult) return false;
  return true;
}

std::string DivisorOnCurve::to_string() const { return entries_to_string(entries_); }

DivisorOnCurve pointwise_min(const DivisorOnCurve& a, const DivisorOnCurve& b) {
  DivisorOnCurve out(a.curve());
  for (const auto& e : a.entries()) out.add(e.point, std::min(e.mult, b.multiplicity(e.point)));
  return out;
}

DivisorOnLine::DivisorOnLine(Line line, const std::vector<DivisorEntry>& entries) : line_(std::move(line)) {
  for (const auto& e : entries) {
    require(line_.contains(e.point), ErrorCode::PointNotOnCurve, e.point.to_string() + " is not on the line");
    require(e.mult >= 1, ErrorCode::PreconditionViolation, "multiplicities on a line divisor must be positive");
    entries_.push_back({e.point, e.mult, e.point.residue_degree(line_.field())});
  }
  merge_sorted(entries_);
}

int DivisorOnLine::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.mult * e.resdeg;
  return d;
}

int DivisorOnLine::multiplicity(const ProjPoint& p) const {
  for (const auto& e : entries_)
    if (e.point == p) return e.mult;
  return 0;
}

std::string DivisorOnLine::to_string() const { return entries_to_string(entries_); }

// ---------------------------------------------------------------------------

Coords ProjFrame::apply(const Coords& p) const {
  auto v = m.apply({p[0], p[1], p[2]});
  return {v[0], v[1], v[2]};
}

Line ProjFrame::image(const Line& l) const {
  // l . v = l . M^-1 v'
  const Coords& a = l.coeffs();
  Coords r;
  for (int j = 0; j < 3; ++j) r[j] = a[0] * inv(0, j) + a[1] * inv(1, j) + a[2] * inv(2, j);
  return Line(r[0], r[1], r[2]);
}

ProjFrame coordinate_frame(const Line& l1, const Line& l2, const Line& l3) {
  require(l1 != l2 && l1 != l3 && l2 != l3, ErrorCode::CoincidentLines, "the three lines must be pairwise distinct");
  const FieldPtr& F = l1.field();
  Matrix rows = Matrix::from_rows(F, {{l1.coeffs()[0], l1.coeffs()[1], l1.coeffs()[2]},
                                      {l2.coeffs()[0], l2.coeffs()[1], l2.coeffs()[2]},
                                      {l3.coeffs()[0], l3.coeffs()[1], l3.coeffs()[2]}});
  if (!determinant(rows).is_zero()) return {rows, inverse(rows), FrameCase::Triangle};
  // l1 = a l2 + b l3 with a, b != 0; y' = l2, z' = -(b/a) l3 so that y' - z' = l1 / a.
  Matrix sys(F, 3, 2);
  std::vector<FieldElement> rhs(3);
  for (int i = 0; i < 3; ++i) {
    sys(i, 0) = l2.coeffs()[i];
    sys(i, 1) = l3.coeffs()[i];
    rhs[i] = l1.coeffs()[i];
  }
  auto ab = solve(sys, rhs);
  const FieldElement k = -ab[1] / ab[0];
  const Coords q = cross(l2.coeffs(), l3.coeffs());
  int first = 0;
  while (q[first].is_zero()) ++first;
  Matrix m(F, 3, 3);
  m(0, first) = FieldElement::one(F);
  for (int j = 0; j < 3; ++j) {
    m(1, j) = l2.coeffs()[j];
    m(2, j) = k * l3.coeffs()[j];
  }
  return {m, inverse(m), FrameCase::Concurrent};
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kProjectionAttempts = 24;

FieldPtr evaluation_field(const FieldPtr& base, int npoints) {
  if (!base->is_finite() || base->order() >= npoints) return base;
  require(base->kind() == FieldKind::Prime, ErrorCode::UnsupportedField,
          base->name() + " has too few elements for elimination of this size");
  const std::uint64_t p = base->characteristic();
  int k = 2;
  mpz_class q = p * p;
  while (q < npoints) {
    q *= p;
    ++k;
  }
  return make_extension(p, k, 0x5eed);
}

/// Field large enough for generic projections of degree-`deg` forms and for
/// `npoints`-point interpolation: `base` itself unless it is too small.
FieldPtr working_field(const FieldPtr& base, int deg, int npoints) {
  if (!base->is_finite()) return base;
  const mpz_class want = std::max(4 * deg, 32);
  const bool small = base->order() < want || (base->kind() == FieldKind::Extension && base->order() < npoints);
  if (!small) return base;
  const std::uint64_t p = base->characteristic();
  const int k0 = base->degree();
  int k = 2 * k0;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(k));
  while (q < want || q < npoints) {
    k += k0;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(k));
  }
  return make_extension(p, k, 0x5eed);
}

FieldElement enumerate_element(const FieldPtr& E, std::uint64_t idx) {
  if (E->kind() != FieldKind::Extension) return FieldElement::from_int(E, static_cast<long long>(idx));
  std::vector<std::uint64_t> digits;
  const std::uint64_t p = E->characteristic();
  while (idx) {
    digits.push_back(idx % p);
    idx /= p;
  }
  return FieldElement::from_coeffs(E, digits);
}

Poly to_base(const Poly& f, const FieldPtr& base) {
  if (same_field(f.field(), base)) return f;
  std::vector<FieldElement> c;
  for (const auto& a : f.coeffs()) c.push_back(a.to_prime_subfield());
  return Poly(base, std::move(c));
}

/// F(1, y, 0).
Poly fiber_at_infinity(const TernaryForm& f) {
  std::vector<FieldElement> c(f.degree() + 1, FieldElement::zero(f.field()));
  for (const auto& [e, v] : f.terms())
    if (e[2] == 0) c[e[1]] += v;
  return Poly(f.field(), std::move(c));
}

/// The single root of h = lc (y - y0)^e, if h has that shape with y0 in the
/// coefficient field.
std::optional<FieldElement> sole_root(const Poly& h) {
  const int e0 = h.degree();
  if (e0 < 1) return std::nullopt;
  Poly g = h.monic();
  const FieldPtr& K = g.field();
  int e = e0;
  int stride = 1;
  const std::uint64_t p = K->characteristic();
  // Strip p-th powers: (y - y0)^(p e') = (y^p - y0^p)^e'.
  if (p) {
    while (e % static_cast<int>(p) == 0) {
      std::vector<FieldElement> c;
      for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) c.push_back(g.coeff(i));
      for (int i = 0; i <= g.degree(); ++i)
        if (i % static_cast<int>(p) && !g.coeff(i).is_zero()) return std::nullopt;
      g = Poly(K, std::move(c));
      e /= static_cast<int>(p);
      stride *= static_cast<int>(p);
    }
  }
  FieldElement y = -g.coeff(e - 1) / FieldElement::from_int(K, e);
  // y = y0^stride; take the stride-th root with the inverse Frobenius.
  if (stride > 1) {
    const mpz_class q = K->order();
    for (int s = stride; s > 1; s /= static_cast<int>(p)) y = y.pow(q / static_cast<unsigned long>(p));
  }
  if (pow(Poly::linear_root(y), e0) != h.monic()) return std::nullopt;
  return y;
}

Matrix random_projection(const FieldPtr& F, const std::vector<TernaryForm>& avoid, Rng& rng) {
  for (int tries = 0; tries < 500; ++tries) {
    Matrix t(F, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t(i, j) = F->is_finite() ? FieldElement::random(F, rng)
                                 : FieldElement::from_int(F, static_cast<long long>(rng.below(9)) - 4);
    if (determinant(t).is_zero()) continue;
    const Coords ey{t(0, 1), t(1, 1), t(2, 1)};
    bool ok = true;
    for (const auto& f : avoid) ok = ok && !f(ey).is_zero();
    if (ok) return t;
  }
  fail(ErrorCode::UnsupportedField, F->name() + " is too small for a generic projection");
}

Coords transform_coords(const Matrix& t, const Coords& v) {
  auto r = t.apply({v[0], v[1], v[2]});
  return {r[0], r[1], r[2]};
}

enum class FiberStatus { Empty, Point, Unseparated };

/// Common zero of the transformed forms on the fiber over x0 (or over the
/// point at infinity of the x-line when x0 is empty), mapped back through t.
FiberStatus fiber_point(const std::vector<TernaryForm>& forms, const Matrix& t, const std::optional<FieldElement>& x0,
                        Coords& out) {
  std::optional<Poly> h;
  for (const auto& f : forms) {
    Poly fib = x0 ? f.fiber(*x0) : fiber_at_infinity(f);
    h = h ? gcd(*h, fib) : fib;
  }
  if (h->is_zero()) return FiberStatus::Unseparated;
  if (h->degree() < 1) return FiberStatus::Empty;
  auto y0 = sole_root(*h);
  if (!y0) return FiberStatus::Unseparated;
  const FieldPtr& K = y0->field();
  Coords v = x0 ? Coords{*x0, *y0, FieldElement::one(K)} : Coords{FieldElement::one(K), *y0, FieldElement::zero(K)};
  out = transform_coords(t, v);
  return FiberStatus::Point;
}

struct Candidate {
  std::optional<FieldElement> x0;  // empty: point at infinity
  int multiplicity;
  int degree;
};

std::vector<Candidate> candidates(const Poly& r, int formal_degree, std::uint64_t seed) {
  std::vector<Candidate> out;
  if (r.degree() >= 1)
    for (const auto& cr : closed_roots(r, seed)) out.push_back({cr.root, cr.multiplicity, cr.degree});
  if (r.degree() < formal_degree) out.push_back({std::nullopt, formal_degree - r.degree(), 1});
  return out;
}

/// Points of V(f) on a line, as canonical points with multiplicities. With
/// `complete` every root must be representable; otherwise unrepresentable
/// roots over Q or F_{p^k} are skipped.
std::vector<std::pair<ProjPoint, int>> points_on_line(const TernaryForm& f, const Line& l, bool complete,
                                                      std::uint64_t seed, const FieldPtr& base) {
  const FieldPtr& F = f.field();
  BinaryForm b = restrict_to_param(f, l.param().first, l.param().second);
  require(!b.is_zero(), ErrorCode::SharedComponent, "the line " + l.to_string() + " is a component of the curve");
  Poly u = b.dehomogenize();
  std::vector<std::pair<ProjPoint, int>> out;
  if (u.degree() < b.degree()) out.push_back({canonical_point(l.param().first, base), b.degree() - u.degree()});
  if (u.degree() < 1) return out;
  if (complete || F->kind() == FieldKind::Prime) {
    for (const auto& cr : closed_roots(u, seed))
      out.push_back({canonical_point(l.at(cr.root, FieldElement::one(cr.root.field())), base), cr.multiplicity});
  } else if (F->kind() == FieldKind::Rationals) {
    for (const auto& r : rational_roots(u))
      out.push_back({canonical_point(l.at(r.value, FieldElement::one(F)), base), r.multiplicity});
  } else {
    for (const auto& r : roots(u, seed)) {
      int mult = 0;
      Poly t = u;
      for (;;) {
        auto [q, rem] = divmod(t, Poly::linear_root(r));
        if (!rem.is_zero()) break;
        t = q;
        ++mult;
      }
      out.push_back({canonical_point(l.at(r, FieldElement::one(F)), base), mult});
    }
  }
  return out;
}

Line random_line(const FieldPtr& F, Rng& rng) {
  for (;;) {
    auto r = [&] {
      return F->is_finite() ? FieldElement::random(F, rng) : FieldElement::from_int(F, static_cast<long long>(rng.below(9)) - 4);
    };
    FieldElement a = r(), b = r(), c = r();
    if (!(a.is_zero() && b.is_zero() && c.is_zero())) return Line(a, b, c);
  }
}

/// Some point on V(f), deg f >= 1, possibly over an extension; random lines
/// are drawn over `w`, which contains the field of f.
std::optional<ProjPoint> any_point_on(const TernaryForm& f, const FieldPtr& w, Rng& rng,
                                      const std::vector<TernaryForm>& also = {}) {
  const TernaryForm fw = f.embed(w);
  for (int tries = 0; tries < 64; ++tries) {
    Line l = random_line(w, rng);
    if (restrict_to_param(fw, l.param().first, l.param().second).is_zero()) continue;
    try {
      for (const auto& [p, m] : points_on_line(fw, l, w->is_finite(), rng.next(), f.field())) {
        bool ok = true;
        for (const auto& g : also) ok = ok && p.on(g);
        if (ok) return p;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedField) throw;
    }
  }
  return std::nullopt;
}

}  // namespace

Poly resultant_in_y(const TernaryForm& a, const TernaryForm& b) {
  const FieldPtr& F = a.field();
  const int na = a.degree(), nb = b.degree();
  const int n = na * nb;
  const FieldPtr E = evaluation_field(F, n + 1);
  const TernaryForm ae = a.embed(E), be = b.embed(E);
  std::vector<FieldElement> xs, ys;
  for (int i = 0; i <= n; ++i) {
    xs.push_back(enumerate_element(E, static_cast<std::uint64_t>(i)));
    ys.push_back(resultant_formal(ae.fiber(xs.back()), na, be.fiber(xs.back()), nb));
  }
  return to_base(interpolate(xs, ys), F);
}

SmoothnessResult is_smooth(const TernaryForm& c, std::uint64_t seed) {
  require(!c.is_zero(), ErrorCode::ZeroForm, "smoothness of the zero form");
  const FieldPtr& F = c.field();
  const int d = c.degree();
  if (d <= 1) return {true, std::nullopt};
  Rng rng(seed);
  std::vector<TernaryForm> partials;
  for (int i = 0; i < 3; ++i) {
    TernaryForm p = c.partial(i);
    if (!p.is_zero()) partials.push_back(p);
  }
  const std::uint64_t ch = F->characteristic();
  const bool need_c = ch != 0 && d % static_cast<long long>(ch) == 0;
  std::vector<TernaryForm> all = {c, c.partial(0), c.partial(1), c.partial(2)};
  auto is_witness = [&](const ProjPoint& p) {
    for (const auto& f : all)
      if (!p.on(f)) return false;
    return true;
  };
  auto singular = [&](const std::optional<ProjPoint>& w) -> SmoothnessResult {
    require(w.has_value() && is_witness(*w), ErrorCode::Internal, "singular curve but no witness point located");
    return {false, w};
  };
  const FieldPtr W = working_field(F, d, d * d + 1);
  if (partials.empty()) return singular(any_point_on(c, W, rng));
  Matrix span(F, 0, monomial_count(d - 1));
  for (const auto& p : partials) span.append_row(p.to_vector());
  const int rk = rank(span);
  if (rk == 1) {
    // Every partial is a multiple of one form H: the singular locus is V(H)
    // (intersected with C when Euler's relation does not force it).
    if (need_c) return singular(any_point_on(partials.front(), W, rng, {c}));
    return singular(any_point_on(partials.front(), W, rng));
  }
  auto combo = [&]() {
    TernaryForm acc(W, d - 1);
    for (const auto& p : partials) acc += FieldElement::random(W, rng) * p.embed(W);
    return acc;
  };
  // Partials sharing a component make their resultants vanish; eliminate
  // against C instead. C itself shares a component with generic combinations
  // only when it is singular along that whole component.
  bool anchor_c = false;
  int zero_resultants = 0;
  for (int attempt = 0; attempt < kProjectionAttempts && zero_resultants < 3; ++attempt) {
    TernaryForm a = combo(), b = combo(), b2 = combo();
    if (a.is_zero() || b.is_zero() || b2.is_zero()) continue;
    std::vector<TernaryForm> avoid;
    if (anchor_c) {
      avoid = {c.embed(W), a, b};
    } else {
      avoid = {a, b};
      if (rk >= 3) avoid.push_back(b2);
      if (need_c) avoid.push_back(c.embed(W));
    }
    const Matrix t = random_projection(W, avoid, rng);
    std::vector<TernaryForm> moved;
    for (const auto& f : avoid) moved.push_back(f.substitute(t));
    Poly g(W);
    int inf = -1;
    bool degenerate = false;
    for (std::size_t i = 1; i < moved.size(); ++i) {
      Poly r = resultant_in_y(moved[0], moved[i]);
      if (r.is_zero()) {
        degenerate = true;
        break;
      }
      const int deficit = moved[0].degree() * moved[i].degree() - r.degree();
      inf = inf < 0 ? deficit : std::min(inf, deficit);
      g = g.is_zero() ? r : gcd(g, r);
    }
    if (degenerate) {
      if (anchor_c) ++zero_resultants;
      anchor_c = true;
      continue;
    }
    if (g.degree() < 1 && inf == 0) return {true, std::nullopt};
    std::vector<TernaryForm> gens;
    for (const auto& f : all)
      if (!f.is_zero()) gens.push_back(f.embed(W).substitute(t));
    bool retry = false;
    for (const auto& cand : candidates(g, g.degree() + inf, rng.next())) {
      Coords pt;
      auto st = fiber_point(gens, t, cand.x0, pt);
      if (st == FiberStatus::Empty) continue;
      if (st == FiberStatus::Unseparated) {
        retry = true;
        break;
      }
      return singular(canonical_point(pt, F));
    }
    if (!retry) return {true, std::nullopt};
  }
  if (zero_resultants > 0) {
    // C is singular along a component: any line meets it there.
    for (int tries = 0; tries < 64; ++tries) {
      Line l = random_line(W, rng);
      std::vector<std::pair<ProjPoint, int>> pts;
      try {
        pts = points_on_line(c.embed(W), l, W->is_finite(), rng.next(), F);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SharedComponent && e.code() != ErrorCode::UnsupportedField) throw;
        continue;
      }
      for (const auto& [p, m] : pts)
        if (is_witness(p)) return {false, p};
    }
  }
  fail(ErrorCode::Internal, "smoothness test found no separating projection");
}

DivisorOnCurve intersection_divisor(const TernaryForm& g, const TernaryForm& c, std::uint64_t seed) {
  require(!g.is_zero() && !c.is_zero(), ErrorCode::ZeroForm, "intersection with the zero form");
  require(same_field(g.field(), c.field()), ErrorCode::DescriptorMismatch, "forms over different fields");
  require(c.degree() >= 1, ErrorCode::PreconditionViolation, "the curve must have positive degree");
  const FieldPtr& F = c.field();
  DivisorOnCurve out(c);
  if (g.degree() == 0) return out;
  Rng rng(seed);
  const int bezout = g.degree() * c.degree();
  const FieldPtr W = working_field(F, std::max(g.degree(), c.degree()), bezout + 1);
  const TernaryForm gw = g.embed(W), cw = c.embed(W);
  for (int attempt = 0; attempt < kProjectionAttempts; ++attempt) {
    const Matrix t = random_projection(W, {gw, cw}, rng);
    const TernaryForm gt = gw.substitute(t), ct = cw.substitute(t);
    const Poly r = resultant_in_y(gt, ct);
    require(!r.is_zero(), ErrorCode::SharedComponent, "the curves share a component");
    DivisorOnCurve div(c);
    bool ok = true;
    for (const auto& cand : candidates(r, bezout, rng.next())) {
      Coords pt;
      if (fiber_point({gt, ct}, t, cand.x0, pt) != FiberStatus::Point) {
        ok = false;
        break;
      }
      std::optional<int> mult;
      try {
        mult = intersection_multiplicity(g, c, pt, cand.multiplicity);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SingularPoint)
          fail(ErrorCode::SingularCurve, "the curve is singular at " + ProjPoint(pt).to_string());
        throw;
      }
      require(mult.has_value(), ErrorCode::SharedComponent, "the curves share a component");
      if (*mult != cand.multiplicity) {
        ok = false;
        break;
      }
      // Over a working extension one closed point may split into conjugates.
      const ProjPoint q = canonical_point(pt, F);
      if (const int seen = div.multiplicity(q); seen > 0) {
        require(seen == *mult, ErrorCode::InvariantViolation, "conjugate points with different multiplicities");
        continue;
      }
      div.add(q, *mult);
    }
    if (!ok) continue;
    require(div.degree() == bezout, ErrorCode::InvariantViolation,
            "intersection divisor has degree " + std::to_string(div.degree()) + ", expected " + std::to_string(bezout));
    return div;
  }
  fail(ErrorCode::Internal, "no separating projection found for the intersection");
}

DivisorOnLine line_divisor(const Line& l, const TernaryForm& c, std::uint64_t seed) {
  require(!c.is_zero(), ErrorCode::ZeroForm, "line divisor of the zero form");
  std::vector<DivisorEntry> entries;
  for (const auto& [p, m] : points_on_line(c, l, true, seed, c.field())) entries.push_back({p, m, 1});
  DivisorOnLine d(l, entries);
  require(d.degree() == c.degree(), ErrorCode::InvariantViolation, "line divisor degree differs from the curve degree");
  return d;
}

}  // namespace curvesys
