#include "curvesys/linsys.hpp"

#include <algorithm>

namespace curvesys {

RDecomposition decompose_r(int r) {
  require(r >= 2, ErrorCode::ROutOfRange, "r = " + std::to_string(r) + " is below 2");
  int x = 1;
  while ((x + 1) * (x + 2) / 2 < r) ++x;
  return {r, x, (x + 1) * (x + 2) / 2 - r};
}

int n_lower_bound(int d, int r) {
  require(d >= 4, ErrorCode::PreconditionViolation, "the bound needs d >= 4");
  const RDecomposition dec = decompose_r(r);
  return (d - 3) * (dec.x + 3) - dec.beta;
}

int hartshorne_max_dim(int d, int n) {
  require(d >= 4 && n >= 0, ErrorCode::PreconditionViolation, "needs d >= 4 and n >= 0");
  if (n > d * (d - 3)) return n - plane_genus(d);
  const int k = (n + d - 1) / d;
  const int e = k * d - n;
  if (e > k + 1) return (k - 1) * (k + 2) / 2;
  return k * (k + 3) / 2 - e;
}

int trivial_expected_dim(int m_prime, int d, int n) {
  require(m_prime >= 0, ErrorCode::PreconditionViolation, "m' must be nonnegative");
  require(m_prime * d >= n, ErrorCode::DegreeDeficit,
          std::to_string(m_prime) + "·" + std::to_string(d) + " < " + std::to_string(n));
  return (m_prime * m_prime + 3 * m_prime) / 2 - (m_prime * d - n);
}

void validate(const SystemPresentation& pres) {
  const int d = pres.d();
  require(pres.m >= 1 && pres.m <= d - 3, ErrorCode::PreconditionViolation,
          "m = " + std::to_string(pres.m) + " is outside [1, d-3] for d = " + std::to_string(d));
  require(pres.z.curve() == pres.curve, ErrorCode::PreconditionViolation, "Z is not a divisor on C");
  require(pres.n() >= 0, ErrorCode::PreconditionViolation, "deg Z exceeds m·d");
}

Matrix conditions_matrix(const TernaryForm& c, const DivisorOnCurve& z, int m) {
  const FieldPtr& F = c.field();
  const auto mons = monomials(m);
  const int ncols = static_cast<int>(mons.size());
  Matrix out(F, 0, ncols);
  for (const auto& entry : z.entries()) {
    const int mu = entry.mult;
    const auto h = branch_expansion(c, entry.point.coords(), mu).homogeneous();
    const FieldPtr& L = h[0].field();
    std::array<std::vector<TruncatedSeries>, 3> pw;
    for (int i = 0; i < 3; ++i) {
      pw[i].push_back(TruncatedSeries::constant(FieldElement::one(L), mu));
      for (int k = 1; k <= m; ++k) pw[i].push_back(pw[i].back() * h[i]);
    }
    std::vector<TruncatedSeries> vals;
    for (const auto& e : mons) vals.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
    const bool rational = same_field(L, F);
    require(rational || F->kind() == FieldKind::Prime, ErrorCode::UnsupportedField,
            "points outside " + F->name() + " need a prime base field");
    for (int j = 0; j < mu; ++j) {
      if (rational) {
        std::vector<FieldElement> row;
        for (const auto& v : vals) row.push_back(v[j]);
        out.append_row(row);
        continue;
      }
      for (int b = 0; b < L->degree(); ++b) {
        std::vector<FieldElement> row;
        for (const auto& v : vals) row.push_back(FieldElement::from_int(F, static_cast<long long>(v[j].coeffs()[b])));
        out.append_row(row);
      }
    }
  }
  return out;
}

namespace {

SystemDimension forms_through(const TernaryForm& c, const DivisorOnCurve& z, int m) {
  const Matrix a = conditions_matrix(c, z, m);
  auto null = nullspace(a);
  require(!null.empty(), ErrorCode::EmptySystem, "no form of degree " + std::to_string(m) + " passes through Z");
  SystemDimension out{static_cast<int>(null.size()) - 1, {}};
  for (const auto& v : null) out.basis.push_back(TernaryForm::from_vector(c.field(), m, v));
  return out;
}

}  // namespace

SystemDimension system_dimension(const SystemPresentation& pres) {
  validate(pres);
  return forms_through(pres.curve, pres.z, pres.m);
}

DivisorOnCurve member_divisor(const SystemPresentation& pres, const TernaryForm& gamma, std::uint64_t seed) {
  return intersection_divisor(gamma, pres.curve, seed) - pres.z;
}

namespace {

TernaryForm generic_member(const std::vector<TernaryForm>& basis, Rng& rng) {
  const FieldPtr& F = basis.front().field();
  for (;;) {
    TernaryForm acc(F, basis.front().degree());
    for (const auto& b : basis) acc += FieldElement::random(F, rng) * b;
    if (!acc.is_zero()) return acc;
  }
}

}  // namespace

DivisorOnCurve base_locus(const SystemPresentation& pres, const std::vector<TernaryForm>& basis, std::uint64_t seed) {
  require(basis.size() >= 2, ErrorCode::DimensionZero, "a zero-dimensional system is its own fixed part");
  Rng rng(seed);
  const DivisorOnCurve d1 = member_divisor(pres, generic_member(basis, rng), rng.next());
  const DivisorOnCurve d2 = member_divisor(pres, generic_member(basis, rng), rng.next());
  const DivisorOnCurve common = pointwise_min(d1, d2);
  DivisorOnCurve out(pres.curve);
  for (const auto& e : common.entries()) {
    int k = e.mult;
    const int base = pres.z.multiplicity(e.point);
    for (const auto& b : basis) {
      if (k == 0) break;
      const auto i = intersection_multiplicity(b, pres.curve, e.point.coords(), base + k);
      require(i.has_value(), ErrorCode::Internal, "a member of the system contains the curve");
      k = std::min(k, *i - base);
    }
    if (k > 0) out.add(e.point, k);
  }
  return out;
}

VerySpecial is_very_special(const SystemPresentation& pres, const std::vector<TernaryForm>& basis, std::uint64_t seed) {
  require(!basis.empty(), ErrorCode::EmptySystem, "no member to residuate");
  Rng rng(seed);
  DivisorOnCurve member = member_divisor(pres, generic_member(basis, rng), rng.next());
  const int k = pres.d() - 3;
  const Matrix a = conditions_matrix(pres.curve, member, k);
  const int residual = monomial_count(k) - rank(a) - 1;
  const int r = static_cast<int>(basis.size()) - 1;
  return {r >= 1 && residual >= 1, residual, std::move(member)};
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::Trivial: return "Trivial";
    case Triviality::NonTrivial: return "NonTrivial";
    case Triviality::Undetermined: return "Undetermined";
  }
  return "?";
}

TrivialityResult classify_triviality(const SystemPresentation& pres, int r, const DivisorOnCurve& member,
                                     const TrivialitySearch& search, std::uint64_t seed) {
  const int d = pres.d(), n = member.degree();
  const int lo = (n + d - 1) / d, hi = d - 3;
  TrivialityResult out{Triviality::Undetermined, {}, std::nullopt, std::nullopt, {}};
  for (int mp = std::max(lo, 0); mp <= hi; ++mp)
    if (trivial_expected_dim(mp, d, n) == r) out.admissible.push_back(mp);
  const std::string range = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  if (out.admissible.empty()) {
    out.verdict = Triviality::NonTrivial;
    out.certificate = "no m' in " + range + " has (m'^2+3m')/2 - (m'd - n) = " + std::to_string(r);
    return out;
  }
  Rng rng(seed);
  bool all_empty = true;
  for (int mp : out.admissible) {
    if (mp == 0) {
      // n = 0 and r = 0: the zero divisor is |0 g^2_d|.
      out.verdict = Triviality::Trivial;
      out.m_prime = 0;
      out.e = DivisorOnCurve(pres.curve);
      out.certificate = "the zero divisor";
      return out;
    }
    const SystemPresentation through_d{pres.curve, mp, member};
    SystemDimension sd;
    try {
      sd = forms_through(pres.curve, member, mp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptySystem) throw;
      continue;
    }
    all_empty = false;
    std::vector<TernaryForm> tries;
    if (search.try_basis) tries = sd.basis;
    for (int i = 0; i < search.random_members; ++i) tries.push_back(generic_member(sd.basis, rng));
    for (const auto& g : tries) {
      DivisorOnCurve e = member_divisor(through_d, g, rng.next());
      if (forms_through(pres.curve, e, mp).r == r) {
        out.verdict = Triviality::Trivial;
        out.m_prime = mp;
        out.e = std::move(e);
        out.certificate = "|" + std::to_string(mp) + " g^2_d - E| has dimension " + std::to_string(r);
        return out;
      }
    }
  }
  if (all_empty) {
    out.verdict = Triviality::NonTrivial;
    out.certificate = "no form of degree m' passes through the member divisor for any admissible m'";
    return out;
  }
  out.certificate = "sampled search over E found no witness";
  return out;
}

LinearSystemReport analyze(const SystemPresentation& pres, const TrivialitySearch& search, std::uint64_t seed) {
  const SystemDimension sd = system_dimension(pres);
  const int d = pres.d(), n = pres.n(), r = sd.r;
  VerySpecial vs = is_very_special(pres, sd.basis, Rng::derive(seed, 1));
  DivisorOnCurve fixed = r >= 1 ? base_locus(pres, sd.basis, Rng::derive(seed, 2)) : vs.member;
  TrivialityResult triv = classify_triviality(pres, r, vs.member, search, Rng::derive(seed, 3));
  return {d,
          pres.m,
          n,
          r,
          std::move(fixed),
          vs.very_special,
          vs.residual_dim,
          std::move(triv),
          r >= 2 ? std::optional<bool>(n >= n_lower_bound(d, r)) : std::nullopt,
          r <= hartshorne_max_dim(d, n),
          r - (vs.residual_dim + 1) == n - plane_genus(d)};
}

}  // namespace curvesys
