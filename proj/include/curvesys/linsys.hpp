#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesys/geometry.hpp"

namespace curvesys {

/// r = (x+1)(x+2)/2 - beta with x >= 1 and 0 <= beta <= x.
struct RDecomposition {
  int r;
  int x;
  int beta;
};

RDecomposition decompose_r(int r);
/// (d-3)(x+3) - beta for (x, beta) = decompose_r(r).
int n_lower_bound(int d, int r);
/// Largest dimension of a g^r_n on a smooth plane curve of degree d.
int hartshorne_max_dim(int d, int n);
/// (m'^2 + 3m')/2 - (m'd - n); DegreeDeficit when m'd < n.
int trivial_expected_dim(int m_prime, int d, int n);
inline int plane_genus(int d) { return (d - 1) * (d - 2) / 2; }

/// The system |m g^2_d - Z| on a smooth curve C, cut by degree-m forms
/// through Z.
struct SystemPresentation {
  TernaryForm curve;
  int m;
  DivisorOnCurve z;

  int d() const { return curve.degree(); }
  int n() const { return m * curve.degree() - z.degree(); }
};

/// Throws PreconditionViolation unless 1 <= m <= d - 3, Z lives on C and
/// deg Z <= m d.
void validate(const SystemPresentation& pres);

/// One row per (point, order j < multiplicity): the t^j coefficient of
/// Phi along the branch of C at the point, as a functional on the
/// coefficients of Phi in monomials(m) order. A point of residue degree e
/// gives e rows, its coordinates over the base field.
Matrix conditions_matrix(const TernaryForm& c, const DivisorOnCurve& z, int m);

struct SystemDimension {
  int r;  // projective; -1 for the empty system
  std::vector<TernaryForm> basis;
};

/// Degree-m forms through Z; EmptySystem when only the zero form remains.
SystemDimension system_dimension(const SystemPresentation& pres);

/// Fixed part of the system: pointwise minimum of (Gamma.C - Z) over two
/// generic members, then over every basis member. DimensionZero for r = 0.
DivisorOnCurve base_locus(const SystemPresentation& pres, const std::vector<TernaryForm>& basis,
                          std::uint64_t seed = kDefaultSeed);

/// Gamma.C - Z for a form Gamma through Z.
DivisorOnCurve member_divisor(const SystemPresentation& pres, const TernaryForm& gamma, std::uint64_t seed = kDefaultSeed);

struct VerySpecial {
  bool very_special;
  int residual_dim;  // dim |K - D| = dim P_{d-3}(-D); -1 when empty
  DivisorOnCurve member;
};

/// Residuation: |K_C - D| = |(d-3) g^2_d - D| for a member D of the system.
VerySpecial is_very_special(const SystemPresentation& pres, const std::vector<TernaryForm>& basis,
                            std::uint64_t seed = kDefaultSeed);

enum class Triviality { Trivial, NonTrivial, Undetermined };
std::string to_string(Triviality t);

/// How hard to look for E once some m' passes the dimension formula.
struct TrivialitySearch {
  bool try_basis = true;
  int random_members = 8;
};

struct TrivialityResult {
  Triviality verdict;
  std::vector<int> admissible;  // m' passing the dimension formula
  std::optional<int> m_prime;
  std::optional<DivisorOnCurve> e;
  std::string certificate;
};

/// Sweeps m' in [ceil(n/d), d-3] for trivial_expected_dim(m', d, n) = r, then
/// samples E = Gamma''.C - D with Gamma'' through D and tests
/// dim |m' g^2_d - E| = r. Never reports NonTrivial from a failed search.
TrivialityResult classify_triviality(const SystemPresentation& pres, int r, const DivisorOnCurve& member,
                                     const TrivialitySearch& search = {}, std::uint64_t seed = kDefaultSeed);

struct LinearSystemReport {
  int d;
  int m;
  int n;
  int r;
  DivisorOnCurve base_locus;
  bool very_special;
  int residual_dim;
  TrivialityResult triviality;
  std::optional<bool> bound_check;  // n >= n(r); only defined for r >= 2
  bool hartshorne_check;            // r <= hartshorne_max_dim(d, n)
  bool riemann_roch;                // r - (residual_dim + 1) = n - g
};

LinearSystemReport analyze(const SystemPresentation& pres, const TrivialitySearch& search = {},
                           std::uint64_t seed = kDefaultSeed);

}  // namespace curvesys
