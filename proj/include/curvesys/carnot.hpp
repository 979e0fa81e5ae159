#pragma once

#include <array>
#include <optional>

#include "curvesys/geometry.hpp"

namespace curvesys {

enum class CarnotCase { Triangle, TangentCorner, Concurrent };

/// Three lines with a degree-m divisor on each.
///
/// TangentCorner: D1 and D2 both contain L1 ∩ L2 with multiplicity one, and
/// `alpha` fixes the tangent line alpha x + y = 0 there, read in the
/// coordinates of coordinate_frame(L1, L2, L3).
struct CarnotInstance {
  std::array<Line, 3> lines;
  std::array<DivisorOnLine, 3> divisors;
  CarnotCase kind = CarnotCase::Triangle;
  std::optional<FieldElement> alpha;

  const FieldPtr& field() const { return lines[0].field(); }
  int degree() const { return divisors[0].degree(); }
};

/// Frame of the instance after checking its hypotheses; InvariantViolation
/// names the first one that fails.
ProjFrame carnot_frame(const CarnotInstance& inst);

/// Triangle: prod (y/z)^m on L1 * prod (z/x)^m on L2 * prod (x/y)^m on L3.
/// TangentCorner: alpha times the same product without the corner.
/// Concurrent: sum m x/y on L1 - sum m x/z on L2 - sum m x/y on L3.
/// Coordinates are frame coordinates; a point of residue degree e enters
/// through the norm (products) or trace (sums) of its ratio.
FieldElement carnot_value(const CarnotInstance& inst);
/// (-1)^m for the product forms, 0 for the concurrent sum.
FieldElement carnot_target(const CarnotInstance& inst);
bool check_carnot(const CarnotInstance& inst);

/// The one point P on lines[unknown] such that adding P (multiplicity 1) to
/// known[unknown] makes the instance pass check_carnot. known[unknown] has
/// degree m - 1, the others degree m.
ProjPoint solve_last_coordinate(const std::array<Line, 3>& lines, const std::array<DivisorOnLine, 3>& known,
                                int unknown, CarnotCase kind);

/// A degree-m form Gamma with (Gamma . L_i) = D_i, containing no L_i;
/// re-verified with line_divisor before it is returned.
TernaryForm construct_curve(const CarnotInstance& inst, std::uint64_t seed = kDefaultSeed);

struct SmoothRepresentative {
  TernaryForm curve;
  std::array<DivisorOnLine, 3> divisors;
  int trials;
};

/// Random members of {Gamma : D_i <= Gamma . L_i} until one is smooth. Trial
/// i draws from its own sub-seed, and the lowest successful index wins, so
/// the answer does not depend on `threads`.
SmoothRepresentative smooth_representative(const CarnotInstance& inst, int attempts, std::uint64_t seed = kDefaultSeed,
                                           int threads = 1);

/// The instance cut out by a curve on three lines. For TangentCorner alpha is
/// read off the curve's tangent at the corner.
CarnotInstance instance_from_curve(const std::array<Line, 3>& lines, const TernaryForm& g, CarnotCase kind,
                                   std::uint64_t seed = kDefaultSeed);

/// Homogeneous linear conditions on the coefficients (in frame coordinates,
/// monomials(m) order) of forms Gamma with D_i <= Gamma . L_i, plus the
/// tangent condition for TangentCorner.
Matrix carnot_conditions(const CarnotInstance& inst, const ProjFrame& frame);

}  // namespace curvesys
