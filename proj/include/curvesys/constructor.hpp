#pragma once

#include <array>
#include <vector>

#include "curvesys/carnot.hpp"
#include "curvesys/linsys.hpp"

namespace curvesys {

/// Build a smooth curve C of degree d carrying a non-trivial very special
/// g^r_n with r = (x+1)(x+2)/2 - beta and n = (d-3)(x+3) - beta.
struct ConstructionRequest {
  int d;
  int x;
  int beta;
  FieldPtr field;
  std::uint64_t seed = kDefaultSeed;
  int point_attempts = 64;    // triangle and point sampling
  int smooth_attempts = 32;   // per smooth curve
  int threads = 1;

  int a() const { return x + 3; }
};

/// PreconditionViolation unless 4 <= a <= d-6, 0 <= beta <= x and the field is finite.
void validate(const ConstructionRequest& req);

/// Three lines Gamma' = L1 L2 L3 and a smooth Gamma of degree a cutting
/// exactly `meet` (3a rational points, one each) on them.
struct GammaPair {
  std::array<Line, 3> lines;
  TernaryForm gamma;
  std::vector<ProjPoint> meet;
  int trials;  // smoothness trials used for Gamma
};

GammaPair build_gamma_pair(const ConstructionRequest& req);

/// `count` distinct rational points of Gamma off the three lines and not in `avoid`.
std::vector<ProjPoint> rational_points_on(const TernaryForm& gamma, const std::array<Line, 3>& lines,
                                          const std::vector<ProjPoint>& avoid, int count, std::uint64_t seed,
                                          int attempts = 256);

struct CurveC {
  TernaryForm curve;
  int trials;
};

/// A smooth degree-d form through every point of `points`.
CurveC build_curve_C(const ConstructionRequest& req, const std::vector<ProjPoint>& points);

struct ConstructionCertificate {
  int d;
  int x;
  int beta;
  std::uint64_t seed;
  TernaryForm c;
  TernaryForm gamma;
  std::array<Line, 3> lines;
  std::vector<ProjPoint> e;
  DivisorOnCurve z;
  LinearSystemReport report;
  int expected_r;
  int expected_n;
};

/// Re-derives Z = (Gamma ∩ Gamma') + E on C and checks every claim about
/// |a g^2_d - Z|. CertificationFailed names the first step that does not hold.
ConstructionCertificate certify(int d, int x, int beta, const TernaryForm& c, const TernaryForm& gamma,
                                const std::array<Line, 3>& lines, const std::vector<ProjPoint>& e,
                                std::uint64_t seed = kDefaultSeed);

/// build_gamma_pair, beta extra points on Gamma, build_curve_C, certify.
ConstructionCertificate construct(const ConstructionRequest& req);

/// One certificate per beta = 0..x on a single C, with E taken from the
/// rational points of Gamma.C - (Gamma ∩ Gamma').
std::vector<ConstructionCertificate> corollary_sweep(int x, const TernaryForm& c, const TernaryForm& gamma,
                                                     const std::array<Line, 3>& lines,
                                                     std::uint64_t seed = kDefaultSeed);

}  // namespace curvesys
