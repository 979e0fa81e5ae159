#pragma once

#include <optional>
#include <vector>

#include "curvesys/point.hpp"
#include "curvesys/random.hpp"

namespace curvesys {

/// Canonical representative of the closed point through `c` over `base`.
/// Over F_p a point of degree e is rewritten over F_p[T]/(mu), where mu is
/// the minimal polynomial of u + c v (u, v the affine coordinates, c the
/// least element making it a generator); conjugate points and points found
/// in different extensions therefore compare equal.
ProjPoint canonical_point(const Coords& c, const FieldPtr& base);

struct DivisorEntry {
  ProjPoint point;
  int mult;
  int resdeg;
};

/// Effective divisor on a plane curve: distinct closed points with
/// multiplicities, kept sorted.
class DivisorOnCurve {
 public:
  explicit DivisorOnCurve(TernaryForm curve) : curve_(std::move(curve)) {}
  DivisorOnCurve(TernaryForm curve, const std::vector<DivisorEntry>& entries);

  const TernaryForm& curve() const noexcept { return curve_; }
  const FieldPtr& field() const { return curve_.field(); }
  const std::vector<DivisorEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Sum of multiplicity times residue degree.
  int degree() const;
  int multiplicity(const ProjPoint& p) const;
  /// Adds `mult` at a point (which must be canonical and on the curve).
  void add(const ProjPoint& p, int mult);
  bool contains(const DivisorOnCurve& other) const;

  friend DivisorOnCurve operator+(const DivisorOnCurve& a, const DivisorOnCurve& b);
  /// InvariantViolation unless b <= a.
  friend DivisorOnCurve operator-(const DivisorOnCurve& a, const DivisorOnCurve& b);
  friend bool operator==(const DivisorOnCurve& a, const DivisorOnCurve& b);
  std::string to_string() const;

 private:
  TernaryForm curve_;
  std::vector<DivisorEntry> entries_;
};

DivisorOnCurve pointwise_min(const DivisorOnCurve& a, const DivisorOnCurve& b);

class DivisorOnLine {
 public:
  explicit DivisorOnLine(Line line) : line_(std::move(line)) {}
  DivisorOnLine(Line line, const std::vector<DivisorEntry>& entries);

  const Line& line() const noexcept { return line_; }
  const std::vector<DivisorEntry>& entries() const noexcept { return entries_; }
  int degree() const;
  int multiplicity(const ProjPoint& p) const;
  friend bool operator==(const DivisorOnLine& a, const DivisorOnLine& b) {
    return a.line_ == b.line_ && a.entries_.size() == b.entries_.size() &&
           std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                      [](const DivisorEntry& x, const DivisorEntry& y) { return x.point == y.point && x.mult == y.mult; });
  }
  std::string to_string() const;

 private:
  Line line_;
  std::vector<DivisorEntry> entries_;
};

enum class FrameCase { Triangle, Concurrent };

/// New coordinates v' = M v. Triangle frames send the lines to x = 0, y = 0,
/// z = 0; concurrent frames send them to y - z = 0, y = 0, z = 0.
struct ProjFrame {
  Matrix m;
  Matrix inv;
  FrameCase kind;

  Coords apply(const Coords& p) const;
  Line image(const Line& l) const;
  /// The same curve written in the new coordinates: F(M^-1 v').
  TernaryForm image(const TernaryForm& f) const { return f.substitute(inv); }
};

ProjFrame coordinate_frame(const Line& l1, const Line& l2, const Line& l3);

struct SmoothnessResult {
  bool smooth;
  std::optional<ProjPoint> witness;
};

/// Decides whether C = Cx = Cy = Cz = 0 has a solution over the algebraic
/// closure. A witness, when returned, satisfies all four equations.
SmoothnessResult is_smooth(const TernaryForm& c, std::uint64_t seed = kDefaultSeed);

/// Divisor cut on the smooth curve C by G. Total degree deg G * deg C.
DivisorOnCurve intersection_divisor(const TernaryForm& g, const TernaryForm& c, std::uint64_t seed = kDefaultSeed);

DivisorOnLine line_divisor(const Line& l, const TernaryForm& c, std::uint64_t seed = kDefaultSeed);

/// Res_y(A(x, y, 1), B(x, y, 1)) with formal y-degrees deg A and deg B, as a
/// polynomial in x over the coefficient field. Computed by evaluation and
/// interpolation, in an extension when the field has too few elements.
Poly resultant_in_y(const TernaryForm& a, const TernaryForm& b);

}  // namespace curvesys
