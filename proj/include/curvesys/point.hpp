#pragma once

#include <string>
#include <utility>

#include "curvesys/forms.hpp"

namespace curvesys {

/// Point of P^2 with coordinates in some field, last nonzero coordinate 1.
class ProjPoint {
 public:
  explicit ProjPoint(const Coords& c) : c_(normalize_coords(c)) {}
  ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z) : ProjPoint(Coords{x, y, z}) {}

  const Coords& coords() const noexcept { return c_; }
  const FieldElement& x() const { return c_[0]; }
  const FieldElement& y() const { return c_[1]; }
  const FieldElement& z() const { return c_[2]; }
  const FieldPtr& field() const { return c_[0].field(); }
  /// [field of coordinates : base], for coordinates in an extension of `base`.
  int residue_degree(const FieldPtr& base) const { return field()->degree() / base->degree(); }
  bool on(const TernaryForm& f) const { return f(c_).is_zero(); }

  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return same_field(a.field(), b.field()) && a.c_ == b.c_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  /// Residue degree, then field modulus, then coordinates.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  Coords c_;
};

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

/// Line a x + b y + c z = 0, coefficients scaled so the last nonzero one is 1.
class Line {
 public:
  Line(const FieldElement& a, const FieldElement& b, const FieldElement& c);
  static Line through(const ProjPoint& p, const ProjPoint& q);

  const FieldPtr& field() const { return abc_[0].field(); }
  const Coords& coeffs() const noexcept { return abc_; }
  TernaryForm form() const { return TernaryForm::linear(abc_[0], abc_[1], abc_[2]); }
  bool contains(const Coords& p) const;
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }
  /// Spanning points A, B: (s : t) -> s A + t B, from the reduced nullspace
  /// of [a b c]. For x = 0 this is (0 : s : t), for z = 0 it is (s : t : 0).
  const std::pair<Coords, Coords>& param() const noexcept { return param_; }
  Coords at(const FieldElement& s, const FieldElement& t) const;
  /// Parameter (s : t) of a point on the line, normalized like a point of P^1.
  std::pair<FieldElement, FieldElement> parameter_of(const Coords& p) const;
  ProjPoint meet(const Line& other) const;

  std::string to_string() const;
  friend bool operator==(const Line& a, const Line& b) { return a.abc_ == b.abc_; }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

 private:
  Coords abc_;
  std::pair<Coords, Coords> param_;
};

Coords cross(const Coords& a, const Coords& b);

}  // namespace curvesys
