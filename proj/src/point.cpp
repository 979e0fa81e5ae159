#include "curvesys/point.hpp"

namespace curvesys {

std::string ProjPoint::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  const auto& fa = *a.field();
  const auto& fb = *b.field();
  if (fa.degree() != fb.degree()) return fa.degree() < fb.degree();
  if (!(fa == fb)) {
    if (fa.characteristic() != fb.characteristic()) return fa.characteristic() < fb.characteristic();
    return fa.modulus() < fb.modulus();
  }
  return a.c_ < b.c_;
}

Coords cross(const Coords& a, const Coords& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Line::Line(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  require(!(a.is_zero() && b.is_zero() && c.is_zero()), ErrorCode::PreconditionViolation, "line with all-zero coefficients");
  abc_ = normalize_coords({a, b, c});
  const FieldPtr& F = a.field();
  int pivot = 0;
  while (abc_[pivot].is_zero()) ++pivot;
  const FieldElement inv = abc_[pivot].inverse();
  std::array<Coords, 2> basis;
  int k = 0;
  for (int free = 0; free < 3; ++free) {
    if (free == pivot) continue;
    Coords v{FieldElement::zero(F), FieldElement::zero(F), FieldElement::zero(F)};
    v[free] = FieldElement::one(F);
    v[pivot] = -abc_[free] * inv;
    basis[k++] = v;
  }
  param_ = {basis[0], basis[1]};
}

Line Line::through(const ProjPoint& p, const ProjPoint& q) {
  require(p != q, ErrorCode::PreconditionViolation, "a line needs two distinct points");
  Coords c = cross(p.coords(), q.coords());
  return Line(c[0], c[1], c[2]);
}

bool Line::contains(const Coords& p) const {
  const FieldPtr& K = p[0].field();
  return (abc_[0].embed(K) * p[0] + abc_[1].embed(K) * p[1] + abc_[2].embed(K) * p[2]).is_zero();
}

Coords Line::at(const FieldElement& s, const FieldElement& t) const {
  const FieldPtr& K = s.field();
  Coords out;
  for (int i = 0; i < 3; ++i) out[i] = s * param_.first[i].embed(K) + t * param_.second[i].embed(K);
  return out;
}

std::pair<FieldElement, FieldElement> Line::parameter_of(const Coords& p) const {
  require(contains(p), ErrorCode::PointNotOnCurve, "point is not on the line");
  // The spanning points are unit vectors on the two non-pivot coordinates.
  const FieldPtr& K = p[0].field();
  std::array<int, 2> free{};
  int pivot = 0;
  while (abc_[pivot].is_zero()) ++pivot;
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) free[k++] = i;
  FieldElement s = p[free[0]], t = p[free[1]];
  if (!t.is_zero()) return {s / t, FieldElement::one(K)};
  return {FieldElement::one(K), FieldElement::zero(K)};
}

ProjPoint Line::meet(const Line& other) const {
  require(*this != other, ErrorCode::CoincidentLines, "lines coincide");
  return ProjPoint(cross(abc_, other.abc_));
}

std::string Line::to_string() const {
  return "[" + abc_[0].to_string() + ":" + abc_[1].to_string() + ":" + abc_[2].to_string() + "]";
}

}  // namespace curvesys
