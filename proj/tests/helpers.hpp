#pragma once

#include <string>

#include "curvesys/forms.hpp"

namespace testing_helpers {

using namespace curvesys;

inline FieldElement el(const FieldPtr& F, long long v) { return FieldElement::from_int(F, v); }

inline Coords pt(const FieldPtr& F, long long x, long long y, long long z) { return {el(F, x), el(F, y), el(F, z)}; }

/// Form from a tiny term list, e.g. {{1,{0,1,1}}, {-1,{2,0,0}}} for yz - x^2.
inline TernaryForm form(const FieldPtr& F, int degree, std::initializer_list<std::pair<long long, Exponent>> terms) {
  TernaryForm f(F, degree);
  for (const auto& [c, e] : terms) f.set(e, f.coeff(e) + el(F, c));
  return f;
}

inline TernaryForm random_form(const FieldPtr& F, int degree, Rng& rng) {
  std::vector<FieldElement> v;
  for (int i = 0; i < monomial_count(degree); ++i) v.push_back(FieldElement::random(F, rng));
  return TernaryForm::from_vector(F, degree, v);
}

}  // namespace testing_helpers
