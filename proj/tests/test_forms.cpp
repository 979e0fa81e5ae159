#include <gtest/gtest.h>

#include "curvesys/factor.hpp"
#include "helpers.hpp"

using namespace curvesys;
using namespace testing_helpers;

namespace {

const FieldPtr Q = Field::rationals();

TernaryForm conic() { return form(Q, 2, {{1, {0, 1, 1}}, {-1, {2, 0, 0}}}); }

}  // namespace

TEST(Forms, MonomialOrder) {
  auto m = monomials(2);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m.front(), (Exponent{2, 0, 0}));
  EXPECT_EQ(m[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(m.back(), (Exponent{0, 0, 2}));
  for (int d = 0; d < 8; ++d) {
    auto ms = monomials(d);
    for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(monomial_index(ms[i]), static_cast<int>(i));
  }
}

TEST(Forms, RestrictToLineExamples) {
  auto f = form(Q, 2, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}, {-2, {1, 1, 0}}, {-2, {0, 1, 1}}, {-2, {1, 0, 1}}});
  auto b = restrict_to_param(f, pt(Q, 0, 1, 0), pt(Q, 0, 0, 1));
  EXPECT_EQ(b, BinaryForm(Q, 2, {el(Q, 1), el(Q, -2), el(Q, 1)}));

  auto g = TernaryForm::variable(Q, 0) * conic();
  EXPECT_TRUE(restrict_to_param(g, pt(Q, 0, 1, 0), pt(Q, 0, 0, 1)).is_zero());

  auto l = TernaryForm::linear(el(Q, 1), el(Q, 2), el(Q, 3));
  EXPECT_EQ(restrict_to_param(l, pt(Q, 1, 0, 0), pt(Q, 0, 1, 0)), BinaryForm(Q, 1, {el(Q, 1), el(Q, 2)}));
}

TEST(FormsProperty, RestrictionIsLinearAndMultiplicative) {
  Rng rng(12);
  auto F = Field::prime(1009);
  for (int it = 0; it < 40; ++it) {
    auto f = random_form(F, 3, rng), g = random_form(F, 3, rng), h = random_form(F, 2, rng);
    Coords a{FieldElement::random(F, rng), FieldElement::random(F, rng), FieldElement::random(F, rng)};
    Coords b{FieldElement::random(F, rng), FieldElement::random(F, rng), FieldElement::random(F, rng)};
    auto k = FieldElement::random(F, rng);
    ASSERT_EQ(restrict_to_param(f + k * g, a, b), restrict_to_param(f, a, b) + k * restrict_to_param(g, a, b));
    ASSERT_EQ(restrict_to_param(f * h, a, b), restrict_to_param(f, a, b) * restrict_to_param(h, a, b));
  }
}

TEST(Forms, SubstituteAndPartials) {
  Rng rng(4);
  auto F = Field::prime(101);
  auto f = random_form(F, 4, rng);
  Matrix m(F, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FieldElement::random(F, rng);
  auto g = f.substitute(m);
  Coords v = pt(F, 3, 5, 7);
  auto mv = m.apply({v[0], v[1], v[2]});
  EXPECT_EQ(g(v), f(Coords{mv[0], mv[1], mv[2]}));
  // Euler: x Fx + y Fy + z Fz = deg F * F.
  auto e = TernaryForm::variable(F, 0) * f.partial(0) + TernaryForm::variable(F, 1) * f.partial(1) +
           TernaryForm::variable(F, 2) * f.partial(2);
  EXPECT_EQ(e, el(F, 4) * f);
}

TEST(Forms, ReconstructFromRoots) {
  auto r = reconstruct_from_roots({{el(Q, 1), 1}, {el(Q, 2), 1}}, 2);
  EXPECT_EQ(r.poly, Poly(Q, {el(Q, 2), el(Q, -3), el(Q, 1)}));
  EXPECT_EQ(r.a0, el(Q, 2));
  EXPECT_EQ(r.a_top, el(Q, -3));

  auto r2 = reconstruct_from_roots({{el(Q, 5), 3}}, 3);
  EXPECT_EQ(r2.a0, el(Q, -125));
  EXPECT_EQ(r2.a_top, el(Q, -15));

  auto r3 = reconstruct_from_roots({{el(Q, 1), 2}, {el(Q, -1), 2}}, 4);
  EXPECT_EQ(r3.poly, pow(Poly(Q, {el(Q, -1), el(Q, 0), el(Q, 1)}), 2));
  EXPECT_EQ(r3.a0, el(Q, 1));
  EXPECT_TRUE(r3.a_top.is_zero());

  try {
    reconstruct_from_roots({{el(Q, 1), 1}, {el(Q, 1), 1}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateRoots);
  }
  try {
    reconstruct_from_roots({{el(Q, 1), 1}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(FormsProperty, ReconstructionRoundTrips) {
  Rng rng(8);
  auto F = Field::prime(1009);
  for (int it = 0; it < 50; ++it) {
    std::vector<std::pair<FieldElement, int>> roots;
    int m = 0;
    const int k = 1 + static_cast<int>(rng.below(4));
    while (static_cast<int>(roots.size()) < k) {
      auto x = FieldElement::random(F, rng);
      bool dup = false;
      for (auto& r : roots) dup = dup || r.first == x;
      if (dup) continue;
      int mult = 1 + static_cast<int>(rng.below(3));
      roots.push_back({x, mult});
      m += mult;
    }
    auto rec = reconstruct_from_roots(roots, m);
    auto fac = factor_univariate(rec.poly);
    ASSERT_EQ(fac.size(), roots.size());
    for (const auto& f : fac) {
      bool found = false;
      for (const auto& r : roots) found = found || (-f.poly.coeff(0) == r.first && f.multiplicity == r.second);
      ASSERT_TRUE(found);
    }
  }
}

TEST(Forms, BranchExpansionParabola) {
  auto b = branch_expansion(conic(), pt(Q, 0, 0, 1), 5);
  EXPECT_EQ(b.chart, 2);
  EXPECT_EQ(b.affine[0], TruncatedSeries(Q, 5, {el(Q, 0), el(Q, 1)}));
  EXPECT_EQ(b.affine[1], TruncatedSeries(Q, 5, {el(Q, 0), el(Q, 0), el(Q, 1)}));
}

TEST(Forms, BranchExpansionFermatCubic) {
  for (auto F : {Q, Field::prime(101), Field::prime(2)}) {
    auto c = form(F, 3, {{1, {3, 0, 0}}, {1, {0, 3, 0}}, {1, {0, 0, 3}}});
    Coords p = pt(F, 1, -1, 0);
    auto b = branch_expansion(c, p, 3);
    EXPECT_EQ(b.chart, 1);
    auto res = compose(c, b.homogeneous());
    EXPECT_FALSE(res.valuation().has_value()) << F->name();
  }
}

TEST(Forms, BranchExpansionErrors) {
  try {
    branch_expansion(conic(), pt(Q, 1, 2, 1), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotOnCurve);
  }
  auto node = form(Q, 3, {{1, {0, 2, 1}}, {-1, {2, 0, 1}}, {-1, {3, 0, 0}}});
  try {
    branch_expansion(node, pt(Q, 0, 0, 1), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularPoint);
  }
}

TEST(Forms, IntersectionMultiplicityExamples) {
  auto c = conic();
  auto P = pt(Q, 0, 0, 1);
  EXPECT_EQ(intersection_multiplicity(TernaryForm::variable(Q, 1), c, P), 2);
  EXPECT_EQ(intersection_multiplicity(TernaryForm::variable(Q, 0), c, P), 1);
  EXPECT_EQ(intersection_multiplicity(c * TernaryForm::variable(Q, 0), c, P), std::nullopt);
  EXPECT_EQ(intersection_multiplicity(TernaryForm::variable(Q, 2), c, P), 0);
  EXPECT_EQ(intersection_multiplicity(pow(TernaryForm::variable(Q, 1), 5), c, P), 10);
}

TEST(FormsProperty, MultiplicityIsAdditive) {
  Rng rng(31);
  auto F = Field::prime(101);
  auto c = form(F, 2, {{1, {0, 1, 1}}, {-1, {2, 0, 0}}});
  // Points (a : a^2 : 1) of the parabola.
  for (int it = 0; it < 30; ++it) {
    auto a = FieldElement::random(F, rng);
    Coords P{a, a * a, FieldElement::one(F)};
    // Forms through P: random form minus its value times z^deg.
    auto through = [&](int d) {
      auto g = random_form(F, d, rng);
      return g - g(P) * pow(TernaryForm::variable(F, 2), d);
    };
    auto g = through(2), h = through(3);
    auto ig = intersection_multiplicity(g, c, P), ih = intersection_multiplicity(h, c, P);
    ASSERT_TRUE(ig && ih);
    ASSERT_EQ(intersection_multiplicity(g * h, c, P), *ig + *ih);
  }
}
