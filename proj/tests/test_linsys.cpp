#include <gtest/gtest.h>

#include <set>

#include "curvesys/linsys.hpp"
#include "helpers.hpp"

using namespace curvesys;
using namespace testing_helpers;

namespace {

const FieldPtr F101 = Field::prime(101);

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

DivisorOnCurve divisor(const TernaryForm& c, std::initializer_list<std::pair<Coords, int>> pts) {
  DivisorOnCurve d(c);
  for (const auto& [p, k] : pts) d.add(canonical_point(p, c.field()), k);
  return d;
}

// x^3 y + y^3 z + z^3 x, smooth away from characteristic 7.
TernaryForm klein(const FieldPtr& F) { return form(F, 4, {{1, {3, 1, 0}}, {1, {0, 3, 1}}, {1, {1, 0, 3}}}); }

TernaryForm fermat(const FieldPtr& F, int d) { return form(F, d, {{1, {d, 0, 0}}, {1, {0, d, 0}}, {1, {0, 0, d}}}); }

// A smooth quintic meeting z = 0 in (i:1:0) for i = 1..5.
TernaryForm quintic_with_rational_line(std::uint64_t seed) {
  TernaryForm prod = form(F101, 0, {{1, {0, 0, 0}}});
  for (int i = 1; i <= 5; ++i) prod = prod * form(F101, 1, {{1, {1, 0, 0}}, {-i, {0, 1, 0}}});
  Rng rng(seed);
  for (;;) {
    TernaryForm c = prod + form(F101, 1, {{1, {0, 0, 1}}}) * random_form(F101, 4, rng);
    if (is_smooth(c).smooth) return c;
  }
}

}  // namespace

TEST(Linsys, DecomposeExamples) {
  auto a = decompose_r(2), b = decompose_r(3), c = decompose_r(9);
  EXPECT_EQ(std::make_pair(a.x, a.beta), std::make_pair(1, 1));
  EXPECT_EQ(std::make_pair(b.x, b.beta), std::make_pair(1, 0));
  EXPECT_EQ(std::make_pair(c.x, c.beta), std::make_pair(3, 1));
  EXPECT_EQ(code_of([] { decompose_r(1); }), ErrorCode::ROutOfRange);
}

TEST(LinsysProperty, DecomposeIsABijectionOntoItsRange) {
  std::set<std::pair<int, int>> seen;
  for (int r = 2; r <= 10000; ++r) {
    auto dec = decompose_r(r);
    ASSERT_GE(dec.x, 1);
    ASSERT_GE(dec.beta, 0);
    ASSERT_LE(dec.beta, dec.x);
    ASSERT_EQ((dec.x + 1) * (dec.x + 2) / 2 - dec.beta, r);
    ASSERT_TRUE(seen.insert({dec.x, dec.beta}).second);
  }
}

TEST(Linsys, NumericalBounds) {
  EXPECT_EQ(n_lower_bound(10, 3), 28);
  EXPECT_EQ(n_lower_bound(9, 2), 23);
  EXPECT_EQ(n_lower_bound(10, 2), 27);
  EXPECT_EQ(hartshorne_max_dim(7, 30), 15);
  EXPECT_EQ(hartshorne_max_dim(7, 12), 3);
  EXPECT_EQ(hartshorne_max_dim(7, 10), 2);
  EXPECT_EQ(trivial_expected_dim(4, 10, 28), 2);
  EXPECT_EQ(trivial_expected_dim(4, 10, 27), 1);
  EXPECT_EQ(code_of([] { trivial_expected_dim(2, 10, 28); }), ErrorCode::DegreeDeficit);
}

TEST(LinsysProperty, HartshorneBoundDominatesCompleteIntersectionSystems) {
  // |k g^2_d| has dimension k(k+3)/2 for k <= d-3 and attains the bound at n = kd.
  for (int d = 4; d <= 30; ++d)
    for (int k = 1; k <= d - 3; ++k) EXPECT_EQ(hartshorne_max_dim(d, k * d), k * (k + 3) / 2) << d << " " << k;
  for (int d = 4; d <= 20; ++d)
    for (int n = 1; n <= 3 * d * d; ++n) {
      ASSERT_GE(hartshorne_max_dim(d, n), 0);
      ASSERT_LE(hartshorne_max_dim(d, n), hartshorne_max_dim(d, n + 1)) << d << " " << n;
    }
}

TEST(Linsys, ConditionsOnAConic) {
  auto c = form(F101, 2, {{1, {0, 1, 1}}, {-1, {2, 0, 0}}});
  auto z = divisor(c, {{pt(F101, 0, 0, 1), 2}});
  Matrix a = conditions_matrix(c, z, 1);
  EXPECT_EQ(rank(a), 2);
  auto null = nullspace(a);
  ASSERT_EQ(null.size(), 1u);
  auto line = TernaryForm::from_vector(F101, 1, null[0]);
  EXPECT_EQ(line.normalized(), form(F101, 1, {{1, {0, 1, 0}}}));
  EXPECT_EQ(rank(conditions_matrix(c, divisor(c, {{pt(F101, 1, 1, 1), 1}}), 1)), 1);
  EXPECT_EQ(code_of([&] { base_locus({c, 1, z}, {line}); }), ErrorCode::DimensionZero);
}

TEST(Linsys, PencilsOnAQuartic) {
  auto c = klein(F101);
  DivisorOnCurve none(c);
  auto all = system_dimension({c, 1, none});
  EXPECT_EQ(all.r, 2);
  auto pencil = system_dimension({c, 1, divisor(c, {{pt(F101, 1, 0, 0), 1}})});
  EXPECT_EQ(pencil.r, 1);

  for (const auto& z : {none, divisor(c, {{pt(F101, 1, 0, 0), 1}})}) {
    auto rep = analyze({c, 1, z});
    EXPECT_EQ(rep.n, 4 - z.degree());
    EXPECT_TRUE(rep.base_locus.empty());
    EXPECT_FALSE(rep.very_special);
    EXPECT_EQ(rep.residual_dim, 0);
    EXPECT_TRUE(rep.riemann_roch);
    EXPECT_TRUE(rep.hartshorne_check);
  }
  EXPECT_EQ(code_of([&] { system_dimension({c, 2, none}); }), ErrorCode::PreconditionViolation);
}

TEST(Linsys, QuinticSystemThroughAPointIsTrivial) {
  auto c = fermat(F101, 5);
  auto z = divisor(c, {{pt(F101, 1, 100, 0), 1}});
  SystemPresentation pres{c, 2, z};
  auto rep = analyze(pres);
  EXPECT_EQ(rep.n, 9);
  EXPECT_EQ(rep.r, 4);
  EXPECT_TRUE(rep.base_locus.empty());
  EXPECT_EQ(rep.residual_dim, 0);
  EXPECT_TRUE(rep.riemann_roch);
  ASSERT_EQ(rep.triviality.verdict, Triviality::Trivial);
  EXPECT_EQ(rep.triviality.m_prime, 2);
  EXPECT_EQ(*rep.triviality.e, z);
  EXPECT_EQ(rep.bound_check, std::optional<bool>(true));

  auto sd = system_dimension(pres);
  auto member = member_divisor(pres, sd.basis[0]);
  auto blind = classify_triviality(pres, sd.r, member, {false, 0});
  EXPECT_EQ(blind.verdict, Triviality::Undetermined);
  EXPECT_EQ(blind.admissible, std::vector<int>{2});
}

TEST(Linsys, NoAdmissibleDegreeGivesNonTrivial) {
  // r = 3, n = 28, d = 10: the dimension formula fails for every m' in [3, 7].
  auto c = fermat(F101, 10);
  SystemPresentation pres{c, 4, DivisorOnCurve(c)};
  auto res = classify_triviality(pres, 3, DivisorOnCurve(c));
  EXPECT_EQ(res.verdict, Triviality::NonTrivial);
  EXPECT_TRUE(res.admissible.empty());
}

TEST(Linsys, ForcedBasePoint) {
  auto c = quintic_with_rational_line(5);
  auto z = divisor(c, {{pt(F101, 1, 1, 0), 1}, {pt(F101, 2, 1, 0), 1}, {pt(F101, 3, 1, 0), 1}, {pt(F101, 4, 1, 0), 1}});
  SystemPresentation pres{c, 2, z};
  auto sd = system_dimension(pres);
  EXPECT_EQ(sd.r, 2);
  auto fixed = base_locus(pres, sd.basis);
  EXPECT_EQ(fixed, divisor(c, {{pt(F101, 5, 1, 0), 1}}));
  // Lines through four collinear points: only the line itself.
  EXPECT_EQ(system_dimension({c, 1, z}).r, 0);
  // The tangent at (1:1:0) is not z = 0, so it misses (2:1:0).
  auto tangent_plus = divisor(c, {{pt(F101, 1, 1, 0), 2}, {pt(F101, 2, 1, 0), 1}});
  EXPECT_EQ(code_of([&] { system_dimension({c, 1, tangent_plus}); }), ErrorCode::EmptySystem);
}

TEST(Linsys, CanonicalSeriesSectionHasZeroDimension) {
  // d = 6, m = 3, Z = a full cubic section: n = 0, r = 0, |K - 0| has dimension g - 1.
  auto c = fermat(F101, 6);
  auto cubic = form(F101, 3, {{1, {3, 0, 0}}, {2, {1, 1, 1}}, {-1, {0, 2, 1}}, {3, {0, 0, 3}}});
  auto z = intersection_divisor(cubic, c);
  ASSERT_EQ(z.degree(), 18);
  auto rep = analyze({c, 3, z});
  EXPECT_EQ(rep.n, 0);
  EXPECT_EQ(rep.r, 0);
  EXPECT_EQ(rep.residual_dim, plane_genus(6) - 1);
  EXPECT_TRUE(rep.riemann_roch);
  EXPECT_EQ(rep.triviality.verdict, Triviality::Trivial);
  EXPECT_EQ(rep.triviality.m_prime, 0);
}

TEST(Linsys, ExtensionPointsGiveRestrictedRows) {
  // A line section may split into closed points of higher degree; the only
  // line through it is the line itself.
  auto c = fermat(F101, 4);
  Rng rng(3);
  int extension_points = 0;
  for (int it = 0; it < 6; ++it) {
    auto l = random_form(F101, 1, rng);
    auto z = intersection_divisor(l, c);
    for (const auto& e : z.entries()) extension_points += e.point.residue_degree(F101) > 1;
    auto sd = system_dimension({c, 1, z});
    ASSERT_EQ(sd.r, 0);
    EXPECT_EQ(sd.basis[0].normalized(), l.normalized());
  }
  EXPECT_GT(extension_points, 0);
}

TEST(LinsysProperty, MonotoneAndRiemannRoch) {
  Rng rng(17);
  for (int it = 0; it < 6; ++it) {
    const int d = 5 + it % 2;
    TernaryForm c = random_form(F101, d, rng);
    while (!is_smooth(c).smooth) c = random_form(F101, d, rng);
    const int m = 1 + it % 2;
    // Z: part of a section by a random form of degree m.
    auto full = intersection_divisor(random_form(F101, m, rng), c);
    DivisorOnCurve z(c);
    for (const auto& e : full.entries())
      if (rng.below(3) != 0) z.add(e.point, e.mult);
    SystemPresentation pres{c, m, z};
    auto rep = analyze(pres, {}, rng.next());
    EXPECT_TRUE(rep.riemann_roch) << c.to_string();
    EXPECT_TRUE(rep.hartshorne_check);
    EXPECT_EQ(rep.n, m * d - z.degree());

    const int r = rep.r;
    for (const auto& e : z.entries()) {
      DivisorOnCurve one(c);
      one.add(e.point, 1);
      const DivisorOnCurve smaller = z - one;
      const int r2 = system_dimension({c, m, smaller}).r;
      EXPECT_GE(r2, r);
      EXPECT_LE(r2, r + e.point.residue_degree(F101));
    }
  }
}
