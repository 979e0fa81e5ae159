#include <gtest/gtest.h>

#include "curvesys/constructor.hpp"
#include "helpers.hpp"

using namespace curvesys;
using namespace testing_helpers;

namespace {

const FieldPtr F1009 = Field::prime(1009);

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

ConstructionRequest request(int d, int x, int beta, std::uint64_t seed) {
  ConstructionRequest req{d, x, beta, F1009};
  req.seed = seed;
  return req;
}

void expect_sharp(const ConstructionCertificate& cert) {
  const auto& rep = cert.report;
  EXPECT_EQ(rep.r, (cert.x + 1) * (cert.x + 2) / 2 - cert.beta);
  EXPECT_EQ(rep.n, (cert.d - 3) * (cert.x + 3) - cert.beta);
  EXPECT_EQ(rep.n, n_lower_bound(cert.d, rep.r));
  EXPECT_EQ(rep.n, (cert.x + 3) * cert.d - cert.z.degree());
  EXPECT_EQ(rep.r, trivial_expected_dim(cert.x + 3, cert.d, rep.n) + 1);
  EXPECT_TRUE(rep.base_locus.empty());
  EXPECT_TRUE(rep.very_special);
  EXPECT_EQ(rep.triviality.verdict, Triviality::NonTrivial);
  EXPECT_TRUE(rep.triviality.admissible.empty());
  EXPECT_TRUE(rep.riemann_roch);
  EXPECT_TRUE(rep.hartshorne_check);
}

}  // namespace

TEST(Constructor, RequestValidation) {
  EXPECT_EQ(code_of([] { validate(request(10, 0, 0, 1)); }), ErrorCode::PreconditionViolation);  // a = 3
  EXPECT_EQ(code_of([] { validate(request(9, 1, 0, 1)); }), ErrorCode::PreconditionViolation);   // a > d - 6
  EXPECT_EQ(code_of([] { validate(request(10, 1, 2, 1)); }), ErrorCode::PreconditionViolation);  // beta > x
  auto q = request(10, 1, 0, 1);
  q.field = Field::rationals();
  EXPECT_EQ(code_of([&] { validate(q); }), ErrorCode::PreconditionViolation);
  auto tiny = request(10, 1, 0, 1);
  tiny.field = Field::prime(3);
  EXPECT_EQ(code_of([&] { build_gamma_pair(tiny); }), ErrorCode::FieldTooSmall);
}

TEST(Constructor, GammaPairOverF1009) {
  auto pair = build_gamma_pair(request(10, 1, 0, 7));
  ASSERT_EQ(pair.meet.size(), 12u);
  EXPECT_EQ(pair.gamma.degree(), 4);
  EXPECT_TRUE(is_smooth(pair.gamma).smooth);
  for (const auto& l : pair.lines) {
    auto div = line_divisor(l, pair.gamma);
    EXPECT_EQ(div.entries().size(), 4u);
    for (const auto& e : div.entries()) {
      EXPECT_EQ(e.mult, 1);
      EXPECT_NE(std::find(pair.meet.begin(), pair.meet.end(), e.point), pair.meet.end());
    }
  }
}

TEST(Constructor, SharpWitnessD10X1) {
  for (int beta : {0, 1}) {
    auto cert = construct(request(10, 1, beta, 42));
    EXPECT_EQ(cert.report.r, beta == 0 ? 3 : 2);
    EXPECT_EQ(cert.report.n, beta == 0 ? 28 : 27);
    expect_sharp(cert);
  }
}

TEST(Constructor, SharpWitnessD11X2) {
  auto cert = construct(request(11, 2, 0, 42));
  EXPECT_EQ(cert.report.r, 6);
  EXPECT_EQ(cert.report.n, 40);
  expect_sharp(cert);
}

TEST(Constructor, CorollarySweep) {
  for (int d : {10, 11}) {
    auto req = request(d, 1, 0, 99);
    auto pair = build_gamma_pair(req);
    // Pass C through one extra point of Gamma so Gamma.C - Gamma ∩ Gamma' has a rational point.
    auto extra = rational_points_on(pair.gamma, pair.lines, pair.meet, 1, 5);
    auto through = pair.meet;
    through.insert(through.end(), extra.begin(), extra.end());
    auto c = build_curve_C(req, through);
    auto certs = corollary_sweep(1, c.curve, pair.gamma, pair.lines, 3);
    ASSERT_EQ(certs.size(), 2u);
    for (int beta = 0; beta < 2; ++beta) {
      EXPECT_EQ(certs[beta].report.r, 3 - beta);
      EXPECT_EQ(certs[beta].report.n, 4 * (d - 3) - beta);
      expect_sharp(certs[beta]);
    }
    EXPECT_EQ(code_of([&] { corollary_sweep(2, c.curve, pair.gamma, pair.lines, 3); }), ErrorCode::PreconditionViolation);
  }
}

TEST(Constructor, DeterministicPerSeedAndThreadCount) {
  auto a = construct(request(10, 1, 1, 1234));
  auto b = construct(request(10, 1, 1, 1234));
  auto threaded = request(10, 1, 1, 1234);
  threaded.threads = 4;
  auto c = construct(threaded);
  for (const auto* other : {&b, &c}) {
    EXPECT_EQ(a.c, other->c);
    EXPECT_EQ(a.gamma, other->gamma);
    EXPECT_EQ(a.lines, other->lines);
    EXPECT_EQ(a.e, other->e);
    EXPECT_EQ(a.z, other->z);
  }
  auto d = construct(request(10, 1, 1, 1235));
  EXPECT_NE(a.c, d.c);
}

TEST(Constructor, CertifyRejectsTamperedData) {
  auto cert = construct(request(10, 1, 1, 8));
  auto fails_at = [&](auto&& fn, const std::string& step) {
    try {
      fn();
      ADD_FAILURE() << "expected failure at " << step;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CertificationFailed);
      EXPECT_EQ(e.detail().rfind(step, 0), 0u) << e.detail();
    }
  };
  // Claiming beta = 0 while keeping E changes nothing in Z but the parameter count.
  fails_at([&] { certify(10, 1, 0, cert.c, cert.gamma, cert.lines, cert.e); }, "parameters");
  // A different point of Gamma is not on C.
  auto other = rational_points_on(cert.gamma, cert.lines, cert.e, 1, 77);
  fails_at([&] { certify(10, 1, 1, cert.c, cert.gamma, cert.lines, other); }, "membership");
  fails_at([&] { certify(11, 1, 1, cert.c, cert.gamma, cert.lines, cert.e); }, "parameters");
  // A line that does not meet Gamma in the chosen points.
  auto lines = cert.lines;
  lines[0] = Line(el(F1009, 1), el(F1009, 2), el(F1009, 3));
  EXPECT_EQ(code_of([&] { certify(10, 1, 1, cert.c, cert.gamma, lines, cert.e); }), ErrorCode::CertificationFailed);
  // C also carries the beta = 0 system: dropping E is still a valid certificate.
  auto smaller = certify(10, 1, 0, cert.c, cert.gamma, cert.lines, {});
  EXPECT_EQ(smaller.report.r, 3);
  EXPECT_EQ(smaller.report.n, 28);
}
