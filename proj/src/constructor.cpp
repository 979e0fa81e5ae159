#include "curvesys/constructor.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace curvesys {

namespace {

// Runs trial(start..attempts) in batches of `threads`; the lowest index that
// returns a value wins, so the result is independent of the thread count.
template <class T>
std::optional<std::pair<T, int>> first_success(int attempts, int threads, const std::function<std::optional<T>(int)>& trial) {
  threads = std::max(1, threads);
  for (int start = 0; start < attempts; start += threads) {
    const int end = std::min(attempts, start + threads);
    std::vector<std::optional<T>> results;
    if (threads == 1) {
      results.push_back(trial(start));
    } else {
      std::vector<std::future<std::optional<T>>> futs;
      for (int i = start; i < end; ++i) futs.push_back(std::async(std::launch::async, trial, i));
      for (auto& f : futs) results.push_back(f.get());
    }
    for (int i = start; i < end; ++i)
      if (auto& r = results[static_cast<std::size_t>(i - start)]) return std::make_pair(std::move(*r), i + 1);
  }
  return std::nullopt;
}

bool on_some_line(const std::array<Line, 3>& lines, const ProjPoint& p) {
  return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(p); });
}

bool listed(const std::vector<ProjPoint>& v, const ProjPoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

std::vector<FieldElement> evaluation_row(const Coords& p, int degree) {
  std::vector<FieldElement> row;
  for (const auto& e : monomials(degree))
    row.push_back(p[0].pow(static_cast<std::uint64_t>(e[0])) * p[1].pow(static_cast<std::uint64_t>(e[1])) *
                  p[2].pow(static_cast<std::uint64_t>(e[2])));
  return row;
}

// Points of Gamma ∩ L1 L2 L3, each checked to be rational, simple and off the vertices.
std::vector<ProjPoint> triangle_meet(const TernaryForm& gamma, const std::array<Line, 3>& lines, std::uint64_t seed,
                                     const std::function<void(bool, const std::string&)>& check) {
  const FieldPtr& F = gamma.field();
  const int a = gamma.degree();
  std::vector<ProjPoint> out;
  for (int i = 0; i < 3; ++i) {
    const DivisorOnLine div = line_divisor(lines[i], gamma, seed);
    check(static_cast<int>(div.entries().size()) == a, "Gamma does not meet L" + std::to_string(i + 1) + " in " +
                                                           std::to_string(a) + " distinct points");
    for (const auto& e : div.entries()) {
      check(e.mult == 1 && e.resdeg == 1 && same_field(e.point.field(), F),
            "Gamma ∩ L" + std::to_string(i + 1) + " has a non-rational or non-simple point");
      for (int j = 0; j < 3; ++j)
        if (j != i) check(!lines[j].contains(e.point), "Gamma passes through a vertex of the triangle");
      out.push_back(e.point);
    }
  }
  return out;
}

}  // namespace

void validate(const ConstructionRequest& req) {
  require(req.x >= 1, ErrorCode::PreconditionViolation, "x must be at least 1");
  require(req.a() >= 4 && req.a() <= req.d - 6, ErrorCode::PreconditionViolation,
          "a = x + 3 = " + std::to_string(req.a()) + " is outside [4, d-6] for d = " + std::to_string(req.d));
  require(req.beta >= 0 && req.beta <= req.x, ErrorCode::PreconditionViolation,
          "beta = " + std::to_string(req.beta) + " is outside [0, x]");
  require(req.field && req.field->is_finite(), ErrorCode::PreconditionViolation, "the construction needs a finite field");
  require(req.point_attempts >= 1 && req.smooth_attempts >= 1, ErrorCode::PreconditionViolation,
          "attempt budgets must be positive");
}

GammaPair build_gamma_pair(const ConstructionRequest& req) {
  validate(req);
  const FieldPtr& F = req.field;
  const int a = req.a();
  // A line has q + 1 points, two of them vertices.
  require(F->order() - 1 >= a, ErrorCode::FieldTooSmall,
          F->name() + " leaves fewer than " + std::to_string(a) + " points per line off the vertices");
  const FieldElement one = FieldElement::one(F);
  for (int attempt = 0; attempt < req.point_attempts; ++attempt) {
    Rng rng(Rng::derive(req.seed, static_cast<std::uint64_t>(attempt)));
    auto r = [&] { return FieldElement::random(F, rng); };
    std::array<Line, 3> lines{Line(one, r(), r()), Line(r(), one, r()), Line(r(), r(), one)};
    try {
      if (coordinate_frame(lines[0], lines[1], lines[2]).kind != FrameCase::Triangle) continue;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CoincidentLines) throw;
      continue;
    }
    std::array<std::vector<DivisorEntry>, 3> chosen;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const int want = i == 2 ? a - 1 : a;
      std::vector<ProjPoint> pts;
      for (int tries = 0; static_cast<int>(pts.size()) < want; ++tries) {
        if (tries > 16 * a) {
          ok = false;
          break;
        }
        const ProjPoint p = canonical_point(lines[i].at(r(), one), F);
        if (lines[(i + 1) % 3].contains(p) || lines[(i + 2) % 3].contains(p) || listed(pts, p)) continue;
        pts.push_back(p);
      }
      for (const auto& p : pts) chosen[i].push_back({p, 1, 1});
    }
    if (!ok) continue;
    std::array<DivisorOnLine, 3> known{DivisorOnLine(lines[0], chosen[0]), DivisorOnLine(lines[1], chosen[1]),
                                       DivisorOnLine(lines[2], chosen[2])};
    try {
      const ProjPoint last = solve_last_coordinate(lines, known, 2, CarnotCase::Triangle);
      chosen[2].push_back({last, 1, 1});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoAdmissibleSolution) throw;
      continue;
    }
    CarnotInstance inst{lines, {known[0], known[1], DivisorOnLine(lines[2], chosen[2])}, CarnotCase::Triangle, std::nullopt};
    std::optional<SmoothRepresentative> rep;
    try {
      rep = smooth_representative(inst, req.smooth_attempts, rng.next(), req.threads);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AttemptsExhausted) throw;
      continue;
    }
    std::vector<ProjPoint> meet;
    for (const auto& div : rep->divisors)
      for (const auto& e : div.entries()) meet.push_back(e.point);
    return {lines, rep->curve, meet, rep->trials};
  }
  fail(ErrorCode::AttemptsExhausted,
       "no triangle with a smooth Gamma in " + std::to_string(req.point_attempts) + " configurations");
}

std::vector<ProjPoint> rational_points_on(const TernaryForm& gamma, const std::array<Line, 3>& lines,
                                          const std::vector<ProjPoint>& avoid, int count, std::uint64_t seed,
                                          int attempts) {
  const FieldPtr& F = gamma.field();
  Rng rng(seed);
  std::vector<ProjPoint> out;
  for (int it = 0; it < attempts && static_cast<int>(out.size()) < count; ++it) {
    const Line l(FieldElement::random(F, rng), FieldElement::random(F, rng), FieldElement::one(F));
    const DivisorOnLine cut = line_divisor(l, gamma, rng.next());
    for (const auto& e : cut.entries()) {
      if (static_cast<int>(out.size()) == count) break;
      if (e.resdeg != 1 || on_some_line(lines, e.point) || listed(avoid, e.point) || listed(out, e.point)) continue;
      out.push_back(e.point);
    }
  }
  require(static_cast<int>(out.size()) == count, ErrorCode::InsufficientRationalPoints,
          "found " + std::to_string(out.size()) + " of " + std::to_string(count) + " rational points on Gamma");
  return out;
}

CurveC build_curve_C(const ConstructionRequest& req, const std::vector<ProjPoint>& points) {
  const FieldPtr& F = req.field;
  Matrix cond(F, 0, monomial_count(req.d));
  for (const auto& p : points) cond.append_row(evaluation_row(p.coords(), req.d));
  const auto basis = nullspace(cond);
  require(!basis.empty(), ErrorCode::EmptySystem, "no degree-d form through the prescribed points");
  const std::uint64_t seed = Rng::derive(req.seed, 0xC);
  std::function<std::optional<TernaryForm>(int)> trial = [&](int i) -> std::optional<TernaryForm> {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    std::vector<FieldElement> v(static_cast<std::size_t>(monomial_count(req.d)), FieldElement::zero(F));
    for (const auto& bv : basis) {
      const FieldElement k = FieldElement::random(F, rng);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += k * bv[j];
    }
    const TernaryForm c = TernaryForm::from_vector(F, req.d, v);
    if (c.is_zero() || !is_smooth(c, rng.next()).smooth) return std::nullopt;
    return c.normalized();
  };
  auto found = first_success<TernaryForm>(req.smooth_attempts, req.threads, trial);
  require(found.has_value(), ErrorCode::AttemptsExhausted,
          "no smooth curve of degree " + std::to_string(req.d) + " in " + std::to_string(req.smooth_attempts) + " trials");
  return {found->first, found->second};
}

ConstructionCertificate certify(int d, int x, int beta, const TernaryForm& c, const TernaryForm& gamma,
                                const std::array<Line, 3>& lines, const std::vector<ProjPoint>& e, std::uint64_t seed) {
  std::string step;
  auto check = [&](bool cond, const std::string& what) {
    require(cond, ErrorCode::CertificationFailed, step + ": " + what);
  };
  const int a = x + 3;
  step = "parameters";
  check(x >= 1 && a <= d - 6 && beta >= 0 && beta <= x && static_cast<int>(e.size()) == beta,
        "need x >= 1, x + 3 <= d - 6, 0 <= beta <= x and beta points of E");
  check(c.degree() == d && gamma.degree() == a, "curve degrees do not match d and x + 3");

  step = "triangle";
  try {
    check(coordinate_frame(lines[0], lines[1], lines[2]).kind == FrameCase::Triangle, "the lines are concurrent");
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CoincidentLines) throw;
    check(false, "two lines coincide");
  }

  step = "smoothness";
  check(is_smooth(c, seed).smooth, "C is singular");

  step = "intersection with the triangle";
  const std::vector<ProjPoint> meet = triangle_meet(gamma, lines, seed, check);

  step = "membership";
  for (const auto& p : meet) check(c(p.coords()).is_zero(), "C misses " + p.to_string());
  for (const auto& p : e) {
    check(same_field(p.field(), c.field()), "E has a non-rational point");
    check(gamma(p.coords()).is_zero() && c(p.coords()).is_zero(), p.to_string() + " is not on both Gamma and C");
    check(!on_some_line(lines, p), p.to_string() + " lies on the triangle");
    check(std::count(e.begin(), e.end(), p) == 1, "E repeats " + p.to_string());
  }

  step = "Namba";
  const TernaryForm triangle = lines[0].form() * lines[1].form() * lines[2].form();
  for (const auto& p : meet) {
    const auto ig = intersection_multiplicity(gamma, c, p.coords());
    const auto it = intersection_multiplicity(triangle, c, p.coords());
    check(ig && it, "C shares a component with Gamma or the triangle");
    check(*ig >= 1 && *it >= 1 && std::min(*ig, *it) <= 1, "both intersection numbers exceed 1 at " + p.to_string());
  }

  DivisorOnCurve z(c);
  for (const auto& p : meet) z.add(p, 1);
  for (const auto& p : e) z.add(p, 1);
  const SystemPresentation pres{c, a, z};
  LinearSystemReport report = analyze(pres, {}, seed);

  const int expected_r = (x + 1) * (x + 2) / 2 - beta;
  const int expected_n = (d - 3) * (x + 3) - beta;
  step = "degree";
  check(report.n == expected_n, "n = " + std::to_string(report.n) + ", expected " + std::to_string(expected_n));
  step = "dimension";
  check(report.r == expected_r, "r = " + std::to_string(report.r) + ", expected " + std::to_string(expected_r));
  check(report.r == trivial_expected_dim(a, d, report.n) + 1, "r is not one above the plane-section count");
  step = "base locus";
  check(report.base_locus.empty(), "fixed part " + report.base_locus.to_string());
  step = "very special";
  check(report.very_special, "dim |K - g| = " + std::to_string(report.residual_dim));
  step = "triviality";
  check(report.triviality.verdict == Triviality::NonTrivial, to_string(report.triviality.verdict));
  step = "bound";
  check(report.n == n_lower_bound(d, report.r), "n differs from the lower bound");
  check(report.hartshorne_check, "r exceeds the maximal dimension");
  step = "Riemann-Roch";
  check(report.riemann_roch, "r - (residual + 1) differs from n - g");

  return {d, x, beta, seed, c, gamma, lines, e, std::move(z), std::move(report), expected_r, expected_n};
}

ConstructionCertificate construct(const ConstructionRequest& req) {
  const GammaPair pair = build_gamma_pair(req);
  const std::vector<ProjPoint> e =
      rational_points_on(pair.gamma, pair.lines, pair.meet, req.beta, Rng::derive(req.seed, 0xE));
  std::vector<ProjPoint> through = pair.meet;
  through.insert(through.end(), e.begin(), e.end());
  const CurveC c = build_curve_C(req, through);
  return certify(req.d, req.x, req.beta, c.curve, pair.gamma, pair.lines, e, Rng::derive(req.seed, 0xCE));
}

std::vector<ConstructionCertificate> corollary_sweep(int x, const TernaryForm& c, const TernaryForm& gamma,
                                                     const std::array<Line, 3>& lines, std::uint64_t seed) {
  require(x >= 1 && gamma.degree() == x + 3, ErrorCode::PreconditionViolation,
          "Gamma has degree " + std::to_string(gamma.degree()) + ", the sweep needs x + 3 = " + std::to_string(x + 3));
  std::vector<ProjPoint> meet;
  for (const auto& l : lines) {
    const DivisorOnLine cut = line_divisor(l, gamma, seed);
    for (const auto& e : cut.entries()) meet.push_back(e.point);
  }
  std::vector<ProjPoint> pool;
  const DivisorOnCurve section = intersection_divisor(gamma, c, seed);
  for (const auto& e : section.entries())
    if (e.resdeg == 1 && !on_some_line(lines, e.point) && !listed(meet, e.point)) pool.push_back(e.point);
  require(static_cast<int>(pool.size()) >= x, ErrorCode::InsufficientRationalPoints,
          "Gamma.C - Gamma ∩ Gamma' has " + std::to_string(pool.size()) + " rational points, need " + std::to_string(x));
  std::vector<ConstructionCertificate> out;
  for (int beta = 0; beta <= x; ++beta) {
    const std::vector<ProjPoint> e(pool.begin(), pool.begin() + beta);
    out.push_back(certify(c.degree(), x, beta, c, gamma, lines, e, Rng::derive(seed, static_cast<std::uint64_t>(beta))));
  }
  return out;
}

}  // namespace curvesys
