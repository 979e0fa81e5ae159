#include "curvesys/carnot.hpp"

#include <algorithm>
#include <future>

namespace curvesys {

namespace {

std::string name_of(int i) { return "L" + std::to_string(i + 1); }

FieldElement down(const FieldElement& v, const FieldPtr& base, bool product) {
  if (same_field(v.field(), base)) return v;
  require(base->kind() == FieldKind::Prime, ErrorCode::UnsupportedField,
          "points outside " + base->name() + " need a prime base field");
  return product ? v.norm() : v.trace();
}

// The coordinate ratio a point of D_i contributes, in frame coordinates.
FieldElement ratio(CarnotCase kind, int i, const Coords& c) {
  if (kind == CarnotCase::Concurrent) return i == 1 ? c[0] / c[2] : c[0] / c[1];
  if (i == 0) return c[1] / c[2];
  if (i == 1) return c[2] / c[0];
  return c[0] / c[1];
}

Coords pull_back(const ProjFrame& frame, const Coords& c) {
  auto v = frame.inv.apply({c[0], c[1], c[2]});
  return {v[0], v[1], v[2]};
}

ProjFrame check_hypotheses(const std::array<Line, 3>& lines, const std::array<DivisorOnLine, 3>& divs, CarnotCase kind,
                           const std::optional<FieldElement>& alpha, int m, int partial) {
  const FieldPtr& F = lines[0].field();
  require(m >= 1, ErrorCode::InvariantViolation, "divisors must have positive degree");
  for (int i = 0; i < 3; ++i) {
    require(same_field(lines[i].field(), F), ErrorCode::DescriptorMismatch, "lines over different fields");
    require(divs[i].line() == lines[i], ErrorCode::InvariantViolation, "D" + std::to_string(i + 1) + " is not on " + name_of(i));
    const int want = i == partial ? m - 1 : m;
    require(divs[i].degree() == want, ErrorCode::InvariantViolation,
            "D" + std::to_string(i + 1) + " has degree " + std::to_string(divs[i].degree()) + ", expected " +
                std::to_string(want));
  }
  ProjFrame frame = coordinate_frame(lines[0], lines[1], lines[2]);
  if (kind == CarnotCase::Concurrent)
    require(frame.kind == FrameCase::Concurrent, ErrorCode::InvariantViolation, "the three lines are not concurrent");
  else
    require(frame.kind == FrameCase::Triangle, ErrorCode::InvariantViolation, "the three lines are concurrent");
  std::optional<ProjPoint> corner;
  if (kind == CarnotCase::TangentCorner) {
    require(alpha.has_value() && !alpha->is_zero(), ErrorCode::InvariantViolation, "the tangent slope alpha must be nonzero");
    require(same_field(alpha->field(), F), ErrorCode::DescriptorMismatch, "alpha is over a different field");
    corner = lines[0].meet(lines[1]);
    for (int i = 0; i < 2; ++i)
      require(divs[i].multiplicity(*corner) == 1, ErrorCode::InvariantViolation,
              "L1 ∩ L2 must occur in D" + std::to_string(i + 1) + " with multiplicity 1");
  }
  for (int i = 0; i < 3; ++i)
    for (const auto& e : divs[i].entries())
      for (int j = 0; j < 3; ++j) {
        if (j == i || (corner && i < 2 && j < 2 && e.point == *corner)) continue;
        require(!lines[j].contains(e.point), ErrorCode::InvariantViolation,
                "D" + std::to_string(i + 1) + " meets " + name_of(j) + " at " + e.point.to_string());
      }
  return frame;
}

FieldElement value_of(const std::array<DivisorOnLine, 3>& divs, CarnotCase kind, const std::optional<FieldElement>& alpha,
                      const ProjFrame& frame, const FieldPtr& F) {
  const bool sum = kind == CarnotCase::Concurrent;
  FieldElement acc = sum ? FieldElement::zero(F) : kind == CarnotCase::TangentCorner ? *alpha : FieldElement::one(F);
  std::optional<ProjPoint> corner;
  if (kind == CarnotCase::TangentCorner) corner = divs[0].line().meet(divs[1].line());
  for (int i = 0; i < 3; ++i)
    for (const auto& e : divs[i].entries()) {
      if (corner && i < 2 && e.point == *corner) continue;
      const FieldElement r = down(ratio(kind, i, frame.apply(e.point.coords())), F, !sum);
      if (sum) {
        const FieldElement t = FieldElement::from_int(F, e.mult) * r;
        acc = i == 0 ? acc + t : acc - t;
      } else {
        acc *= r.pow(static_cast<std::uint64_t>(e.mult));
      }
    }
  return acc;
}

BinaryForm homogenize(const Poly& u, const FieldPtr& F) {
  const int e = u.degree();
  std::vector<FieldElement> c;
  for (int k = 0; k <= e; ++k) c.push_back(u.coeff(e - k).embed(F));
  return BinaryForm(F, e, std::move(c));
}

// prod over the points of D of their factor in (s : t), on the frame image r of its line.
BinaryForm target_form(const DivisorOnLine& d, const ProjFrame& frame, const Line& r, const FieldPtr& F) {
  std::vector<std::pair<FieldElement, int>> rational;
  int finite = 0;
  BinaryForm acc(F, 0, {FieldElement::one(F)});
  for (const auto& e : d.entries()) {
    const auto [s, t] = r.parameter_of(frame.apply(e.point.coords()));
    if (t.is_zero()) {
      for (int k = 0; k < e.mult; ++k) acc = acc * BinaryForm::linear(FieldElement::zero(F), FieldElement::one(F));
    } else if (same_field(s.field(), F)) {
      rational.emplace_back(s, e.mult);
      finite += e.mult;
    } else {
      const Poly mu = minimal_polynomial(s);
      require(mu.degree() == e.resdeg, ErrorCode::Internal, "line parameter does not generate the residue field");
      const BinaryForm f = homogenize(mu, F);
      for (int k = 0; k < e.mult; ++k) acc = acc * f;
    }
  }
  if (!rational.empty()) acc = acc * homogenize(reconstruct_from_roots(rational, finite).poly, F);
  return acc;
}

}  // namespace

ProjFrame carnot_frame(const CarnotInstance& inst) {
  return check_hypotheses(inst.lines, inst.divisors, inst.kind, inst.alpha, inst.degree(), -1);
}

FieldElement carnot_value(const CarnotInstance& inst) {
  const ProjFrame frame = carnot_frame(inst);
  return value_of(inst.divisors, inst.kind, inst.alpha, frame, inst.field());
}

FieldElement carnot_target(const CarnotInstance& inst) {
  const FieldPtr& F = inst.field();
  if (inst.kind == CarnotCase::Concurrent) return FieldElement::zero(F);
  return inst.degree() % 2 == 0 ? FieldElement::one(F) : -FieldElement::one(F);
}

bool check_carnot(const CarnotInstance& inst) { return carnot_value(inst) == carnot_target(inst); }

ProjPoint solve_last_coordinate(const std::array<Line, 3>& lines, const std::array<DivisorOnLine, 3>& known, int unknown,
                                CarnotCase kind) {
  require(unknown >= 0 && unknown < 3, ErrorCode::PreconditionViolation, "unknown line index must be 0, 1 or 2");
  require(kind != CarnotCase::TangentCorner, ErrorCode::PreconditionViolation,
          "solving for a point is only available for the triangle and concurrent cases");
  const int m = known[(unknown + 1) % 3].degree();
  const ProjFrame frame = check_hypotheses(lines, known, kind, std::nullopt, m, unknown);
  const FieldPtr& F = lines[0].field();
  const FieldElement v = value_of(known, kind, std::nullopt, frame, F);
  const FieldElement zero = FieldElement::zero(F), one = FieldElement::one(F);
  Coords c;
  if (kind == CarnotCase::Concurrent) {
    const FieldElement x = unknown == 0 ? -v : v;
    c = unknown == 0 ? Coords{x, one, one} : unknown == 1 ? Coords{x, zero, one} : Coords{x, one, zero};
  } else {
    const FieldElement u = (m % 2 == 0 ? one : -one) / v;
    c = unknown == 0 ? Coords{zero, u, one} : unknown == 1 ? Coords{one, zero, u} : Coords{u, one, zero};
  }
  const ProjPoint p(pull_back(frame, c));
  for (int j = 0; j < 3; ++j)
    require(j == unknown || !lines[j].contains(p), ErrorCode::NoAdmissibleSolution,
            "the solution " + p.to_string() + " is the corner " + name_of(unknown) + " ∩ " + name_of(j));
  require(known[unknown].multiplicity(p) == 0, ErrorCode::NoAdmissibleSolution,
          "the solution " + p.to_string() + " coincides with a point already on " + name_of(unknown));
  return p;
}

Matrix carnot_conditions(const CarnotInstance& inst, const ProjFrame& frame) {
  const FieldPtr& F = inst.field();
  const int m = inst.degree();
  const auto mons = monomials(m);
  const int n = static_cast<int>(mons.size());
  Matrix a(F, 0, n);
  for (int i = 0; i < 3; ++i) {
    const Line r = frame.image(inst.lines[i]);
    const auto& [pa, pb] = r.param();
    std::vector<BinaryForm> cols;
    for (const auto& e : mons) cols.push_back(restrict_to_param(TernaryForm::monomial(FieldElement::one(F), e), pa, pb));
    const BinaryForm target = target_form(inst.divisors[i], frame, r, F);
    int l = 0;
    while (target.coeff(l).is_zero()) ++l;
    // Restriction proportional to the target: R_k B_l - R_l B_k = 0.
    for (int k = 0; k <= m; ++k) {
      if (k == l) continue;
      std::vector<FieldElement> row;
      for (int j = 0; j < n; ++j) row.push_back(target.coeff(l) * cols[j].coeff(k) - target.coeff(k) * cols[j].coeff(l));
      a.append_row(row);
    }
  }
  if (inst.kind == CarnotCase::TangentCorner) {
    std::vector<FieldElement> row(n, FieldElement::zero(F));
    row[monomial_index({1, 0, m - 1})] = FieldElement::one(F);
    row[monomial_index({0, 1, m - 1})] = -*inst.alpha;
    a.append_row(row);
  }
  return a;
}

TernaryForm construct_curve(const CarnotInstance& inst, std::uint64_t seed) {
  const FieldElement value = carnot_value(inst);
  require(value == carnot_target(inst), ErrorCode::CarnotViolated,
          "Carnot value " + value.to_string() + ", expected " + carnot_target(inst).to_string());
  const ProjFrame frame = carnot_frame(inst);
  const FieldPtr& F = inst.field();
  const int m = inst.degree();
  Matrix a = carnot_conditions(inst, frame);
  std::vector<FieldElement> b(a.rows(), FieldElement::zero(F));
  std::vector<FieldElement> norm(a.cols(), FieldElement::zero(F));
  norm[monomial_index({m, 0, 0})] = FieldElement::one(F);
  a.append_row(norm);
  b.push_back(FieldElement::one(F));
  std::vector<FieldElement> sol;
  try {
    sol = solve(a, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentSystem) throw;
    fail(ErrorCode::InvariantViolation, "Carnot condition holds but the curve conditions are inconsistent");
  }
  Rng rng(seed);
  for (const auto& v : nullspace(a)) {
    const FieldElement c = FieldElement::random(F, rng);
    for (std::size_t j = 0; j < sol.size(); ++j) sol[j] += c * v[j];
  }
  const TernaryForm g = TernaryForm::from_vector(F, m, sol).substitute(frame.m).normalized();
  for (int i = 0; i < 3; ++i)
    require(line_divisor(inst.lines[i], g, seed) == inst.divisors[i], ErrorCode::InvariantViolation,
            "constructed curve cuts the wrong divisor on " + name_of(i));
  return g;
}

SmoothRepresentative smooth_representative(const CarnotInstance& inst, int attempts, std::uint64_t seed, int threads) {
  require(inst.degree() >= 4, ErrorCode::PreconditionViolation, "smooth representatives need m >= 4");
  require(attempts >= 1, ErrorCode::PreconditionViolation, "attempt budget must be positive");
  const FieldElement value = carnot_value(inst);
  require(value == carnot_target(inst), ErrorCode::CarnotViolated,
          "Carnot value " + value.to_string() + ", expected " + carnot_target(inst).to_string());
  const ProjFrame frame = carnot_frame(inst);
  const FieldPtr& F = inst.field();
  const int m = inst.degree();
  const auto basis = nullspace(carnot_conditions(inst, frame));
  const int corner = monomial_index({m, 0, 0});
  auto trial = [&](int i) -> std::optional<TernaryForm> {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    std::vector<FieldElement> v(static_cast<std::size_t>(monomial_count(m)), FieldElement::zero(F));
    for (const auto& bv : basis) {
      const FieldElement c = FieldElement::random(F, rng);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * bv[j];
    }
    // a_{m00} = 0 forces the curve through L2 ∩ L3 and hence to contain a line.
    if (v[corner].is_zero()) return std::nullopt;
    TernaryForm g = TernaryForm::from_vector(F, m, v).substitute(frame.m).normalized();
    if (!is_smooth(g, rng.next()).smooth) return std::nullopt;
    return g;
  };
  threads = std::max(1, threads);
  for (int start = 0; start < attempts; start += threads) {
    const int end = std::min(attempts, start + threads);
    std::vector<std::optional<TernaryForm>> results;
    if (threads == 1) {
      results.push_back(trial(start));
    } else {
      std::vector<std::future<std::optional<TernaryForm>>> futs;
      for (int i = start; i < end; ++i) futs.push_back(std::async(std::launch::async, trial, i));
      for (auto& f : futs) results.push_back(f.get());
    }
    for (int i = start; i < end; ++i) {
      const auto& g = results[static_cast<std::size_t>(i - start)];
      if (!g) continue;
      std::array<DivisorOnLine, 3> divs{line_divisor(inst.lines[0], *g, seed), line_divisor(inst.lines[1], *g, seed),
                                        line_divisor(inst.lines[2], *g, seed)};
      for (int k = 0; k < 3; ++k)
        require(divs[k] == inst.divisors[k], ErrorCode::InvariantViolation,
                "smooth member cuts the wrong divisor on " + name_of(k));
      return {*g, divs, i + 1};
    }
  }
  fail(ErrorCode::AttemptsExhausted, "no smooth member in " + std::to_string(attempts) + " trials");
}

CarnotInstance instance_from_curve(const std::array<Line, 3>& lines, const TernaryForm& g, CarnotCase kind,
                                   std::uint64_t seed) {
  CarnotInstance inst{lines,
                      {line_divisor(lines[0], g, seed), line_divisor(lines[1], g, seed), line_divisor(lines[2], g, seed)},
                      kind,
                      std::nullopt};
  if (kind == CarnotCase::TangentCorner) {
    const TernaryForm h = coordinate_frame(lines[0], lines[1], lines[2]).image(g);
    const int m = g.degree();
    const FieldElement a10 = h.coeff({1, 0, m - 1}), a01 = h.coeff({0, 1, m - 1});
    require(!a10.is_zero() && !a01.is_zero(), ErrorCode::InvariantViolation,
            "the tangent at L1 ∩ L2 is not of the form alpha x + y = 0 with alpha nonzero");
    inst.alpha = a10 / a01;
  }
  return inst;
}

}  // namespace curvesys
