// curvesys: command-line front end. Machine output (JSON) goes to stdout or
// --out, progress and errors to stderr.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "curvesys/io.hpp"

using namespace curvesys;
using io::json;

namespace {

struct Common {
  std::string seed_text;
  std::string out;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool verbose = false;

  std::uint64_t seed() const {
    if (seed_text.empty()) return std::random_device{}() * 0x100000001ULL ^ std::random_device{}();
    try {
      std::size_t used = 0;
      const auto v = std::stoull(seed_text, &used, 0);
      if (used == seed_text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw CLI::ValidationError("--seed", "not an unsigned 64-bit integer: " + seed_text);
  }
};

void emit(const Common& c, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  require(static_cast<bool>(f), ErrorCode::PreconditionViolation, "cannot write " + c.out);
  f << text;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  require(static_cast<bool>(f), ErrorCode::ParseError, "cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

FieldPtr field_of(std::uint64_t p, int k) { return k <= 1 ? Field::prime(p) : make_extension(p, k); }

void log(const Common& c, const std::string& msg) {
  if (c.verbose) std::cerr << msg << "\n";
}

json table(int d) {
  json rows = json::array();
  for (int x = 1; x <= d - 3; ++x)
    for (int beta = x; beta >= 0; --beta) {
      const int r = (x + 1) * (x + 2) / 2 - beta;
      std::string status = x <= d - 6 ? "constructible" : "no base-point-free non-trivial systems";
      rows.push_back({{"r", r}, {"x", x}, {"beta", beta}, {"n_lower", n_lower_bound(d, r)}, {"status", status}});
    }
  return {{"d", d}, {"rows", rows}};
}

// Menelaus-type checks: the section of a random transversal on three lines.
json carnot_property(const FieldPtr& F, int trials, std::uint64_t seed) {
  Rng rng(seed);
  int done = 0, failures = 0;
  while (done < trials) {
    auto r = [&] { return FieldElement::random(F, rng); };
    const bool concurrent = done % 2 == 1;
    try {
      Line l1(r(), r(), r()), l2(r(), r(), r());
      Line l3(r(), r(), r());
      if (concurrent) {
        const FieldElement k = r();
        l3 = Line(l1.coeffs()[0] + k * l2.coeffs()[0], l1.coeffs()[1] + k * l2.coeffs()[1],
                  l1.coeffs()[2] + k * l2.coeffs()[2]);
      }
      const Line t(r(), r(), r());
      const std::array<Line, 3> lines{l1, l2, l3};
      if ((coordinate_frame(l1, l2, l3).kind == FrameCase::Concurrent) != concurrent) continue;
      bool admissible = t != l1 && t != l2 && t != l3;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) admissible = admissible && !t.contains(lines[i].meet(lines[j]));
      if (!admissible) continue;
      const auto inst = instance_from_curve(lines, t.form(), concurrent ? CarnotCase::Concurrent : CarnotCase::Triangle);
      failures += !check_carnot(inst);
      ++done;
    } catch (const Error& e) {
      // Degenerate draws: a zero line or coincident lines.
      if (e.code() != ErrorCode::CoincidentLines && e.code() != ErrorCode::PreconditionViolation) throw;
    }
  }
  return {{"field", F->name()}, {"trials", trials}, {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane curves, Carnot conditions and special linear systems"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool seeded) {
    sub->add_option("--out", common.out, "write JSON here instead of stdout");
    sub->add_flag("-v,--verbose", common.verbose, "progress on stderr");
    if (seeded) {
      sub->add_option("--seed", common.seed_text, "64-bit seed (generated and echoed when absent)");
      sub->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    }
  };

  int d = 0, r = 0, n = 0, x = 1, beta = 0, k = 1, attempts = 32, line = 2, random_members = 8;
  std::uint64_t p = 1009;
  std::string in;
  bool no_basis = false;

  auto* bounds = app.add_subcommand("bounds", "n(r) = (d-3)(x+3) - beta");
  auto* hart = app.add_subcommand("hartshorne", "maximal dimension of a g^r_n on a degree-d plane curve");
  auto* tab = app.add_subcommand("table", "n(r) for every r with x <= d-3");
  auto* dec = app.add_subcommand("decompose", "r = (x+1)(x+2)/2 - beta");
  auto* carnot = app.add_subcommand("carnot", "Carnot conditions on three lines");
  carnot->require_subcommand(1);
  auto* c_check = carnot->add_subcommand("check", "evaluate the Carnot condition of an instance");
  auto* c_solve = carnot->add_subcommand("solve-last", "complete the divisor on one line");
  auto* c_construct = carnot->add_subcommand("construct", "a curve cutting the instance's divisors");
  auto* c_smooth = carnot->add_subcommand("smooth", "a smooth curve cutting the instance's divisors");
  auto* linsys = app.add_subcommand("linsys", "linear systems on a smooth plane curve");
  linsys->require_subcommand(1);
  auto* l_analyze = linsys->add_subcommand("analyze", "dimension, base locus, speciality and triviality");
  auto* l_bounds = linsys->add_subcommand("bounds", "same as the top-level bounds");
  auto* l_hart = linsys->add_subcommand("hartshorne", "same as the top-level hartshorne");
  auto* l_table = linsys->add_subcommand("table", "same as the top-level table");
  auto* cons = app.add_subcommand("construct", "build and certify a sharp non-trivial very special system");
  auto* ver = app.add_subcommand("verify", "re-run certification on a certificate file");
  auto* self = app.add_subcommand("selftest", "quick identity and decomposition checks");

  for (auto* s : {bounds, l_bounds}) {
    s->add_option("--d", d, "curve degree")->required()->check(CLI::Range(4, 1 << 20));
    s->add_option("--r", r, "dimension")->required();
    add_common(s, false);
  }
  for (auto* s : {hart, l_hart}) {
    s->add_option("--d", d, "curve degree")->required()->check(CLI::Range(4, 1 << 20));
    s->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
    add_common(s, false);
  }
  for (auto* s : {tab, l_table}) {
    s->add_option("--d", d, "curve degree")->required()->check(CLI::Range(4, 2000));
    add_common(s, false);
  }
  dec->add_option("--r", r, "dimension")->required();
  add_common(dec, false);
  for (auto* s : {c_check, c_solve, c_construct, c_smooth, l_analyze}) {
    s->add_option("--in", in, "input JSON")->required()->check(CLI::ExistingFile);
    add_common(s, s != c_check);
  }
  c_solve->add_option("--line", line, "index of the incomplete divisor")->check(CLI::Range(0, 2));
  c_smooth->add_option("--attempts", attempts, "trial budget")->check(CLI::PositiveNumber);
  l_analyze->add_option("--random-members", random_members, "random members tried per admissible m'")
      ->check(CLI::NonNegativeNumber);
  l_analyze->add_flag("--no-basis", no_basis, "skip basis members in the search for E");
  cons->add_option("--d", d, "curve degree")->required();
  cons->add_option("--x", x, "r = (x+1)(x+2)/2 - beta")->required();
  cons->add_option("--beta", beta, "0 <= beta <= x");
  cons->add_option("--p", p, "field characteristic");
  cons->add_option("--k", k, "extension degree")->check(CLI::PositiveNumber);
  cons->add_option("--attempts", attempts, "smoothness trials per curve")->check(CLI::PositiveNumber);
  add_common(cons, true);
  ver->add_option("certificate", in, "certificate JSON")->required()->check(CLI::ExistingFile);
  add_common(ver, false);
  add_common(self, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed() || l_bounds->parsed()) {
      emit(common, n_lower_bound(d, r));
    } else if (hart->parsed() || l_hart->parsed()) {
      emit(common, hartshorne_max_dim(d, n));
    } else if (tab->parsed() || l_table->parsed()) {
      emit(common, table(d));
    } else if (dec->parsed()) {
      const auto v = decompose_r(r);
      emit(common, {{"r", v.r}, {"x", v.x}, {"beta", v.beta}});
    } else if (c_check->parsed()) {
      const auto inst = io::instance_from_json(read_json(in));
      emit(common, {{"holds", check_carnot(inst)},
                    {"value", carnot_value(inst).to_string()},
                    {"target", carnot_target(inst).to_string()}});
    } else if (c_solve->parsed()) {
      const std::uint64_t seed = common.seed();
      const auto inst = io::instance_from_json(read_json(in));
      const ProjPoint pt = solve_last_coordinate(inst.lines, inst.divisors, line, inst.kind);
      emit(common, {{"seed", std::to_string(seed)}, {"line", line}, {"point", io::to_json(pt)}});
    } else if (c_construct->parsed()) {
      const std::uint64_t seed = common.seed();
      const auto inst = io::instance_from_json(read_json(in));
      emit(common, {{"seed", std::to_string(seed)}, {"curve", io::to_json(construct_curve(inst, seed))}});
    } else if (c_smooth->parsed()) {
      const std::uint64_t seed = common.seed();
      const auto inst = io::instance_from_json(read_json(in));
      const auto rep = smooth_representative(inst, attempts, seed, common.threads);
      emit(common, {{"seed", std::to_string(seed)}, {"curve", io::to_json(rep.curve)}, {"trials", rep.trials}});
    } else if (l_analyze->parsed()) {
      const std::uint64_t seed = common.seed();
      const auto pres = io::presentation_from_json(read_json(in));
      json out = io::to_json(analyze(pres, {!no_basis, random_members}, seed));
      out["seed"] = std::to_string(seed);
      emit(common, out);
    } else if (cons->parsed()) {
      ConstructionRequest req{d, x, beta, field_of(p, k)};
      req.seed = common.seed();
      req.smooth_attempts = attempts;
      req.threads = common.threads;
      log(common, "constructing d=" + std::to_string(d) + " x=" + std::to_string(x) + " beta=" + std::to_string(beta) +
                      " over " + req.field->name() + " seed " + std::to_string(req.seed));
      json out = io::to_json(construct(req));
      out["seed"] = std::to_string(req.seed);
      emit(common, out);
    } else if (ver->parsed()) {
      const json j = read_json(in);
      const auto data = io::certificate_from_json(j);
      const auto cert = certify(data.d, data.x, data.beta, data.c, data.gamma, data.lines, data.e, data.seed);
      const json again = io::to_json(cert.report);
      for (const char* key : {"r", "n", "triviality", "very_special", "base_point_free", "residual_dim"})
        if (data.report.contains(key))
          require(data.report[key] == again[key], ErrorCode::CertificationFailed,
                  std::string("recorded ") + key + " differs from the recomputed value");
      emit(common, {{"verified", true}, {"r", cert.report.r}, {"n", cert.report.n},
                    {"triviality", to_string(cert.report.triviality.verdict)}});
    } else if (self->parsed()) {
      const std::uint64_t seed = common.seed();
      json menelaus = json::array({carnot_property(Field::rationals(), 200, seed),
                                   carnot_property(Field::prime(1009), 200, Rng::derive(seed, 1))});
      int bad = 0;
      for (const auto& m : menelaus) bad += m["failures"].get<int>();
      int decomp_bad = 0;
      for (int rr = 2; rr <= 10000; ++rr) {
        const auto v = decompose_r(rr);
        decomp_bad += !(v.x >= 1 && v.beta >= 0 && v.beta <= v.x && (v.x + 1) * (v.x + 2) / 2 - v.beta == rr);
      }
      emit(common, {{"seed", std::to_string(seed)},
                    {"carnot", menelaus},
                    {"decompose_failures", decomp_bad},
                    {"passed", bad == 0 && decomp_bad == 0}});
      return bad == 0 && decomp_bad == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
