#include "curvesys/io.hpp"

namespace curvesys::io {

namespace {

template <class Fn>
auto parsing(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

json elements(const Coords& c) { return json::array({c[0].to_string(), c[1].to_string(), c[2].to_string()}); }

Coords elements_from(const json& j, const FieldPtr& f) {
  require(j.is_array() && j.size() == 3, ErrorCode::ParseError, "expected three coordinates");
  return {FieldElement::parse(f, j[0].get<std::string>()), FieldElement::parse(f, j[1].get<std::string>()),
          FieldElement::parse(f, j[2].get<std::string>())};
}

std::uint64_t seed_from(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const std::string s = j.get<std::string>();
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    require(used == s.size(), ErrorCode::ParseError, "bad seed " + s);
    return v;
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "bad seed " + s);
  }
}

std::vector<DivisorEntry> entries_from(const json& j, const FieldPtr& base) {
  std::vector<DivisorEntry> out;
  for (const auto& e : j.at("entries")) {
    const ProjPoint p = point_from_json(e.at("point"), base);
    const int mult = e.at("mult").get<int>();
    require(mult >= 1, ErrorCode::ParseError, "multiplicities must be positive");
    out.push_back({p, mult, p.residue_degree(base)});
  }
  return out;
}

json entries_to_json(const std::vector<DivisorEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) arr.push_back({{"point", to_json(e.point)}, {"mult", e.mult}, {"resdeg", e.resdeg}});
  return arr;
}

}  // namespace

json to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::Rationals: return {{"kind", "Q"}};
    case FieldKind::Prime: return {{"kind", "Fp"}, {"p", f->characteristic()}};
    case FieldKind::Extension:
      return {{"kind", "Fpk"}, {"p", f->characteristic()}, {"k", f->degree()}, {"modulus", f->modulus()}};
  }
  return {};
}

FieldPtr field_from_json(const json& j) {
  return parsing("field", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(j.at("p").get<std::uint64_t>());
    require(kind == "Fpk", ErrorCode::ParseError, "unknown field kind " + kind);
    const auto p = j.at("p").get<std::uint64_t>();
    if (!j.contains("modulus")) return make_extension(p, j.at("k").get<int>());
    const auto modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    if (j.contains("k"))
      require(static_cast<int>(modulus.size()) == j.at("k").get<int>() + 1, ErrorCode::ParseError,
              "modulus length does not match k");
    return Field::extension(p, modulus);
  });
}

json to_json(const TernaryForm& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.to_string()}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

TernaryForm form_from_json(const json& j, const FieldPtr& f) {
  return parsing("form", [&] {
    const int degree = j.at("degree").get<int>();
    require(degree >= 0, ErrorCode::ParseError, "negative degree");
    TernaryForm out(f, degree);
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("e").get<std::array<int, 3>>();
      require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[0] + e[1] + e[2] == degree, ErrorCode::ParseError,
              "exponent does not match the degree");
      const Exponent ex{e[0], e[1], e[2]};
      out.set(ex, out.coeff(ex) + FieldElement::parse(f, t.at("c").get<std::string>()));
    }
    return out;
  });
}

json to_json(const ProjPoint& p) { return {{"field", to_json(p.field())}, {"xyz", elements(p.coords())}}; }

ProjPoint point_from_json(const json& j, const FieldPtr& base) {
  return parsing("point", [&] {
    const FieldPtr f = j.contains("field") ? field_from_json(j.at("field")) : base;
    require(f->characteristic() == base->characteristic() && f->degree() % base->degree() == 0,
            ErrorCode::ParseError, "point field " + f->name() + " does not contain " + base->name());
    return canonical_point(elements_from(j.at("xyz"), f), base);
  });
}

json to_json(const Line& l) { return {{"abc", elements(l.coeffs())}}; }

Line line_from_json(const json& j, const FieldPtr& f) {
  return parsing("line", [&] {
    const Coords c = elements_from(j.at("abc"), f);
    return Line(c[0], c[1], c[2]);
  });
}

json to_json(const DivisorOnCurve& d) { return {{"entries", entries_to_json(d.entries())}}; }

DivisorOnCurve divisor_from_json(const json& j, const TernaryForm& curve) {
  return parsing("divisor", [&] {
    DivisorOnCurve out(curve);
    for (const auto& e : entries_from(j, curve.field())) out.add(e.point, e.mult);
    return out;
  });
}

json to_json(const DivisorOnLine& d) { return {{"line", to_json(d.line())}, {"entries", entries_to_json(d.entries())}}; }

DivisorOnLine line_divisor_from_json(const json& j, const Line& l) {
  return parsing("line divisor", [&] { return DivisorOnLine(l, entries_from(j, l.field())); });
}

std::string to_string(CarnotCase k) {
  switch (k) {
    case CarnotCase::Triangle: return "Triangle";
    case CarnotCase::TangentCorner: return "TangentCorner";
    case CarnotCase::Concurrent: return "Concurrent";
  }
  return "?";
}

CarnotCase carnot_case_from_string(const std::string& s) {
  if (s == "Triangle") return CarnotCase::Triangle;
  if (s == "TangentCorner") return CarnotCase::TangentCorner;
  if (s == "Concurrent") return CarnotCase::Concurrent;
  fail(ErrorCode::ParseError, "unknown Carnot case " + s);
}

json to_json(const CarnotInstance& inst) {
  json j{{"field", to_json(inst.field())},
         {"kind", to_string(inst.kind)},
         {"lines", {to_json(inst.lines[0]), to_json(inst.lines[1]), to_json(inst.lines[2])}},
         {"divisors", {to_json(inst.divisors[0]), to_json(inst.divisors[1]), to_json(inst.divisors[2])}}};
  if (inst.alpha) j["alpha"] = inst.alpha->to_string();
  return j;
}

CarnotInstance instance_from_json(const json& j) {
  return parsing("Carnot instance", [&] {
    const FieldPtr f = field_from_json(j.at("field"));
    require(j.at("lines").size() == 3 && j.at("divisors").size() == 3, ErrorCode::ParseError,
            "an instance has three lines and three divisors");
    std::array<Line, 3> lines{line_from_json(j["lines"][0], f), line_from_json(j["lines"][1], f),
                              line_from_json(j["lines"][2], f)};
    CarnotInstance inst{lines,
                        {line_divisor_from_json(j["divisors"][0], lines[0]),
                         line_divisor_from_json(j["divisors"][1], lines[1]),
                         line_divisor_from_json(j["divisors"][2], lines[2])},
                        carnot_case_from_string(j.value("kind", std::string("Triangle"))),
                        std::nullopt};
    if (j.contains("alpha")) inst.alpha = FieldElement::parse(f, j.at("alpha").get<std::string>());
    return inst;
  });
}

json to_json(const SystemPresentation& pres) {
  return {{"field", to_json(pres.curve.field())}, {"curve", to_json(pres.curve)}, {"m", pres.m}, {"z", to_json(pres.z)}};
}

SystemPresentation presentation_from_json(const json& j) {
  return parsing("presentation", [&] {
    const FieldPtr f = field_from_json(j.at("field"));
    TernaryForm curve = form_from_json(j.at("curve"), f);
    DivisorOnCurve z = j.contains("z") ? divisor_from_json(j.at("z"), curve) : DivisorOnCurve(curve);
    return SystemPresentation{curve, j.at("m").get<int>(), z};
  });
}

json to_json(const LinearSystemReport& rep) {
  json triv{{"verdict", to_string(rep.triviality.verdict)},
            {"admissible", rep.triviality.admissible},
            {"certificate", rep.triviality.certificate}};
  if (rep.triviality.m_prime) triv["m_prime"] = *rep.triviality.m_prime;
  if (rep.triviality.e) triv["e"] = to_json(*rep.triviality.e);
  json j{{"d", rep.d},
         {"m", rep.m},
         {"n", rep.n},
         {"r", rep.r},
         {"base_locus", to_json(rep.base_locus)},
         {"base_point_free", rep.base_locus.empty()},
         {"very_special", rep.very_special},
         {"residual_dim", rep.residual_dim},
         {"triviality", to_string(rep.triviality.verdict)},
         {"triviality_detail", triv},
         {"hartshorne_check", rep.hartshorne_check},
         {"riemann_roch", rep.riemann_roch}};
  j["bound_check"] = rep.bound_check ? json(*rep.bound_check) : json(nullptr);
  return j;
}

json to_json(const ConstructionCertificate& cert) {
  json e = json::array();
  for (const auto& p : cert.e) e.push_back(to_json(p));
  return {{"field", to_json(cert.c.field())},
          {"seed", std::to_string(cert.seed)},
          {"certify_seed", std::to_string(cert.seed)},
          {"d", cert.d},
          {"x", cert.x},
          {"beta", cert.beta},
          {"a", cert.x + 3},
          {"curve", to_json(cert.c)},
          {"gamma", to_json(cert.gamma)},
          {"lines", {to_json(cert.lines[0]), to_json(cert.lines[1]), to_json(cert.lines[2])}},
          {"e", e},
          {"z", to_json(cert.z)},
          {"expected", {{"r", cert.expected_r}, {"n", cert.expected_n}}},
          {"r", cert.report.r},
          {"n", cert.report.n},
          {"triviality", to_string(cert.report.triviality.verdict)},
          {"report", to_json(cert.report)}};
}

CertificateData certificate_from_json(const json& j) {
  return parsing("certificate", [&] {
    const FieldPtr f = field_from_json(j.at("field"));
    const auto& lj = j.at("lines");
    require(lj.size() == 3, ErrorCode::ParseError, "a certificate has three lines");
    CertificateData out{j.at("d").get<int>(),
                        j.at("x").get<int>(),
                        j.at("beta").get<int>(),
                        seed_from(j.contains("certify_seed") ? j.at("certify_seed") : j.at("seed")),
                        form_from_json(j.at("curve"), f),
                        form_from_json(j.at("gamma"), f),
                        {line_from_json(lj[0], f), line_from_json(lj[1], f), line_from_json(lj[2], f)},
                        {},
                        j.value("report", json::object())};
    for (const auto& p : j.at("e")) out.e.push_back(point_from_json(p, f));
    return out;
  });
}

}  // namespace curvesys::io
