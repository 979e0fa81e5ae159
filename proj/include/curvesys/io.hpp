#pragma once

#include <json.hpp>

#include "curvesys/carnot.hpp"
#include "curvesys/constructor.hpp"
#include "curvesys/linsys.hpp"

// JSON encodings. Field elements and seeds are strings; counts and degrees are
// plain integers. Every decoder throws ParseError on malformed input.
namespace curvesys::io {

using json = nlohmann::json;

json to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

json to_json(const TernaryForm& f);
TernaryForm form_from_json(const json& j, const FieldPtr& f);

/// {"field": ..., "xyz": [...]}; decoded points are canonicalized over `base`.
json to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j, const FieldPtr& base);

json to_json(const Line& l);
Line line_from_json(const json& j, const FieldPtr& f);

json to_json(const DivisorOnCurve& d);
DivisorOnCurve divisor_from_json(const json& j, const TernaryForm& curve);
json to_json(const DivisorOnLine& d);
DivisorOnLine line_divisor_from_json(const json& j, const Line& l);

std::string to_string(CarnotCase k);
CarnotCase carnot_case_from_string(const std::string& s);

/// {"field", "kind", "lines": [3], "divisors": [3], "alpha"?}
json to_json(const CarnotInstance& inst);
CarnotInstance instance_from_json(const json& j);

/// {"field", "curve", "m", "z"}
json to_json(const SystemPresentation& pres);
SystemPresentation presentation_from_json(const json& j);

json to_json(const LinearSystemReport& rep);

json to_json(const ConstructionCertificate& cert);

/// The inputs of certify() as stored in a certificate.
struct CertificateData {
  int d;
  int x;
  int beta;
  std::uint64_t seed;
  TernaryForm c;
  TernaryForm gamma;
  std::array<Line, 3> lines;
  std::vector<ProjPoint> e;
  json report;
};
CertificateData certificate_from_json(const json& j);

}  // namespace curvesys::io
