#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "nsys/blocks.hpp"
#include "nsys/exponents.hpp"
#include "nsys/minima.hpp"
#include "nsys/plmap.hpp"
#include "nsys/spectrum.hpp"
#include "nsys/systems.hpp"

namespace nsys {

using Json = nlohmann::json;

// Rationals travel as lowest-term strings "p/q" or "p"; "inf" marks the
// infinite extended value.

Json plmap_to_json(const PLMap& P);
Json plmap_to_json(const PLMap& P, const std::string& kind);
PLMap plmap_from_json(const Json& j);

Json schedule_to_json(const BlockSchedule& s);
BlockSchedule schedule_from_json(const Json& j);

Json violations_to_json(const std::vector<Violation>& v);
Json relation_violations_to_json(const std::vector<RelationViolation>& v);

Json profile_to_json(const ExponentProfile& E);
ExponentProfile profile_from_json(const Json& j);

Json audit_to_json(const AuditReport& a);
Json certificate_to_json(const SpectrumCertificate& c);
Json extrema_to_json(const RatioExtremum& e);
Json estimate_to_json(const ExponentEstimate& e);

}  // namespace nsys
