#pragma once

// Canonical JSON documents (sorted keys, summands in coset order) and the
// matching human-readable text for each CLI report.

#include <string>

#include <json.hpp>

#include "monoalg/decomposition.hpp"
#include "monoalg/errors.hpp"
#include "monoalg/homology.hpp"
#include "monoalg/properties.hpp"
#include "monoalg/sweep.hpp"
#include "monoalg/verify.hpp"

namespace monoalg {

using nlohmann::json;

json point_json(const Point& p);
json rational_json(const RatVector& v);

json decomposition_json(const AffineSemigroup& b, const Decomposition& d, bool verbose);
json properties_json(const PropertyReport& p);
json regularity_json(const RegularityReport& r, Characteristic ch);
json eg_json(const RegularityReport& r);
json verification_json(const VerificationReport& v);
json sweep_json(const SweepSummary& s);
json error_json(const Error& e);

std::string decomposition_text(const AffineSemigroup& b, const Decomposition& d, bool verbose);
std::string properties_text(const PropertyReport& p);
std::string regularity_text(const RegularityReport& r, Characteristic ch);
std::string eg_text(const RegularityReport& r);
std::string verification_text(const VerificationReport& v);
std::string sweep_text(const SweepSummary& s);

/// Pretty-printed with two-space indent and a trailing newline.
std::string canonical_dump(const json& j);

}  // namespace monoalg
