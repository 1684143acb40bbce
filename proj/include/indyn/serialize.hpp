#pragma once

#include <json.hpp>

#include "indyn/classify.hpp"
#include "indyn/hyperspace.hpp"
#include "indyn/joinings.hpp"
#include "indyn/measure.hpp"
#include "indyn/timeset.hpp"

namespace indyn {

using Json = nlohmann::ordered_json;

Json json_of(const FiniteSubset& s);
Json json_of(const VietorisBasisElement& v);
/// {"atoms": [[index, "p/q"], ...]} with exact rationals as strings.
Json json_of(const AtomicMeasure& mu);
Json json_of(const TimeSet& s);
Json json_of(const ResidueTimeSet& s);
Json json_of(const Joining& j);
/// Stable field order; verdicts carry "exact" qualifiers at desk scale.
Json json_of(const ClassificationReport& r);

/// One integer per line.
std::string csv_of(const TimeSet& s);

}  // namespace indyn
