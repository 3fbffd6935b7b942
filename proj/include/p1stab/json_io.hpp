#pragma once

#include <string>

#include "p1stab/cells.hpp"
#include "p1stab/group_actions.hpp"
#include "p1stab/moduli.hpp"
#include "p1stab/stability.hpp"

namespace p1stab {

inline constexpr const char* kSchemaTag = "p1stab/1";

/// Deterministic float formatting: %.17g, round-trip exact.
std::string json_double(double v);

std::string to_json(const StabilityCondition& sc);
std::string to_json(const GroupElement& g);
std::string to_json(const HNFiltration& f);
std::string to_json(const HeartDescriptor& h);
std::string to_json(const ReductionResult& r);
std::string to_json(const std::vector<PathSample>& samples);

/// Accepts either a JSON object text or (when the text does not start
/// with '{') a path to a file containing one.
StabilityCondition parse_condition(const std::string& json_or_path);

}  // namespace p1stab
