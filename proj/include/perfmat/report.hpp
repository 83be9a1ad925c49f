#pragma once

#include <json.hpp>

#include "perfmat/bounds.hpp"
#include "perfmat/harness.hpp"

namespace perfmat {

// Counts are emitted as decimal strings so consumers never truncate them to
// floating point.
nlohmann::ordered_json to_json(const VerificationRecord& r);
nlohmann::ordered_json to_json(const RunSummary& s);
nlohmann::ordered_json to_json(const FactorialProductBound& b);
nlohmann::ordered_json to_json(const ExtremalReport& r);

}  // namespace perfmat
