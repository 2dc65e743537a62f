#pragma once

// Deterministic text output for reports: doubles are always written with 17
// significant digits so that every value round-trips exactly.

#include <string>

#include <json.hpp>

namespace dgldpc {

/// "%.17g"; non-finite values become "inf", "-inf" or "nan".
std::string format_double(double value);

/// Like ordered_json::dump(indent) but floats use format_double. Non-finite
/// floats are written as the strings "inf"/"-inf"/"nan". Ends without a newline.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

}  // namespace dgldpc
