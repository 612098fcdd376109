#pragma once

#include "a1tk/weight.hpp"

#include <stdexcept>
#include <string>

namespace a1tk {

/// Malformed weight file: bad JSON, unknown type, or an invariant violation.
/// The message names the offending field or cell.
class WeightParseError : public std::runtime_error {
public:
    explicit WeightParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Weight file format: one JSON object with "type" of "step" or "power".
///   step:  "breakpoints" (first 0, last 1, strictly increasing),
///          "values" (positive, one per cell)
///   power: "a" (positive), "alpha" (in (-1, 0])
Weight parse_weight(const std::string& text);
Weight load_weight(const std::string& path);

/// Canonical serialization: sorted keys, 17-significant-digit floats,
/// trailing newline. Identical weights produce identical bytes.
std::string write_weight(const Weight& w);
void save_weight(const Weight& w, const std::string& path);

} // namespace a1tk
