#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace a1tk {

/// Shortest-width decimal with 17 significant digits (%.17g): enough to
/// round-trip any double exactly, and byte-stable across runs, so reports
/// diff cleanly.
std::string format_double(double x);

/// Minimal JSON value with canonical serialization: object keys sorted,
/// compact separators, doubles via format_double. Canonical bytes are the
/// contract; parsing is done with a full JSON library elsewhere.
class JsonValue {
public:
    JsonValue() : kind_(Kind::null) {}
    JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
    JsonValue(double d) : kind_(Kind::number_double), double_(d) {}
    JsonValue(std::int64_t i) : kind_(Kind::number_int), int_(i) {}
    JsonValue(std::uint64_t u) : JsonValue(static_cast<std::int64_t>(u)) {}
    JsonValue(int i) : JsonValue(static_cast<std::int64_t>(i)) {}
    JsonValue(const char* s) : kind_(Kind::string), string_(s) {}
    JsonValue(std::string s) : kind_(Kind::string), string_(std::move(s)) {}

    static JsonValue object() { JsonValue v; v.kind_ = Kind::object; return v; }
    static JsonValue array() { JsonValue v; v.kind_ = Kind::array; return v; }

    JsonValue& set(const std::string& key, JsonValue value);
    JsonValue& push(JsonValue value);

    std::string dump() const;

private:
    enum class Kind { null, boolean, number_int, number_double, string, array, object };

    void dump_to(std::string& out) const;

    Kind kind_;
    bool bool_ = false;
    std::int64_t int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<JsonValue> items_;
    std::map<std::string, JsonValue> fields_;
};

std::string json_escape(const std::string& s);

} // namespace a1tk
