#include "a1tk/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace a1tk {

std::string format_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("format_double: non-finite values have no JSON form");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
    if (kind_ != Kind::object)
        throw std::logic_error("JsonValue::set on a non-object");
    fields_[key] = std::move(value);
    return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
    if (kind_ != Kind::array)
        throw std::logic_error("JsonValue::push on a non-array");
    items_.push_back(std::move(value));
    return *this;
}

void JsonValue::dump_to(std::string& out) const {
    switch (kind_) {
        case Kind::null: out += "null"; break;
        case Kind::boolean: out += bool_ ? "true" : "false"; break;
        case Kind::number_int: out += std::to_string(int_); break;
        case Kind::number_double: out += format_double(double_); break;
        case Kind::string:
            out += '"';
            out += json_escape(string_);
            out += '"';
            break;
        case Kind::array: {
            out += '[';
            bool first = true;
            for (const auto& item : items_) {
                if (!first) out += ',';
                first = false;
                item.dump_to(out);
            }
            out += ']';
            break;
        }
        case Kind::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : fields_) { // std::map: sorted keys
                if (!first) out += ',';
                first = false;
                out += '"';
                out += json_escape(key);
                out += "\":";
                value.dump_to(out);
            }
            out += '}';
            break;
        }
    }
}

std::string JsonValue::dump() const {
    std::string out;
    dump_to(out);
    return out;
}

} // namespace a1tk
