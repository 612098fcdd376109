#include "a1tk/weight_io.hpp"

#include "a1tk/json_writer.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace a1tk {

namespace {

using nlohmann::json;

double positive_number(const json& j, const char* field) {
    if (!j.is_number())
        throw WeightParseError(std::string("weight file: field \"") + field +
                               "\" must be a number");
    return j.get<double>();
}

Weight from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw WeightParseError("weight file: expected an object with a \"type\" string");
    const std::string type = j.at("type").get<std::string>();
    if (type == "step") {
        if (!j.contains("breakpoints") || !j.contains("values"))
            throw WeightParseError("weight file: step weight needs \"breakpoints\" and \"values\"");
        std::vector<double> bp, vals;
        for (const auto& x : j.at("breakpoints")) bp.push_back(positive_number(x, "breakpoints"));
        for (const auto& x : j.at("values")) vals.push_back(positive_number(x, "values"));
        try {
            return StepWeight(std::move(bp), std::move(vals));
        } catch (const std::domain_error& e) {
            throw WeightParseError(e.what());
        }
    }
    if (type == "power") {
        if (!j.contains("a") || !j.contains("alpha"))
            throw WeightParseError("weight file: power weight needs \"a\" and \"alpha\"");
        try {
            return PowerWeight(positive_number(j.at("a"), "a"),
                               positive_number(j.at("alpha"), "alpha"));
        } catch (const std::domain_error& e) {
            throw WeightParseError(e.what());
        }
    }
    throw WeightParseError("weight file: unknown type \"" + type + "\"");
}

} // namespace

Weight parse_weight(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw WeightParseError(std::string("weight file: ") + e.what());
    }
    return from_json(j);
}

Weight load_weight(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw WeightParseError("cannot open weight file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weight(buf.str());
}

std::string write_weight(const Weight& w) {
    JsonValue root = JsonValue::object();
    if (is_step(w)) {
        const auto& sw = as_step(w);
        root.set("type", "step");
        JsonValue bp = JsonValue::array();
        for (double t : sw.breakpoints()) bp.push(JsonValue(t));
        JsonValue vals = JsonValue::array();
        for (double v : sw.values()) vals.push(JsonValue(v));
        root.set("breakpoints", std::move(bp));
        root.set("values", std::move(vals));
    } else {
        const auto& pw = as_power(w);
        root.set("type", "power");
        root.set("a", JsonValue(pw.a()));
        root.set("alpha", JsonValue(pw.alpha()));
    }
    return root.dump() + "\n";
}

void save_weight(const Weight& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write weight file: " + path);
    out << write_weight(w);
}

} // namespace a1tk
