#pragma once

// Validator for the subset of JSON Schema the shipped schemas use:
// type, properties, required, items, enum, pattern, additionalProperties.

#include <regex>
#include <string>

#include <json.hpp>

namespace schema {

using nlohmann::json;

inline bool validate(const json& sch, const json& v, std::string& err,
                     const std::string& path = "$") {
    if (sch.contains("type")) {
        const std::string t = sch["type"];
        bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array())
               || (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean())
               || (t == "integer" && v.is_number_integer())
               || (t == "number" && v.is_number());
        if (!ok) { err = path + ": expected type " + t; return false; }
    }
    if (sch.contains("enum")) {
        bool ok = false;
        for (const auto& e : sch["enum"]) ok = ok || e == v;
        if (!ok) { err = path + ": value not in enum"; return false; }
    }
    if (sch.contains("pattern") && v.is_string()) {
        std::regex re(sch["pattern"].get<std::string>());
        if (!std::regex_search(v.get<std::string>(), re)) {
            err = path + ": pattern mismatch";
            return false;
        }
    }
    if (v.is_object()) {
        if (sch.contains("required"))
            for (const auto& r : sch["required"])
                if (!v.contains(r.get<std::string>())) {
                    err = path + ": missing required key " + r.get<std::string>();
                    return false;
                }
        const json props = sch.value("properties", json::object());
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validate(props[it.key()], it.value(), err, path + "." + it.key()))
                    return false;
            } else if (sch.contains("additionalProperties")
                       && sch["additionalProperties"].is_boolean()
                       && !sch["additionalProperties"].get<bool>()) {
                err = path + ": unexpected key " + it.key();
                return false;
            }
        }
    }
    if (v.is_array() && sch.contains("items")) {
        size_t i = 0;
        for (const auto& item : v) {
            if (!validate(sch["items"], item, err, path + "[" + std::to_string(i) + "]"))
                return false;
            ++i;
        }
    }
    return true;
}

}  // namespace schema
