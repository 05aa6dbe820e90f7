#pragma once
// Just enough of a JSON Schema checker for the schemas/ directory: type (single
// or list), enum, required, properties, items, pattern, minimum. Collects every
// violation with a JSON-pointer-ish path so failures read well.

#include "json.hpp"

#include <regex>
#include <string>
#include <vector>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
}

inline void validate(const json& schema, const json& value, const std::string& path,
                     std::vector<std::string>& errors) {
    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_string()) {
            ok = type_matches(it->get<std::string>(), value);
        } else {
            for (const auto& t : *it)
                ok = ok || type_matches(t.get<std::string>(), value);
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch, got " + value.dump());
            return;
        }
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
        bool ok = false;
        for (const auto& candidate : *it) ok = ok || candidate == value;
        if (!ok) errors.push_back(path + ": " + value.dump() + " not in enum");
    }
    if (auto it = schema.find("pattern"); it != schema.end() && value.is_string()) {
        std::regex re(it->get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            errors.push_back(path + ": '" + value.get<std::string>() + "' fails pattern");
    }
    if (auto it = schema.find("minimum"); it != schema.end() && value.is_number()) {
        if (value.get<double>() < it->get<double>())
            errors.push_back(path + ": " + value.dump() + " below minimum");
    }
    if (value.is_object()) {
        if (auto it = schema.find("required"); it != schema.end())
            for (const auto& key : *it)
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key '" +
                                     key.get<std::string>() + "'");
        if (auto it = schema.find("properties"); it != schema.end())
            for (auto& [key, sub] : it->items())
                if (value.contains(key))
                    validate(sub, value.at(key), path + "/" + key, errors);
    }
    if (value.is_array()) {
        if (auto it = schema.find("items"); it != schema.end()) {
            size_t i = 0;
            for (const auto& element : value)
                validate(*it, element, path + "/" + std::to_string(i++), errors);
        }
    }
}

inline std::vector<std::string> check(const json& schema, const json& value) {
    std::vector<std::string> errors;
    validate(schema, value, "", errors);
    return errors;
}

} // namespace schema_check
