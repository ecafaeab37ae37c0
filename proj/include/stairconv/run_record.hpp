#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "stairconv/version.hpp"

namespace stairconv {

/// The unit of reproducibility emitted by the CLI: everything needed to
/// re-run and to diff a result at full double precision.
struct RunRecord {
    std::string command;
    int dim = 0;
    std::string family;  // grid | diag3 | diagonal_theorem2 | fsl
    std::string type;    // "{2,3}", "F7", "overall", or ""
    std::string method;  // de | nelder_mead | simulated_annealing | random_search | closed_form
    uint64_t seed = 0;
    double value = 0.0;
    std::vector<double> argmax_q;
    std::vector<double> argmax_p;
    int64_t evaluations = 0;
    double wall_ms = 0.0;
    std::string tool_version = kToolVersion;
};

inline nlohmann::json to_json(const RunRecord& r) {
    return nlohmann::json{{"command", r.command},
                          {"dim", r.dim},
                          {"family", r.family},
                          {"type", r.type},
                          {"method", r.method},
                          {"seed", r.seed},
                          {"value", r.value},
                          {"argmax_q", r.argmax_q},
                          {"argmax_p", r.argmax_p},
                          {"evaluations", r.evaluations},
                          {"wall_ms", r.wall_ms},
                          {"tool_version", r.tool_version}};
}

inline RunRecord run_record_from_json(const nlohmann::json& j) {
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.family = j.at("family").get<std::string>();
    r.type = j.value("type", "");
    r.method = j.value("method", "");
    r.seed = j.at("seed").get<uint64_t>();
    r.value = j.at("value").get<double>();
    r.argmax_q = j.value("argmax_q", std::vector<double>{});
    r.argmax_p = j.value("argmax_p", std::vector<double>{});
    r.evaluations = j.value("evaluations", int64_t{0});
    r.wall_ms = j.value("wall_ms", 0.0);
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
}

/// Minimal structural validator for the subset of JSON Schema the shipped
/// runrecord.schema.json uses: type, enum, required, properties, items,
/// minimum, additionalProperties. Returns an empty string when valid, else
/// a description of the first violation.
inline std::string schema_validate(const nlohmann::json& schema, const nlohmann::json& doc,
                                   const std::string& path = "$") {
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"]) {
            if (v == doc) return "";
        }
        return path + ": value not in enum";
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) || (t == "number" && doc.is_number()) ||
                  (t == "integer" && doc.is_number_integer()) ||
                  (t == "boolean" && doc.is_boolean()) || (t == "null" && doc.is_null());
        if (!ok) return path + ": expected type " + t;
    }
    if (schema.contains("minimum") && doc.is_number()) {
        if (doc.get<double>() < schema["minimum"].get<double>()) {
            return path + ": below minimum";
        }
    }
    if (doc.is_object()) {
        if (schema.contains("required")) {
            for (const auto& k : schema["required"]) {
                if (!doc.contains(k.get<std::string>())) {
                    return path + ": missing required field " + k.get<std::string>();
                }
            }
        }
        const auto props = schema.value("properties", nlohmann::json::object());
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (props.contains(it.key())) {
                std::string err = schema_validate(props[it.key()], it.value(), path + "." + it.key());
                if (!err.empty()) return err;
            } else if (schema.value("additionalProperties", true) == false) {
                return path + ": unexpected field " + it.key();
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < doc.size(); ++i) {
            std::string err = schema_validate(schema["items"], doc[i], path + "[" + std::to_string(i) + "]");
            if (!err.empty()) return err;
        }
    }
    return "";
}

}  // namespace stairconv
