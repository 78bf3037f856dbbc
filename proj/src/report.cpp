#include "csym/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace csym {

std::string report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["name"] = rep.name;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.parameters) j["parameters"][k] = v;
    j["residuals"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.residuals) j["residuals"][k] = v;
    j["passed"] = rep.passed;
    j["notes"] = rep.notes;
    return j.dump();
}

std::string report_text(const VerificationReport& rep) {
    std::string line = rep.name;
    line += rep.inconclusive() ? " INCONCLUSIVE" : (rep.passed ? " pass" : " FAIL");
    for (const auto& [k, v] : rep.parameters) line += " " + k + "=" + v;
    char buf[64];
    for (const auto& [k, v] : rep.residuals) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        line += " " + k + "=" + buf;
    }
    if (!rep.notes.empty()) line += "  # " + rep.notes;
    return line;
}

}  // namespace csym
