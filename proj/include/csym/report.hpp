#pragma once

#include <map>
#include <string>

namespace csym {

/// Structured outcome of one identity check: named residuals plus the inputs
/// that produced them. `passed` is true iff every residual met its tolerance.
struct VerificationReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    std::map<std::string, double> residuals;
    bool passed = false;
    std::string notes;

    bool inconclusive() const { return notes.rfind("inconclusive", 0) == 0; }
};

/// Single-line JSON rendering with stable key order.
std::string report_json(const VerificationReport& rep);

/// Single-line human-readable rendering; residual values match the JSON mode.
std::string report_text(const VerificationReport& rep);

}  // namespace csym
