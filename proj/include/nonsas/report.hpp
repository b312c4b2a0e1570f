#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nonsas/check.hpp"

namespace nonsas {

inline constexpr const char* kReportVersion = "1.0.0";

// Machine-readable summary of a suite run. JSON serialization is
// byte-deterministic: object keys are emitted sorted and all numeric payloads
// are exact strings.
struct Report {
    std::string version = kReportVersion;
    std::string scheme_name;
    std::uint64_t seed = 42;
    long precision_bits = long(kMaxPrec);
    std::vector<CheckResult> checks;

    std::string overall() const {
        bool undet = false;
        for (const auto& c : checks) {
            if (c.status == Status::Violated) return "violations";
            if (c.status == Status::Undetermined) undet = true;
        }
        return undet ? "undetermined" : "ok";
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["version"] = version;
        j["scheme"] = scheme_name;
        j["seed"] = seed;
        j["precision_bits"] = precision_bits;
        j["overall"] = overall();
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) j["checks"].push_back(c.to_json());
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_text() const {
        std::string out;
        out += "scheme: " + scheme_name + "  seed: " + std::to_string(seed) +
               "  precision cap: " + std::to_string(precision_bits) + " bits\n";
        for (const auto& c : checks) {
            out += "  " + c.axiom_id;
            out.append(c.axiom_id.size() < 20 ? 20 - c.axiom_id.size() : 1, ' ');
            out += to_string(c.status);
            out += "  (" + std::to_string(c.samples_run) + " samples)";
            if (!c.witness.is_null()) out += "  witness: " + c.witness.dump();
            out += "\n";
        }
        out += "overall: " + overall() + "\n";
        return out;
    }
};

inline Report make_report(const std::string& scheme_name, const Domain& d,
                          std::vector<CheckResult> checks) {
    Report r;
    r.scheme_name = scheme_name;
    r.seed = d.seed;
    r.precision_bits = long(max_prec());
    r.checks = std::move(checks);
    return r;
}

}  // namespace nonsas
