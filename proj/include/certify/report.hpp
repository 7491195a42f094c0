#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace certify {

enum class ClaimStatus { Verified, Refuted, Inconclusive };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

/// One verified/refuted step of a pipeline. `detail` carries the re-checkable
/// certificate (witness polynomials, indices, pole orders, ...) and `step` is
/// the argument-location annotation emitted as `paper_ref` in reports.
struct ClaimResult {
    std::string id;
    std::string description;
    std::string step;
    ClaimStatus status = ClaimStatus::Inconclusive;
    nlohmann::json detail;
    long long ms = 0;
};

struct Report {
    std::string pipeline;
    std::string version;
    std::vector<ClaimResult> claims;

    ClaimStatus verdict() const;
    bool all_verified() const { return verdict() == ClaimStatus::Verified; }
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

/// 0 all verified, 1 any refuted, 2 any inconclusive.
int report_exit_code(const Report& r);

}  // namespace certify
