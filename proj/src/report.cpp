#include "certify/report.hpp"

#include "certify/rational.hpp"

#include <iomanip>
#include <sstream>

namespace certify {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Verified:
            return "verified";
        case ClaimStatus::Refuted:
            return "refuted";
        case ClaimStatus::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

ClaimStatus claim_status_from_string(const std::string& s) {
    if (s == "verified")
        return ClaimStatus::Verified;
    if (s == "refuted")
        return ClaimStatus::Refuted;
    if (s == "inconclusive")
        return ClaimStatus::Inconclusive;
    throw Error("unknown claim status '" + s + "'");
}

ClaimStatus Report::verdict() const {
    bool inconclusive = false;
    for (const auto& c : claims) {
        if (c.status == ClaimStatus::Refuted)
            return ClaimStatus::Refuted;
        if (c.status == ClaimStatus::Inconclusive)
            inconclusive = true;
    }
    return inconclusive ? ClaimStatus::Inconclusive : ClaimStatus::Verified;
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
        claims.push_back({{"id", c.id},
                          {"description", c.description},
                          {"status", to_string(c.status)},
                          {"paper_ref", c.step},
                          {"detail", c.detail},
                          {"ms", c.ms}});
    }
    return {{"pipeline", r.pipeline},
            {"version", r.version},
            {"claims", claims},
            {"verdict", to_string(r.verdict())}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.pipeline = j.at("pipeline").get<std::string>();
    r.version = j.at("version").get<std::string>();
    for (const auto& c : j.at("claims")) {
        ClaimResult cr;
        cr.id = c.at("id").get<std::string>();
        cr.description = c.at("description").get<std::string>();
        cr.step = c.at("paper_ref").get<std::string>();
        cr.status = claim_status_from_string(c.at("status").get<std::string>());
        cr.detail = c.at("detail");
        cr.ms = c.at("ms").get<long long>();
        r.claims.push_back(std::move(cr));
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != to_string(r.verdict()))
        throw Error("report verdict field does not match its claims");
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "pipeline: " << r.pipeline << "\n";
    os << "version:  " << r.version << "\n";
    for (std::size_t k = 0; k < r.claims.size(); ++k) {
        const auto& c = r.claims[k];
        os << "[" << std::setw(2) << (k + 1) << "/" << std::setw(2) << r.claims.size() << "] "
           << std::left << std::setw(12) << to_string(c.status) << std::right << c.id << "  "
           << c.description << "  (" << c.step << ") [" << c.ms << " ms]\n";
        if (c.status != ClaimStatus::Verified && c.detail.contains("reason"))
            os << "        reason: " << c.detail["reason"].get<std::string>() << "\n";
    }
    os << "verdict: " << to_string(r.verdict()) << "\n";
    return os.str();
}

int report_exit_code(const Report& r) {
    switch (r.verdict()) {
        case ClaimStatus::Verified:
            return 0;
        case ClaimStatus::Refuted:
            return 1;
        case ClaimStatus::Inconclusive:
            return 2;
    }
    return 2;
}

}  // namespace certify
