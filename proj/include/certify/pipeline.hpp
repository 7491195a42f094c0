#pragma once

#include "certify/report.hpp"
#include "certify/worlds.hpp"

#include <optional>
#include <string>

namespace certify {

inline constexpr const char* kToolVersion = "0.1.0";

struct PipelineConfig {
    int kernel_degree = 6;
    int ansatz_degree = 8;
    int lnd_cap = 64;
    bool negative_controls = false;
};

/// Raised when a cover-level expression fails to descend to the base of the
/// cover (not sigma-invariant, or a genuine pole along the branch locus).
class DescentFailure : public Error {
public:
    DescentFailure(const std::string& what, std::string offending)
        : Error(what + ": " + offending), offending_expression(std::move(offending)) {}
    std::string offending_expression;
};

struct ThetaResult {
    RingMorphism theta_star;      // ring(X_2 x A^1) -> ring(X_1 x A^1)
    RingMorphism theta_star_inv;  // inverse direction
    nlohmann::json detail;        // generator images as strings
};

/// Builds the isomorphism of cylinders from the two trivializations and the
/// two splitting witnesses, descends it from the cover, and verifies both
/// composites are the identity and that the base coordinates stay fixed.
ThetaResult build_theta(const ThetaSide& side1, const ThetaSide& side2,
                        const SplittingWitness& h_on_2, const SplittingWitness& h_on_1);

/// delta(g) = theta_inv(d(theta(g))); caller re-certifies the result.
Derivation conjugate_derivation(const Derivation& d, const RingMorphism& theta,
                                const RingMorphism& theta_inv, const std::string& label);

struct ClearedDerivation {
    int k = 0;
    Derivation partial;  // t^k * delta, restricted to the non-localized ring
};

/// Minimal k with t^k * delta(g) free of t-poles for every generator, and the
/// resulting derivation on `affine` (the presentation without t inverted).
ClearedDerivation clear_denominators(const Derivation& delta, const RingPtr& affine,
                                     const std::string& time_var);

Report run_pipeline(const std::string& name, const PipelineConfig& config);
Report run_kr_cylinder(const PipelineConfig& config);
Report run_danielewski(const PipelineConfig& config);
Report run_remarks(const PipelineConfig& config);

/// Re-verifies every verified claim's certificate from the serialized report
/// alone (rings are rebuilt by name from the built-in worlds).
CheckResult replay_report(const Report& report);

}  // namespace certify
