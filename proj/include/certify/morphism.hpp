#pragma once

#include "certify/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace certify {

/// Outcome of a verification step, with human-readable failure messages.
struct CheckResult {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
    std::string joined() const;
};

/// Ring homomorphism between presented rings, given by generator images.
/// Invertible source variables need a unit witness (an inverse of the image
/// in the target); for monomial images the witness is derived automatically.
struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::map<std::string, LaurentPoly> images;
    std::map<std::string, LaurentPoly> unit_witnesses;
    std::string label;

    LaurentPoly apply(const LaurentPoly& p) const;
    LaurentPoly image_of(const std::string& var) const;
};

RingMorphism make_morphism(RingPtr source, RingPtr target, std::map<std::string, LaurentPoly> images,
                           std::map<std::string, LaurentPoly> unit_witnesses = {},
                           std::string label = {});

RingMorphism identity_morphism(const RingPtr& ring);

/// Verifies that every relation maps to zero and every unit witness works.
CheckResult check_morphism(const RingMorphism& m);

/// outer ∘ inner.
RingMorphism compose(const RingMorphism& outer, const RingMorphism& inner);

/// Both composites are the identity on generators.
CheckResult check_inverse_pair(const RingMorphism& m, const RingMorphism& n);

}  // namespace certify
