#pragma once

#include "certify/morphism.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace certify {

/// Derivation of a presented ring, given by generator images; the extension
/// to the whole ring is forced by Leibniz and the power rule on invertible
/// variables. Variables without an entry map to zero.
struct Derivation {
    RingPtr ring;
    std::map<std::string, LaurentPoly> images;
    std::string label;
};

Derivation make_derivation(RingPtr ring, std::map<std::string, LaurentPoly> images,
                           std::string label = {});

/// Sum over variables of image * d/dvar, reduced to normal form.
LaurentPoly apply(const Derivation& d, const LaurentPoly& p);

/// True iff the image of every relation reduces to zero.
CheckResult well_defined(const Derivation& d);

/// Per-generator nilpotency indices: for generator g with index n,
/// d^(n-1)(g) != 0 and d^n(g) == 0 in the quotient.
struct NilpotencyCertificate {
    std::map<std::string, int> index;
    int cap = 0;
};

struct LndOutcome {
    std::optional<NilpotencyCertificate> certificate;
    std::string survivor_var;    // set when inconclusive
    LaurentPoly survivor;        // the iterate still alive at the cap
    bool certified() const { return certificate.has_value(); }
};

/// Iterates the derivation on each generator up to `cap`. Inconclusive is a
/// value, not a refutation: the tool never claims a derivation fails to be
/// locally nilpotent.
LndOutcome lnd_certify(const Derivation& d, int cap = 64);

bool kernel_member(const Derivation& d, const LaurentPoly& p);

/// Exponential flow g -> sum_k param^k d^k(g)/k! with `param` a fresh
/// variable adjoined to the ring (finite by the certificate).
RingMorphism exponential(const Derivation& d, const NilpotencyCertificate& cert,
                         const std::string& param);

/// Same flow evaluated at an arbitrary parameter value in `target` (used for
/// the exp(s)exp(s') = exp(s+s') identity).
RingMorphism exponential_at(const Derivation& d, const NilpotencyCertificate& cert,
                            const RingPtr& target, const LaurentPoly& param);

/// M ∘ exp(s·d_src) = exp(s·d_tgt) ∘ M on generators, checked in
/// target ⊗ Q(i)[s]. Reports the offending generator on failure.
CheckResult check_equivariance(const RingMorphism& m, const Derivation& d_src,
                               const Derivation& d_tgt, int cap = 64);

/// Joint kernel slice: basis of {p : total degree <= degree, every d_i(p) = 0}
/// spanned by normal-form monomials; invertible variables contribute
/// |exponent| to the degree.
struct KernelSlice {
    std::vector<Monomial> monomials;     // the enumeration, fixed order
    std::vector<LaurentPoly> basis;      // nullspace vectors as polynomials
};

KernelSlice kernel_intersection_bounded(const std::vector<Derivation>& ds, int degree);

}  // namespace certify
