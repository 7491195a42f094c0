#pragma once

#include "certify/derivation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace certify {

/// Quotient-ring fraction num/den. The denominator is declared a
/// nonzerodivisor by the caller (all rings in the pipelines are certified
/// domains); equality is cross-multiplied equality of normal forms.
struct Fraction {
    RingPtr ring;
    LaurentPoly num;
    LaurentPoly den;

    static Fraction regular(const RingPtr& ring, LaurentPoly p);
    static Fraction over_var_power(const RingPtr& ring, LaurentPoly num, const std::string& var, int k);

    bool equals(const Fraction& other) const;
    std::string to_string() const;
};

/// Degree-2 cover with the sign involution on one invertible variable
/// (mu -> -mu, everything else fixed). The optional sheet separator g
/// satisfies g*sigma(g) = branch_var * cofactor in the cover ring and marks
/// the two sheets over branch_var = 0; the splitting solver anchors its
/// ansatz on it.
class DoubleCover {
public:
    static std::shared_ptr<const DoubleCover> make(RingPtr total, std::string unit_var,
                                                   std::string branch_var,
                                                   std::optional<LaurentPoly> sheet_separator,
                                                   std::optional<LaurentPoly> separator_cofactor,
                                                   std::string base_description);

    const RingPtr& total() const { return total_; }
    const RingMorphism& sigma() const { return sigma_; }
    const std::string& unit_var() const { return unit_var_; }
    const std::string& branch_var() const { return branch_var_; }
    const std::optional<LaurentPoly>& separator() const { return separator_; }
    const std::optional<LaurentPoly>& cofactor() const { return cofactor_; }
    const std::string& base_description() const { return base_; }

    LaurentPoly twist(const LaurentPoly& p) const { return sigma_.apply(p); }
    Fraction twist(const Fraction& f) const;

private:
    RingPtr total_;
    RingMorphism sigma_;
    std::string unit_var_;
    std::string branch_var_;
    std::optional<LaurentPoly> separator_;
    std::optional<LaurentPoly> cofactor_;
    std::string base_;
};

using CoverPtr = std::shared_ptr<const DoubleCover>;

/// Antisymmetric transition function on a double cover: sigma(c) + c = 0.
/// The diagonal component of the Cech datum is identically zero and implicit.
struct Cocycle {
    CoverPtr cover;
    Fraction value;  // denominator a power of the branch variable

    static Cocycle make(CoverPtr cover, LaurentPoly numerator, int branch_pole);
    CheckResult verify_antisymmetry() const;
};

/// Certified coboundary witness: sigma(h) - h = c together with enough
/// alternative representations to cover the cover minus a locus disjoint
/// from its sigma-image.
struct SplittingWitness {
    Fraction h_plus;
    std::vector<Fraction> alt_representations;
    std::vector<LaurentPoly> excluded_locus;
};

CheckResult verify_splitting(const Cocycle& c, const SplittingWitness& w);

struct SplitAnsatz {
    int degree = 8;  // bound on the coefficient polynomials of the anchored ansatz
};

struct SplitOutcome {
    std::optional<SplittingWitness> witness;
    std::string note;        // reason when no witness was found
    int used_degree = -1;    // smallest coefficient degree that solved
    bool found() const { return witness.has_value(); }
};

/// Solves sigma(h) - h = c by exact linear algebra over a monomial ansatz
/// anchored on the sheet separator; the returned witness is fully re-verified
/// before return. Failure is NoSolutionWithinAnsatz, never a refutation.
SplitOutcome split_cocycle(const Cocycle& c, const SplitAnsatz& ansatz);

/// phi(v + shift, x, -mu) = phi(v, x, mu) componentwise after clearing
/// denominators in the branch variable; `fiber_var` is the bundle coordinate
/// in phi's target ring.
CheckResult check_deck_identity(const RingMorphism& phi, const std::string& fiber_var,
                                const std::string& unit_var, const std::string& branch_var,
                                const Fraction& shift);

enum class CoboundaryStatus { Coboundary, Refuted, RequiresSearch };

struct CoboundaryVerdict {
    CoboundaryStatus status = CoboundaryStatus::RequiresSearch;
    int pole_order = 0;                  // along the branch variable, for Refuted
    std::optional<Fraction> witness;     // h with sigma(h) - h = c1 - c2
};

/// A coboundary sigma(h) - h of a regular h has no pole along the branch
/// locus, so a pole refutes cohomologousness outright.
CoboundaryVerdict is_coboundary_on_base(const Cocycle& c1, const Cocycle& c2);

}  // namespace certify
