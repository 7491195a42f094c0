#pragma once

#include "certify/ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace certify {

/// Block term order: variables in earlier blocks dominate; within a block the
/// comparison is graded reverse-lexicographic. A single block gives plain
/// grevlex; putting the variables to eliminate in the first block gives an
/// elimination order.
class TermOrder {
public:
    static TermOrder grevlex(std::size_t arity);
    static TermOrder blocks(std::vector<std::vector<std::size_t>> blocks, std::size_t arity);

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

private:
    std::vector<std::vector<std::size_t>> blocks_;
};

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

/// Quotient of a Laurent polynomial ring by a finitely generated ideal.
/// Internally every invertible variable v gets a marker variable "~v" with the
/// saturation relation v*~v - 1; the reduced Groebner basis of the saturated
/// affine model is cached at construction. Public normal forms are
/// back-substituted to Laurent form, so markers never escape this class.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
    /// `lead_block` names public variables forming the dominant order block
    /// (empty = plain grevlex over the declared variable order).
    static RingPtr make(const Spec& spec, std::vector<LaurentPoly> relations,
                        std::vector<std::string> lead_block = {});

    const Spec& spec() const { return spec_; }
    const std::vector<LaurentPoly>& relations() const { return relations_; }
    const std::vector<std::string>& lead_block() const { return lead_block_; }

    /// Unique remainder modulo the cached basis (idempotent).
    LaurentPoly normal_form(const LaurentPoly& p) const;
    bool is_zero(const LaurentPoly& p) const { return normal_form(p).is_zero(); }
    bool equal(const LaurentPoly& a, const LaurentPoly& b) const { return is_zero(a - b); }

    /// Reduced basis, back-substituted to Laurent form. Pure saturation
    /// relations reduce to zero under back-substitution and are dropped.
    std::vector<LaurentPoly> groebner_basis() const;

    bool contains_one() const;
    bool ideal_member(const LaurentPoly& p) const { return is_zero(p); }

    /// Rabinowitsch membership test for the radical of (relations + extra).
    bool radical_member(const LaurentPoly& p, const std::vector<LaurentPoly>& extra = {}) const;

    /// Generators of the elimination ideal: relations among the variables
    /// *not* listed in `vars_to_remove`.
    std::vector<LaurentPoly> eliminate(const std::vector<std::string>& vars_to_remove) const;

    /// Quotient by relations + extra (fresh basis, same spec and order).
    RingPtr with_extra_relations(std::vector<LaurentPoly> extra) const;

    /// Ring with additional variables (and optional additional relations).
    RingPtr extended(std::vector<RingSpec::Var> extra_vars, std::vector<LaurentPoly> extra_relations,
                     std::vector<std::string> lead_block = {}) const;

    /// True when the monomial is its own normal form.
    bool is_nf_monomial(const Monomial& m) const;

    /// Normal-form monomials with |exponent|-graded total degree <= degree.
    std::vector<Monomial> nf_monomials_up_to(int degree) const;

    std::size_t basis_size() const { return basis_.size(); }

private:
    PresentedRing() = default;
    void build();

    Spec spec_;
    std::vector<LaurentPoly> relations_;
    std::vector<std::string> lead_block_;

    // saturated affine model
    Spec internal_;
    std::shared_ptr<const TermOrder> order_;
    std::vector<std::vector<std::pair<Monomial, GR>>> basis_;  // sorted desc per order

    friend struct GroebnerAccess;

    LaurentPoly to_internal(const LaurentPoly& p) const;
    LaurentPoly to_public(const LaurentPoly& p) const;
};

/// Reduced Groebner basis of `relations` under the given order block spec;
/// exposed as a free function mirroring the underlying engine (the ring class
/// caches exactly this computation).
std::vector<LaurentPoly> groebner_basis(const Spec& spec, const std::vector<LaurentPoly>& relations,
                                        std::vector<std::string> lead_block = {});

enum class IrreducibilityVerdict { Irreducible, Reducible, Inconclusive };

struct IrreducibilityCertificate {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
    std::string detail;
};

/// Certificate that p = a*var + b (with a, b free of `var`) has no nonunit
/// factor, hence is irreducible in the ambient Laurent ring. Never returns a
/// false positive; `Inconclusive` is possible when `a` is not a monomial.
IrreducibilityCertificate irreducible_linear_in(const LaurentPoly& p, const std::string& var);

}  // namespace certify
