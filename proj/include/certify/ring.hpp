#pragma once

#include "certify/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace certify {

class RingSpec;
using Spec = std::shared_ptr<const RingSpec>;

/// Ordered variable alphabet of a Laurent polynomial ring. Variables marked
/// invertible admit negative exponents. The order is fixed at creation;
/// exponent vectors index into it.
class RingSpec {
public:
    struct Var {
        std::string name;
        bool invertible = false;
    };

    static Spec make(std::vector<Var> vars);

    /// Internal factory that skips identifier validation (used for reserved
    /// marker variables such as "~x").
    static Spec make_unchecked(std::vector<Var> vars);

    std::size_t arity() const { return vars_.size(); }
    const std::string& name(std::size_t idx) const { return vars_[idx].name; }
    bool invertible(std::size_t idx) const { return vars_[idx].invertible; }
    const std::vector<Var>& vars() const { return vars_; }

    int index_of(const std::string& name) const;  // -1 if absent
    bool has(const std::string& name) const { return index_of(name) >= 0; }

    /// Same variables plus `extra` appended at the end.
    Spec extended(std::vector<Var> extra) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b);

private:
    explicit RingSpec(std::vector<Var> vars);
    std::vector<Var> vars_;
    std::map<std::string, std::size_t> index_;
};

bool same_spec(const Spec& a, const Spec& b);

/// Exponent vector aligned with a RingSpec.
struct Monomial {
    std::vector<int> e;

    static Monomial unit(std::size_t arity) { return Monomial{std::vector<int>(arity, 0)}; }

    int degree_abs() const;  // sum of |e_i|
    bool is_unit() const;
    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

/// Sparse multivariate Laurent polynomial over Q(i). Terms are a map from
/// exponent vectors to nonzero coefficients, so equality is structural.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, GR>;

    LaurentPoly() = default;
    explicit LaurentPoly(Spec ring) : ring_(std::move(ring)) {}

    static LaurentPoly zero(Spec ring) { return LaurentPoly(std::move(ring)); }
    static LaurentPoly constant(Spec ring, const GR& c);
    static LaurentPoly variable(const Spec& ring, const std::string& name);
    static LaurentPoly term(const Spec& ring, Monomial m, const GR& c);

    const Spec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GR constant_value() const;  // requires is_constant()

    GR coefficient_of(const Monomial& m) const;

    int degree_abs() const;                           // max term degree, |exponents| counted
    int max_exponent(const std::string& var) const;   // 0 for the zero polynomial
    int min_exponent(const std::string& var) const;   // 0 for the zero polynomial
    std::pair<int, int> exponent_window(const std::string& var) const;

    /// Negated minimum exponent, clamped at zero; pole order of 0 is 0.
    int pole_order(const std::string& var) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const GR& c) const;
    LaurentPoly pow(int n) const;  // n < 0 requires a unit monomial

    bool is_unit_monomial() const;
    LaurentPoly monomial_inverse() const;

    /// Multiply by var^k (k may be negative only if allowed by the spec).
    LaurentPoly shifted(const std::string& var, int k) const;

    /// True when every term has exponent >= k in `var`.
    bool divisible_by(const std::string& var, int k) const;

    /// Ring-homomorphic substitution. Every variable occurring in the
    /// polynomial must be keyed in `images`, and all images must live in one
    /// common target ring. Negative exponents require the image to be an
    /// invertible monomial.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images) const;

    /// Re-index the same terms into another spec (variables matched by name).
    LaurentPoly transplanted(const Spec& target) const;

    /// Formal partial derivative; Laurent exponents follow the power rule.
    LaurentPoly partial(const std::string& var) const;

    /// Canonical printing in the shared expression grammar.
    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    void add_term(const Monomial& m, const GR& c);  // validates invertibility flags

private:
    void check_same_ring(const LaurentPoly& o) const;

    Spec ring_;
    TermMap terms_;
};

/// Graded (by |exponent| sum) reverse-lexicographic comparison; used for
/// canonical printing and as the default term order.
bool grevlex_less(const Monomial& a, const Monomial& b);

/// All exponent vectors for `spec` with the non-invertible total degree at
/// most `degree`; invertible exponents range over the given windows and, when
/// `count_invertible` is set, their absolute values count toward the degree.
std::vector<Monomial> enumerate_monomials(const Spec& spec, int degree,
                                          const std::map<std::string, std::pair<int, int>>& windows,
                                          bool count_invertible);

}  // namespace certify
