#pragma once

#include "certify/groebner.hpp"
#include "certify/parse.hpp"

#include <random>
#include <set>

namespace certify::testutil {

// deterministic generators for the property suites
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    int range(int lo, int hi) {  // inclusive
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    GR scalar() {
        const int num = range(-6, 6);
        const int den = range(1, 4);
        const int inum = range(-4, 4);
        if (range(0, 3) == 0)
            return GR(Rat(num, den), Rat(inum, 2));
        return GR(Rat(num, den));
    }

    GR nonzero_scalar() {
        while (true) {
            GR c = scalar();
            if (!c.is_zero())
                return c;
        }
    }

    LaurentPoly poly(const Spec& spec, int max_terms, int max_deg) {
        LaurentPoly p(spec);
        const int terms = range(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m = Monomial::unit(spec->arity());
            for (std::size_t k = 0; k < spec->arity(); ++k)
                m.e[k] = spec->invertible(k) ? range(-max_deg, max_deg) : range(0, max_deg);
            p.add_term(m, scalar());
        }
        return p;
    }

private:
    std::mt19937 gen_;
};

inline bool support_only(const LaurentPoly& p, const std::set<std::string>& allowed) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t k = 0; k < p.ring()->arity(); ++k)
            if (m.e[k] != 0 && !allowed.count(p.ring()->name(k)))
                return false;
    return true;
}

}  // namespace certify::testutil
