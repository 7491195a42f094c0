#include "certify/cover.hpp"

#include "certify/linalg.hpp"

#include <algorithm>

namespace certify {

Fraction Fraction::regular(const RingPtr& ring, LaurentPoly p) {
    Fraction f;
    f.ring = ring;
    f.num = p.transplanted(ring->spec());
    f.den = LaurentPoly::constant(ring->spec(), GR::one());
    return f;
}

Fraction Fraction::over_var_power(const RingPtr& ring, LaurentPoly num, const std::string& var, int k) {
    Fraction f;
    f.ring = ring;
    f.num = num.transplanted(ring->spec());
    f.den = LaurentPoly::variable(ring->spec(), var).pow(k);
    return f;
}

bool Fraction::equals(const Fraction& other) const {
    if (!same_spec(ring->spec(), other.ring->spec()))
        throw Error("fraction comparison across rings");
    return ring->is_zero(num * other.den.transplanted(ring->spec()) -
                         other.num.transplanted(ring->spec()) * den);
}

std::string Fraction::to_string() const {
    if (den.is_constant() && den.constant_value().is_one())
        return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

std::shared_ptr<const DoubleCover> DoubleCover::make(RingPtr total, std::string unit_var,
                                                     std::string branch_var,
                                                     std::optional<LaurentPoly> sheet_separator,
                                                     std::optional<LaurentPoly> separator_cofactor,
                                                     std::string base_description) {
    auto cover = std::make_shared<DoubleCover>();
    cover->total_ = total;
    cover->unit_var_ = std::move(unit_var);
    cover->branch_var_ = std::move(branch_var);
    cover->base_ = std::move(base_description);
    const Spec spec = total->spec();
    if (!spec->has(cover->unit_var_) || !spec->has(cover->branch_var_))
        throw Error("double cover: missing unit or branch variable");

    std::map<std::string, LaurentPoly> images;
    for (std::size_t k = 0; k < spec->arity(); ++k) {
        const std::string& name = spec->name(k);
        LaurentPoly img = LaurentPoly::variable(spec, name);
        if (name == cover->unit_var_)
            img = -img;
        images.emplace(name, std::move(img));
    }
    cover->sigma_ = make_morphism(total, total, std::move(images), {}, "sigma");

    CheckResult wd = check_morphism(cover->sigma_);
    if (!wd.ok)
        throw Error("double cover: involution not well-defined: " + wd.joined());
    const RingMorphism square = compose(cover->sigma_, cover->sigma_);
    for (std::size_t k = 0; k < spec->arity(); ++k) {
        const std::string& name = spec->name(k);
        if (!total->equal(square.images.at(name), LaurentPoly::variable(spec, name)))
            throw Error("double cover: sigma^2 moves generator " + name);
    }

    if (sheet_separator.has_value() != separator_cofactor.has_value())
        throw Error("double cover: separator and cofactor must come together");
    if (sheet_separator) {
        cover->separator_ = sheet_separator->transplanted(spec);
        cover->cofactor_ = separator_cofactor->transplanted(spec);
        const LaurentPoly lhs = *cover->separator_ * cover->sigma_.apply(*cover->separator_);
        const LaurentPoly rhs = LaurentPoly::variable(spec, cover->branch_var_) * *cover->cofactor_;
        if (!total->is_zero(lhs - rhs))
            throw Error("double cover: separator identity g*sigma(g) = branch*cofactor fails");
        if (!total->is_zero(cover->sigma_.apply(*cover->cofactor_) - *cover->cofactor_))
            throw Error("double cover: separator cofactor is not sigma-invariant");
    }
    return cover;
}

Fraction DoubleCover::twist(const Fraction& f) const {
    Fraction g;
    g.ring = f.ring;
    g.num = sigma_.apply(f.num);
    g.den = sigma_.apply(f.den);
    return g;
}

Cocycle Cocycle::make(CoverPtr cover, LaurentPoly numerator, int branch_pole) {
    Cocycle c;
    c.cover = cover;
    c.value = Fraction::over_var_power(cover->total(), std::move(numerator), cover->branch_var(),
                                       branch_pole);
    const CheckResult anti = c.verify_antisymmetry();
    if (!anti.ok)
        throw Error("cocycle rejected: " + anti.joined());
    return c;
}

CheckResult Cocycle::verify_antisymmetry() const {
    CheckResult res;
    // denominators are powers of the sigma-fixed branch variable, so the
    // condition collapses to sigma(num) + num = 0 in the quotient
    const LaurentPoly s = cover->twist(value.num) + value.num;
    if (!cover->total()->is_zero(s))
        res.fail("sigma(c) + c = " + cover->total()->normal_form(s).to_string());
    return res;
}

CheckResult verify_splitting(const Cocycle& c, const SplittingWitness& w) {
    CheckResult res;
    const RingPtr ring = c.cover->total();

    // sigma-difference equation, cross-multiplied
    const Fraction sh = c.cover->twist(w.h_plus);
    const LaurentPoly lhs = (sh.num * w.h_plus.den - w.h_plus.num * sh.den) * c.value.den;
    const LaurentPoly rhs = c.value.num * (w.h_plus.den * sh.den);
    if (!ring->is_zero(lhs - rhs))
        res.fail("sigma(h) - h does not equal the cocycle value");

    for (std::size_t k = 0; k < w.alt_representations.size(); ++k)
        if (!w.h_plus.equals(w.alt_representations[k]))
            res.fail("alternative representation " + std::to_string(k) + " differs from h");
    for (std::size_t a = 0; a < w.alt_representations.size(); ++a)
        for (std::size_t b = a + 1; b < w.alt_representations.size(); ++b)
            if (!w.alt_representations[a].equals(w.alt_representations[b]))
                res.fail("alternative representations " + std::to_string(a) + " and " +
                         std::to_string(b) + " differ");

    // coverage: a representation with unit denominator is globally regular;
    // otherwise the excluded locus and its sigma-image must be disjoint
    bool regular = w.h_plus.den.is_unit_monomial();
    for (const auto& alt : w.alt_representations)
        regular = regular || alt.den.is_unit_monomial();
    if (!regular) {
        if (w.excluded_locus.empty()) {
            res.fail("no excluded locus declared and no representation is globally regular");
        } else {
            std::vector<LaurentPoly> gens;
            for (const auto& g : w.excluded_locus) {
                gens.push_back(g);
                gens.push_back(c.cover->twist(g));
            }
            if (!ring->with_extra_relations(gens)->contains_one())
                res.fail("excluded locus meets its sigma-image (coverage fails)");
        }
    }
    return res;
}

namespace {

// Ansatz columns for the anchored solver: products x^j * g^(m-j) * M with M a
// normal-form monomial of the coefficient ring.
struct AnsatzColumn {
    int j = 0;
    Monomial mono;
    LaurentPoly value;  // x^j g^(m-j) * mono, as a ring element
};

std::optional<std::vector<GR>> solve_sigma_equation(const RingPtr& ring,
                                                    const std::vector<AnsatzColumn>& cols,
                                                    const DoubleCover& cover,
                                                    const LaurentPoly& target) {
    std::map<Monomial, std::map<std::size_t, GR>> rows;
    for (std::size_t cix = 0; cix < cols.size(); ++cix) {
        const LaurentPoly diff = ring->normal_form(cover.twist(cols[cix].value) - cols[cix].value);
        for (const auto& [m, coeff] : diff.terms())
            rows[m][cix] = coeff;
    }
    const LaurentPoly tgt = ring->normal_form(target);
    for (const auto& [m, coeff] : tgt.terms())
        rows[m];  // ensure the row exists even if no column touches it

    LinearSystem sys(rows.size(), cols.size());
    std::size_t r = 0;
    for (const auto& [mono, entries] : rows) {
        for (const auto& [cix, v] : entries)
            sys.at(r, cix) = v;
        sys.rhs(r) = tgt.coefficient_of(mono);
        ++r;
    }
    const SolutionSet sol = solve_linear(sys);
    if (!sol.consistent)
        return std::nullopt;
    return sol.solution;
}

}  // namespace

SplitOutcome split_cocycle(const Cocycle& c, const SplitAnsatz& ansatz) {
    SplitOutcome out;
    const RingPtr ring = c.cover->total();
    const Spec spec = ring->spec();
    const std::string& x = c.cover->branch_var();
    const int m = c.value.den.max_exponent(x);

    if (c.value.num.is_zero()) {
        SplittingWitness w;
        w.h_plus = Fraction::regular(ring, LaurentPoly::zero(spec));
        out.witness = std::move(w);
        out.used_degree = 0;
        out.note = "zero cocycle splits by h = 0";
        return out;
    }
    if (m == 0) {
        // regular antisymmetric value: h = -c/2 works outright
        SplittingWitness w;
        w.h_plus = Fraction::regular(ring, ring->normal_form(c.value.num.scaled(GR::fraction(-1, 2))));
        const CheckResult chk = verify_splitting(c, w);
        if (chk.ok) {
            out.witness = std::move(w);
            out.used_degree = 0;
            return out;
        }
        out.note = "regular value but -c/2 failed verification: " + chk.joined();
        return out;
    }
    if (!c.cover->separator()) {
        out.note = "cover has no sheet separator; anchored ansatz unavailable";
        return out;
    }

    // invertible-variable exponent window, wide enough for the separator power
    const auto window_for = [&](const std::string& var, int deg) {
        auto [clo, chi] = c.value.num.exponent_window(var);
        auto [slo, shi] = c.cover->separator()->exponent_window(var);
        const int spread = std::max(std::abs(slo), std::abs(shi));
        return std::pair<int, int>{clo - m * spread - deg, chi + m * spread + deg};
    };

    for (int deg = 0; deg <= ansatz.degree; ++deg) {
        std::map<std::string, std::pair<int, int>> windows;
        for (std::size_t k = 0; k < spec->arity(); ++k)
            if (spec->invertible(k))
                windows.emplace(spec->name(k), window_for(spec->name(k), deg));
        std::vector<Monomial> coeff_monos = enumerate_monomials(spec, deg, windows, false);

        for (const bool swap_branch : {false, true}) {
            const LaurentPoly g =
                swap_branch ? c.cover->twist(*c.cover->separator()) : *c.cover->separator();
            const LaurentPoly xvar = LaurentPoly::variable(spec, x);

            std::vector<AnsatzColumn> cols;
            for (int j = 0; j <= m; ++j) {
                const LaurentPoly anchor = xvar.pow(j) * g.pow(m - j);
                for (const auto& mono : coeff_monos) {
                    AnsatzColumn col;
                    col.j = j;
                    col.mono = mono;
                    col.value = anchor * LaurentPoly::term(spec, mono, GR::one());
                    cols.push_back(std::move(col));
                }
            }

            const auto sol = solve_sigma_equation(ring, cols, *c.cover, c.value.num);
            if (!sol)
                continue;

            // assemble P and the sigma-paired alternative representation
            LaurentPoly p(spec);
            std::map<int, LaurentPoly> aj;  // coefficient polynomials by anchor power
            for (int j = 0; j <= m; ++j)
                aj.emplace(j, LaurentPoly::zero(spec));
            for (std::size_t cix = 0; cix < cols.size(); ++cix) {
                if ((*sol)[cix].is_zero())
                    continue;
                p += cols[cix].value.scaled((*sol)[cix]);
                aj[cols[cix].j] += LaurentPoly::term(spec, cols[cix].mono, (*sol)[cix]);
            }
            const LaurentPoly sg = c.cover->twist(g);
            const LaurentPoly e = *c.cover->cofactor();
            LaurentPoly alt_num(spec);
            for (int j = 0; j <= m; ++j)
                alt_num += aj[j] * e.pow(m - j) * sg.pow(j);

            SplittingWitness w;
            w.h_plus = Fraction::over_var_power(ring, ring->normal_form(p), x, m);
            Fraction alt;
            alt.ring = ring;
            alt.num = ring->normal_form(alt_num);
            alt.den = ring->normal_form(sg.pow(m));
            w.alt_representations.push_back(std::move(alt));
            w.excluded_locus = {xvar, ring->normal_form(sg)};

            const CheckResult chk = verify_splitting(c, w);
            if (chk.ok) {
                out.witness = std::move(w);
                out.used_degree = deg;
                return out;
            }
        }
    }
    out.note = "no solution within ansatz degree " + std::to_string(ansatz.degree);
    return out;
}

CheckResult check_deck_identity(const RingMorphism& phi, const std::string& fiber_var,
                                const std::string& unit_var, const std::string& branch_var,
                                const Fraction& shift) {
    CheckResult res;
    // re-present phi's target with the branch variable inverted so the shift
    // becomes an honest ring element
    const Spec tspec = phi.target->spec();
    std::vector<RingSpec::Var> vars = tspec->vars();
    for (auto& v : vars)
        if (v.name == branch_var)
            v.invertible = true;
    const Spec lspec = RingSpec::make(vars);
    std::vector<LaurentPoly> rels;
    for (const auto& r : phi.target->relations())
        rels.push_back(r.transplanted(lspec));
    const RingPtr loc = PresentedRing::make(lspec, rels, phi.target->lead_block());

    const int pole = shift.den.max_exponent(branch_var);
    const LaurentPoly shift_elem =
        shift.num.transplanted(lspec).shifted(branch_var, -pole);

    std::map<std::string, LaurentPoly> deck;
    for (std::size_t k = 0; k < lspec->arity(); ++k) {
        const std::string& name = lspec->name(k);
        LaurentPoly img = LaurentPoly::variable(lspec, name);
        if (name == fiber_var)
            img += shift_elem;
        else if (name == unit_var)
            img = -img;
        deck.emplace(name, std::move(img));
    }

    for (std::size_t k = 0; k < phi.source->spec()->arity(); ++k) {
        const std::string& name = phi.source->spec()->name(k);
        const LaurentPoly a = phi.images.at(name).transplanted(lspec);
        const LaurentPoly b = a.substitute(deck);
        if (!loc->is_zero(a - b))
            res.fail("component " + name + " moves under the deck substitution: " +
                     loc->normal_form(a - b).to_string());
    }
    return res;
}

CoboundaryVerdict is_coboundary_on_base(const Cocycle& c1, const Cocycle& c2) {
    if (c1.cover != c2.cover && !same_spec(c1.cover->total()->spec(), c2.cover->total()->spec()))
        throw Error("is_coboundary_on_base: cocycles on different covers");
    const RingPtr ring = c1.cover->total();
    const Spec spec = ring->spec();
    const std::string& x = c1.cover->branch_var();

    const int k1 = c1.value.den.max_exponent(x);
    const int k2 = c2.value.den.max_exponent(x);
    const int k = std::max(k1, k2);
    LaurentPoly diff = c1.value.num.shifted(x, k - k1) - c2.value.num.shifted(x, k - k2);
    diff = ring->normal_form(diff);

    // cancel the branch-variable content of the numerator
    int content = k;
    if (diff.is_zero()) {
        content = k;
    } else {
        content = std::min(k, std::max(0, diff.min_exponent(x)));
    }
    const LaurentPoly reduced_num = diff.shifted(x, -content);
    const int pole = k - content;

    CoboundaryVerdict verdict;
    if (pole > 0) {
        verdict.status = CoboundaryStatus::Refuted;
        verdict.pole_order = pole;
        return verdict;
    }
    // regular difference: h = -(c1 - c2)/2 is a coboundary witness
    Fraction h = Fraction::regular(ring, ring->normal_form(reduced_num.scaled(GR::fraction(-1, 2))));
    const LaurentPoly check = c1.cover->twist(h.num) - h.num - reduced_num;
    if (ring->is_zero(check)) {
        verdict.status = CoboundaryStatus::Coboundary;
        verdict.witness = std::move(h);
        return verdict;
    }
    verdict.status = CoboundaryStatus::RequiresSearch;
    return verdict;
}

}  // namespace certify
