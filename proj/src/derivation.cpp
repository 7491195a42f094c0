#include "certify/derivation.hpp"

#include "certify/linalg.hpp"

#include <algorithm>

namespace certify {

Derivation make_derivation(RingPtr ring, std::map<std::string, LaurentPoly> images, std::string label) {
    Derivation d;
    d.ring = std::move(ring);
    d.label = std::move(label);
    for (auto& [name, img] : images) {
        if (!d.ring->spec()->has(name))
            throw Error("derivation '" + d.label + "': image for unknown variable '" + name + "'");
        LaurentPoly v = img.transplanted(d.ring->spec());
        if (!v.is_zero())
            d.images.emplace(name, std::move(v));
    }
    return d;
}

LaurentPoly apply(const Derivation& d, const LaurentPoly& p) {
    if (!same_spec(p.ring(), d.ring->spec()))
        throw Error("derivation '" + d.label + "': argument from a foreign ring");
    LaurentPoly acc(d.ring->spec());
    for (const auto& [name, img] : d.images) {
        const LaurentPoly dp = p.partial(name);
        if (!dp.is_zero())
            acc += img * dp;
    }
    return d.ring->normal_form(acc);
}

CheckResult well_defined(const Derivation& d) {
    CheckResult res;
    for (const auto& rel : d.ring->relations()) {
        const LaurentPoly img = apply(d, rel);
        if (!img.is_zero())
            res.fail("relation " + rel.to_string() + " maps to " + img.to_string());
    }
    return res;
}

LndOutcome lnd_certify(const Derivation& d, int cap) {
    LndOutcome out;
    NilpotencyCertificate cert;
    cert.cap = cap;
    for (std::size_t k = 0; k < d.ring->spec()->arity(); ++k) {
        const std::string& name = d.ring->spec()->name(k);
        LaurentPoly it = d.ring->normal_form(LaurentPoly::variable(d.ring->spec(), name));
        int n = 0;
        while (!it.is_zero() && n <= cap) {
            it = apply(d, it);
            ++n;
        }
        if (!it.is_zero()) {
            out.survivor_var = name;
            out.survivor = it;
            return out;
        }
        cert.index[name] = n;
    }
    out.certificate = std::move(cert);
    return out;
}

bool kernel_member(const Derivation& d, const LaurentPoly& p) {
    return apply(d, p).is_zero();
}

RingMorphism exponential(const Derivation& d, const NilpotencyCertificate& cert,
                         const std::string& param) {
    const RingPtr target = d.ring->extended({{param, false}}, {});
    return exponential_at(d, cert, target, LaurentPoly::variable(target->spec(), param));
}

RingMorphism exponential_at(const Derivation& d, const NilpotencyCertificate& cert,
                            const RingPtr& target, const LaurentPoly& param) {
    const Spec tspec = target->spec();
    std::map<std::string, LaurentPoly> images;
    std::map<std::string, LaurentPoly> witnesses;

    auto flow = [&](const LaurentPoly& start, int bound) {
        LaurentPoly sum(tspec);
        LaurentPoly iterate = start;  // d^k applied in the source ring
        GR factorial = GR::one();
        LaurentPoly spow = LaurentPoly::constant(tspec, GR::one());
        for (int k = 0; !iterate.is_zero(); ++k) {
            if (k > bound)
                throw Error("exponential: iterate of " + start.to_string() +
                            " still alive beyond the certificate cap");
            if (k > 0) {
                factorial *= GR(k);
                spow = spow * param;
            }
            sum += spow.scaled(factorial.inverse()) * iterate.transplanted(tspec);
            iterate = apply(d, iterate);
        }
        return target->normal_form(sum);
    };

    for (std::size_t k = 0; k < d.ring->spec()->arity(); ++k) {
        const std::string& name = d.ring->spec()->name(k);
        const LaurentPoly var = LaurentPoly::variable(d.ring->spec(), name);
        images.emplace(name, flow(var, cert.cap));
        if (d.ring->spec()->invertible(k)) {
            // flow of the inverse gives the unit witness
            Monomial m = Monomial::unit(d.ring->spec()->arity());
            m.e[k] = -1;
            witnesses.emplace(name, flow(LaurentPoly::term(d.ring->spec(), m, GR::one()), cert.cap));
        }
    }
    return make_morphism(d.ring, target, std::move(images), std::move(witnesses),
                         "exp(" + param.to_string() + "·" + d.label + ")");
}

CheckResult check_equivariance(const RingMorphism& m, const Derivation& d_src,
                               const Derivation& d_tgt, int cap) {
    CheckResult res;
    const LndOutcome src = lnd_certify(d_src, cap);
    const LndOutcome tgt = lnd_certify(d_tgt, cap);
    if (!src.certified()) {
        res.fail("source action not certified locally nilpotent (survivor at '" + src.survivor_var + "')");
        return res;
    }
    if (!tgt.certified()) {
        res.fail("target action not certified locally nilpotent (survivor at '" + tgt.survivor_var + "')");
        return res;
    }
    const RingMorphism exp_src = exponential(d_src, *src.certificate, "~s");
    const RingMorphism exp_tgt = exponential(d_tgt, *tgt.certificate, "~s");

    // lift m to the rings with the flow parameter adjoined
    std::map<std::string, LaurentPoly> lifted;
    for (const auto& [name, img] : m.images)
        lifted.emplace(name, img.transplanted(exp_tgt.target->spec()));
    lifted.emplace("~s", LaurentPoly::variable(exp_tgt.target->spec(), "~s"));
    std::map<std::string, LaurentPoly> lifted_wit;
    for (const auto& [name, w] : m.unit_witnesses)
        lifted_wit.emplace(name, w.transplanted(exp_tgt.target->spec()));
    const RingMorphism m_s =
        make_morphism(exp_src.target, exp_tgt.target, std::move(lifted), std::move(lifted_wit), m.label);

    for (std::size_t k = 0; k < m.source->spec()->arity(); ++k) {
        const std::string& name = m.source->spec()->name(k);
        const LaurentPoly lhs = m_s.apply(exp_src.images.at(name));
        const LaurentPoly rhs = exp_tgt.apply(m.images.at(name).transplanted(m.target->spec()));
        if (!exp_tgt.target->equal(lhs, rhs))
            res.fail("generator " + name + ": flow images differ: " + lhs.to_string() + " vs " +
                     rhs.to_string());
    }
    return res;
}

KernelSlice kernel_intersection_bounded(const std::vector<Derivation>& ds, int degree) {
    if (ds.empty())
        throw Error("kernel_intersection_bounded: no derivations given");
    const RingPtr ring = ds.front().ring;
    for (const auto& d : ds)
        if (!same_spec(d.ring->spec(), ring->spec()))
            throw Error("kernel_intersection_bounded: derivations on different rings");

    KernelSlice slice;
    slice.monomials = ring->nf_monomials_up_to(degree);
    const std::size_t cols = slice.monomials.size();

    // rows: coefficients of nf(d_i(m)) across all derivations
    std::map<std::pair<std::size_t, Monomial>, std::map<std::size_t, GR>> rows;
    for (std::size_t di = 0; di < ds.size(); ++di) {
        for (std::size_t c = 0; c < cols; ++c) {
            const LaurentPoly img =
                apply(ds[di], LaurentPoly::term(ring->spec(), slice.monomials[c], GR::one()));
            for (const auto& [m, coeff] : img.terms())
                rows[{di, m}][c] = coeff;
        }
    }

    LinearSystem sys(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& [key, entries] : rows) {
        for (const auto& [c, v] : entries)
            sys.at(r, c) = v;
        ++r;
    }
    const SolutionSet sol = solve_linear(sys);
    if (!sol.consistent)
        throw Error("kernel_intersection_bounded: homogeneous system reported inconsistent");

    for (const auto& v : sol.nullspace) {
        LaurentPoly p(ring->spec());
        for (std::size_t c = 0; c < cols; ++c)
            if (!v[c].is_zero())
                p.add_term(slice.monomials[c], v[c]);
        slice.basis.push_back(std::move(p));
    }
    return slice;
}

}  // namespace certify
