#include "certify/pipeline.hpp"

namespace certify {

namespace {

// A splitting value num/x^k as an honest element of the localized cover ring.
LaurentPoly embed_splitting(const RingPtr& loc, const Fraction& h, const std::string& branch_var) {
    const LaurentPoly den = h.den;
    if (den.term_count() != 1)
        throw Error("splitting denominator must be a power of the branch variable");
    const int pole = den.max_exponent(branch_var);
    LaurentPoly check = LaurentPoly::variable(den.ring(), branch_var).pow(pole);
    if (!(check == den))
        throw Error("splitting denominator must be a power of the branch variable");
    return h.num.transplanted(loc->spec()).shifted(branch_var, -pole);
}

// Element of the localized cover-with-cylinder ring, pushed down to the
// cylinder ring: sigma-invariance means even exponents in the unit variable,
// regularity means no pole along the branch variable.
LaurentPoly descend(const ThetaSide& side, const LaurentPoly& elem) {
    const LaurentPoly nfp = side.cover_cyl_loc->normal_form(elem);
    const Spec cspec = side.cover_cyl_loc->spec();
    const Spec tspec = side.cylinder->spec();
    const int uix = cspec->index_of(side.unit_var);
    const int xix = cspec->index_of(side.branch_var);

    LaurentPoly out(tspec);
    for (const auto& [m, c] : nfp.terms()) {
        if (m.e[static_cast<std::size_t>(uix)] % 2 != 0)
            throw DescentFailure("image is not sigma-invariant", nfp.to_string());
        if (m.e[static_cast<std::size_t>(xix)] < 0)
            throw DescentFailure("image has a pole along the branch locus", nfp.to_string());
        Monomial mm = Monomial::unit(tspec->arity());
        for (std::size_t k = 0; k < cspec->arity(); ++k) {
            const int e = m.e[k];
            if (e == 0)
                continue;
            const std::string& name = cspec->name(k);
            if (name == side.unit_var) {
                if (side.time_var.empty())
                    throw DescentFailure("unit variable survives descent", nfp.to_string());
                mm.e[static_cast<std::size_t>(tspec->index_of(side.time_var))] += e / 2;
            } else {
                const int idx = tspec->index_of(name);
                if (idx < 0)
                    throw Error("descend: cylinder ring lacks variable '" + name + "'");
                mm.e[static_cast<std::size_t>(idx)] += e;
            }
        }
        out.add_term(mm, c);
    }
    return side.cylinder->normal_form(out);
}

// The chart coordinate recovers the fiber coordinate: fiber_coord(phi(v,..)) = v
// over branch_var != 0.
void check_fiber_coordinate(const ThetaSide& side) {
    const Spec uspec = side.phi.target->spec();
    std::vector<RingSpec::Var> vars = uspec->vars();
    for (auto& v : vars)
        if (v.name == side.branch_var)
            v.invertible = true;
    const Spec lspec = RingSpec::make(vars);
    std::vector<LaurentPoly> rels;
    for (const auto& r : side.phi.target->relations())
        rels.push_back(r.transplanted(lspec));
    const RingPtr uloc = PresentedRing::make(lspec, rels, side.phi.target->lead_block());

    std::map<std::string, LaurentPoly> sub;
    const Spec cspec = side.cover_cyl_loc->spec();
    for (std::size_t k = 0; k < cspec->arity(); ++k) {
        const std::string& name = cspec->name(k);
        if (name == side.cyl_var)
            continue;
        if (name == side.unit_var || name == side.branch_var)
            sub.emplace(name, LaurentPoly::variable(lspec, name));
        else
            sub.emplace(name, side.phi.images.at(name).transplanted(lspec));
    }
    const LaurentPoly got = side.fiber_coord.substitute(sub);
    const LaurentPoly want = LaurentPoly::variable(lspec, side.fiber_var);
    if (!uloc->is_zero(got - want))
        throw Error("fiber coordinate does not invert the trivialization: got " +
                    uloc->normal_form(got).to_string());
}

// One direction of the cylinder isomorphism: a morphism from tgt's cylinder
// ring to src's, computed on src's cover and descended.
RingMorphism one_direction(const ThetaSide& src, const ThetaSide& tgt, const SplittingWitness& h_src,
                           const SplittingWitness& h_tgt, const std::string& label) {
    const RingPtr L = src.cover_cyl_loc;
    const Spec ls = L->spec();

    // moving fiber value of the target bundle along the cylinder coordinate
    const LaurentPoly h_src_elem = embed_splitting(L, h_src.h_plus, src.branch_var);
    const LaurentPoly vt = LaurentPoly::variable(ls, src.cyl_var) + h_src_elem;

    std::map<std::string, LaurentPoly> chart;  // target chart ring -> L
    chart.emplace(tgt.fiber_var, vt);
    chart.emplace(tgt.branch_var, LaurentPoly::variable(ls, src.branch_var));
    chart.emplace(tgt.unit_var, LaurentPoly::variable(ls, src.unit_var));
    const auto at_target = [&](const LaurentPoly& p) { return p.substitute(chart); };

    // transport of functions on tgt's cover to src's cover through the moving point
    std::map<std::string, LaurentPoly> transport;
    const Spec tgt_cover_spec = tgt.cover->total()->spec();
    for (std::size_t k = 0; k < tgt_cover_spec->arity(); ++k) {
        const std::string& name = tgt_cover_spec->name(k);
        if (name == tgt.unit_var)
            transport.emplace(name, LaurentPoly::variable(ls, src.unit_var));
        else
            transport.emplace(name, at_target(tgt.phi.images.at(name)));
    }

    const LaurentPoly h_tgt_den = h_tgt.h_plus.den;
    if (h_tgt_den.term_count() != 1)
        throw Error("splitting denominator must be a power of the branch variable");
    const int tgt_pole = h_tgt_den.max_exponent(tgt.branch_var);
    const LaurentPoly h_tgt_at =
        h_tgt.h_plus.num.substitute(transport).shifted(src.branch_var, -tgt_pole);

    const LaurentPoly lambda = src.fiber_coord - h_tgt_at;

    std::map<std::string, LaurentPoly> images;
    const Spec tgt_cyl_spec = tgt.cylinder->spec();
    for (std::size_t k = 0; k < tgt_cyl_spec->arity(); ++k) {
        const std::string& name = tgt_cyl_spec->name(k);
        if (name == tgt.cyl_var)
            images.emplace(name, descend(src, lambda));
        else
            images.emplace(name, descend(src, at_target(tgt.phi.images.at(name))));
    }
    return make_morphism(tgt.cylinder, src.cylinder, std::move(images), {}, label);
}

}  // namespace

ThetaResult build_theta(const ThetaSide& side1, const ThetaSide& side2, const SplittingWitness& h_on_2,
                        const SplittingWitness& h_on_1) {
    check_fiber_coordinate(side1);
    check_fiber_coordinate(side2);

    ThetaResult res;
    res.theta_star = one_direction(side1, side2, h_on_1, h_on_2, "theta*");
    res.theta_star_inv = one_direction(side2, side1, h_on_2, h_on_1, "theta*_inv");

    CheckResult all;
    const CheckResult fwd = check_morphism(res.theta_star);
    const CheckResult bwd = check_morphism(res.theta_star_inv);
    const CheckResult pair = check_inverse_pair(res.theta_star, res.theta_star_inv);
    for (const auto& f : fwd.failures)
        all.fail("theta*: " + f);
    for (const auto& f : bwd.failures)
        all.fail("theta*_inv: " + f);
    for (const auto& f : pair.failures)
        all.fail(f);

    // the isomorphism is over the base: x (and t, when present) stay put
    const auto check_fixed = [&](const RingMorphism& mor, const ThetaSide& tgt_side,
                                 const std::string& var) {
        if (var.empty())
            return;
        const LaurentPoly got = mor.images.at(var);
        const LaurentPoly want = LaurentPoly::variable(mor.target->spec(), var);
        if (!mor.target->equal(got, want))
            all.fail(mor.label + " moves " + var + " to " + got.to_string());
        (void)tgt_side;
    };
    check_fixed(res.theta_star, side2, side2.branch_var);
    check_fixed(res.theta_star, side2, side2.time_var);
    check_fixed(res.theta_star_inv, side1, side1.branch_var);
    check_fixed(res.theta_star_inv, side1, side1.time_var);

    if (!all.ok)
        throw Error("theta verification failed: " + all.joined());

    nlohmann::json fwd_images, bwd_images;
    for (const auto& [name, img] : res.theta_star.images)
        fwd_images[name] = img.to_string();
    for (const auto& [name, img] : res.theta_star_inv.images)
        bwd_images[name] = img.to_string();
    res.detail = {{"theta_star", fwd_images}, {"theta_star_inv", bwd_images}};
    return res;
}

Derivation conjugate_derivation(const Derivation& d, const RingMorphism& theta,
                                const RingMorphism& theta_inv, const std::string& label) {
    if (!same_spec(d.ring->spec(), theta.target->spec()))
        throw Error("conjugate_derivation: derivation does not live on theta's target");
    std::map<std::string, LaurentPoly> images;
    const Spec sspec = theta.source->spec();
    for (std::size_t k = 0; k < sspec->arity(); ++k) {
        const std::string& name = sspec->name(k);
        images.emplace(name, theta_inv.apply(apply(d, theta.images.at(name))));
    }
    return make_derivation(theta.source, std::move(images), label);
}

ClearedDerivation clear_denominators(const Derivation& delta, const RingPtr& affine,
                                     const std::string& time_var) {
    int k = 0;
    for (const auto& [name, img] : delta.images)
        k = std::max(k, img.pole_order(time_var));
    std::map<std::string, LaurentPoly> images;
    for (const auto& [name, img] : delta.images)
        images.emplace(name, img.shifted(time_var, k).transplanted(affine->spec()));
    ClearedDerivation out;
    out.k = k;
    out.partial = make_derivation(affine, std::move(images), delta.label + "*t^" + std::to_string(k));
    return out;
}

}  // namespace certify
