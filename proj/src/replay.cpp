#include "certify/parse.hpp"
#include "certify/pipeline.hpp"

#include <set>

namespace certify {

namespace {

using nlohmann::json;

std::map<std::string, LaurentPoly> parse_map(const json& j, const Spec& spec) {
    std::map<std::string, LaurentPoly> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.emplace(it.key(), parse_poly(it.value().get<std::string>(), spec));
    return out;
}

Derivation derivation_from(const json& images, const RingPtr& ring, const std::string& label) {
    return make_derivation(ring, parse_map(images, ring->spec()), label);
}

void replay_lnd(const json& c, CheckResult& res) {
    const RingPtr ring = registry_ring(c.at("ring").get<std::string>());
    const Derivation d = derivation_from(c.at("images"), ring, "replay");
    const CheckResult wd = well_defined(d);
    if (!wd.ok) {
        res.fail("lnd replay: not well-defined: " + wd.joined());
        return;
    }
    for (auto it = c.at("indices").begin(); it != c.at("indices").end(); ++it) {
        const std::string var = it.key();
        const int n = it.value().get<int>();
        LaurentPoly iter = ring->normal_form(LaurentPoly::variable(ring->spec(), var));
        for (int k = 0; k < n - 1; ++k)
            iter = apply(d, iter);
        if (n >= 1 && iter.is_zero()) {
            res.fail("lnd replay: index of '" + var + "' overstates the nilpotency order");
            return;
        }
        iter = apply(d, iter);
        if (!iter.is_zero()) {
            res.fail("lnd replay: generator '" + var + "' survives its stated index");
            return;
        }
    }
    for (const auto& v : c.at("kills"))
        if (!kernel_member(d, LaurentPoly::variable(ring->spec(), v.get<std::string>())))
            res.fail("lnd replay: '" + v.get<std::string>() + "' not in the kernel");
    for (const auto& v : c.at("moves"))
        if (kernel_member(d, LaurentPoly::variable(ring->spec(), v.get<std::string>())))
            res.fail("lnd replay: '" + v.get<std::string>() + "' unexpectedly in the kernel");
}

void replay_kernel_slice(const json& c, CheckResult& res) {
    const RingPtr ring = registry_ring(c.at("ring").get<std::string>());
    std::vector<Derivation> ds;
    for (const auto& imgs : c.at("derivations"))
        ds.push_back(derivation_from(imgs, ring, "replay"));
    const KernelSlice slice = kernel_intersection_bounded(ds, c.at("degree").get<int>());
    const auto& basis = c.at("basis");
    if (basis.size() != slice.basis.size()) {
        res.fail("kernel replay: dimension changed");
        return;
    }
    for (std::size_t k = 0; k < slice.basis.size(); ++k) {
        const LaurentPoly want = parse_poly(basis[k].get<std::string>(), ring->spec());
        if (!(want == slice.basis[k]))
            res.fail("kernel replay: basis vector " + std::to_string(k) + " changed");
    }
}

RingMorphism morphism_from(const json& c, const std::string& src_key, const std::string& tgt_key,
                           const json& images, const json* witnesses) {
    (void)c;
    const RingPtr src = registry_ring(src_key);
    const RingPtr tgt = registry_ring(tgt_key);
    std::map<std::string, LaurentPoly> w;
    if (witnesses)
        w = parse_map(*witnesses, tgt->spec());
    return make_morphism(src, tgt, parse_map(images, tgt->spec()), std::move(w), "replay");
}

void replay_certificate(const json& c, const Report& rep, const ClaimResult& claim,
                        CheckResult& res) {
    const std::string type = c.at("type").get<std::string>();
    if (type == "control") {
        if (claim.status != ClaimStatus::Refuted)
            res.fail("control claim '" + claim.id + "' is not refuted");
        return;
    }
    if (type == "subst-identity") {
        const RingPtr ring = registry_ring(c.at("ring").get<std::string>());
        const LaurentPoly input = parse_poly(c.at("input").get<std::string>(), ring->spec());
        const LaurentPoly expected = parse_poly(c.at("expected").get<std::string>(), ring->spec());
        const LaurentPoly got = input.substitute(parse_map(c.at("images"), ring->spec()));
        if (!ring->equal(got, expected))
            res.fail("substitution identity failed on replay");
        return;
    }
    if (type == "lnd-derivation") {
        replay_lnd(c, res);
        return;
    }
    if (type == "kernel-slice") {
        replay_kernel_slice(c, res);
        return;
    }
    if (type == "morphism") {
        const RingMorphism m = morphism_from(c, c.at("src").get<std::string>(),
                                             c.at("tgt").get<std::string>(), c.at("images"),
                                             c.contains("witnesses") ? &c.at("witnesses") : nullptr);
        const CheckResult chk = check_morphism(m);
        if (!chk.ok)
            res.fail("morphism replay: " + chk.joined());
        return;
    }
    if (type == "equivariance") {
        const RingMorphism m = morphism_from(c, c.at("src").get<std::string>(),
                                             c.at("tgt").get<std::string>(), c.at("images"), nullptr);
        const Derivation dsrc = derivation_from(c.at("d_src"), m.source, "replay-src");
        const Derivation dtgt = derivation_from(c.at("d_tgt"), m.target, "replay-tgt");
        const CheckResult chk = check_equivariance(m, dsrc, dtgt);
        if (!chk.ok)
            res.fail("equivariance replay: " + chk.joined());
        return;
    }
    if (type == "deck") {
        const RingMorphism m = morphism_from(c, c.at("src").get<std::string>(),
                                             c.at("tgt").get<std::string>(), c.at("images"), nullptr);
        const Fraction shift = Fraction::over_var_power(
            m.target, parse_poly(c.at("shift_num").get<std::string>(), m.target->spec()),
            c.at("branch").get<std::string>(), c.at("shift_pole").get<int>());
        const CheckResult chk =
            check_deck_identity(m, c.at("fiber").get<std::string>(),
                                c.at("unit").get<std::string>(), c.at("branch").get<std::string>(),
                                shift);
        if (!chk.ok)
            res.fail("deck replay: " + chk.joined());
        return;
    }
    if (type == "antisymmetry") {
        const CoverPtr cover = registry_cover(c.at("cover").get<std::string>());
        const Cocycle cc = Cocycle::make(
            cover, parse_poly(c.at("num").get<std::string>(), cover->total()->spec()),
            c.at("pole").get<int>());
        const CheckResult chk = cc.verify_antisymmetry();
        if (!chk.ok)
            res.fail("antisymmetry replay: " + chk.joined());
        return;
    }
    if (type == "splitting") {
        const CoverPtr cover = registry_cover(c.at("cover").get<std::string>());
        const Spec spec = cover->total()->spec();
        const Cocycle cc =
            Cocycle::make(cover, parse_poly(c.at("cocycle_num").get<std::string>(), spec),
                          c.at("cocycle_pole").get<int>());
        SplittingWitness w;
        w.h_plus.ring = cover->total();
        w.h_plus.num = parse_poly(c.at("h_num").get<std::string>(), spec);
        w.h_plus.den = parse_poly(c.at("h_den").get<std::string>(), spec);
        for (const auto& alt : c.at("alts")) {
            Fraction f;
            f.ring = cover->total();
            f.num = parse_poly(alt.at("num").get<std::string>(), spec);
            f.den = parse_poly(alt.at("den").get<std::string>(), spec);
            w.alt_representations.push_back(std::move(f));
        }
        for (const auto& g : c.at("excluded"))
            w.excluded_locus.push_back(parse_poly(g.get<std::string>(), spec));
        const CheckResult chk = verify_splitting(cc, w);
        if (!chk.ok)
            res.fail("splitting replay: " + chk.joined());
        return;
    }
    if (type == "coboundary-pole") {
        const CoverPtr cover = registry_cover(c.at("cover").get<std::string>());
        const Spec spec = cover->total()->spec();
        const Cocycle c1 = Cocycle::make(
            cover, parse_poly(c.at("c1_num").get<std::string>(), spec), c.at("c1_pole").get<int>());
        const Cocycle c2 = Cocycle::make(
            cover, parse_poly(c.at("c2_num").get<std::string>(), spec), c.at("c2_pole").get<int>());
        const CoboundaryVerdict v = is_coboundary_on_base(c1, c2);
        if (v.status != CoboundaryStatus::Refuted || v.pole_order != c.at("expected_pole").get<int>())
            res.fail("coboundary replay: refutation did not reproduce");
        return;
    }
    if (type == "theta") {
        const RingMorphism fwd = morphism_from(c, c.at("fwd_src").get<std::string>(),
                                               c.at("fwd_tgt").get<std::string>(),
                                               c.at("fwd_images"), nullptr);
        const RingMorphism inv = morphism_from(c, c.at("fwd_tgt").get<std::string>(),
                                               c.at("fwd_src").get<std::string>(),
                                               c.at("inv_images"), nullptr);
        CheckResult chk = check_morphism(fwd);
        if (!chk.ok)
            res.fail("theta replay (forward): " + chk.joined());
        chk = check_morphism(inv);
        if (!chk.ok)
            res.fail("theta replay (inverse): " + chk.joined());
        chk = check_inverse_pair(fwd, inv);
        if (!chk.ok)
            res.fail("theta replay (composites): " + chk.joined());
        for (const auto& v : c.at("fixed")) {
            const std::string var = v.get<std::string>();
            if (!fwd.target->equal(fwd.images.at(var),
                                   LaurentPoly::variable(fwd.target->spec(), var)))
                res.fail("theta replay: " + var + " not fixed");
        }
        return;
    }
    if (type == "irreducible-linear") {
        const RingPtr ring = registry_ring(c.at("ring").get<std::string>());
        const IrreducibilityCertificate cert = irreducible_linear_in(
            parse_poly(c.at("poly").get<std::string>(), ring->spec()), c.at("var").get<std::string>());
        if (cert.verdict != IrreducibilityVerdict::Irreducible)
            res.fail("irreducibility replay did not reproduce");
        return;
    }
    if (type == "conclusion") {
        for (const auto& p : c.at("premises")) {
            bool ok = false;
            for (const auto& cl : rep.claims)
                if (cl.id == p.get<std::string>() && cl.status == ClaimStatus::Verified)
                    ok = true;
            if (!ok)
                res.fail("conclusion replay: premise " + p.get<std::string>() + " not verified");
        }
        return;
    }
    res.fail("unknown certificate type '" + type + "'");
}

}  // namespace

CheckResult replay_report(const Report& report) {
    CheckResult res;
    for (const auto& claim : report.claims) {
        const bool has_certs =
            claim.detail.contains("certificates") && claim.detail["certificates"].is_array();
        if (claim.status == ClaimStatus::Verified && !has_certs) {
            res.fail("claim '" + claim.id + "' verified without certificates");
            continue;
        }
        if (!has_certs)
            continue;
        for (const auto& cert : claim.detail["certificates"]) {
            try {
                replay_certificate(cert, report, claim, res);
            } catch (const Error& e) {
                res.fail("claim '" + claim.id + "': replay error: " + e.what());
            }
        }
    }
    return res;
}

}  // namespace certify
