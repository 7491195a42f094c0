#include "certify/pipeline.hpp"

#include "certify/parse.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace certify {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// claim construction

struct ClaimBuild {
    ClaimStatus status = ClaimStatus::Verified;
    json detail;

    void certificate(json c) { detail["certificates"].push_back(std::move(c)); }
    void fact(const std::string& key, json v) { detail[key] = std::move(v); }
    void refute(const std::string& reason) {
        status = ClaimStatus::Refuted;
        detail["reason"] = reason;
    }
    void inconclusive(const std::string& reason) {
        if (status != ClaimStatus::Refuted) {
            status = ClaimStatus::Inconclusive;
            detail["reason"] = reason;
        }
    }
    void require(const CheckResult& r, const std::string& what) {
        if (!r.ok)
            refute(what + ": " + r.joined());
    }
};

void run_claim(Report& rep, const std::string& id, const std::string& desc, const std::string& step,
               const std::function<void(ClaimBuild&)>& fn) {
    ClaimResult cr;
    cr.id = id;
    cr.description = desc;
    cr.step = step;
    const auto start = std::chrono::steady_clock::now();
    ClaimBuild b;
    try {
        fn(b);
    } catch (const DescentFailure& e) {
        b.status = ClaimStatus::Refuted;
        b.detail["reason"] = std::string("descent failure: ") + e.what();
        b.detail["offending"] = e.offending_expression;
    } catch (const Error& e) {
        b.status = ClaimStatus::Refuted;
        b.detail["reason"] = e.what();
    }
    cr.status = b.status;
    cr.detail = std::move(b.detail);
    cr.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count();
    rep.claims.push_back(std::move(cr));
}

// A negative control: the body exercises a corrupted input and must throw or
// return a failing check. The claim ends Refuted exactly when the corruption
// is caught; a control that verifies is a false-positive defect.
void run_control(Report& rep, const std::string& id, const std::string& desc, const std::string& step,
                 const std::function<CheckResult()>& fn) {
    run_claim(rep, id, desc, step, [&](ClaimBuild& b) {
        b.certificate({{"type", "control"}});
        try {
            const CheckResult r = fn();
            if (r.ok) {
                b.status = ClaimStatus::Verified;
                b.fact("control_failure", "corrupted input was verified");
            } else {
                b.refute("rejected as required: " + r.joined());
            }
        } catch (const Error& e) {
            b.refute(std::string("rejected as required: ") + e.what());
        }
    });
}

// ---------------------------------------------------------------------------
// shared claim bodies

json poly_map_json(const std::map<std::string, LaurentPoly>& m) {
    json out = json::object();
    for (const auto& [k, v] : m)
        out[k] = v.to_string();
    return out;
}

json lnd_certificate(const std::string& ring, const Derivation& d, const NilpotencyCertificate& cert,
                     const std::vector<std::string>& kills, const std::vector<std::string>& moves) {
    json idx = json::object();
    for (const auto& [name, n] : cert.index)
        idx[name] = n;
    return {{"type", "lnd-derivation"}, {"ring", ring},           {"images", poly_map_json(d.images)},
            {"indices", idx},           {"cap", cert.cap},        {"kills", kills},
            {"moves", moves}};
}

// well-defined + locally nilpotent + required kernel/non-kernel facts
std::optional<NilpotencyCertificate> derivation_claim(ClaimBuild& b, const std::string& ring_key,
                                                      const Derivation& d, int cap,
                                                      const std::vector<std::string>& kills,
                                                      const std::vector<std::string>& moves) {
    b.require(well_defined(d), "derivation " + d.label + " not well-defined");
    if (b.status != ClaimStatus::Verified)
        return std::nullopt;
    const LndOutcome lnd = lnd_certify(d, cap);
    if (!lnd.certified()) {
        b.inconclusive("nilpotency cap " + std::to_string(cap) + " reached at generator '" +
                       lnd.survivor_var + "'");
        return std::nullopt;
    }
    for (const auto& v : kills) {
        if (!kernel_member(d, LaurentPoly::variable(d.ring->spec(), v)))
            b.refute(d.label + " does not annihilate " + v);
    }
    for (const auto& v : moves) {
        const LaurentPoly img = apply(d, LaurentPoly::variable(d.ring->spec(), v));
        if (img.is_zero())
            b.refute(d.label + " unexpectedly annihilates " + v);
        else
            b.fact("image_of_" + v + "_under_" + d.label, img.to_string());
    }
    if (b.status == ClaimStatus::Verified)
        b.certificate(lnd_certificate(ring_key, d, *lnd.certificate, kills, moves));
    return lnd.certificate;
}

bool support_within(const LaurentPoly& p, const std::set<std::string>& allowed) {
    const Spec spec = p.ring();
    for (const auto& [m, c] : p.terms())
        for (std::size_t k = 0; k < spec->arity(); ++k)
            if (m.e[k] != 0 && !allowed.count(spec->name(k)))
                return false;
    return true;
}

void kernel_slice_claim(ClaimBuild& b, const std::string& ring_key,
                        const std::vector<Derivation>& ds, int degree,
                        const std::set<std::string>& allowed, const std::string& span_desc) {
    const KernelSlice slice = kernel_intersection_bounded(ds, degree);
    std::size_t expected = 0;
    for (const auto& m : slice.monomials) {
        const LaurentPoly p = LaurentPoly::term(ds.front().ring->spec(), m, GR::one());
        if (support_within(p, allowed))
            ++expected;
    }
    bool ok = slice.basis.size() == expected;
    for (const auto& p : slice.basis)
        ok = ok && support_within(p, allowed);
    if (!ok) {
        json basis = json::array();
        for (const auto& p : slice.basis)
            basis.push_back(p.to_string());
        b.refute("bounded kernel space differs from " + span_desc);
        b.fact("kernel_basis", basis);
        return;
    }
    json basis = json::array();
    json ders = json::array();
    for (const auto& p : slice.basis)
        basis.push_back(p.to_string());
    for (const auto& d : ds)
        ders.push_back(poly_map_json(d.images));
    json allowed_json = json::array();
    for (const auto& v : allowed)
        allowed_json.push_back(v);
    b.fact("kernel_dimension", slice.basis.size());
    b.fact("evidence", "bounded-degree evidence (D=" + std::to_string(degree) + "), not a proof");
    b.certificate({{"type", "kernel-slice"},
                   {"ring", ring_key},
                   {"derivations", ders},
                   {"degree", degree},
                   {"basis", basis},
                   {"allowed", allowed_json}});
}

json morphism_certificate(const std::string& src, const std::string& tgt, const RingMorphism& m) {
    return {{"type", "morphism"},
            {"src", src},
            {"tgt", tgt},
            {"images", poly_map_json(m.images)},
            {"witnesses", poly_map_json(m.unit_witnesses)}};
}

json splitting_certificate(const std::string& cover_key, const Cocycle& c,
                           const SplittingWitness& w) {
    json alts = json::array();
    for (const auto& a : w.alt_representations)
        alts.push_back({{"num", a.num.to_string()}, {"den", a.den.to_string()}});
    json excluded = json::array();
    for (const auto& g : w.excluded_locus)
        excluded.push_back(g.to_string());
    return {{"type", "splitting"},
            {"cover", cover_key},
            {"cocycle_num", c.value.num.to_string()},
            {"cocycle_pole", c.value.den.max_exponent(c.cover->branch_var())},
            {"h_num", w.h_plus.num.to_string()},
            {"h_den", w.h_plus.den.to_string()},
            {"alts", alts},
            {"excluded", excluded}};
}

// ---------------------------------------------------------------------------
// kr-cylinder

Report base_report(const std::string& name) {
    Report rep;
    rep.pipeline = name;
    rep.version = kToolVersion;
    return rep;
}

}  // namespace

Report run_kr_cylinder(const PipelineConfig& config) {
    Report rep = base_report("kr-cylinder");
    const KrWorld& w = kr_world();

    run_claim(rep, "kr.01", "coordinate change maps the defining cubic to the fibered form",
              "coordinate-change", [&](ClaimBuild& b) {
                  const RingPtr amb = registry_ring("ambient4");
                  const Spec s = amb->spec();
                  std::map<std::string, LaurentPoly> images = {
                      {"x", parse_poly("-x", s)},
                      {"y", parse_poly("z", s)},
                      {"z", parse_poly("i*y", s)},
                      {"t", parse_poly("t", s)},
                  };
                  const LaurentPoly input = parse_poly("x + x^2*y + z^2 + t^3", s);
                  const LaurentPoly expected = parse_poly("x^2*z - y^2 - x + t^3", s);
                  const LaurentPoly got = input.substitute(images);
                  if (!(got == expected)) {
                      b.refute("coordinate change produced " + got.to_string());
                      return;
                  }
                  b.fact("result", got.to_string());
                  b.certificate({{"type", "subst-identity"},
                                 {"ring", "ambient4"},
                                 {"input", input.to_string()},
                                 {"images", poly_map_json(images)},
                                 {"expected", expected.to_string()}});
              });

    run_claim(rep, "kr.02",
              "the two visible derivations are locally nilpotent with Q(i)[x] as joint kernel "
              "evidence at bounded degree",
              "kernel-generators", [&](ClaimBuild& b) {
                  derivation_claim(b, "A", w.del1, config.lnd_cap, {"x", "t"}, {});
                  derivation_claim(b, "A", w.del2, config.lnd_cap, {"x"}, {});
                  if (b.status != ClaimStatus::Verified)
                      return;
                  kernel_slice_claim(b, "A", {w.del1, w.del2}, config.kernel_degree, {"x"},
                                     "span{1, x, ..., x^D}");
              });

    run_claim(rep, "kr.03", "the chart trivializations are valid and equivariant",
              "etale-trivializations", [&](ClaimBuild& b) {
                  b.require(check_morphism(w.phi1), "phi1");
                  b.require(check_morphism(w.phi2), "phi2");
                  b.require(check_equivariance(w.phi1, w.act1, w.dv, config.lnd_cap),
                            "phi1 equivariance");
                  b.require(check_equivariance(w.phi2, w.act2, w.dv, config.lnd_cap),
                            "phi2 equivariance");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate(morphism_certificate("B1", "U", w.phi1));
                  b.certificate(morphism_certificate("B2", "U", w.phi2));
                  b.certificate({{"type", "equivariance"},
                                 {"src", "B1"},
                                 {"tgt", "U"},
                                 {"images", poly_map_json(w.phi1.images)},
                                 {"d_src", poly_map_json(w.act1.images)},
                                 {"d_tgt", poly_map_json(w.dv.images)}});
                  b.certificate({{"type", "equivariance"},
                                 {"src", "B2"},
                                 {"tgt", "U"},
                                 {"images", poly_map_json(w.phi2.images)},
                                 {"d_src", poly_map_json(w.act2.images)},
                                 {"d_tgt", poly_map_json(w.dv.images)}});
              });

    run_claim(rep, "kr.04", "the deck identities hold with the stated shifts", "deck-identities",
              [&](ClaimBuild& b) {
                  b.require(check_deck_identity(w.phi1, "v", "m", "x", w.c1_value), "phi1 deck");
                  b.require(check_deck_identity(w.phi2, "v", "m", "x", w.c2_value), "phi2 deck");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.fact("transcription_note",
                         "deck data is read as acting on the full chart (v, x, m) even where a "
                         "domain list abbreviates to (x, m)");
                  b.certificate({{"type", "deck"},
                                 {"src", "B1"},
                                 {"tgt", "U"},
                                 {"images", poly_map_json(w.phi1.images)},
                                 {"fiber", "v"},
                                 {"unit", "m"},
                                 {"branch", "x"},
                                 {"shift_num", w.c1_value.num.to_string()},
                                 {"shift_pole", 1}});
                  b.certificate({{"type", "deck"},
                                 {"src", "B2"},
                                 {"tgt", "U"},
                                 {"images", poly_map_json(w.phi2.images)},
                                 {"fiber", "v"},
                                 {"unit", "m"},
                                 {"branch", "x"},
                                 {"shift_num", w.c2_value.num.to_string()},
                                 {"shift_pole", 2}});
              });

    run_claim(rep, "kr.05", "both transition cocycles are antisymmetric", "cocycle-antisymmetry",
              [&](ClaimBuild& b) {
                  b.require(w.c1_on_cover2.verify_antisymmetry(), "c1");
                  b.require(w.c2_on_cover1.verify_antisymmetry(), "c2");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "cover2"},
                                 {"num", w.c1_value.num.to_string()},
                                 {"pole", 1}});
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "cover1"},
                                 {"num", w.c2_value.num.to_string()},
                                 {"pole", 2}});
              });

    std::optional<SplittingWitness> h_on_2, h_on_1;
    run_claim(rep, "kr.06", "both pulled-back cocycles split on the covers", "cocycle-splitting",
              [&](ClaimBuild& b) {
                  const SplitOutcome s1 = split_cocycle(w.c1_on_cover2, {config.ansatz_degree});
                  const SplitOutcome s2 = split_cocycle(w.c2_on_cover1, {config.ansatz_degree});
                  if (!s1.found()) {
                      b.inconclusive("no splitting of c1 within ansatz: " + s1.note);
                      return;
                  }
                  if (!s2.found()) {
                      b.inconclusive("no splitting of c2 within ansatz: " + s2.note);
                      return;
                  }
                  b.require(verify_splitting(w.c1_on_cover2, *s1.witness), "splitting of c1");
                  b.require(verify_splitting(w.c2_on_cover1, *s2.witness), "splitting of c2");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  h_on_2 = s1.witness;
                  h_on_1 = s2.witness;
                  b.fact("h_on_cover2", s1.witness->h_plus.to_string());
                  b.fact("h_on_cover1", s2.witness->h_plus.to_string());
                  b.fact("ansatz_degrees", json::array({s1.used_degree, s2.used_degree}));
                  b.certificate(splitting_certificate("cover2", w.c1_on_cover2, *s1.witness));
                  b.certificate(splitting_certificate("cover1", w.c2_on_cover1, *s2.witness));
              });

    std::optional<ThetaResult> theta;
    run_claim(rep, "kr.07", "the cylinder isomorphism descends, inverts, and fixes x and t",
              "cylinder-isomorphism", [&](ClaimBuild& b) {
                  if (!h_on_2 || !h_on_1) {
                      b.inconclusive("splitting witnesses unavailable");
                      return;
                  }
                  ThetaResult th = build_theta(w.side1, w.side2, *h_on_2, *h_on_1);
                  b.fact("images", th.detail);
                  b.certificate({{"type", "theta"},
                                 {"fwd_src", "B2w"},
                                 {"fwd_tgt", "B1w"},
                                 {"fwd_images", poly_map_json(th.theta_star.images)},
                                 {"inv_images", poly_map_json(th.theta_star_inv.images)},
                                 {"fixed", json::array({"x", "t"})}});
                  theta = std::move(th);
              });

    run_claim(rep, "kr.08", "the transversal derivation on the first cylinder moves x",
              "transversal-derivation", [&](ClaimBuild& b) {
                  derivation_claim(b, "B1w", w.d_cyl, config.lnd_cap, {"t", "w"}, {"x"});
              });

    std::optional<Derivation> delta;
    run_claim(rep, "kr.09", "conjugation transports it to the second cylinder with delta(x) != 0 "
                            "and delta(t) = 0",
              "conjugate-derivation", [&](ClaimBuild& b) {
                  if (!theta) {
                      b.inconclusive("cylinder isomorphism unavailable");
                      return;
                  }
                  Derivation dl = conjugate_derivation(w.d_cyl, theta->theta_star,
                                                       theta->theta_star_inv, "delta");
                  derivation_claim(b, "B2w", dl, config.lnd_cap, {"t"}, {"x"});
                  if (b.status == ClaimStatus::Verified)
                      delta = std::move(dl);
              });

    run_claim(rep, "kr.10", "clearing t-denominators yields a derivation of the affine cylinder "
                            "with nonzero image of x",
              "denominator-clearing", [&](ClaimBuild& b) {
                  if (!delta) {
                      b.inconclusive("conjugated derivation unavailable");
                      return;
                  }
                  const ClearedDerivation cd = clear_denominators(*delta, w.A2w, "t");
                  b.fact("k", cd.k);
                  const auto cert =
                      derivation_claim(b, "A2w", cd.partial, config.lnd_cap, {"t"}, {"x"});
                  (void)cert;
              });

    run_claim(rep, "kr.11", "the ring is a domain and any polynomial in x killed by the cleared "
                            "derivation is constant",
              "conclusion", [&](ClaimBuild& b) {
                  const RingPtr amb = registry_ring("ambient4");
                  const LaurentPoly rel = parse_poly("x^2*z - y^2 - x + t^3", amb->spec());
                  const IrreducibilityCertificate cert = irreducible_linear_in(rel, "z");
                  if (cert.verdict != IrreducibilityVerdict::Irreducible) {
                      b.inconclusive("no irreducibility certificate: " + cert.detail);
                      return;
                  }
                  b.fact("irreducibility", cert.detail);
                  const std::vector<std::string> premises = {"kr.01", "kr.02", "kr.07", "kr.09",
                                                             "kr.10"};
                  for (const auto& pid : premises) {
                      bool found_verified = false;
                      for (const auto& c : rep.claims)
                          if (c.id == pid && c.status == ClaimStatus::Verified)
                              found_verified = true;
                      if (!found_verified) {
                          b.inconclusive("premise " + pid + " not verified");
                          return;
                      }
                  }
                  b.fact("conclusion",
                         "ML(X x A^1) = Q(i); for f(x) in the kernel, f'(x)*partial(x) = 0 in a "
                         "domain with partial(x) != 0 forces f' = 0");
                  b.fact("contingency", "contingent on bounded-degree kernel evidence (D=" +
                                            std::to_string(config.kernel_degree) + ") from kr.02");
                  b.certificate({{"type", "irreducible-linear"},
                                 {"ring", "ambient4"},
                                 {"poly", rel.to_string()},
                                 {"var", "z"}});
                  json prem = json::array();
                  for (const auto& p : premises)
                      prem.push_back(p);
                  b.certificate({{"type", "conclusion"}, {"premises", prem}});
              });

    if (config.negative_controls) {
        run_control(rep, "kr.nc1", "corrupted trivialization must be rejected", "negative-control",
                    [&]() {
                        std::map<std::string, LaurentPoly> imgs = w.phi1.images;
                        imgs["y"] = parse_poly("m^3 + x*v^2", w.U->spec());
                        const RingMorphism bad =
                            make_morphism(w.B1, w.U, std::move(imgs), {}, "phi1-corrupt");
                        return check_morphism(bad);
                    });
        run_control(rep, "kr.nc2", "wrong action must fail equivariance", "negative-control",
                    [&]() {
                        const Derivation wrong = make_derivation(
                            w.B1,
                            {{"y", parse_poly("x^2", w.B1->spec())},
                             {"z", parse_poly("2*y", w.B1->spec())}},
                            "wrong-action");
                        return check_equivariance(w.phi1, wrong, w.dv, config.lnd_cap);
                    });
        run_control(rep, "kr.nc3", "wrong deck shift must fail", "negative-control", [&]() {
            const Fraction bad = Fraction::over_var_power(w.tX2, parse_poly("m^3", w.tX2->spec()),
                                                          "x", 1);
            return check_deck_identity(w.phi1, "v", "m", "x", bad);
        });
        run_control(rep, "kr.nc4", "perturbed cocycle must fail antisymmetry", "negative-control",
                    [&]() {
                        Cocycle::make(w.cover2, parse_poly("2*m^3 + 1", w.tX2->spec()), 1);
                        return CheckResult{};  // construction must throw
                    });
        run_control(rep, "kr.nc5", "sigma-parity corruption must abort the descent",
                    "negative-control", [&]() {
                        if (!h_on_2 || !h_on_1)
                            throw Error("splitting witnesses unavailable");
                        SplittingWitness bad = *h_on_2;
                        bad.h_plus.num += LaurentPoly::variable(w.tX2->spec(), "m") * bad.h_plus.den;
                        build_theta(w.side1, w.side2, bad, *h_on_1);
                        return CheckResult{};  // build_theta must throw
                    });
    }
    return rep;
}

Report run_danielewski(const PipelineConfig& config) {
    Report rep = base_report("danielewski");
    const DanWorld& w = dan_world();

    run_claim(rep, "dan.01", "the surface derivations are locally nilpotent over Q(i)[x]",
              "surface-derivations", [&](ClaimBuild& b) {
                  derivation_claim(b, "S1", w.act1, config.lnd_cap, {"x"}, {});
                  derivation_claim(b, "S2", w.act2, config.lnd_cap, {"x"}, {});
              });

    run_claim(rep, "dan.02", "the chart trivializations are valid and equivariant",
              "etale-trivializations", [&](ClaimBuild& b) {
                  b.require(check_morphism(w.phi1), "phi1");
                  b.require(check_morphism(w.phi2), "phi2");
                  b.require(check_equivariance(w.phi1, w.act1, w.dv, config.lnd_cap),
                            "phi1 equivariance");
                  b.require(check_equivariance(w.phi2, w.act2, w.dv, config.lnd_cap),
                            "phi2 equivariance");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate(morphism_certificate("S1", "UD", w.phi1));
                  b.certificate(morphism_certificate("S2", "UD", w.phi2));
              });

    run_claim(rep, "dan.03", "the deck identities hold with the stated shifts", "deck-identities",
              [&](ClaimBuild& b) {
                  b.require(check_deck_identity(w.phi1, "v", "e", "x", w.c1_value), "phi1 deck");
                  b.require(check_deck_identity(w.phi2, "v", "e", "x", w.c2_value), "phi2 deck");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate({{"type", "deck"},
                                 {"src", "S1"},
                                 {"tgt", "UD"},
                                 {"images", poly_map_json(w.phi1.images)},
                                 {"fiber", "v"},
                                 {"unit", "e"},
                                 {"branch", "x"},
                                 {"shift_num", w.c1_value.num.to_string()},
                                 {"shift_pole", 1}});
                  b.certificate({{"type", "deck"},
                                 {"src", "S2"},
                                 {"tgt", "UD"},
                                 {"images", poly_map_json(w.phi2.images)},
                                 {"fiber", "v"},
                                 {"unit", "e"},
                                 {"branch", "x"},
                                 {"shift_num", w.c2_value.num.to_string()},
                                 {"shift_pole", 2}});
              });

    run_claim(rep, "dan.04", "both transition cocycles are antisymmetric", "cocycle-antisymmetry",
              [&](ClaimBuild& b) {
                  b.require(w.c1_on_cover2.verify_antisymmetry(), "c1");
                  b.require(w.c2_on_cover1.verify_antisymmetry(), "c2");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "dcover2"},
                                 {"num", w.c1_value.num.to_string()},
                                 {"pole", 1}});
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "dcover1"},
                                 {"num", w.c2_value.num.to_string()},
                                 {"pole", 2}});
              });

    std::optional<SplittingWitness> h_on_2, h_on_1;
    run_claim(rep, "dan.05", "both pulled-back cocycles split on the two-chart covers",
              "cocycle-splitting", [&](ClaimBuild& b) {
                  const SplitOutcome s1 = split_cocycle(w.c1_on_cover2, {config.ansatz_degree});
                  const SplitOutcome s2 = split_cocycle(w.c2_on_cover1, {config.ansatz_degree});
                  if (!s1.found() || !s2.found()) {
                      b.inconclusive("no splitting within ansatz: " +
                                     (s1.found() ? s2.note : s1.note));
                      return;
                  }
                  b.require(verify_splitting(w.c1_on_cover2, *s1.witness), "splitting of c1");
                  b.require(verify_splitting(w.c2_on_cover1, *s2.witness), "splitting of c2");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  h_on_2 = s1.witness;
                  h_on_1 = s2.witness;
                  b.fact("h_on_cover2", s1.witness->h_plus.to_string());
                  b.fact("h_on_cover1", s2.witness->h_plus.to_string());
                  b.certificate(splitting_certificate("dcover2", w.c1_on_cover2, *s1.witness));
                  b.certificate(splitting_certificate("dcover1", w.c2_on_cover1, *s2.witness));
              });

    std::optional<ThetaResult> theta;
    run_claim(rep, "dan.06", "the cylinder isomorphism descends, inverts, and fixes x",
              "cylinder-isomorphism", [&](ClaimBuild& b) {
                  if (!h_on_2 || !h_on_1) {
                      b.inconclusive("splitting witnesses unavailable");
                      return;
                  }
                  ThetaResult th = build_theta(w.side1, w.side2, *h_on_2, *h_on_1);
                  b.fact("images", th.detail);
                  b.certificate({{"type", "theta"},
                                 {"fwd_src", "S2w"},
                                 {"fwd_tgt", "S1w"},
                                 {"fwd_images", poly_map_json(th.theta_star.images)},
                                 {"inv_images", poly_map_json(th.theta_star_inv.images)},
                                 {"fixed", json::array({"x"})}});
                  theta = std::move(th);
              });

    run_claim(rep, "dan.07", "the transversal derivation on the first cylinder moves x",
              "transversal-derivation", [&](ClaimBuild& b) {
                  derivation_claim(b, "S1w", w.d_cyl, config.lnd_cap, {"w"}, {"x"});
              });

    run_claim(rep, "dan.08", "conjugation yields a derivation of the second cylinder moving x",
              "conjugate-derivation", [&](ClaimBuild& b) {
                  if (!theta) {
                      b.inconclusive("cylinder isomorphism unavailable");
                      return;
                  }
                  Derivation dl = conjugate_derivation(w.d_cyl, theta->theta_star,
                                                       theta->theta_star_inv, "delta");
                  derivation_claim(b, "S2w", dl, config.lnd_cap, {}, {"x"});
              });

    run_claim(rep, "dan.09", "the kernel of the second surface action matches Q(i)[x] at bounded "
                             "degree",
              "kernel-evidence", [&](ClaimBuild& b) {
                  kernel_slice_claim(b, "S2", {w.act2}, config.kernel_degree, {"x"},
                                     "span{1, x, ..., x^D}");
              });

    run_claim(rep, "dan.10", "the ring is a domain, so the conjugated derivation forces "
                             "ML(S2 x A^1) = Q(i) at the evidence level",
              "conclusion", [&](ClaimBuild& b) {
                  const LaurentPoly rel = parse_poly("x^2*z - y^2 + 1", w.S2->spec());
                  const IrreducibilityCertificate cert = irreducible_linear_in(rel, "z");
                  if (cert.verdict != IrreducibilityVerdict::Irreducible) {
                      b.inconclusive("no irreducibility certificate: " + cert.detail);
                      return;
                  }
                  const std::vector<std::string> premises = {"dan.06", "dan.08", "dan.09"};
                  for (const auto& pid : premises) {
                      bool found_verified = false;
                      for (const auto& c : rep.claims)
                          if (c.id == pid && c.status == ClaimStatus::Verified)
                              found_verified = true;
                      if (!found_verified) {
                          b.inconclusive("premise " + pid + " not verified");
                          return;
                      }
                  }
                  b.fact("irreducibility", cert.detail);
                  b.fact("contingency", "contingent on bounded-degree kernel evidence (D=" +
                                            std::to_string(config.kernel_degree) + ") from dan.09");
                  b.certificate({{"type", "irreducible-linear"},
                                 {"ring", "S2"},
                                 {"poly", rel.to_string()},
                                 {"var", "z"}});
                  b.certificate(
                      {{"type", "conclusion"}, {"premises", json::array({"dan.06", "dan.08", "dan.09"})}});
              });

    if (config.negative_controls) {
        run_control(rep, "dan.nc1", "corrupted trivialization must be rejected", "negative-control",
                    [&]() {
                        std::map<std::string, LaurentPoly> imgs = w.phi1.images;
                        imgs["y"] = parse_poly("e + x*v^2", w.U->spec());
                        return check_morphism(make_morphism(w.S1, w.U, std::move(imgs), {}, "bad"));
                    });
        run_control(rep, "dan.nc2", "wrong deck shift must fail", "negative-control", [&]() {
            const Fraction bad =
                Fraction::over_var_power(w.tS2, parse_poly("e", w.tS2->spec()), "x", 1);
            return check_deck_identity(w.phi1, "v", "e", "x", bad);
        });
        run_control(rep, "dan.nc3", "sigma-parity corruption must abort the descent",
                    "negative-control", [&]() {
                        if (!h_on_2 || !h_on_1)
                            throw Error("splitting witnesses unavailable");
                        SplittingWitness bad = *h_on_2;
                        bad.h_plus.num += LaurentPoly::variable(w.tS2->spec(), "e") * bad.h_plus.den;
                        build_theta(w.side1, w.side2, bad, *h_on_1);
                        return CheckResult{};
                    });
    }
    return rep;
}

Report run_remarks(const PipelineConfig& config) {
    Report rep = base_report("remarks");
    const RemarksWorld& w = remarks_world();

    run_claim(rep, "rem.01", "both cocycles on the punctured base cover are antisymmetric",
              "cocycle-antisymmetry", [&](ClaimBuild& b) {
                  b.require(w.c1.verify_antisymmetry(), "c1");
                  b.require(w.c2.verify_antisymmetry(), "c2");
                  if (b.status != ClaimStatus::Verified)
                      return;
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "zcover"},
                                 {"num", w.c1.value.num.to_string()},
                                 {"pole", 1}});
                  b.certificate({{"type", "antisymmetry"},
                                 {"cover", "zcover"},
                                 {"num", w.c2.value.num.to_string()},
                                 {"pole", 2}});
              });

    run_claim(rep, "rem.02", "the two cocycles are not cohomologous: their difference has a pole "
                             "along x = 0",
              "cocycle-classes", [&](ClaimBuild& b) {
                  const CoboundaryVerdict v = is_coboundary_on_base(w.c1, w.c2);
                  if (v.status != CoboundaryStatus::Refuted) {
                      b.refute("difference did not exhibit a pole along x = 0");
                      return;
                  }
                  if (v.pole_order != 2) {
                      b.refute("unexpected pole order " + std::to_string(v.pole_order));
                      return;
                  }
                  b.fact("pole_order", v.pole_order);
                  b.certificate({{"type", "coboundary-pole"},
                                 {"cover", "zcover"},
                                 {"c1_num", w.c1.value.num.to_string()},
                                 {"c1_pole", 1},
                                 {"c2_num", w.c2.value.num.to_string()},
                                 {"c2_pole", 2},
                                 {"expected_pole", 2}});
              });

    run_claim(rep, "rem.03", "the first localized surface carries two transversal derivations "
                             "whose joint kernel matches Q(i)[t^(+-1)] at bounded degree",
              "kernel-evidence", [&](ClaimBuild& b) {
                  derivation_claim(b, "B1", w.b1_act, config.lnd_cap, {"x", "t"}, {});
                  derivation_claim(b, "B1", w.b1_act_sym, config.lnd_cap, {"z", "t"}, {});
                  if (b.status != ClaimStatus::Verified)
                      return;
                  kernel_slice_claim(b, "B1", {w.b1_act, w.b1_act_sym}, config.kernel_degree, {"t"},
                                     "span of the t-powers");
                  b.fact("containment", "consistent with ML of the first surface inside "
                                        "Q(i)[t^(+-1)]");
              });

    run_claim(rep, "rem.04", "the kernel of the second localized surface action matches "
                             "Q(i)[t^(+-1)][x] at bounded degree",
              "kernel-evidence", [&](ClaimBuild& b) {
                  derivation_claim(b, "B2", w.b2_act, config.lnd_cap, {"x", "t"}, {});
                  if (b.status != ClaimStatus::Verified)
                      return;
                  kernel_slice_claim(b, "B2", {w.b2_act}, config.kernel_degree, {"x", "t"},
                                     "span of the monomials in x and t");
                  b.fact("containment", "consistent with ML of the second surface inside "
                                        "Q(i)[t^(+-1)][x]");
              });
    return rep;
}

Report run_pipeline(const std::string& name, const PipelineConfig& config) {
    if (name == "kr-cylinder")
        return run_kr_cylinder(config);
    if (name == "danielewski")
        return run_danielewski(config);
    if (name == "remarks")
        return run_remarks(config);
    throw Error("unknown pipeline '" + name + "'");
}

}  // namespace certify
