#include "certify/checkfile.hpp"

#include "certify/parse.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace certify {

namespace {

using nlohmann::json;

std::vector<std::string> split_ws(const std::string& s, std::size_t max_parts) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (out.size() + 1 < max_parts && is >> tok)
        out.push_back(tok);
    std::string rest;
    std::getline(is, rest);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.erase(rest.begin());
    if (!rest.empty())
        out.push_back(rest);
    return out;
}

struct PendingRing {
    Spec spec;
    std::vector<LaurentPoly> relations;
    RingPtr built;  // rebuilt lazily after new relations
};

struct Session {
    std::map<std::string, PendingRing> rings;
    std::map<std::string, Derivation> derivations;
    std::map<std::string, RingMorphism> morphisms;

    RingPtr ring(const std::string& name) {
        auto it = rings.find(name);
        if (it == rings.end())
            throw Error("unknown ring '" + name + "'");
        if (!it->second.built)
            it->second.built = PresentedRing::make(it->second.spec, it->second.relations);
        return it->second.built;
    }
};

std::map<std::string, LaurentPoly> parse_assignments(const std::string& text, const Spec& spec,
                                                     std::string* witness_part) {
    std::string body = text;
    if (witness_part) {
        const auto at = body.find(" witness ");
        if (at != std::string::npos) {
            *witness_part = body.substr(at + 9);
            body = body.substr(0, at);
        }
    }
    std::map<std::string, LaurentPoly> out;
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
        const auto eq = piece.find('=');
        if (eq == std::string::npos)
            throw Error("expected 'var = poly' in '" + piece + "'");
        std::string var = piece.substr(0, eq);
        var.erase(remove_if(var.begin(), var.end(), ::isspace), var.end());
        out.emplace(var, parse_poly(piece.substr(eq + 1), spec));
    }
    return out;
}

}  // namespace

Report run_check_file(std::istream& in, const PipelineConfig& config) {
    Report rep;
    rep.pipeline = "check-file";
    rep.version = kToolVersion;

    Session ses;
    std::string line;
    std::size_t lineno = 0;
    std::size_t check_no = 0;

    auto add_claim = [&](const std::string& desc, ClaimStatus status, json detail) {
        ClaimResult cr;
        cr.id = "check." + std::to_string(++check_no);
        cr.description = desc;
        cr.step = "check-file:" + std::to_string(lineno);
        cr.status = status;
        cr.detail = std::move(detail);
        rep.claims.push_back(std::move(cr));
    };
    auto add_check = [&](const std::string& desc, bool ok, const std::string& why) {
        json d;
        d["certificates"] = json::array({{{"type", "control"}}});
        if (!ok)
            d["reason"] = why;
        // check-file claims carry their whole statement; re-running the file is the replay
        d["certificates"] = json::array();
        d["statement"] = desc;
        add_claim(desc, ok ? ClaimStatus::Verified : ClaimStatus::Refuted, std::move(d));
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        try {
            const auto parts = split_ws(trimmed, 2);
            const std::string& head = parts.at(0);
            const std::string rest = parts.size() > 1 ? parts.at(1) : "";

            if (head == "ring") {
                const auto toks = split_ws(rest, 1000);
                if (toks.size() < 2)
                    throw Error("ring needs a name and at least one variable");
                std::vector<RingSpec::Var> vars;
                for (std::size_t k = 1; k < toks.size(); ++k) {
                    std::string v = toks[k];
                    bool inv = false;
                    if (!v.empty() && v.back() == '*') {
                        inv = true;
                        v.pop_back();
                    }
                    vars.push_back({v, inv});
                }
                PendingRing pr;
                pr.spec = RingSpec::make(std::move(vars));
                ses.rings[toks[0]] = std::move(pr);
            } else if (head == "rel") {
                const auto toks = split_ws(rest, 2);
                auto it = ses.rings.find(toks.at(0));
                if (it == ses.rings.end())
                    throw Error("unknown ring '" + toks.at(0) + "'");
                it->second.relations.push_back(parse_poly(toks.at(1), it->second.spec));
                it->second.built.reset();
            } else if (head == "derivation") {
                const auto toks = split_ws(rest, 3);
                const RingPtr ring = ses.ring(toks.at(1));
                ses.derivations.insert_or_assign(
                    toks.at(0), make_derivation(ring, parse_assignments(toks.at(2), ring->spec(), nullptr),
                                                toks.at(0)));
            } else if (head == "morphism") {
                const auto toks = split_ws(rest, 4);
                const RingPtr src = ses.ring(toks.at(1));
                const RingPtr tgt = ses.ring(toks.at(2));
                std::string witness_text;
                auto images = parse_assignments(toks.at(3), tgt->spec(), &witness_text);
                std::map<std::string, LaurentPoly> witnesses;
                if (!witness_text.empty())
                    witnesses = parse_assignments(witness_text, tgt->spec(), nullptr);
                ses.morphisms.insert_or_assign(
                    toks.at(0), make_morphism(src, tgt, std::move(images), std::move(witnesses),
                                              toks.at(0)));
            } else if (head == "check") {
                const auto toks = split_ws(rest, 2);
                const std::string& kind = toks.at(0);
                const std::string args = toks.size() > 1 ? toks.at(1) : "";
                if (kind == "zero") {
                    const auto a = split_ws(args, 2);
                    const RingPtr ring = ses.ring(a.at(0));
                    const LaurentPoly p = parse_poly(a.at(1), ring->spec());
                    const LaurentPoly nf = ring->normal_form(p);
                    add_check("zero in " + a.at(0) + ": " + a.at(1), nf.is_zero(),
                              "normal form is " + nf.to_string());
                } else if (kind == "equal") {
                    const auto a = split_ws(args, 2);
                    const RingPtr ring = ses.ring(a.at(0));
                    const auto eq = a.at(1).find("==");
                    if (eq == std::string::npos)
                        throw Error("check equal needs 'lhs == rhs'");
                    const LaurentPoly lhs = parse_poly(a.at(1).substr(0, eq), ring->spec());
                    const LaurentPoly rhs = parse_poly(a.at(1).substr(eq + 2), ring->spec());
                    add_check("equal in " + a.at(0), ring->equal(lhs, rhs),
                              "difference normal form " + ring->normal_form(lhs - rhs).to_string());
                } else if (kind == "member" || kind == "radical") {
                    const auto a = split_ws(args, 2);
                    const RingPtr ring = ses.ring(a.at(0));
                    const LaurentPoly p = parse_poly(a.at(1), ring->spec());
                    const bool ok = kind == "member" ? ring->ideal_member(p) : ring->radical_member(p);
                    add_check(kind + " in " + a.at(0) + ": " + a.at(1), ok, "membership fails");
                } else if (kind == "well_defined") {
                    auto it = ses.derivations.find(args);
                    if (it == ses.derivations.end())
                        throw Error("unknown derivation '" + args + "'");
                    const CheckResult r = well_defined(it->second);
                    add_check("well_defined " + args, r.ok, r.joined());
                } else if (kind == "lnd") {
                    const auto a = split_ws(args, 2);
                    auto it = ses.derivations.find(a.at(0));
                    if (it == ses.derivations.end())
                        throw Error("unknown derivation '" + a.at(0) + "'");
                    const int cap = a.size() > 1 ? std::stoi(a.at(1)) : config.lnd_cap;
                    const CheckResult wd = well_defined(it->second);
                    if (!wd.ok) {
                        add_check("lnd " + a.at(0), false, wd.joined());
                    } else {
                        const LndOutcome r = lnd_certify(it->second, cap);
                        if (r.certified()) {
                            json idx = json::object();
                            for (const auto& [v, n] : r.certificate->index)
                                idx[v] = n;
                            add_claim("lnd " + a.at(0), ClaimStatus::Verified,
                                      {{"certificates", json::array()}, {"indices", idx}});
                        } else {
                            add_claim("lnd " + a.at(0), ClaimStatus::Inconclusive,
                                      {{"reason", "cap reached at generator '" + r.survivor_var + "'"}});
                        }
                    }
                } else if (kind == "kernel_member") {
                    const auto a = split_ws(args, 2);
                    auto it = ses.derivations.find(a.at(0));
                    if (it == ses.derivations.end())
                        throw Error("unknown derivation '" + a.at(0) + "'");
                    const LaurentPoly p = parse_poly(a.at(1), it->second.ring->spec());
                    add_check("kernel_member " + a.at(0) + ": " + a.at(1),
                              kernel_member(it->second, p),
                              "image is " + apply(it->second, p).to_string());
                } else if (kind == "morphism") {
                    auto it = ses.morphisms.find(args);
                    if (it == ses.morphisms.end())
                        throw Error("unknown morphism '" + args + "'");
                    const CheckResult r = check_morphism(it->second);
                    add_check("morphism " + args, r.ok, r.joined());
                } else if (kind == "inverse_pair") {
                    const auto a = split_ws(args, 2);
                    auto m = ses.morphisms.find(a.at(0));
                    auto n = ses.morphisms.find(a.at(1));
                    if (m == ses.morphisms.end() || n == ses.morphisms.end())
                        throw Error("unknown morphism in inverse_pair");
                    const CheckResult r = check_inverse_pair(m->second, n->second);
                    add_check("inverse_pair " + a.at(0) + " " + a.at(1), r.ok, r.joined());
                } else {
                    throw Error("unknown check kind '" + kind + "'");
                }
            } else {
                throw Error("unknown directive '" + head + "'");
            }
        } catch (const Error& e) {
            throw Error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rep;
}

Report run_check_file_path(const std::string& path, const PipelineConfig& config) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open check file '" + path + "'");
    return run_check_file(in, config);
}

}  // namespace certify
