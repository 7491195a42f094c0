#include "certify/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace certify {

TermOrder TermOrder::grevlex(std::size_t arity) {
    std::vector<std::size_t> all(arity);
    for (std::size_t k = 0; k < arity; ++k)
        all[k] = k;
    TermOrder t;
    t.blocks_.push_back(std::move(all));
    return t;
}

TermOrder TermOrder::blocks(std::vector<std::vector<std::size_t>> blocks, std::size_t arity) {
    std::vector<bool> seen(arity, false);
    for (const auto& blk : blocks)
        for (auto k : blk) {
            if (k >= arity || seen[k])
                throw Error("term order: bad block assignment");
            seen[k] = true;
        }
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < arity; ++k)
        if (!seen[k])
            rest.push_back(k);
    if (!rest.empty())
        blocks.push_back(std::move(rest));
    TermOrder t;
    t.blocks_ = std::move(blocks);
    return t;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        int da = 0, db = 0;
        for (auto k : blk) {
            da += std::abs(a.e[k]);
            db += std::abs(b.e[k]);
        }
        if (da != db)
            return da < db;
        for (std::size_t idx = blk.size(); idx-- > 0;) {
            const std::size_t k = blk[idx];
            if (a.e[k] != b.e[k])
                return a.e[k] > b.e[k];
        }
    }
    return false;
}

namespace {

// Internal dense-exponent polynomials, ordered by the ring's term order.
struct OrdLess {
    const TermOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

using IMap = std::map<Monomial, GR, OrdLess>;

IMap imap(const TermOrder& ord) {
    return IMap(OrdLess{&ord});
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] > b.e[k])
            return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial q = b;
    for (std::size_t k = 0; k < q.e.size(); ++k)
        q.e[k] -= a.e[k];
    return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial l = a;
    for (std::size_t k = 0; k < l.e.size(); ++k)
        l.e[k] = std::max(a.e[k], b.e[k]);
    return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] > 0 && b.e[k] > 0)
            return false;
    return true;
}

using Basis = std::vector<std::vector<std::pair<Monomial, GR>>>;  // each sorted descending

const Monomial& lead_mono(const Basis::value_type& g) {
    return g.front().first;
}

void add_scaled(IMap& p, const Basis::value_type& g, const Monomial& shift, const GR& scale) {
    for (const auto& [m, c] : g) {
        const Monomial mm = m * shift;
        auto it = p.find(mm);
        if (it == p.end()) {
            GR v = c * scale;
            if (!v.is_zero())
                p.emplace(mm, std::move(v));
        } else {
            it->second += c * scale;
            if (it->second.is_zero())
                p.erase(it);
        }
    }
}

// Full normal form: every term of the result is irreducible modulo the basis.
IMap reduce_full(IMap p, const Basis& basis, const TermOrder& ord) {
    IMap done = imap(ord);
    while (!p.empty()) {
        const auto lead = *p.rbegin();
        bool reduced = false;
        for (const auto& g : basis) {
            if (divides(lead_mono(g), lead.first)) {
                const GR factor = -(lead.second / g.front().second);
                add_scaled(p, g, quotient(lead.first, lead_mono(g)), factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.emplace(lead.first, lead.second);
            p.erase(std::prev(p.end()));
        }
    }
    return done;
}

Basis::value_type to_sorted(const IMap& p) {
    Basis::value_type v(p.rbegin(), p.rend());
    return v;
}

IMap to_imap(const Basis::value_type& v, const TermOrder& ord) {
    IMap p = imap(ord);
    for (const auto& t : v)
        p.insert(t);
    return p;
}

void make_monic(Basis::value_type& g) {
    const GR inv = g.front().second.inverse();
    for (auto& [m, c] : g)
        c *= inv;
}

// Buchberger with the product criterion; deterministic pair selection by
// (lcm under the order, then indices). Inputs need not be monic.
Basis buchberger(std::vector<IMap> input, const TermOrder& ord) {
    Basis basis;
    for (auto& p : input) {
        if (p.empty())
            continue;
        auto g = to_sorted(p);
        make_monic(g);
        basis.push_back(std::move(g));
    }

    struct Pair {
        std::size_t i, j;
        Monomial l;
    };
    std::vector<Pair> pending;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, lcm(lead_mono(basis[i]), lead_mono(basis[j]))});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        push_pairs(j);

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            if (ord.less(pending[k].l, pending[best].l) ||
                (pending[k].l == pending[best].l &&
                 std::tie(pending[k].i, pending[k].j) < std::tie(pending[best].i, pending[best].j)))
                best = k;
        }
        const Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        if (coprime(lead_mono(basis[pr.i]), lead_mono(basis[pr.j])))
            continue;

        IMap s = imap(ord);
        add_scaled(s, basis[pr.i], quotient(pr.l, lead_mono(basis[pr.i])), GR::one());
        add_scaled(s, basis[pr.j], quotient(pr.l, lead_mono(basis[pr.j])), -GR::one());
        IMap r = reduce_full(std::move(s), basis, ord);
        if (r.empty())
            continue;
        auto g = to_sorted(r);
        make_monic(g);
        basis.push_back(std::move(g));
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[a] || !keep[b])
                continue;
            if (divides(lead_mono(basis[b]), lead_mono(basis[a])) &&
                !(lead_mono(basis[a]) == lead_mono(basis[b]) && b > a))
                keep[a] = false;
        }
    Basis minimal;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a])
            minimal.push_back(std::move(basis[a]));

    // tail-reduce everything against everything else
    Basis reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        Basis others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a)
                others.push_back(minimal[b]);
        IMap r = reduce_full(to_imap(minimal[a], ord), others, ord);
        if (r.empty())
            continue;
        auto g = to_sorted(r);
        make_monic(g);
        reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return ord.less(lead_mono(a), lead_mono(b));
    });
    return reduced;
}

}  // namespace

struct GroebnerAccess {
    static const std::vector<std::vector<std::pair<Monomial, GR>>>& basis(const PresentedRing& r) {
        return r.basis_;
    }
};

RingPtr PresentedRing::make(const Spec& spec, std::vector<LaurentPoly> relations,
                            std::vector<std::string> lead_block) {
    auto ring = std::shared_ptr<PresentedRing>(new PresentedRing());
    ring->spec_ = spec;
    for (auto& r : relations) {
        if (!same_spec(r.ring(), spec))
            throw Error("presented ring: relation in a foreign ring");
        if (!r.is_zero())
            ring->relations_.push_back(std::move(r));
    }
    for (const auto& name : lead_block)
        if (!spec->has(name))
            throw Error("presented ring: unknown lead-block variable '" + name + "'");
    ring->lead_block_ = std::move(lead_block);
    ring->build();
    return ring;
}

void PresentedRing::build() {
    // saturated affine model: one marker per invertible variable
    std::vector<RingSpec::Var> vars = spec_->vars();
    std::vector<std::pair<std::size_t, std::size_t>> marker_of;  // (var, marker)
    for (std::size_t k = 0; k < spec_->arity(); ++k) {
        if (spec_->invertible(k)) {
            marker_of.emplace_back(k, vars.size());
            vars.push_back({"~" + spec_->name(k), false});
        }
    }
    internal_ = RingSpec::make_unchecked(std::move(vars));

    std::vector<std::size_t> lead_idx;
    for (const auto& name : lead_block_)
        lead_idx.push_back(static_cast<std::size_t>(internal_->index_of(name)));
    auto order = std::make_shared<TermOrder>(
        lead_idx.empty() ? TermOrder::grevlex(internal_->arity())
                         : TermOrder::blocks({lead_idx}, internal_->arity()));
    order_ = order;

    std::vector<IMap> gens;
    for (const auto& r : relations_) {
        IMap p = imap(*order_);
        const LaurentPoly q = to_internal(r);
        for (const auto& [m, c] : q.terms())
            p.emplace(m, c);
        gens.push_back(std::move(p));
    }
    for (const auto& [var, marker] : marker_of) {
        IMap p = imap(*order_);
        Monomial m = Monomial::unit(internal_->arity());
        m.e[var] = 1;
        m.e[marker] = 1;
        p.emplace(std::move(m), GR::one());
        p.emplace(Monomial::unit(internal_->arity()), -GR::one());
        gens.push_back(std::move(p));
    }
    basis_ = buchberger(std::move(gens), *order_);
}

LaurentPoly PresentedRing::to_internal(const LaurentPoly& p) const {
    LaurentPoly out(internal_);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = Monomial::unit(internal_->arity());
        for (std::size_t k = 0; k < m.e.size(); ++k) {
            if (m.e[k] >= 0) {
                mm.e[k] = m.e[k];
            } else {
                const int marker = internal_->index_of("~" + spec_->name(k));
                mm.e[static_cast<std::size_t>(marker)] = -m.e[k];
            }
        }
        out.add_term(mm, c);
    }
    return out;
}

LaurentPoly PresentedRing::to_public(const LaurentPoly& p) const {
    LaurentPoly out(spec_);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = Monomial::unit(spec_->arity());
        for (std::size_t k = 0; k < spec_->arity(); ++k)
            mm.e[k] = m.e[k];
        for (std::size_t k = spec_->arity(); k < internal_->arity(); ++k) {
            if (m.e[k] == 0)
                continue;
            const std::string& marker = internal_->name(k);
            const int var = spec_->index_of(marker.substr(1));
            mm.e[static_cast<std::size_t>(var)] -= m.e[k];
        }
        out.add_term(mm, c);
    }
    return out;
}

LaurentPoly PresentedRing::normal_form(const LaurentPoly& p) const {
    if (!same_spec(p.ring(), spec_))
        throw Error("normal_form: polynomial from a foreign ring");
    IMap w = imap(*order_);
    const LaurentPoly internal = to_internal(p);
    for (const auto& [m, c] : internal.terms())
        w.emplace(m, c);
    const IMap r = reduce_full(std::move(w), basis_, *order_);
    LaurentPoly out(internal_);
    for (const auto& [m, c] : r)
        out.add_term(m, c);
    return to_public(out);
}

std::vector<LaurentPoly> PresentedRing::groebner_basis() const {
    std::vector<LaurentPoly> out;
    for (const auto& g : basis_) {
        LaurentPoly p(internal_);
        for (const auto& [m, c] : g)
            p.add_term(m, c);
        LaurentPoly pub = to_public(p);
        if (!pub.is_zero())
            out.push_back(std::move(pub));
    }
    return out;
}

bool PresentedRing::contains_one() const {
    return basis_.size() == 1 && lead_mono(basis_.front()).is_unit();
}

bool PresentedRing::radical_member(const LaurentPoly& p, const std::vector<LaurentPoly>& extra) const {
    const Spec spec2 = spec_->extended({{"~rad", false}});
    std::vector<LaurentPoly> rels;
    for (const auto& r : relations_)
        rels.push_back(r.transplanted(spec2));
    for (const auto& r : extra)
        rels.push_back(r.transplanted(spec2));
    // Rabinowitsch: 1 - tau*p
    rels.push_back(LaurentPoly::constant(spec2, GR::one()) -
                   LaurentPoly::variable(spec2, "~rad") * p.transplanted(spec2));
    auto ring2 = std::shared_ptr<PresentedRing>(new PresentedRing());
    ring2->spec_ = spec2;
    ring2->relations_ = std::move(rels);
    ring2->lead_block_ = lead_block_;
    ring2->build();
    return ring2->contains_one();
}

std::vector<LaurentPoly> PresentedRing::eliminate(const std::vector<std::string>& vars_to_remove) const {
    std::set<std::size_t> removed;
    std::vector<std::size_t> first_block;
    for (const auto& name : vars_to_remove) {
        const int idx = internal_->index_of(name);
        if (idx < 0)
            throw Error("eliminate: unknown variable '" + name + "'");
        first_block.push_back(static_cast<std::size_t>(idx));
        removed.insert(static_cast<std::size_t>(idx));
        const int marker = internal_->index_of("~" + name);
        if (marker >= 0) {
            first_block.push_back(static_cast<std::size_t>(marker));
            removed.insert(static_cast<std::size_t>(marker));
        }
    }
    if (first_block.empty())
        return groebner_basis();

    const TermOrder elim = TermOrder::blocks({first_block}, internal_->arity());
    std::vector<IMap> gens;
    for (const auto& g : basis_) {
        IMap p = imap(elim);
        for (const auto& [m, c] : g)
            p.emplace(m, c);
        gens.push_back(std::move(p));
    }
    const Basis gb = buchberger(std::move(gens), elim);

    std::vector<LaurentPoly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [m, c] : g)
            for (auto k : removed)
                if (m.e[k] != 0)
                    pure = false;
        if (!pure)
            continue;
        LaurentPoly p(internal_);
        for (const auto& [m, c] : g)
            p.add_term(m, c);
        LaurentPoly pub = to_public(p);
        if (!pub.is_zero())
            out.push_back(std::move(pub));
    }
    return out;
}

RingPtr PresentedRing::with_extra_relations(std::vector<LaurentPoly> extra) const {
    std::vector<LaurentPoly> rels = relations_;
    for (auto& r : extra)
        rels.push_back(std::move(r));
    return make(spec_, std::move(rels), lead_block_);
}

RingPtr PresentedRing::extended(std::vector<RingSpec::Var> extra_vars,
                                std::vector<LaurentPoly> extra_relations,
                                std::vector<std::string> lead_block) const {
    const Spec spec2 = spec_->extended(std::move(extra_vars));
    std::vector<LaurentPoly> rels;
    for (const auto& r : relations_)
        rels.push_back(r.transplanted(spec2));
    for (auto& r : extra_relations)
        rels.push_back(r.transplanted(spec2));
    return make(spec2, std::move(rels), lead_block.empty() ? lead_block_ : std::move(lead_block));
}

bool PresentedRing::is_nf_monomial(const Monomial& m) const {
    LaurentPoly p = LaurentPoly::term(spec_, m, GR::one());
    const LaurentPoly internal = to_internal(p);
    const Monomial& im = internal.terms().begin()->first;
    for (const auto& g : basis_)
        if (divides(lead_mono(g), im))
            return false;
    return true;
}

std::vector<Monomial> PresentedRing::nf_monomials_up_to(int degree) const {
    std::vector<Monomial> all = enumerate_monomials(spec_, degree, {}, true);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (is_nf_monomial(m))
            out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

std::vector<LaurentPoly> groebner_basis(const Spec& spec, const std::vector<LaurentPoly>& relations,
                                        std::vector<std::string> lead_block) {
    return PresentedRing::make(spec, relations, std::move(lead_block))->groebner_basis();
}

IrreducibilityCertificate irreducible_linear_in(const LaurentPoly& p, const std::string& var) {
    const auto window = p.exponent_window(var);
    if (window.first < 0 || window.second != 1)
        throw Error("irreducible_linear_in: polynomial is not linear in '" + var + "'");

    const Spec spec = p.ring();
    const int vidx = spec->index_of(var);
    LaurentPoly a(spec), b(spec);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        if (m.e[static_cast<std::size_t>(vidx)] == 1) {
            mm.e[static_cast<std::size_t>(vidx)] = 0;
            a.add_term(mm, c);
        } else {
            b.add_term(mm, c);
        }
    }
    if (a.is_zero())
        throw Error("irreducible_linear_in: zero coefficient at '" + var + "'");

    IrreducibilityCertificate cert;
    if (b.is_zero()) {
        if (a.is_unit_monomial()) {
            cert.verdict = IrreducibilityVerdict::Irreducible;
            cert.detail = "unit multiple of " + var;
        } else {
            cert.verdict = IrreducibilityVerdict::Reducible;
            cert.detail = "factor " + a.to_string() + " times " + var;
        }
        return cert;
    }

    // monomial content shared by a and b
    for (std::size_t k = 0; k < spec->arity(); ++k) {
        if (spec->invertible(k) || static_cast<int>(k) == vidx)
            continue;
        const std::string& name = spec->name(k);
        if (a.divisible_by(name, 1) && b.divisible_by(name, 1)) {
            cert.verdict = IrreducibilityVerdict::Reducible;
            cert.detail = "common factor " + name;
            return cert;
        }
    }
    if (a.term_count() == 1) {
        cert.verdict = IrreducibilityVerdict::Irreducible;
        cert.detail = "coefficient of " + var + " is a monomial and shares no variable with the rest";
        return cert;
    }
    // gcd certificate via the unit ideal: 1 in (a, b) forces coprimality
    const auto ring = PresentedRing::make(spec, {a, b});
    if (ring->contains_one()) {
        cert.verdict = IrreducibilityVerdict::Irreducible;
        cert.detail = "1 lies in the ideal generated by the two coefficients";
        return cert;
    }
    cert.verdict = IrreducibilityVerdict::Inconclusive;
    cert.detail = "no coprimality certificate found";
    return cert;
}

}  // namespace certify
