#include "certify/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace certify {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || s == "i")
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    return true;
}

}  // namespace

RingSpec::RingSpec(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (index_.count(vars_[k].name))
            throw Error("ring spec: duplicate variable '" + vars_[k].name + "'");
        index_[vars_[k].name] = k;
    }
}

Spec RingSpec::make(std::vector<Var> vars) {
    for (const auto& v : vars)
        if (!valid_identifier(v.name))
            throw Error("ring spec: invalid variable name '" + v.name + "'");
    return std::shared_ptr<const RingSpec>(new RingSpec(std::move(vars)));
}

Spec RingSpec::make_unchecked(std::vector<Var> vars) {
    return std::shared_ptr<const RingSpec>(new RingSpec(std::move(vars)));
}

int RingSpec::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

Spec RingSpec::extended(std::vector<Var> extra) const {
    std::vector<Var> vars = vars_;
    for (auto& v : extra)
        vars.push_back(std::move(v));
    return std::shared_ptr<const RingSpec>(new RingSpec(std::move(vars)));
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.vars_.size() != b.vars_.size())
        return false;
    for (std::size_t k = 0; k < a.vars_.size(); ++k)
        if (a.vars_[k].name != b.vars_[k].name || a.vars_[k].invertible != b.vars_[k].invertible)
            return false;
    return true;
}

bool same_spec(const Spec& a, const Spec& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

int Monomial::degree_abs() const {
    int d = 0;
    for (int x : e)
        d += std::abs(x);
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t k = 0; k < e.size(); ++k)
        r.e[k] += o.e[k];
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree_abs();
    const int db = b.degree_abs();
    if (da != db)
        return da < db;
    for (std::size_t k = a.e.size(); k-- > 0;) {
        if (a.e[k] != b.e[k])
            return a.e[k] > b.e[k];
    }
    return false;
}

LaurentPoly LaurentPoly::constant(Spec ring, const GR& c) {
    LaurentPoly p(std::move(ring));
    if (!c.is_zero())
        p.terms_[Monomial::unit(p.ring_->arity())] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(const Spec& ring, const std::string& name) {
    const int idx = ring->index_of(name);
    if (idx < 0)
        throw Error("unknown variable '" + name + "'");
    Monomial m = Monomial::unit(ring->arity());
    m.e[idx] = 1;
    return term(ring, std::move(m), GR::one());
}

LaurentPoly LaurentPoly::term(const Spec& ring, Monomial m, const GR& c) {
    LaurentPoly p(ring);
    if (m.e.size() != ring->arity())
        throw Error("monomial arity mismatch");
    p.add_term(m, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const GR& c) {
    if (c.is_zero())
        return;
    for (std::size_t k = 0; k < m.e.size(); ++k)
        if (m.e[k] < 0 && !ring_->invertible(k))
            throw Error("negative exponent on non-invertible variable '" + ring_->name(k) + "'");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GR LaurentPoly::constant_value() const {
    if (terms_.empty())
        return GR::zero();
    if (!is_constant())
        throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

GR LaurentPoly::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GR::zero() : it->second;
}

int LaurentPoly::degree_abs() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree_abs());
    return d;
}

int LaurentPoly::max_exponent(const std::string& var) const {
    return exponent_window(var).second;
}

int LaurentPoly::min_exponent(const std::string& var) const {
    return exponent_window(var).first;
}

std::pair<int, int> LaurentPoly::exponent_window(const std::string& var) const {
    const int idx = ring_->index_of(var);
    if (idx < 0)
        throw Error("unknown variable '" + var + "'");
    if (terms_.empty())
        return {0, 0};
    int lo = terms_.begin()->first.e[idx];
    int hi = lo;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m.e[idx]);
        hi = std::max(hi, m.e[idx]);
    }
    return {lo, hi};
}

int LaurentPoly::pole_order(const std::string& var) const {
    return std::max(0, -min_exponent(var));
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (!same_spec(ring_, o.ring_))
        throw Error("ring mismatch between polynomial operands");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GR& c) const {
    LaurentPoly r(ring_);
    if (c.is_zero())
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) {
        if (!is_unit_monomial())
            throw Error("negative power of a non-unit polynomial");
        return monomial_inverse().pow(-n);
    }
    LaurentPoly acc = constant(ring_, GR::one());
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1)
        return false;
    const Monomial& m = terms_.begin()->first;
    for (std::size_t k = 0; k < m.e.size(); ++k)
        if (m.e[k] != 0 && !ring_->invertible(k))
            return false;
    return true;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (!is_unit_monomial())
        throw Error("monomial_inverse of a non-unit polynomial");
    Monomial m = terms_.begin()->first;
    for (auto& x : m.e)
        x = -x;
    return term(ring_, std::move(m), terms_.begin()->second.inverse());
}

LaurentPoly LaurentPoly::shifted(const std::string& var, int k) const {
    const int idx = ring_->index_of(var);
    if (idx < 0)
        throw Error("unknown variable '" + var + "'");
    LaurentPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        mm.e[idx] += k;
        r.add_term(mm, c);
    }
    return r;
}

bool LaurentPoly::divisible_by(const std::string& var, int k) const {
    const int idx = ring_->index_of(var);
    if (idx < 0)
        throw Error("unknown variable '" + var + "'");
    for (const auto& [m, c] : terms_)
        if (m.e[idx] < k)
            return false;
    return true;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images) const {
    Spec target;
    for (const auto& [name, img] : images) {
        if (!target)
            target = img.ring();
        else if (!same_spec(target, img.ring()))
            throw Error("substitute: images live in different rings");
    }
    if (!target) {
        if (terms_.empty())
            throw Error("substitute: no images given");
        target = ring_;
    }

    LaurentPoly out(target);
    for (const auto& [m, c] : terms_) {
        LaurentPoly acc = constant(target, c);
        for (std::size_t k = 0; k < m.e.size(); ++k) {
            const int e = m.e[k];
            if (e == 0)
                continue;
            auto it = images.find(ring_->name(k));
            if (it == images.end())
                throw Error("substitute: missing image for '" + ring_->name(k) + "'");
            if (e > 0) {
                acc = acc * it->second.pow(e);
            } else {
                if (!it->second.is_unit_monomial())
                    throw Error("substitute: negative power of '" + ring_->name(k) +
                                "' needs an invertible monomial image");
                acc = acc * it->second.monomial_inverse().pow(-e);
            }
        }
        out += acc;
    }
    return out;
}

LaurentPoly LaurentPoly::transplanted(const Spec& target) const {
    if (ring_ == target)
        return *this;
    LaurentPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial mm = Monomial::unit(target->arity());
        for (std::size_t k = 0; k < m.e.size(); ++k) {
            if (m.e[k] == 0)
                continue;
            const int idx = target->index_of(ring_->name(k));
            if (idx < 0)
                throw Error("transplant: target ring lacks variable '" + ring_->name(k) + "'");
            mm.e[idx] = m.e[k];
        }
        out.add_term(mm, c);
    }
    return out;
}

LaurentPoly LaurentPoly::partial(const std::string& var) const {
    const int idx = ring_->index_of(var);
    if (idx < 0)
        throw Error("unknown variable '" + var + "'");
    LaurentPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        const int e = m.e[idx];
        if (e == 0)
            continue;
        Monomial mm = m;
        mm.e[idx] -= 1;
        r.add_term(mm, c * GR(e));
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return same_spec(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

namespace {

std::string monomial_body(const RingSpec& spec, const Monomial& m) {
    std::string s;
    for (std::size_t k = 0; k < m.e.size(); ++k) {
        if (m.e[k] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += spec.name(k);
        if (m.e[k] != 1)
            s += "^" + std::to_string(m.e[k]);
    }
    return s;
}

// Coefficient rendering split into (negate-for-printing, body) so the
// polynomial printer can emit " - " separators.
struct CoeffText {
    bool negative = false;
    std::string body;  // magnitude, without any '*mono' suffix logic
    bool needs_parens = false;
    bool is_one = false;
};

CoeffText coeff_text(const GR& c) {
    CoeffText out;
    if (c.is_real()) {
        out.negative = c.re() < 0;
        const Rat mag = out.negative ? Rat(-c.re()) : c.re();
        out.is_one = (mag == 1);
        out.body = rat_to_string(mag);
        return out;
    }
    if (c.is_imaginary()) {
        out.negative = c.im() < 0;
        const Rat mag = out.negative ? Rat(-c.im()) : c.im();
        out.body = (mag == 1) ? "i" : rat_to_string(mag) + "*i";
        return out;
    }
    out.body = c.to_string();
    out.needs_parens = true;
    return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const TermMap::value_type*> items;
    items.reserve(terms_.size());
    for (const auto& t : terms_)
        items.push_back(&t);
    std::sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
        return grevlex_less(b->first, a->first);  // descending
    });

    std::string s;
    bool first = true;
    for (const auto* t : items) {
        const CoeffText ct = coeff_text(t->second);
        const std::string mono = monomial_body(*ring_, t->first);
        std::string body;
        if (mono.empty()) {
            body = ct.needs_parens ? ct.body : ct.body;  // plain either way at top level
        } else if (ct.needs_parens) {
            body = "(" + ct.body + ")*" + mono;
        } else if (ct.is_one) {
            body = mono;
        } else {
            body = ct.body + "*" + mono;
        }
        if (first) {
            s += (ct.negative ? "-" : "") + body;
            first = false;
        } else {
            s += ct.negative ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

std::vector<Monomial> enumerate_monomials(const Spec& spec, int degree,
                                          const std::map<std::string, std::pair<int, int>>& windows,
                                          bool count_invertible) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::unit(spec->arity());
    // depth-first over variables, tracking remaining degree budget
    auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
        if (k == spec->arity()) {
            out.push_back(cur);
            return;
        }
        if (spec->invertible(k)) {
            int lo = -budget, hi = budget;
            auto it = windows.find(spec->name(k));
            if (it != windows.end()) {
                lo = it->second.first;
                hi = it->second.second;
            }
            if (count_invertible) {
                lo = std::max(lo, -budget);
                hi = std::min(hi, budget);
            }
            for (int e = lo; e <= hi; ++e) {
                cur.e[k] = e;
                self(self, k + 1, budget - (count_invertible ? std::abs(e) : 0));
            }
        } else {
            for (int e = 0; e <= budget; ++e) {
                cur.e[k] = e;
                self(self, k + 1, budget - e);
            }
        }
        cur.e[k] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace certify
