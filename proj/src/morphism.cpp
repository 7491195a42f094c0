#include "certify/morphism.hpp"

#include <sstream>

namespace certify {

std::string CheckResult::joined() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < failures.size(); ++k)
        os << (k ? "; " : "") << failures[k];
    return os.str();
}

LaurentPoly RingMorphism::image_of(const std::string& var) const {
    auto it = images.find(var);
    if (it == images.end())
        throw Error("morphism '" + label + "': no image for '" + var + "'");
    return it->second;
}

LaurentPoly RingMorphism::apply(const LaurentPoly& p) const {
    if (!same_spec(p.ring(), source->spec()))
        throw Error("morphism '" + label + "': argument from a foreign ring");
    LaurentPoly out(target->spec());
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly acc = LaurentPoly::constant(target->spec(), c);
        for (std::size_t k = 0; k < m.e.size(); ++k) {
            const int e = m.e[k];
            if (e == 0)
                continue;
            const std::string& name = p.ring()->name(k);
            if (e > 0) {
                acc = acc * image_of(name).pow(e);
            } else {
                auto w = unit_witnesses.find(name);
                if (w != unit_witnesses.end()) {
                    acc = acc * w->second.pow(-e);
                } else {
                    const LaurentPoly img = image_of(name);
                    if (!img.is_unit_monomial())
                        throw Error("morphism '" + label + "': negative power of '" + name +
                                    "' without a unit witness");
                    acc = acc * img.monomial_inverse().pow(-e);
                }
            }
        }
        out += acc;
    }
    return target->normal_form(out);
}

RingMorphism make_morphism(RingPtr source, RingPtr target, std::map<std::string, LaurentPoly> images,
                           std::map<std::string, LaurentPoly> unit_witnesses, std::string label) {
    RingMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.label = std::move(label);
    for (auto& [name, img] : images) {
        if (!m.source->spec()->has(name))
            throw Error("morphism '" + m.label + "': image for unknown variable '" + name + "'");
        m.images.emplace(name, img.transplanted(m.target->spec()));
    }
    for (std::size_t k = 0; k < m.source->spec()->arity(); ++k)
        if (!m.images.count(m.source->spec()->name(k)))
            throw Error("morphism '" + m.label + "': missing image for '" + m.source->spec()->name(k) + "'");
    for (auto& [name, w] : unit_witnesses)
        m.unit_witnesses.emplace(name, w.transplanted(m.target->spec()));
    // derive witnesses for monomial images of invertible variables
    for (std::size_t k = 0; k < m.source->spec()->arity(); ++k) {
        if (!m.source->spec()->invertible(k))
            continue;
        const std::string& name = m.source->spec()->name(k);
        if (m.unit_witnesses.count(name))
            continue;
        const LaurentPoly& img = m.images.at(name);
        if (img.is_unit_monomial())
            m.unit_witnesses.emplace(name, img.monomial_inverse());
    }
    return m;
}

RingMorphism identity_morphism(const RingPtr& ring) {
    std::map<std::string, LaurentPoly> images;
    for (std::size_t k = 0; k < ring->spec()->arity(); ++k) {
        const std::string& name = ring->spec()->name(k);
        images.emplace(name, LaurentPoly::variable(ring->spec(), name));
    }
    return make_morphism(ring, ring, std::move(images), {}, "id");
}

CheckResult check_morphism(const RingMorphism& m) {
    CheckResult res;
    for (const auto& rel : m.source->relations()) {
        const LaurentPoly img = m.apply(rel);
        if (!img.is_zero())
            res.fail("relation " + rel.to_string() + " maps to " + img.to_string());
    }
    for (std::size_t k = 0; k < m.source->spec()->arity(); ++k) {
        if (!m.source->spec()->invertible(k))
            continue;
        const std::string& name = m.source->spec()->name(k);
        auto w = m.unit_witnesses.find(name);
        if (w == m.unit_witnesses.end()) {
            res.fail("no unit witness for invertible variable '" + name + "'");
            continue;
        }
        const LaurentPoly prod = m.images.at(name) * w->second;
        if (!m.target->equal(prod, LaurentPoly::constant(m.target->spec(), GR::one())))
            res.fail("unit witness for '" + name + "' fails: image*witness = " +
                     m.target->normal_form(prod).to_string());
    }
    return res;
}

RingMorphism compose(const RingMorphism& outer, const RingMorphism& inner) {
    if (!same_spec(inner.target->spec(), outer.source->spec()))
        throw Error("compose: inner target does not match outer source");
    std::map<std::string, LaurentPoly> images;
    std::map<std::string, LaurentPoly> witnesses;
    for (const auto& [name, img] : inner.images)
        images.emplace(name, outer.apply(img.transplanted(outer.source->spec())));
    for (const auto& [name, w] : inner.unit_witnesses)
        witnesses.emplace(name, outer.apply(w.transplanted(outer.source->spec())));
    return make_morphism(inner.source, outer.target, std::move(images), std::move(witnesses),
                         outer.label + "∘" + inner.label);
}

CheckResult check_inverse_pair(const RingMorphism& m, const RingMorphism& n) {
    CheckResult res;
    if (!same_spec(m.target->spec(), n.source->spec()) || !same_spec(n.target->spec(), m.source->spec())) {
        res.fail("sources and targets do not pair up");
        return res;
    }
    const RingMorphism nm = compose(n, m);
    for (std::size_t k = 0; k < m.source->spec()->arity(); ++k) {
        const std::string& name = m.source->spec()->name(k);
        const LaurentPoly got = nm.images.at(name);
        const LaurentPoly want = LaurentPoly::variable(m.source->spec(), name);
        if (!m.source->equal(got, want))
            res.fail("n∘m moves generator " + name + " to " + got.to_string());
    }
    const RingMorphism mn = compose(m, n);
    for (std::size_t k = 0; k < n.source->spec()->arity(); ++k) {
        const std::string& name = n.source->spec()->name(k);
        const LaurentPoly got = mn.images.at(name);
        const LaurentPoly want = LaurentPoly::variable(n.source->spec(), name);
        if (!n.source->equal(got, want))
            res.fail("m∘n moves generator " + name + " to " + got.to_string());
    }
    return res;
}

}  // namespace certify
