#include "certify/worlds.hpp"

#include "certify/parse.hpp"

namespace certify {

namespace {

std::map<std::string, LaurentPoly> images_from(const Spec& target,
                                               std::initializer_list<std::pair<const char*, const char*>> kv) {
    std::map<std::string, LaurentPoly> out;
    for (const auto& [name, text] : kv)
        out.emplace(name, parse_poly(text, target));
    return out;
}

LaurentPoly P(const Spec& s, const std::string& text) {
    return parse_poly(text, s);
}

}  // namespace

KrWorld make_kr_world() {
    KrWorld w;

    const Spec sA = RingSpec::make({{"x"}, {"y"}, {"z"}, {"t"}});
    const Spec sB = RingSpec::make({{"x"}, {"y"}, {"z"}, {"t", true}});
    const Spec sU = RingSpec::make({{"v"}, {"x"}, {"m", true}});
    const Spec sT = RingSpec::make({{"x"}, {"y"}, {"z"}, {"m", true}});

    w.A = PresentedRing::make(sA, {P(sA, "x + x^2*y + z^2 + t^3")});
    w.A2 = PresentedRing::make(sA, {P(sA, "x^2*z - y^2 - x + t^3")});
    w.A2w = w.A2->extended({{"w"}}, {});
    w.B1 = PresentedRing::make(sB, {P(sB, "x*z - y^2 + t^3")});
    w.B2 = PresentedRing::make(sB, {P(sB, "x^2*z - y^2 - x + t^3")});
    w.B1w = w.B1->extended({{"w"}}, {});
    w.B2w = w.B2->extended({{"w"}}, {});
    w.U = PresentedRing::make(sU, {});

    w.tX1 = PresentedRing::make(sT, {P(sT, "x*z - y^2 + m^6")}, {"y"});
    w.tX2 = PresentedRing::make(sT, {P(sT, "x^2*z - y^2 - x + m^6")}, {"y"});
    w.cover1 = DoubleCover::make(w.tX1, "m", "x", P(sT, "y - m^3"), P(sT, "z"),
                                 "Y = Q(i)[x, t^(+-1)] via t = m^2");
    w.cover2 = DoubleCover::make(w.tX2, "m", "x", P(sT, "y - m^3"), P(sT, "x*z - 1"),
                                 "Y = Q(i)[x, t^(+-1)] via t = m^2");

    const Spec sTloc = RingSpec::make({{"x", true}, {"y"}, {"z"}, {"m", true}, {"w"}});
    w.tX1wloc = PresentedRing::make(sTloc, {P(sTloc, "x*z - y^2 + m^6")}, {"y"});
    w.tX2wloc = PresentedRing::make(sTloc, {P(sTloc, "x^2*z - y^2 - x + m^6")}, {"y"});

    w.phi1 = make_morphism(w.B1, w.U,
                           images_from(sU, {{"x", "x"},
                                            {"y", "m^3 + x*v"},
                                            {"z", "2*m^3*v + x*v^2"},
                                            {"t", "m^2"}}),
                           {}, "phi1");
    w.phi2 = make_morphism(w.B2, w.U,
                           images_from(sU, {{"x", "x"},
                                            {"y", "m^3 - 1/2*m^-3*x + x^2*v"},
                                            {"z", "1/4*m^-6 + 2*m^3*v - m^-3*x*v + x^2*v^2"},
                                            {"t", "m^2"}}),
                           {}, "phi2");

    w.act1 = make_derivation(w.B1, images_from(sB, {{"y", "x"}, {"z", "2*y"}}), "x@y+2y@z");
    w.act2 = make_derivation(w.B2, images_from(sB, {{"y", "x^2"}, {"z", "2*y"}}), "x^2@y+2y@z");
    w.dv = make_derivation(w.U, images_from(sU, {{"v", "1"}}), "@v");
    w.del1 = make_derivation(w.A, images_from(sA, {{"z", "x^2"}, {"y", "-2*z"}}), "x^2@z-2z@y");
    w.del2 = make_derivation(w.A, images_from(sA, {{"t", "x^2"}, {"y", "-3*t^2"}}), "x^2@t-3t^2@y");
    w.d_cyl = make_derivation(w.B1w, images_from(w.B1w->spec(), {{"x", "2*y"}, {"y", "z"}}),
                              "2y@x+z@y");

    w.c1_on_cover2 = Cocycle::make(w.cover2, P(sT, "2*m^3"), 1);
    w.c2_on_cover1 = Cocycle::make(w.cover1, P(sT, "-m^-3*x + 2*m^3"), 2);
    w.c1_value = w.c1_on_cover2.value;
    w.c2_value = w.c2_on_cover1.value;

    w.side1 = ThetaSide{w.B1w,    w.cover1, w.tX1wloc, w.phi1, P(sTloc, "(y - m^3)*x^-1"),
                        "m",      "x",      "t",       "v",    "w"};
    w.side2 = ThetaSide{w.B2w,    w.cover2, w.tX2wloc, w.phi2,
                        P(sTloc, "(y - m^3 + 1/2*m^-3*x)*x^-2"),
                        "m",      "x",      "t",       "v",    "w"};
    return w;
}

DanWorld make_dan_world() {
    DanWorld w;

    const Spec sS = RingSpec::make({{"x"}, {"y"}, {"z"}});
    const Spec sU = RingSpec::make({{"v"}, {"x"}, {"e"}});
    const Spec sT = RingSpec::make({{"x"}, {"y"}, {"z"}, {"e"}});

    w.S1 = PresentedRing::make(sS, {P(sS, "x*z - y^2 + 1")});
    w.S2 = PresentedRing::make(sS, {P(sS, "x^2*z - y^2 + 1")});
    w.S1w = w.S1->extended({{"w"}}, {});
    w.S2w = w.S2->extended({{"w"}}, {});
    w.U = PresentedRing::make(sU, {P(sU, "e^2 - 1")}, {"e"});

    w.tS1 = PresentedRing::make(sT, {P(sT, "x*z - y^2 + 1"), P(sT, "e^2 - 1")}, {"y", "e"});
    w.tS2 = PresentedRing::make(sT, {P(sT, "x^2*z - y^2 + 1"), P(sT, "e^2 - 1")}, {"y", "e"});
    w.cover1 = DoubleCover::make(w.tS1, "e", "x", P(sT, "y - e"), P(sT, "z"),
                                 "doubled line over Q(i)[x], charts swapped by e -> -e");
    w.cover2 = DoubleCover::make(w.tS2, "e", "x", P(sT, "y - e"), P(sT, "x*z"),
                                 "doubled line over Q(i)[x], charts swapped by e -> -e");

    const Spec sTloc = RingSpec::make({{"x", true}, {"y"}, {"z"}, {"e"}, {"w"}});
    w.tS1wloc =
        PresentedRing::make(sTloc, {P(sTloc, "x*z - y^2 + 1"), P(sTloc, "e^2 - 1")}, {"y", "e"});
    w.tS2wloc =
        PresentedRing::make(sTloc, {P(sTloc, "x^2*z - y^2 + 1"), P(sTloc, "e^2 - 1")}, {"y", "e"});

    w.phi1 = make_morphism(w.S1, w.U,
                           images_from(sU, {{"x", "x"}, {"y", "e + x*v"}, {"z", "2*e*v + x*v^2"}}),
                           {}, "phi1");
    w.phi2 = make_morphism(
        w.S2, w.U, images_from(sU, {{"x", "x"}, {"y", "e + x^2*v"}, {"z", "2*e*v + x^2*v^2"}}), {},
        "phi2");

    w.act1 = make_derivation(w.S1, images_from(sS, {{"y", "x"}, {"z", "2*y"}}), "x@y+2y@z");
    w.act2 = make_derivation(w.S2, images_from(sS, {{"y", "x^2"}, {"z", "2*y"}}), "x^2@y+2y@z");
    w.dv = make_derivation(w.U, images_from(sU, {{"v", "1"}}), "@v");
    w.d_cyl = make_derivation(w.S1w, images_from(w.S1w->spec(), {{"y", "z"}, {"x", "2*y"}}),
                              "z@y+2y@x");

    w.c1_on_cover2 = Cocycle::make(w.cover2, P(sT, "2*e"), 1);
    w.c2_on_cover1 = Cocycle::make(w.cover1, P(sT, "2*e"), 2);
    w.c1_value = w.c1_on_cover2.value;
    w.c2_value = w.c2_on_cover1.value;

    w.side1 = ThetaSide{w.S1w, w.cover1, w.tS1wloc, w.phi1, P(sTloc, "(y - e)*x^-1"),
                        "e",   "x",      "",        "v",    "w"};
    w.side2 = ThetaSide{w.S2w, w.cover2, w.tS2wloc, w.phi2, P(sTloc, "(y - e)*x^-2"),
                        "e",   "x",      "",        "v",    "w"};
    return w;
}

const KrWorld& kr_world() {
    static const KrWorld w = make_kr_world();
    return w;
}

const DanWorld& dan_world() {
    static const DanWorld w = make_dan_world();
    return w;
}

const RemarksWorld& remarks_world() {
    static const RemarksWorld w = make_remarks_world();
    return w;
}

RingPtr registry_ring(const std::string& name) {
    if (name == "ambient4") {
        static const RingPtr r = PresentedRing::make(RingSpec::make({{"x"}, {"y"}, {"z"}, {"t"}}), {});
        return r;
    }
    const auto& kr = kr_world();
    if (name == "A") return kr.A;
    if (name == "A2") return kr.A2;
    if (name == "A2w") return kr.A2w;
    if (name == "B1") return kr.B1;
    if (name == "B2") return kr.B2;
    if (name == "B1w") return kr.B1w;
    if (name == "B2w") return kr.B2w;
    if (name == "U") return kr.U;
    if (name == "tX1") return kr.tX1;
    if (name == "tX2") return kr.tX2;
    const auto& dw = dan_world();
    if (name == "S1") return dw.S1;
    if (name == "S2") return dw.S2;
    if (name == "S1w") return dw.S1w;
    if (name == "S2w") return dw.S2w;
    if (name == "UD") return dw.U;
    if (name == "tS1") return dw.tS1;
    if (name == "tS2") return dw.tS2;
    if (name == "Z") return remarks_world().Z;
    throw Error("unknown ring '" + name + "' in certificate");
}

CoverPtr registry_cover(const std::string& name) {
    if (name == "cover1") return kr_world().cover1;
    if (name == "cover2") return kr_world().cover2;
    if (name == "dcover1") return dan_world().cover1;
    if (name == "dcover2") return dan_world().cover2;
    if (name == "zcover") return remarks_world().zcover;
    throw Error("unknown cover '" + name + "' in certificate");
}

RemarksWorld make_remarks_world() {
    RemarksWorld w;
    const Spec sZ = RingSpec::make({{"x"}, {"m", true}});
    w.Z = PresentedRing::make(sZ, {});
    w.zcover = DoubleCover::make(w.Z, "m", "x", std::nullopt, std::nullopt,
                                 "Y = Q(i)[x, t^(+-1)] via t = m^2");
    w.c1 = Cocycle::make(w.zcover, P(sZ, "2*m^3"), 1);
    w.c2 = Cocycle::make(w.zcover, P(sZ, "-m^-3*x + 2*m^3"), 2);

    const Spec sB = RingSpec::make({{"x"}, {"y"}, {"z"}, {"t", true}});
    w.B1 = PresentedRing::make(sB, {P(sB, "x*z - y^2 + t^3")});
    w.B2 = PresentedRing::make(sB, {P(sB, "x^2*z - y^2 - x + t^3")});
    w.b1_act = make_derivation(w.B1, images_from(sB, {{"y", "x"}, {"z", "2*y"}}), "x@y+2y@z");
    w.b1_act_sym = make_derivation(w.B1, images_from(sB, {{"y", "z"}, {"x", "2*y"}}), "z@y+2y@x");
    w.b2_act = make_derivation(w.B2, images_from(sB, {{"y", "x^2"}, {"z", "2*y"}}), "x^2@y+2y@z");
    return w;
}

}  // namespace certify
