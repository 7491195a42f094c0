#pragma once

#include "certify/cover.hpp"

namespace certify {

/// One side of a cylinder comparison: an affine ring with a set-theoretically
/// free additive action, its chart trivialization, the double cover it lives
/// on, and the fiber coordinate of the trivialization over branch_var != 0.
struct ThetaSide {
    RingPtr cylinder;        // coordinate ring of X_i x A^1
    CoverPtr cover;          // double cover of X_i (no cylinder variable)
    RingPtr cover_cyl_loc;   // cover ring with w adjoined and branch var inverted
    RingMorphism phi;        // trivialization pullback, ring(X_i) -> U
    LaurentPoly fiber_coord; // bundle coordinate as an element of cover_cyl_loc
    std::string unit_var;    // sign-twisted cover variable ("m" or "e")
    std::string branch_var;  // "x"
    std::string time_var;    // invertible parameter eliminated on the cover ("t"), may be empty
    std::string fiber_var;   // chart coordinate in U ("v")
    std::string cyl_var;     // cylinder coordinate ("w")
};

/// All rings and maps of the cubic-threefold cylinder construction, over the
/// rewritten equation x^2 z = y^2 + x - t^3.
struct KrWorld {
    RingPtr A;        // Q(i)[x,y,z,t] / (x + x^2 y + z^2 + t^3)
    RingPtr A2;       // Q(i)[x,y,z,t] / (x^2 z - y^2 - x + t^3)
    RingPtr A2w;      // A2 with w adjoined
    RingPtr B1, B2;   // t inverted
    RingPtr B1w, B2w;
    RingPtr U;        // Q(i)[v][x, m^{+-1}]
    RingPtr tX1, tX2; // covers with t = m^2 eliminated
    CoverPtr cover1, cover2;
    RingPtr tX1wloc, tX2wloc;

    RingMorphism phi1, phi2;  // B_i -> U
    Derivation act1, act2;    // x d/dy + 2y d/dz on B1, x^2 d/dy + 2y d/dz on B2
    Derivation dv;            // d/dv on U
    Derivation del1, del2;    // x^2 d/dz - 2z d/dy and x^2 d/dt - 3t^2 d/dy on A
    Derivation d_cyl;         // 2y d/dx + z d/dy on B1[w]

    Cocycle c1_on_cover2;     // {0, 2 m^3 x^-1} pulled to the cover of X_2
    Cocycle c2_on_cover1;     // {0, -m^-3 x^-1 + 2 m^3 x^-2} on the cover of X_1
    Fraction c1_value, c2_value;

    ThetaSide side1, side2;
};

/// The warm-up surfaces xz = y^2 - 1 and x^2 z = y^2 - 1 with the untwisted
/// two-chart cover, modeled as a degenerate double cover via e^2 = 1.
struct DanWorld {
    RingPtr S1, S2;
    RingPtr S1w, S2w;
    RingPtr U;          // Q(i)[v,x,e] / (e^2 - 1)
    RingPtr tS1, tS2;
    CoverPtr cover1, cover2;
    RingPtr tS1wloc, tS2wloc;

    RingMorphism phi1, phi2;
    Derivation act1, act2;
    Derivation dv;
    Derivation d_cyl;   // z d/dy + 2y d/dx on S1[w]

    Cocycle c1_on_cover2;  // 2 e x^-1
    Cocycle c2_on_cover1;  // 2 e x^-2
    Fraction c1_value, c2_value;

    ThetaSide side1, side2;
};

/// Base cover data for the cocycle-class comparison: Z = Q(i)[x, m^{+-1}]
/// with the sign involution, no relations.
struct RemarksWorld {
    RingPtr Z;
    CoverPtr zcover;
    Cocycle c1, c2;
    RingPtr B1, B2;
    Derivation b1_act, b1_act_sym;  // the two transversal actions on B1
    Derivation b2_act;
};

KrWorld make_kr_world();
DanWorld make_dan_world();
RemarksWorld make_remarks_world();

/// Shared lazily-built instances (the pipelines and certificate replay
/// resolve rings and covers against these by name).
const KrWorld& kr_world();
const DanWorld& dan_world();
const RemarksWorld& remarks_world();

RingPtr registry_ring(const std::string& name);
CoverPtr registry_cover(const std::string& name);

}  // namespace certify
