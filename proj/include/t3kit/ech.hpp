#pragma once

#include "t3kit/surgery.hpp"

#include <string>

namespace t3kit {

// Element of the degree-zero homology (Z/2)^3 in the ordered basis
// (x, y, thetaBar).
struct EchZeroClass {
    bool cx = false, cy = false, ctheta = false;

    EchZeroClass operator+(const EchZeroClass& rhs) const {
        return {cx != rhs.cx, cy != rhs.cy, ctheta != rhs.ctheta};
    }
    bool operator==(const EchZeroClass& rhs) const {
        return cx == rhs.cx && cy == rhs.cy && ctheta == rhs.ctheta;
    }
    bool operator!=(const EchZeroClass& rhs) const { return !(*this == rhs); }
};

// Which lattice generator is identified with which basis vector. The default
// (h(e1) <-> x, h(e2) <-> y) is a recorded convention; the swapped variant
// exists so the selftest can demonstrate that naturality pins the choice.
struct HConvention {
    bool swap_xy = false;
};

// h(v) = (v1 mod 2, v2 mod 2, 0): the generator made of the two hyperbolic
// orbits in classes v and -v, reduced to homology coordinates.
EchZeroClass h_class(I64 v1, I64 v2, const HConvention& convention = {});

// The class of the empty orbit set, the basis element thetaBar.
EchZeroClass contact_invariant();

// Push a class forward along a surgery contactomorphism (p must be 1):
// apply the mod-2 reduction of h2.
EchZeroClass act_contactomorphism(const TorusDiffeo& f, const EchZeroClass& c);

// The three components of the local Gromov invariant assembled from the two
// standard Luttinger surgeries and the base count.
struct GrTriple {
    bool a = false, b = false, gr_x = false;

    EchZeroClass as_class() const { return {a, b, gr_x}; }
};

GrTriple gr_from_surgeries(bool gr_x, bool gr110, bool gr101);

// "(1,0,1)"
std::string format_class_triple(const EchZeroClass& c);
// "x + thetaBar", "0"
std::string format_class_sum(const EchZeroClass& c);

} // namespace t3kit
