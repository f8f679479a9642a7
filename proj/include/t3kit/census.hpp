#pragma once

#include "t3kit/toric.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace t3kit {

// Primitive homology class m*[x-circle] + n*[y-circle] of a closed Reeb
// trajectory sitting in a fiber torus.
struct OrbitClass {
    long long m = 0;
    long long n = 0;

    bool operator==(const OrbitClass& rhs) const { return m == rhs.m && n == rhs.n; }
    bool operator!=(const OrbitClass& rhs) const { return !(*this == rhs); }
    bool operator<(const OrbitClass& rhs) const {
        if (m != rhs.m) return m < rhs.m;
        return n < rhs.n;
    }
};

// A fiber torus t = theta0 foliated by closed orbits in class cls. theta0
// solves m*a1'(t) + n*a2'(t) = 0 with (a2', -a1') pointing along (m, n).
// action = 2*pi*(m*a1 + n*a2)(theta0); rotation_sign is the sign of
// a' x a'' there (zero means the splitting hypothesis fails on this torus).
struct MorseBottFamily {
    OrbitClass cls;
    double theta0 = 0.0;
    double action = 0.0;
    double rotation = 0.0;
    int rotation_sign = 0;
};

enum class OrbitKind { PositiveHyperbolic, Elliptic };

// One of the two nondegenerate orbits a family splits into under the
// standard perturbation. l_positive is meaningful for the elliptic one:
// true iff its rotation number lies on the positive side for every large
// period bound, which happens exactly when rotation_sign = +1.
struct PerturbedOrbit {
    OrbitKind kind = OrbitKind::PositiveHyperbolic;
    OrbitClass cls;
    double limit_action = 0.0;
    bool l_positive = false;
    std::size_t family_index = 0;
};

struct OrbitCensus {
    double cutoff = 0.0;
    std::vector<MorseBottFamily> families;
    std::vector<PerturbedOrbit> orbits;
    bool bourgeois_admissible = false;
    // The perturbation scheme is taken to be flat near the spawning tori;
    // this is recorded as an assumption, never computed.
    bool l_flat_asserted = true;
};

// Generator of the degree-zero part of the orbit complex: either the empty
// set or an unordered pair {orbit in class v, orbit in class -v} of positive
// hyperbolic orbits. pair_class stores the representative with m > 0, or
// m = 0 and n > 0.
struct DegreeZeroGenerator {
    bool empty_set = false;
    OrbitClass pair_class;
    double total_action = 0.0;
};

// Closed trajectory detected by direct integration of the Reeb flow:
// displacement 2*pi*(m, n) reached at time `period`.
struct FlowClosure {
    long long m = 0;
    long long n = 0;
    OrbitClass primitive;
    long long multiplicity = 1;
    double period = 0.0;
};

// Every Morse-Bott family with action strictly below the cutoff, sorted by
// (action, m, n, theta0). Enumeration radius comes from the bound
// |(m,n)| <= cutoff * max|a'| / (2*pi * min(a x a')), so nothing under the
// cutoff is missed.
std::vector<MorseBottFamily> find_families(const ToricContactForm& form, double cutoff);

// Splits every family into its hyperbolic/elliptic pair. Throws
// HypothesisViolationError if any family has rotation_sign = 0.
OrbitCensus bourgeois_census(const ToricContactForm& form, double cutoff);

// Degree-zero generators of the census, sorted by total action with the
// empty set first. Requires a Bourgeois-admissible census.
std::vector<DegreeZeroGenerator> degree_zero_generators(const OrbitCensus& census);

// Independent check on the census: integrate the flow from (0, 0, start)
// and report every lattice closure with period below `horizon`.
std::vector<FlowClosure> numeric_flow_oracle(const ToricContactForm& form, double start_theta,
                                             double horizon);

} // namespace t3kit
