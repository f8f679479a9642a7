#pragma once

#include "t3kit/trigpoly.hpp"

#include <vector>

namespace t3kit {

struct PeriodicRootOptions {
    int grid_size = 4096;
    double theta_tol = 1e-12; // bracket width target for bisection
    int max_iter = 200;
};

// All roots of a 2*pi-periodic trig polynomial in [0, 2*pi).
//
// Strategy: tabulate signs on a uniform grid; bisect every sign change;
// accept grid points where |g| is at noise level directly (polished by a
// Newton step when the slope is usable, so roots of any multiplicity that
// happen to sit on the grid are kept). Grid intervals where |g| dips to the
// curvature floor without changing sign are checked for an even-multiplicity
// zero; if one is present it cannot be certified by bracketing and a
// RootFinderError is thrown (message can be extended by the caller with
// context). Identically-zero input is rejected.
std::vector<double> periodic_roots(const TrigPoly& g, const PeriodicRootOptions& options = {});

} // namespace t3kit
