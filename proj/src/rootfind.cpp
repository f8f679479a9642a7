#include "t3kit/rootfind.hpp"

#include "t3kit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace t3kit {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

} // namespace

std::vector<double> periodic_roots(const TrigPoly& g, const PeriodicRootOptions& options) {
    if (g.sup_bound() == Rat(0))
        throw ValidationError("root search on the identically zero function");

    const int n = options.grid_size;
    const double h = kTwoPi / static_cast<double>(n);
    const TrigPolyEval ge = compiled(g);
    const TrigPoly gd = g.derivative();
    const TrigPolyEval gde = compiled(gd);
    const std::vector<double> vals = sample_uniform(g, n);
    const double scale = std::max(1.0, to_double(g.sup_bound()));
    const double zero_tol = 1e-13 * scale;

    auto sign_at = [&](int i) {
        double v = vals[static_cast<std::size_t>(((i % n) + n) % n)];
        if (v > zero_tol) return 1;
        if (v < -zero_tol) return -1;
        return 0;
    };
    auto val_at = [&](int i) {
        return vals[static_cast<std::size_t>(((i % n) + n) % n)];
    };

    // Two grid points at noise level next to each other means roots we cannot
    // separate at this resolution.
    for (int i = 0; i < n; ++i) {
        if (sign_at(i) == 0 && sign_at(i + 1) == 0) {
            std::ostringstream msg;
            msg << "cannot separate roots near t in [" << h * i << ", " << h * (i + 1)
                << "]: |g| at noise level on adjacent grid points";
            throw RootFinderError(msg.str());
        }
    }

    std::vector<double> roots;

    for (int i = 0; i < n; ++i) {
        int s = sign_at(i);
        if (s == 0) {
            // Root essentially on the grid; keep it whatever its multiplicity,
            // polishing with Newton when the slope is informative.
            double t = h * i;
            for (int it = 0; it < 3; ++it) {
                double d = gde(t);
                if (std::fabs(d) < 1e-6 * scale) break;
                double step = ge(t) / d;
                if (std::fabs(step) > h) break;
                t -= step;
            }
            roots.push_back(wrap_angle(t));
            continue;
        }
        int s2 = sign_at(i + 1);
        if (s2 != 0 && s2 != s) {
            double lo = h * i, hi = h * (i + 1);
            double flo = val_at(i);
            int iter = 0;
            while (hi - lo > options.theta_tol && iter++ < options.max_iter) {
                double mid = 0.5 * (lo + hi);
                double fm = ge(mid);
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(wrap_angle(0.5 * (lo + hi)));
        }
    }

    // Sign-constant dips down to the curvature floor: a possible
    // even-multiplicity zero that bracketing can never certify.
    const double gdd_bound = to_double(gd.derivative().sup_bound());
    const double dip_tol = std::max(gdd_bound * h * h, 1e-12 * scale);
    for (int i = 0; i < n; ++i) {
        int s = sign_at(i);
        if (s == 0 || sign_at(i - 1) != s || sign_at(i + 1) != s) continue;
        double v = std::fabs(val_at(i));
        if (v > dip_tol || v > std::fabs(val_at(i - 1)) || v > std::fabs(val_at(i + 1)))
            continue;
        // Locate the interior critical point and test the value there.
        double lo = h * (i - 1), hi = h * (i + 1);
        double dlo = gde(lo), dhi = gde(hi);
        double tc = h * i;
        if ((dlo < 0.0 && dhi > 0.0) || (dlo > 0.0 && dhi < 0.0)) {
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double dm = gde(mid);
                if ((dm > 0.0) == (dlo > 0.0)) {
                    lo = mid;
                    dlo = dm;
                } else {
                    hi = mid;
                }
            }
            tc = 0.5 * (lo + hi);
        }
        if (std::fabs(ge(tc)) <= 1e-10 * scale) {
            std::ostringstream msg;
            msg << "non-transverse root near t = " << tc << " (|g| = " << std::fabs(ge(tc))
                << ", no sign change in [" << h * (i - 1) << ", " << h * (i + 1)
                << "]): bracketing cannot certify an even-multiplicity zero";
            throw RootFinderError(msg.str());
        }
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> unique;
    for (double t : roots) {
        if (!unique.empty() && t - unique.back() < 1e-9) continue;
        unique.push_back(t);
    }
    if (unique.size() > 1 && unique.back() - unique.front() > kTwoPi - 1e-9)
        unique.pop_back(); // same root seen across the period seam
    return unique;
}

} // namespace t3kit
