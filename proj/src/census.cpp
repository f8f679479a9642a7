#include "t3kit/census.hpp"

#include "t3kit/rootfind.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace t3kit {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

bool family_order(const MorseBottFamily& a, const MorseBottFamily& b) {
    if (a.action != b.action) return a.action < b.action;
    if (a.cls.m != b.cls.m) return a.cls.m < b.cls.m;
    if (a.cls.n != b.cls.n) return a.cls.n < b.cls.n;
    return a.theta0 < b.theta0;
}

bool canonical_rep(const OrbitClass& c) {
    return c.m > 0 || (c.m == 0 && c.n > 0);
}

} // namespace

std::vector<MorseBottFamily> find_families(const ToricContactForm& form, double cutoff) {
    const ValidationReport& rep = form.validation();
    if (!rep.ok) {
        std::ostringstream msg;
        msg << "form failed contact validation (min a x a' = " << rep.min_cross
            << ", margin " << rep.lipschitz_margin << ")";
        throw ValidationError(msg.str());
    }
    if (!(cutoff > 0.0)) throw ValidationError("action cutoff must be positive");
    std::vector<MorseBottFamily> families;

    // Action of a class-(m,n) family is 2*pi*(a x a')*|(m,n)|/|a'| at its
    // root, so classes beyond this radius cannot beat the cutoff.
    const double cross_lower = rep.min_cross - rep.lipschitz_margin;
    const double aprime_max =
        std::hypot(to_double(form.a1_deriv().sup_bound()), to_double(form.a2_deriv().sup_bound()));
    const double radius = cutoff * aprime_max / (kTwoPi * cross_lower);
    const long long reach = static_cast<long long>(std::floor(radius)) + 1;

    PeriodicRootOptions opt;
    opt.grid_size = form.grid_size();

    const TrigPolyEval a1e = compiled(form.a1());
    const TrigPolyEval a2e = compiled(form.a2());
    const TrigPolyEval a1de = compiled(form.a1_deriv());
    const TrigPolyEval a2de = compiled(form.a2_deriv());
    const TrigPolyEval crosse = compiled(form.cross());
    const TrigPolyEval twiste = compiled(form.twist());

    // Scan one representative of each +/- class pair; the root's tangent
    // direction decides which of the two classes it belongs to.
    for (long long m = 0; m <= reach; ++m) {
        for (long long n = -reach; n <= reach; ++n) {
            if (!canonical_rep({m, n})) continue;
            if (static_cast<double>(m) * m + static_cast<double>(n) * n > radius * radius)
                continue;
            if (std::gcd(m, std::llabs(n)) != 1) continue;

            TrigPoly g = form.a1_deriv().scaled(rat(m)) + form.a2_deriv().scaled(rat(n));
            std::vector<double> roots;
            try {
                roots = periodic_roots(g, opt);
            } catch (const RootFinderError& err) {
                std::ostringstream msg;
                msg << "class (" << m << ", " << n << "): " << err.what();
                throw RootFinderError(msg.str());
            }

            for (double t0 : roots) {
                double dot = static_cast<double>(m) * a2de(t0) - static_cast<double>(n) * a1de(t0);
                if (dot == 0.0) {
                    std::ostringstream msg;
                    msg << "class (" << m << ", " << n << "): a' vanishes at root t = " << t0;
                    throw RootFinderError(msg.str());
                }
                MorseBottFamily fam;
                fam.cls = dot > 0.0 ? OrbitClass{m, n} : OrbitClass{-m, -n};
                fam.theta0 = t0;
                fam.action =
                    kTwoPi * (static_cast<double>(fam.cls.m) * a1e(t0) +
                              static_cast<double>(fam.cls.n) * a2e(t0));
                if (!(fam.action > 0.0)) {
                    std::ostringstream msg;
                    msg << "class (" << fam.cls.m << ", " << fam.cls.n
                        << "): nonpositive action " << fam.action << " at root t = " << t0;
                    throw MathError(msg.str());
                }
                double cr = crosse(t0);
                fam.rotation = twiste(t0) / (cr * cr);
                fam.rotation_sign = rotation_sign_at(form, t0);
                if (fam.action < cutoff) families.push_back(fam);
            }
        }
    }
    std::sort(families.begin(), families.end(), family_order);
    return families;
}

OrbitCensus bourgeois_census(const ToricContactForm& form, double cutoff) {
    OrbitCensus census;
    census.cutoff = cutoff;
    census.families = find_families(form, cutoff);
    census.l_flat_asserted = true;
    census.bourgeois_admissible = true;
    for (std::size_t i = 0; i < census.families.size(); ++i) {
        const MorseBottFamily& fam = census.families[i];
        if (fam.rotation_sign == 0) {
            std::ostringstream msg;
            msg << "family (" << fam.cls.m << ", " << fam.cls.n << ") at t = " << fam.theta0
                << ": a' x a'' vanishes on the spawning torus, the"
                   " hyperbolic/elliptic splitting is not defined";
            throw HypothesisViolationError(msg.str());
        }
        if (fam.rotation_sign < 0) census.bourgeois_admissible = false;
        PerturbedOrbit hyp;
        hyp.kind = OrbitKind::PositiveHyperbolic;
        hyp.cls = fam.cls;
        hyp.limit_action = fam.action;
        hyp.l_positive = false;
        hyp.family_index = i;
        census.orbits.push_back(hyp);
        PerturbedOrbit ell = hyp;
        ell.kind = OrbitKind::Elliptic;
        ell.l_positive = fam.rotation_sign > 0;
        census.orbits.push_back(ell);
    }
    return census;
}

std::vector<DegreeZeroGenerator> degree_zero_generators(const OrbitCensus& census) {
    if (!census.bourgeois_admissible)
        throw ValidationError(
            "census is not admissible (some family has a' x a'' < 0); the degree-zero"
            " generator list is only defined in the admissible case");
    std::map<OrbitClass, double> min_action;
    for (const PerturbedOrbit& orbit : census.orbits) {
        if (orbit.kind != OrbitKind::PositiveHyperbolic) continue;
        auto it = min_action.find(orbit.cls);
        if (it == min_action.end() || orbit.limit_action < it->second)
            min_action[orbit.cls] = orbit.limit_action;
    }
    std::vector<DegreeZeroGenerator> gens;
    DegreeZeroGenerator empty;
    empty.empty_set = true;
    gens.push_back(empty);
    for (const auto& [cls, action] : min_action) {
        if (!canonical_rep(cls)) continue;
        auto neg = min_action.find({-cls.m, -cls.n});
        if (neg == min_action.end()) continue;
        DegreeZeroGenerator gen;
        gen.pair_class = cls;
        gen.total_action = action + neg->second;
        gens.push_back(gen);
    }
    std::sort(gens.begin() + 1, gens.end(), [](const auto& a, const auto& b) {
        if (a.total_action != b.total_action) return a.total_action < b.total_action;
        if (a.pair_class.m != b.pair_class.m) return a.pair_class.m < b.pair_class.m;
        return a.pair_class.n < b.pair_class.n;
    });
    return gens;
}

std::vector<FlowClosure> numeric_flow_oracle(const ToricContactForm& form, double start_theta,
                                             double horizon) {
    ReebSample probe = reeb_sample(form, start_theta); // validates the form
    if (!(horizon > 0.0)) return {};

    const TrigPolyEval a1de = compiled(form.a1_deriv());
    const TrigPolyEval a2de = compiled(form.a2_deriv());
    const TrigPolyEval crosse = compiled(form.cross());

    using State = std::array<double, 3>; // (x, y, theta)
    auto rhs = [&](const State& y) {
        double cr = crosse(y[2]);
        if (!(cr > 0.0)) {
            std::ostringstream msg;
            msg << "a x a' = " << cr << " reached at t = " << y[2] << " during integration";
            throw ContactDegeneracyError(msg.str());
        }
        return State{a2de(y[2]) / cr, -a1de(y[2]) / cr, 0.0};
    };
    auto rk4 = [&](const State& y, double h) {
        auto axpy = [](const State& y0, double c, const State& k) {
            return State{y0[0] + c * k[0], y0[1] + c * k[1], y0[2] + c * k[2]};
        };
        State k1 = rhs(y);
        State k2 = rhs(axpy(y, 0.5 * h, k1));
        State k3 = rhs(axpy(y, 0.5 * h, k2));
        State k4 = rhs(axpy(y, h, k3));
        return State{y[0] + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
                     y[1] + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
                     y[2] + h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])};
    };

    std::vector<FlowClosure> closures;
    auto already_recorded = [&](long long mm, long long nn, double period) {
        for (const FlowClosure& c : closures)
            if (c.m == mm && c.n == nn && std::fabs(c.period - period) < 1e-6) return true;
        return false;
    };
    // Closure test on one accepted segment, treated as linear (steps are kept
    // well under a quarter turn of displacement).
    auto scan_segment = [&](const State& y0, const State& y1, double t0, double t1) {
        const double dx = y1[0] - y0[0], dy = y1[1] - y0[1];
        const double den = dx * dx + dy * dy;
        if (den == 0.0) return;
        std::vector<std::pair<long long, long long>> candidates;
        for (double s : {0.0, 0.5, 1.0}) {
            long long mm = std::llround((y0[0] + s * dx) / kTwoPi);
            long long nn = std::llround((y0[1] + s * dy) / kTwoPi);
            if (mm == 0 && nn == 0) continue;
            if (std::find(candidates.begin(), candidates.end(), std::make_pair(mm, nn)) ==
                candidates.end())
                candidates.emplace_back(mm, nn);
        }
        for (auto [mm, nn] : candidates) {
            const double px = kTwoPi * static_cast<double>(mm) - y0[0];
            const double py = kTwoPi * static_cast<double>(nn) - y0[1];
            const double s = (px * dx + py * dy) / den;
            if (s < -0.01 || s > 1.01) continue;
            const double ex = s * dx - px, ey = s * dy - py;
            if (std::max(std::fabs(ex), std::fabs(ey)) > 1e-9) continue;
            const double period = t0 + s * (t1 - t0);
            if (period <= 1e-12 || period >= horizon) continue;
            if (already_recorded(mm, nn, period)) continue;
            FlowClosure c;
            c.m = mm;
            c.n = nn;
            c.multiplicity = std::gcd(std::llabs(mm), std::llabs(nn));
            c.primitive = {mm / c.multiplicity, nn / c.multiplicity};
            c.period = period;
            closures.push_back(c);
        }
    };

    const double speed = std::max(std::hypot(probe.vx, probe.vy), 1e-9);
    const double h_max = std::min(0.25 * kTwoPi / speed, horizon / 32.0);
    const double tol = 1e-12;
    double t = 0.0;
    double h_cur = h_max / 8.0;
    State y{0.0, 0.0, start_theta};
    long long guard = 0;
    while (t < horizon) {
        if (++guard > 20000000) throw MathError("flow integration exceeded the step budget");
        double h = std::min({h_cur, h_max, horizon - t});
        if (h <= 1e-15) break;
        State one = rk4(y, h);
        State half = rk4(rk4(y, 0.5 * h), 0.5 * h);
        double err = 0.0;
        for (int i = 0; i < 3; ++i) err = std::max(err, std::fabs(one[i] - half[i]) / 15.0);
        double span = std::max({1.0, std::fabs(half[0]), std::fabs(half[1])});
        if (err <= tol * span) {
            State next{half[0] + (half[0] - one[0]) / 15.0, half[1] + (half[1] - one[1]) / 15.0,
                       half[2] + (half[2] - one[2]) / 15.0};
            scan_segment(y, next, t, t + h);
            y = next;
            t += h;
            double grow = err > 0.0 ? 0.9 * std::pow(tol * span / err, 0.2) : 5.0;
            h_cur = std::min(h_max, h * std::min(5.0, std::max(1.0, grow)));
        } else {
            h_cur = h * std::max(0.2, 0.9 * std::pow(tol * span / err, 0.2));
        }
    }
    std::sort(closures.begin(), closures.end(),
              [](const FlowClosure& a, const FlowClosure& b) { return a.period < b.period; });
    return closures;
}

} // namespace t3kit
