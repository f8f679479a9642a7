#include "t3kit/selftest.hpp"

#include "t3kit/census.hpp"
#include "t3kit/errors.hpp"
#include "t3kit/index_calculus.hpp"
#include "t3kit/report.hpp"
#include "t3kit/rootfind.hpp"
#include "t3kit/surgery.hpp"
#include "t3kit/toric.hpp"
#include "t3kit/trigpoly.hpp"
#include "t3kit/workspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace t3kit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Suite {
    SuiteResult result;
    int checks = 0;

    explicit Suite(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.detail = what;
        }
    }

    template <typename Fn>
    void check_throws(Fn&& fn, const std::string& what) {
        ++checks;
        bool threw = false;
        try {
            fn();
        } catch (const std::exception&) {
            threw = true;
        }
        if (!threw && result.passed) {
            result.passed = false;
            result.detail = what + " (no error raised)";
        }
    }

    SuiteResult finish() {
        if (result.passed) result.detail = std::to_string(checks) + " checks";
        return result;
    }
};

int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat rand_rat(std::mt19937& rng, int num_range, int max_den) {
    return rat(rand_int(rng, -num_range, num_range), rand_int(rng, 1, max_den));
}

TrigPoly rand_trigpoly(std::mt19937& rng, int max_freq) {
    TrigPoly f = TrigPoly::constant(rand_rat(rng, 3, 4));
    for (int k = 1; k <= max_freq; ++k) {
        f.add_cos(k, rand_rat(rng, 3, 4));
        f.add_sin(k, rand_rat(rng, 3, 4));
    }
    return f;
}

ToricContactForm make_lambda0(int grid) {
    return ToricContactForm(TrigPoly::cosine(1, rat(1)), TrigPoly::sine(1, rat(1)), grid);
}

ToricContactForm make_ellipse(int grid) {
    return ToricContactForm(TrigPoly::cosine(1, rat(2)), TrigPoly::sine(1, rat(3)), grid);
}

// Valid contact form whose a' x a'' vanishes at the isolated angle t = pi;
// it spawns a rotation-sign-0 family below action 5, so the perturbation
// step must refuse it there.
ToricContactForm make_wobble(int grid) {
    TrigPoly a1 = TrigPoly::cosine(1, rat(1));
    a1.add_cos(2, rat(1, 4));
    TrigPoly a2 = TrigPoly::sine(1, rat(1));
    a2.add_sin(2, rat(1, 4));
    return ToricContactForm(a1, a2, grid);
}

TorusDiffeo rand_diffeo(std::mt19937& rng, int range) {
    while (true) {
        I64 p = rand_int(rng, -range, range);
        I64 r = rand_int(rng, -range, range);
        I64 s = rand_int(rng, -range, range);
        if (std::gcd(std::gcd(std::llabs(p), std::llabs(r)), std::llabs(s)) == 1)
            return complete_sl3(p, r, s);
    }
}

TorusDiffeo rand_diffeo_p1(std::mt19937& rng) {
    return complete_sl3(1, rand_int(rng, -9, 9), rand_int(rng, -9, 9));
}

TorusDiffeo compose_diffeos(const TorusDiffeo& f, const TorusDiffeo& g) {
    Mat3 h2 = f.h2 * g.h2;
    Vec3 w = h2.row(2);
    TorusDiffeo out;
    out.r = w[0];
    out.s = w[1];
    out.p = w[2];
    out.h2 = h2;
    out.h1 = h2.inverse_transpose();
    return out;
}

EchZeroClass class_from_bits(int bits) {
    return {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
}

IntMat rand_symmetric(std::mt19937& rng, int n, int range) {
    IntMat q(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rand_int(rng, -range, range);
            q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return q;
}

IntVec rand_vec(std::mt19937& rng, int n, int range) {
    IntVec v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rand_int(rng, -range, range);
    return v;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec scale_vec(const IntVec& a, long long c) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

// Solve Q k = diag(Q) over GF(2); always solvable for symmetric Q, which is
// why a characteristic vector exists mod 2 in every lattice.
IntVec characteristic_mod2(const IntMat& q) {
    const int n = static_cast<int>(q.size());
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(((q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % 2) + 2) % 2);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
            static_cast<int>(((q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] % 2) + 2) % 2);
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[static_cast<std::size_t>(row)], aug[static_cast<std::size_t>(pr)]);
        for (int i = 0; i < n; ++i)
            if (i != row && aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])
                for (int j = 0; j <= n; ++j)
                    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^=
                        aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        pivot_col[static_cast<std::size_t>(row)] = col;
        ++row;
    }
    IntVec k(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < row; ++i)
        k[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    return k;
}

double family_action(const std::vector<MorseBottFamily>& fams, const OrbitClass& c) {
    for (const auto& f : fams)
        if (f.cls == c) return f.action;
    return -1.0;
}

SuiteResult suite_trig_ring(std::mt19937& rng) {
    Suite s("trig-ring");

    TrigPoly sq = TrigPoly::cosine(1, rat(1)) * TrigPoly::cosine(1, rat(1));
    TrigPoly expect = TrigPoly::constant(rat(1, 2)) + TrigPoly::cosine(2, rat(1, 2));
    s.check(sq == expect, "cos^2 != 1/2 + cos(2t)/2");

    for (int trial = 0; trial < 50; ++trial) {
        TrigPoly f = rand_trigpoly(rng, 3);
        TrigPoly g = rand_trigpoly(rng, 3);
        s.check((f * g).derivative() == f.derivative() * g + f * g.derivative(),
                "Leibniz rule failed on a random product");
        s.check(f * g == g * f, "product not commutative");

        TrigPoly prod = f * g;
        double scale = std::max(1.0, to_double(prod.sup_bound()));
        for (int k = 0; k < 8; ++k) {
            double t = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
            s.check(std::fabs(prod.eval(t) - f.eval(t) * g.eval(t)) <= 1e-12 * scale,
                    "product evaluation mismatch");
        }
        double fscale = std::max(1.0, to_double(f.sup_bound()));
        for (int m = -4; m <= 8; ++m) {
            Rat q = f.eval_quarter(m);
            s.check(q == f.eval_quarter(m + 4), "quarter-angle table not 4-periodic");
            s.check(std::fabs(to_double(q) - f.eval(static_cast<double>(m) * kTwoPi / 4.0)) <=
                        1e-12 * fscale,
                    "exact quarter-angle value disagrees with numeric eval");
        }
        double bound = to_double(f.sup_bound());
        for (int k = 0; k < 16; ++k) {
            double t = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
            s.check(std::fabs(f.eval(t)) <= bound + 1e-12, "sup bound violated");
        }
    }
    return s.finish();
}

SuiteResult suite_contact_validation(int grid) {
    Suite s("contact-validation");

    ToricContactForm l0 = make_lambda0(grid);
    const ValidationReport& rep = l0.validation();
    s.check(rep.ok, "round form failed validation");
    s.check(std::fabs(rep.min_cross - 1.0) <= 1e-12, "round form min a x a' != 1");
    s.check(rep.lipschitz_margin <= 1e-12, "round form margin should vanish (constant a x a')");
    s.check(rep.misses_origin, "round form should miss the origin");
    s.check(rep.grid_size == grid, "report grid size wrong");

    ToricContactForm ell = make_ellipse(grid);
    s.check(ell.validation().ok, "ellipse failed validation");
    s.check(std::fabs(ell.validation().min_cross - 6.0) <= 1e-12, "ellipse min a x a' != 6");

    {
        // Constant path: a x a' vanishes identically.
        ToricContactForm bad(TrigPoly::constant(rat(1)), TrigPoly::constant(rat(2)), grid);
        s.check(!bad.validation().ok, "constant path accepted");
        s.check_throws([&] { reeb_sample(bad, 0.1); }, "Reeb data served on an invalid form");
        s.check_throws([&] { find_families(bad, 5.0); }, "census ran on an invalid form");
    }
    {
        // Reversed orientation: a x a' = -1 < 0.
        ToricContactForm bad(TrigPoly::cosine(1, rat(1)), TrigPoly::sine(1, rat(-1)), grid);
        s.check(!bad.validation().ok, "orientation-reversing path accepted");
    }
    {
        // Scaling by 3/2 rescales a x a' by 9/4 and keeps the Reeb direction.
        ToricContactForm scaled(TrigPoly::cosine(1, rat(3)), TrigPoly::sine(1, rat(9, 2)), grid);
        s.check(scaled.cross().eval_quarter(0) == rat(27, 2), "scaled a x a' wrong at t = 0");
        for (int k = 0; k < 20; ++k) {
            double t = 0.05 + 0.31 * k;
            ReebSample v = reeb_sample(ell, t);
            ReebSample w = reeb_sample(scaled, t);
            double n1 = std::hypot(v.vx, v.vy), n2 = std::hypot(w.vx, w.vy);
            s.check(std::fabs(v.vx / n1 - w.vx / n2) <= 1e-12 &&
                        std::fabs(v.vy / n1 - w.vy / n2) <= 1e-12,
                    "Reeb direction not scale invariant");
        }
    }
    s.check_throws(
        [] { ToricContactForm(TrigPoly::constant(rat(1)), TrigPoly::constant(rat(1)), 3); },
        "grid below 4 accepted");
    return s.finish();
}

SuiteResult suite_reeb_normalization(int grid) {
    Suite s("reeb-normalization");

    std::vector<ToricContactForm> forms;
    forms.push_back(make_lambda0(grid));
    forms.push_back(make_ellipse(grid));
    forms.push_back(make_wobble(4096));

    for (const auto& form : forms) {
        const TrigPolyEval a1 = compiled(form.a1());
        const TrigPolyEval a2 = compiled(form.a2());
        const TrigPolyEval a1d = compiled(form.a1_deriv());
        const TrigPolyEval a2d = compiled(form.a2_deriv());
        for (int k = 0; k < 100; ++k) {
            double t = k * kTwoPi / 100.0 + 0.013;
            ReebSample v = reeb_sample(form, t);
            s.check(std::fabs(a1(t) * v.vx + a2(t) * v.vy - 1.0) <= 1e-12, "lambda(Reeb) != 1");
            s.check(std::fabs(v.vx * (-a1d(t)) - v.vy * a2d(t)) <= 1e-12,
                    "Reeb not parallel to (a2', -a1')");
            s.check(v.cross > 0.0, "sampled a x a' not positive");
        }
        for (long long m = -2; m <= 5; ++m) {
            ExactReebSample v = reeb_sample_quarter(form, m);
            Rat pay = form.a1().eval_quarter(m) * v.vx + form.a2().eval_quarter(m) * v.vy;
            s.check(pay == rat(1), "exact lambda(Reeb) != 1 at a quarter angle");
            Rat along = v.vx * (-form.a1_deriv().eval_quarter(m)) -
                        v.vy * form.a2_deriv().eval_quarter(m);
            s.check(along == rat(0), "exact Reeb direction wrong at a quarter angle");
        }
        // V'(t) = rotation * (-a2, a1): finite-difference probe of the
        // return-map invariant.
        const double h = 1e-4;
        for (int k = 0; k < 25; ++k) {
            double t = 0.09 + 0.25 * k;
            ReebSample vp = reeb_sample(form, t + h);
            ReebSample vm = reeb_sample(form, t - h);
            ReebSample v0 = reeb_sample(form, t);
            double num = (vp.vx - vm.vx) * (-a2(t)) + (vp.vy - vm.vy) * a1(t);
            double den = 2.0 * h * (a1(t) * a1(t) + a2(t) * a2(t));
            double fd = num / den;
            s.check(std::fabs(fd - v0.rotation) <= 1e-6 * std::max(1.0, std::fabs(v0.rotation)),
                    "finite-difference rotation disagrees with a' x a'' / (a x a')^2");
        }
    }

    ToricContactForm l0 = make_lambda0(grid);
    for (int k = 0; k < 32; ++k)
        s.check(rotation_sign_at(l0, k * kTwoPi / 32.0) == 1, "round-form rotation sign != +1");
    ToricContactForm wob = make_wobble(4096);
    s.check(rotation_sign_at(wob, kTwoPi / 2.0) == 0, "wobble a' x a'' should vanish at t = pi");
    s.check(rotation_sign_at(wob, 0.0) == 1, "wobble a' x a'' should be positive at t = 0");
    return s.finish();
}

SuiteResult suite_census_oracle(int grid) {
    Suite s("census-oracle");
    ToricContactForm l0 = make_lambda0(grid);

    auto fams12 = find_families(l0, kTwoPi * 1.2);
    s.check(fams12.size() == 4, "round form at cutoff 1.2*2pi: expected 4 families");
    std::set<OrbitClass> got12;
    for (const auto& f : fams12) {
        got12.insert(f.cls);
        s.check(std::fabs(f.action - kTwoPi) <= 1e-9, "primitive action != 2pi");
        s.check(f.rotation_sign == 1, "round-form family without positive rotation");
        s.check(std::fabs(f.rotation - 1.0) <= 1e-9, "round-form rotation != 1");
    }
    s.check(got12 == std::set<OrbitClass>({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
            "unexpected class set at cutoff 1.2*2pi");

    auto fams15 = find_families(l0, kTwoPi * 1.5);
    s.check(fams15.size() == 8, "round form at cutoff 1.5*2pi: expected 8 families");
    for (const auto& f : fams15) {
        double norm = std::hypot(static_cast<double>(f.cls.m), static_cast<double>(f.cls.n));
        s.check(std::fabs(f.action - kTwoPi * norm) <= 1e-9, "action != 2pi * |(m,n)|");
        double a12 = family_action(fams12, f.cls);
        if (a12 >= 0.0)
            s.check(a12 == f.action, "growing the cutoff changed a stored action");
        s.check(std::fabs(family_action(fams15, {-f.cls.m, -f.cls.n}) - f.action) <= 1e-9,
                "negated class missing or its action differs");
    }
    for (std::size_t i = 1; i < fams15.size(); ++i)
        s.check(fams15[i - 1].action <= fams15[i].action, "families not sorted by action");

    // The flow oracle confirms every family: start on the torus, integrate,
    // and the first lattice closure matches class and action.
    for (const auto& f : fams15) {
        auto closures = numeric_flow_oracle(l0, f.theta0, f.action * 1.02);
        s.check(!closures.empty(), "oracle found no closure from a family angle");
        if (!closures.empty()) {
            s.check(closures.front().primitive == f.cls, "oracle primitive class mismatch");
            s.check(closures.front().multiplicity == 1, "first closure not primitive");
            s.check(std::fabs(closures.front().period - f.action) <= 1e-9,
                    "oracle period differs from the stored action");
        }
    }
    s.check(numeric_flow_oracle(l0, 1.0, 10.0).empty(),
            "irrational-slope trajectory reported a closure");
    auto longrun = numeric_flow_oracle(l0, 0.0, 14.0);
    s.check(longrun.size() == 2, "expected primitive + double cover below horizon 14");
    if (longrun.size() == 2) {
        s.check(longrun[0].m == 1 && longrun[0].n == 0 && longrun[0].multiplicity == 1,
                "first closure should be (1, 0)");
        s.check(longrun[1].m == 2 && longrun[1].n == 0 && longrun[1].multiplicity == 2 &&
                    longrun[1].primitive == OrbitClass{1, 0},
                "second closure should be the double cover of (1, 0)");
        s.check(std::fabs(longrun[1].period - 2.0 * longrun[0].period) <= 1e-9,
                "double-cover period != twice the primitive period");
    }

    // Ellipse: everything is elliptic-with-positive-rotation territory.
    // Families sit at actions 4*pi, 6*pi, 2*pi*sqrt(13) and 10*pi, so the
    // cutoff 32 admits exactly the 12 classes (+-1,0), (0,+-1), (+-1,+-1),
    // (+-2,+-1) and excludes (+-1,+-2) at 2*pi*sqrt(40) = 39.7.
    OrbitCensus census = bourgeois_census(make_ellipse(grid), 32.0);
    s.check(census.bourgeois_admissible, "ellipse census not admissible");
    s.check(census.l_flat_asserted, "L-flat flag not asserted");
    s.check(census.families.size() == 12, "ellipse below action 32: expected 12 families");
    s.check(census.orbits.size() == 2 * census.families.size(),
            "expected one hyperbolic + one elliptic orbit per family");
    int elliptic = 0, hyperbolic = 0;
    for (const auto& orb : census.orbits) {
        if (orb.kind == OrbitKind::Elliptic) {
            ++elliptic;
            s.check(orb.l_positive, "elliptic orbit without positive rotation");
        } else {
            ++hyperbolic;
            s.check(!orb.l_positive, "l_positive set on a hyperbolic orbit");
        }
        s.check(orb.limit_action == census.families[orb.family_index].action,
                "orbit limit action differs from its family");
        s.check(orb.cls == census.families[orb.family_index].cls,
                "orbit class differs from its family");
    }
    s.check(elliptic == hyperbolic, "elliptic/hyperbolic counts differ");

    s.check_throws([&] { find_families(l0, 0.0); }, "cutoff 0 accepted");
    return s.finish();
}

SuiteResult suite_census_degenerate() {
    Suite s("census-degenerate");
    ToricContactForm wob = make_wobble(4096);
    s.check(wob.validation().ok, "wobble form should be a valid contact form");

    auto fams = find_families(wob, 5.0);
    s.check(fams.size() == 1, "wobble form below action 5: expected exactly one family");
    if (fams.size() == 1) {
        s.check(fams[0].cls == OrbitClass{-1, 0}, "wobble family class != (-1, 0)");
        s.check(std::fabs(fams[0].theta0 - kTwoPi / 2.0) <= 1e-9,
                "wobble family angle != pi");
        s.check(std::fabs(fams[0].action - 0.75 * kTwoPi) <= 1e-9,
                "wobble family action != 3*pi/2");
        s.check(fams[0].rotation_sign == 0, "wobble family should sit on the a' x a'' zero");
    }
    bool threw = false;
    try {
        bourgeois_census(wob, 5.0);
    } catch (const HypothesisViolationError&) {
        threw = true;
    } catch (const std::exception&) {
    }
    s.check(threw, "degenerate family not rejected by the census");

    // A double root off the grid must be refused, not silently mislocated:
    // (3/5)cos + (4/5)sin - 1 touches zero tangentially at atan2(4, 3).
    {
        TrigPoly g = TrigPoly::constant(rat(-1)) + TrigPoly::cosine(1, rat(3, 5)) +
                     TrigPoly::sine(1, rat(4, 5));
        bool rf = false;
        try {
            periodic_roots(g);
        } catch (const RootFinderError&) {
            rf = true;
        } catch (const std::exception&) {
        }
        s.check(rf, "tangent (double) root not flagged by the root finder");
    }
    s.check_throws([] { periodic_roots(TrigPoly()); },
                   "identically zero function accepted by the root finder");

    // Simple roots stay findable: same circle shifted off tangency.
    {
        TrigPoly g = TrigPoly::constant(rat(-1, 2)) + TrigPoly::cosine(1, rat(3, 5)) +
                     TrigPoly::sine(1, rat(4, 5));
        auto roots = periodic_roots(g);
        s.check(roots.size() == 2, "shifted circle function should have two simple roots");
        for (double t : roots)
            s.check(std::fabs(g.eval(t)) <= 1e-10, "root does not evaluate to zero");
    }
    return s.finish();
}

SuiteResult suite_degree_zero(int grid) {
    Suite s("degree-zero");
    ToricContactForm l0 = make_lambda0(grid);

    auto gens12 = degree_zero_generators(bourgeois_census(l0, kTwoPi * 1.2));
    s.check(gens12.size() == 3, "cutoff 1.2*2pi: expected the empty set plus two pairs");
    if (gens12.size() == 3) {
        s.check(gens12[0].empty_set && gens12[0].total_action == 0.0,
                "first generator should be the empty set");
        s.check(!gens12[1].empty_set && gens12[1].pair_class == OrbitClass{0, 1} &&
                    std::fabs(gens12[1].total_action - 2.0 * kTwoPi) <= 1e-9,
                "expected h(0, 1) at total action 4pi");
        s.check(gens12[2].pair_class == OrbitClass{1, 0} &&
                    std::fabs(gens12[2].total_action - 2.0 * kTwoPi) <= 1e-9,
                "expected h(1, 0) at total action 4pi");
    }

    auto gens15 = degree_zero_generators(bourgeois_census(l0, kTwoPi * 1.5));
    s.check(gens15.size() == 5, "cutoff 1.5*2pi: expected 5 generators");
    std::set<OrbitClass> got15;
    for (const auto& g : gens15)
        if (!g.empty_set) got15.insert(g.pair_class);
    s.check(got15 == std::set<OrbitClass>({{0, 1}, {1, 0}, {1, 1}, {1, -1}}),
            "cutoff 1.5*2pi: wrong class set");

    auto gens29 = degree_zero_generators(bourgeois_census(l0, kTwoPi * 2.9));
    s.check(gens29.size() == 9, "cutoff 2.9*2pi: expected 9 generators");
    std::set<OrbitClass> got29;
    for (const auto& g : gens29)
        if (!g.empty_set) {
            got29.insert(g.pair_class);
            double norm = std::hypot(static_cast<double>(g.pair_class.m),
                                     static_cast<double>(g.pair_class.n));
            s.check(std::fabs(g.total_action - 2.0 * kTwoPi * norm) <= 1e-9,
                    "pair total action != 2 * 2pi * |(m,n)|");
            s.check(g.pair_class.m > 0 || (g.pair_class.m == 0 && g.pair_class.n > 0),
                    "pair class not the canonical half-lattice representative");
        }
    s.check(got29 == std::set<OrbitClass>({{0, 1},
                                           {1, 0},
                                           {1, 1},
                                           {1, -1},
                                           {1, 2},
                                           {1, -2},
                                           {2, 1},
                                           {2, -1}}),
            "cutoff 2.9*2pi: wrong class set");
    for (std::size_t i = 2; i < gens29.size(); ++i) {
        bool ordered = gens29[i - 1].total_action < gens29[i].total_action ||
                       (gens29[i - 1].total_action == gens29[i].total_action &&
                        gens29[i - 1].pair_class < gens29[i].pair_class);
        s.check(ordered, "generators not sorted by (total action, class)");
    }
    return s.finish();
}

SuiteResult suite_ech_laws(std::mt19937& rng, const HConvention& conv) {
    Suite s("ech-laws");

    // h is additive and lands in the (x, y) plane.
    for (int k = 0; k < 1000; ++k) {
        I64 v1 = rand_int(rng, -20, 20), v2 = rand_int(rng, -20, 20);
        I64 w1 = rand_int(rng, -20, 20), w2 = rand_int(rng, -20, 20);
        s.check(h_class(v1 + w1, v2 + w2, conv) == h_class(v1, v2, conv) + h_class(w1, w2, conv),
                "h is not additive");
        s.check(!h_class(v1, v2, conv).ctheta, "h image touched the thetaBar line");
    }
    s.check(h_class(2, 2, conv) == EchZeroClass{}, "h(2, 2) != 0");
    s.check(contact_invariant() == (EchZeroClass{false, false, true}),
            "contact invariant is not thetaBar");

    // Contactomorphisms fix the contact invariant and permute the classes.
    for (int k = 0; k < 100; ++k) {
        TorusDiffeo f = rand_diffeo_p1(rng);
        s.check(act_contactomorphism(f, contact_invariant()) == contact_invariant(),
                "contact invariant not fixed");
    }
    for (int k = 0; k < 25; ++k) {
        TorusDiffeo f = rand_diffeo_p1(rng);
        std::set<std::array<int, 3>> image;
        for (int bits = 0; bits < 8; ++bits) {
            EchZeroClass d = act_contactomorphism(f, class_from_bits(bits));
            image.insert({d.cx ? 1 : 0, d.cy ? 1 : 0, d.ctheta ? 1 : 0});
        }
        s.check(image.size() == 8, "class action is not a bijection");
    }
    // Functoriality.
    for (int k = 0; k < 100; ++k) {
        TorusDiffeo f = rand_diffeo_p1(rng);
        TorusDiffeo g = rand_diffeo_p1(rng);
        TorusDiffeo fg = compose_diffeos(f, g);
        for (int bits = 0; bits < 8; ++bits) {
            EchZeroClass c = class_from_bits(bits);
            s.check(act_contactomorphism(fg, c) ==
                        act_contactomorphism(f, act_contactomorphism(g, c)),
                    "action not functorial");
        }
    }
    // Additivity of the action (it is linear over Z/2).
    for (int k = 0; k < 100; ++k) {
        TorusDiffeo f = rand_diffeo_p1(rng);
        EchZeroClass c = class_from_bits(rand_int(rng, 0, 7));
        EchZeroClass d = class_from_bits(rand_int(rng, 0, 7));
        s.check(act_contactomorphism(f, c + d) ==
                    act_contactomorphism(f, c) + act_contactomorphism(f, d),
                "action not additive");
    }
    // Grading bookkeeping recovers its inputs.
    for (int k = 0; k < 200; ++k) {
        bool gx = rand_int(rng, 0, 1) != 0;
        bool g110 = rand_int(rng, 0, 1) != 0;
        bool g101 = rand_int(rng, 0, 1) != 0;
        GrTriple t = gr_from_surgeries(gx, g110, g101);
        s.check(t.gr_x == gx, "gr_x component lost");
        s.check((t.a != t.gr_x) == g110, "(1,1,0) grading not recovered");
        s.check((t.b != t.gr_x) == g101, "(1,0,1) grading not recovered");
    }
    s.check_throws(
        [] { act_contactomorphism(complete_sl3(2, 1, 1), contact_invariant()); },
        "non-contactomorphism (p != 1) accepted by the action");
    return s.finish();
}

SuiteResult suite_ech_naturality(std::mt19937& rng, const HConvention& conv) {
    Suite s("ech-naturality");
    // Under f_{1,r,s} the thetaBar coordinate of an h class picks up
    // r*v1 + s*v2 mod 2 while the (x, y) part stays put. This is what pins
    // the identification h(e1) = x, h(e2) = y: swapping it breaks the law.
    for (int k = 0; k < 200; ++k) {
        I64 v1 = rand_int(rng, -9, 9), v2 = rand_int(rng, -9, 9);
        I64 r = rand_int(rng, -9, 9), sv = rand_int(rng, -9, 9);
        bool grx = rand_int(rng, 0, 1) != 0;
        EchZeroClass c = h_class(v1, v2, conv);
        if (grx) c = c + contact_invariant();
        EchZeroClass after = act_contactomorphism(complete_sl3(1, r, sv), c);
        bool expect_theta = grx != ((((r * v1 + sv * v2) % 2) + 2) % 2 == 1);
        s.check(after.cx == c.cx && after.cy == c.cy,
                "surgery action moved the (x, y) part of an h class");
        s.check(after.ctheta == expect_theta,
                "thetaBar shift != r*v1 + s*v2 mod 2 (h identification broken)");
    }

    // Stored gradings compose with the action the same way.
    for (int k = 0; k < 100; ++k) {
        bool gx = rand_int(rng, 0, 1) != 0;
        bool g110 = rand_int(rng, 0, 1) != 0;
        bool g101 = rand_int(rng, 0, 1) != 0;
        GrTriple t = gr_from_surgeries(gx, g110, g101);
        EchZeroClass c = t.as_class();
        s.check(c.ctheta == gx, "triple class thetaBar bit != gr_x");
        s.check(act_contactomorphism(complete_sl3(1, 1, 0), c).ctheta == g110,
                "f_{1,1,0} action disagrees with the stored grading");
        s.check(act_contactomorphism(complete_sl3(1, 0, 1), c).ctheta == g101,
                "f_{1,0,1} action disagrees with the stored grading");
    }
    return s.finish();
}

SuiteResult suite_surgery_product(std::mt19937& rng) {
    Suite s("surgery-product");

    // Matrix prediction vs closed formula, exhaustively over small coprime
    // triples with random local invariants.
    int triples = 0;
    for (I64 p = -5; p <= 5; ++p)
        for (I64 r = -5; r <= 5; ++r)
            for (I64 sv = -5; sv <= 5; ++sv) {
                if (std::gcd(std::gcd(std::llabs(p), std::llabs(r)), std::llabs(sv)) != 1)
                    continue;
                ++triples;
                TorusDiffeo f = complete_sl3(p, r, sv);
                for (int k = 0; k < 100; ++k) {
                    LocalTorusInvariant swl{rand_int(rng, -10, 10), rand_int(rng, -10, 10),
                                            rand_int(rng, -10, 10)};
                    s.check(predict_surgery(swl, f) == product_formula(swl, p, r, sv).value,
                            "h2 prediction differs from the closed formula");
                }
            }
    s.check(triples > 700, "coprime triple sweep unexpectedly small");

    s.check(!product_formula({1, 0, 0}, 2, 4, 6).realizable, "gcd > 1 marked realizable");
    s.check(product_formula({1, 0, 0}, 2, 4, 7).realizable, "coprime triple marked unrealizable");

    // Group law: the composite's data is read off the composite matrix.
    for (int k = 0; k < 100; ++k) {
        TorusDiffeo f = rand_diffeo(rng, 9);
        TorusDiffeo g = rand_diffeo(rng, 9);
        TorusDiffeo fg = compose_diffeos(f, g);
        s.check(fg.h2.det() == 1, "composite determinant != 1");
        s.check(fg.h1 == f.h1 * g.h1, "h1 of a composite != product of the h1 factors");
        LocalTorusInvariant swl{rand_int(rng, -8, 8), rand_int(rng, -8, 8), rand_int(rng, -8, 8)};
        s.check(predict_surgery(swl, fg) == product_formula(swl, fg.p, fg.r, fg.s).value,
                "composite prediction violates the closed formula");
    }

    // Prediction does not depend on the completion choice: twisting h2 by a
    // unimodular map fixing the thetaBar row gives the same numbers.
    for (int k = 0; k < 100; ++k) {
        TorusDiffeo f = rand_diffeo(rng, 9);
        TorusDiffeo alt = f;
        alt.h2 = f.h2;
        for (int j = 0; j < 3; ++j) {
            alt.h2.at(0, j) = f.h2.at(1, j);
            alt.h2.at(1, j) = -f.h2.at(0, j);
        }
        alt.h1 = alt.h2.inverse_transpose();
        LocalTorusInvariant swl{rand_int(rng, -8, 8), rand_int(rng, -8, 8), rand_int(rng, -8, 8)};
        s.check(predict_surgery(swl, alt) == predict_surgery(swl, f),
                "prediction depends on the completion choice");
    }

    s.check(is_luttinger(complete_sl3(1, 5, -2)), "f_{1,5,-2} not recognized as Luttinger");
    s.check(is_luttinger(complete_sl3(1, 0, 0)), "identity surgery not Luttinger");
    s.check(!is_luttinger(complete_sl3(0, 1, 0)), "p = 0 surgery marked Luttinger");

    LocalTorusInvariant asm1 = assemble_swl(3, 2, -1);
    s.check(asm1.a == 2 && asm1.b == -1 && asm1.c == 3, "local invariant assembly order wrong");
    s.check(phi_n(Vec3{{4, 7, -2}}) == -2, "phi_N != thetaBar coordinate");
    // 5*3 + 4*2 + 7*(-1) = 16.
    s.check(predict_surgery(assemble_swl(3, 2, -1), complete_sl3(5, 4, 7)) == 16,
            "worked example: expected invariant 16");
    return s.finish();
}

SuiteResult suite_sl3_completion(std::mt19937& rng) {
    Suite s("sl3-completion");
    for (int k = 0; k < 10000; ++k) {
        I64 p = rand_int(rng, -99, 99);
        I64 r = rand_int(rng, -99, 99);
        I64 sv = rand_int(rng, -99, 99);
        if (std::gcd(std::gcd(std::llabs(p), std::llabs(r)), std::llabs(sv)) != 1) {
            s.check_throws([&] { complete_sl3(p, r, sv); }, "non-coprime triple accepted");
            continue;
        }
        TorusDiffeo f = complete_sl3(p, r, sv);
        s.check(f.h2.det() == 1, "determinant != 1");
        Vec3 row = f.h2.row(2);
        s.check(row[0] == r && row[1] == sv && row[2] == p, "thetaBar row != (r, s, p)");
        // h1 must be a genuine inverse transpose: h1^T * h2 = 1.
        bool inverse_ok = true;
        for (int i = 0; i < 3 && inverse_ok; ++i)
            for (int j = 0; j < 3 && inverse_ok; ++j) {
                I64 acc = 0;
                for (int l = 0; l < 3; ++l) acc += f.h1.at(l, i) * f.h2.at(l, j);
                if (acc != (i == j ? 1 : 0)) inverse_ok = false;
            }
        s.check(inverse_ok, "h1 is not the inverse transpose of h2");
    }

    // Luttinger normal form, entry for entry.
    for (I64 r = -8; r <= 8; ++r)
        for (I64 sv = -8; sv <= 8; ++sv) {
            TorusDiffeo f = complete_sl3(1, r, sv);
            Mat3 want;
            want.m = {{{1, 0, 0}, {0, 1, 0}, {r, sv, 1}}};
            s.check(f.h2 == want, "Luttinger h2 not in normal form");
            Mat3 want1;
            want1.m = {{{1, 0, -r}, {0, 1, -sv}, {0, 0, 1}}};
            s.check(f.h1 == want1, "Luttinger h1 not in normal form");
            s.check(is_luttinger(f), "Luttinger completion not recognized");
        }
    s.check_throws([] { complete_sl3(0, 0, 0); }, "zero triple accepted");
    s.check_throws([] { complete_sl3(2, 4, 6); }, "gcd-2 triple accepted");
    return s.finish();
}

SuiteResult suite_gromov_recovery(std::mt19937& rng) {
    Suite s("gromov-recovery");
    for (int k = 0; k < 1000; ++k) {
        int a = rand_int(rng, 0, 1), b = rand_int(rng, 0, 1), base = rand_int(rng, 0, 1);
        std::vector<std::pair<I64, I64>> pairs = {{1, 0}, {0, 1}, {1, 1}};
        if (k % 2) pairs.emplace_back(1, 1); // a redundant equation must stay consistent
        std::vector<GromovEquation> eqs;
        for (auto [r, sv] : pairs)
            eqs.push_back(GromovEquation{r, sv, ((base + r * a + sv * b) % 2) != 0});
        GromovSolution sol = solve_gromov(base != 0, eqs);
        s.check(sol.status == GromovSolution::Status::Unique, "spanning system not unique");
        s.check(sol.a == (a != 0) && sol.b == (b != 0), "recovered torus degrees wrong");
        s.check(sol.a_pinned && sol.b_pinned, "unique solution not pinned");
        s.check(sol.free_directions.empty(), "unique solution carries free directions");
    }
    {
        GromovSolution sol = solve_gromov(false, {GromovEquation{1, 0, true}});
        s.check(sol.status == GromovSolution::Status::Underdetermined,
                "single equation should be underdetermined");
        s.check(sol.a_pinned && !sol.b_pinned, "pinned flags wrong for the (1, 0) system");
        s.check(sol.a, "pinned value wrong");
        s.check(sol.free_directions == std::vector<std::pair<bool, bool>>({{false, true}}),
                "free direction wrong for the (1, 0) system");
    }
    {
        GromovSolution sol = solve_gromov(false, {GromovEquation{1, 1, false}});
        s.check(sol.status == GromovSolution::Status::Underdetermined,
                "diagonal equation should be underdetermined");
        s.check(!sol.a_pinned && !sol.b_pinned, "diagonal equation pinned a value");
        s.check(sol.free_directions == std::vector<std::pair<bool, bool>>({{true, true}}),
                "free direction wrong for the (1, 1) system");
    }
    {
        bool threw = false;
        try {
            solve_gromov(false, {GromovEquation{1, 0, false}, GromovEquation{1, 0, true}});
        } catch (const GromovContradictionError& e) {
            threw = true;
            s.check(e.conflict == std::vector<std::size_t>({0, 1}),
                    "conflict witness should name both equations");
        }
        s.check(threw, "contradictory system did not raise");
    }
    {
        // Even-coefficient equations constrain nothing; an odd right side is
        // then a direct contradiction with itself.
        bool threw = false;
        try {
            solve_gromov(false, {GromovEquation{2, 2, true}});
        } catch (const GromovContradictionError& e) {
            threw = true;
            s.check(e.conflict.size() == 1, "self-contradiction should name one equation");
        }
        s.check(threw, "even/odd contradiction not raised");
    }
    s.check_throws([] { solve_gromov(false, {}); }, "empty system accepted");
    return s.finish();
}

SuiteResult suite_index_identities(std::mt19937& rng) {
    Suite s("index-identities");
    for (int k = 0; k < 1000; ++k) {
        int n = rand_int(rng, 1, 6);
        IntMat q = rand_symmetric(rng, n, 4);
        IntVec a = rand_vec(rng, n, 6);
        IntVec kk = rand_vec(rng, n, 6);
        IntVec v = rand_vec(rng, n, 6);
        FourManifoldModel model = make_model(q, 0, std::nullopt, std::nullopt, kk, {});

        long long shift = ech_index_closed(model, add_vec(a, v)) - ech_index_closed(model, a);
        long long residual = pairing(q, v, v) + 2 * pairing(q, v, a) - pairing(q, v, kk);
        s.check(shift == residual, "index shift != v.v + 2 v.A - v.K");

        LiftCheck chk = lift_invariance_check(model, LiftTarget::index_class(a), v);
        s.check(chk.residual == residual, "lift residual != index shift");
        s.check(chk.invariant == (residual == 0), "invariance flag inconsistent");

        IntVec c1 = rand_vec(rng, n, 6);
        LiftCheck sc = lift_invariance_check(model, LiftTarget::spin_c(c1), v);
        s.check(sc.residual == pairing(q, v, v) + pairing(q, v, c1),
                "spin-c residual formula wrong");
    }

    // With characteristic K the closed index is always even.
    for (int k = 0; k < 100; ++k) {
        int n = rand_int(rng, 1, 6);
        IntMat q = rand_symmetric(rng, n, 4);
        IntVec kk = characteristic_mod2(q);
        s.check(is_characteristic(q, kk), "GF(2)-solved vector not characteristic");
        FourManifoldModel model = make_model(q, 0, std::nullopt, std::nullopt, kk, {});
        for (const std::string& w : model.warnings)
            s.check(w.find("characteristic") == std::string::npos,
                    "characteristic K drew a parity warning");
        for (int j = 0; j < 10; ++j) {
            long long idx = ech_index_closed(model, rand_vec(rng, n, 6));
            s.check(idx % 2 == 0, "closed index odd despite characteristic K");
        }
    }

    // d shift under c1 -> c1 + 2v.
    for (int k = 0; k < 200; ++k) {
        int n = rand_int(rng, 1, 5);
        IntMat q = rand_symmetric(rng, n, 4);
        Inertia inertia = exact_inertia(q);
        long long sigma = inertia.positive - inertia.negative;
        IntVec c1 = rand_vec(rng, n, 5);
        long long csq = pairing(q, c1, c1);
        if (((csq - 3 * sigma) % 2 + 2) % 2 != 0) continue; // no compatible chi
        long long chi = (csq - 3 * sigma) / 2 - 2 * rand_int(rng, -5, 5);
        FourManifoldModel model = make_model(q, chi, std::nullopt, std::nullopt, std::nullopt, {});
        IntVec v = rand_vec(rng, n, 5);
        long long diff = d_invariant(model, SpinCClass{add_vec(c1, scale_vec(v, 2))}) -
                         d_invariant(model, SpinCClass{c1});
        s.check(diff == pairing(q, v, v) + pairing(q, v, c1), "d shift != v.v + v.c1");
    }

    // Deterministic orthogonal case: an isotropic, orthogonal shift changes
    // nothing.
    {
        IntMat q = hyperbolic_blocks(2);
        FourManifoldModel model =
            make_model(q, 0, std::nullopt, std::nullopt, IntVec(4, 0), {});
        LiftCheck chk = lift_invariance_check(model, LiftTarget::index_class({1, 0, 0, 0}),
                                              {1, 0, 0, 0});
        s.check(chk.invariant && chk.residual == 0,
                "isotropic orthogonal shift should be invariant");
    }
    return s.finish();
}

SuiteResult suite_index_basic() {
    Suite s("index-basic");

    s.check(exact_inertia(e8_cartan()) == (Inertia{8, 0, 0}), "E8 inertia != (8, 0, 0)");
    s.check(exact_inertia(hyperbolic_blocks(3)) == (Inertia{3, 3, 0}), "3H inertia != (3, 3, 0)");
    s.check(exact_inertia(IntMat{{0}}) == (Inertia{0, 0, 1}), "zero form has no kernel?");

    WorkspaceDocument ws = builtin_workspace();
    FourManifoldModel k3 = instantiate_model(ws.manifolds.at("k3"));
    FourManifoldModel t4 = instantiate_model(ws.manifolds.at("t4"));
    s.check(k3.rank == 22 && k3.euler_char == 24 && k3.signature == -16 && k3.b2_plus == 3,
            "K3 invariants wrong");
    s.check(exact_inertia(k3.q) == (Inertia{3, 19, 0}), "K3 inertia != (3, 19, 0)");
    s.check(k3.warnings.empty(), "builtin K3 model drew warnings");
    s.check(is_characteristic(k3.q, *k3.k), "K = 0 not characteristic on K3 (even form)");
    s.check(d_invariant(k3, SpinCClass{IntVec(22, 0)}) == 0, "d(K3, 0) != 0");
    s.check(d_invariant(t4, SpinCClass{IntVec(6, 0)}) == 0, "d(T4, 0) != 0");
    s.check(bridge_consistent(k3), "K3 bridge baseline inconsistent");
    s.check(bridge_consistent(t4), "T4 bridge baseline inconsistent");

    {
        FourManifoldModel h =
            make_model(hyperbolic_blocks(1), 4, 0, std::nullopt, IntVec{0, 0}, {});
        s.check(d_invariant(h, SpinCClass{{2, 2}}) == 0, "d(H-model, (2,2)) != 0");
        s.check(ech_index_closed(h, {1, 1}) == 2, "I((1,1)) on the H-model != 2");
        s.check(ech_index_closed(h, {0, 0}) == 0, "I(0) != 0");
    }
    {
        FourManifoldModel bad = make_model(IntMat{{1}}, 1, std::nullopt, std::nullopt,
                                           std::nullopt, {});
        bool threw = false;
        try {
            d_invariant(bad, SpinCClass{{0}});
        } catch (const SpinCIndexError&) {
            threw = true;
        }
        s.check(threw, "non-divisible d numerator accepted");
    }
    {
        FourManifoldModel nok =
            make_model(hyperbolic_blocks(1), 4, std::nullopt, std::nullopt, std::nullopt, {});
        s.check_throws([&] { ech_index_closed(nok, {1, 1}); }, "closed index computed without K");
    }

    // Chamber decisions.
    s.check(chamber_side({-1.0, 0.0}) == ChamberSide::Negative, "omega < 0 not negative side");
    s.check(chamber_side({0.0, 0.0}) == ChamberSide::Wall, "origin not on the wall");
    s.check(chamber_side({1.0, 1.0}) == ChamberSide::Positive, "omega > 0 not positive side");
    s.check(chamber_side_exact(rat(0), rat(0)) == ChamberSide::Wall, "exact origin not on wall");
    s.check(chamber_side_exact(rat(0), rat(-3, 7)) == ChamberSide::Negative,
            "exact omega = 0 case wrong");
    s.check(chamber_side_exact(rat(-1), rat(6)) == ChamberSide::Negative,
            "-2pi + 6 should be negative");
    s.check(chamber_side_exact(rat(-1), rat(7)) == ChamberSide::Positive,
            "-2pi + 7 should be positive");
    {
        // mu = the double closest to 2pi is a hair below 2pi itself; the exact
        // decision resolves what a 1e-12 tolerance cannot.
        Rat mu{BigInt("884279719003555"), BigInt(1) << 47};
        s.check(chamber_side({-1.0, to_double(mu)}) == ChamberSide::Wall,
                "double probe should sit inside the wall tolerance");
        s.check(chamber_side_exact(rat(-1), mu) == ChamberSide::Negative,
                "exact probe should resolve the near-wall sign");
    }
    s.check(chamber_label(ChamberSide::Negative) == "negative (symplectic chamber)",
            "negative chamber label wrong");

    // Bridge between the closed index and spin-c normalizations.
    {
        IntVec a = {1, -2, 0, 3, 1, 0};
        SpinCClass c1 = gr_sw_bridge(t4, a);
        s.check(c1.c1 == scale_vec(a, 2), "bridge with K = 0 should double the class");
        s.check(d_invariant(t4, c1) == ech_index_closed(t4, a),
                "d of the bridged class != closed index");
    }
    s.check_throws(
        [] { make_model(hyperbolic_blocks(1), 4, 5, std::nullopt, std::nullopt, {}); },
        "declared signature mismatch accepted");
    s.check_throws([] { make_model(IntMat{{0, 1}, {2, 0}}, 0); }, "asymmetric Q accepted");
    {
        FourManifoldModel warned =
            make_model(IntMat{{1}}, 2, std::nullopt, std::nullopt, IntVec{0}, {});
        s.check(!warned.warnings.empty(), "non-characteristic K drew no warning");
    }
    return s.finish();
}

SuiteResult suite_io_roundtrip(int grid) {
    Suite s("io-roundtrip");
    WorkspaceDocument doc = builtin_workspace();

    std::string text = serialize_workspace(doc);
    WorkspaceDocument back = parse_workspace(text);
    s.check(back == doc, "parse(serialize(doc)) != doc");
    s.check(serialize_workspace(back) == text, "serialization not stable");

    s.check_throws([] { parse_workspace("{ not json"); }, "malformed text accepted");
    s.check_throws(
        [] {
            parse_workspace(R"({"contactForms":{"x":{
                "a1":[{"kind":"cos","frequency":1,"numerator":1,"denominator":0}],
                "a2":[]}}})");
        },
        "zero denominator accepted");
    s.check_throws(
        [] {
            parse_workspace(R"({"swTables":{"t":{"entries":[
                {"p":1,"r":0,"s":0,"value":1},
                {"p":1,"r":0,"s":0,"value":2}]}}})");
        },
        "duplicate (p, r, s) entry accepted");

    FormDef lam = doc.contact_forms.at("lambda0");
    lam.grid_size = grid;
    ToricContactForm l0 = instantiate_form(lam);
    OrbitCensus census = bourgeois_census(l0, kTwoPi * 1.2);
    auto gens = degree_zero_generators(census);
    std::string once = render_census_report("lambda0", l0, census, gens, OutputMode::Structured);
    std::string twice = render_census_report("lambda0", l0, census, gens, OutputMode::Structured);
    s.check(once == twice, "structured report not deterministic");
    s.check(once.find("\"bourgeoisAdmissible\": true") != std::string::npos,
            "structured report missing the admissibility flag");
    std::string table = render_census_report("lambda0", l0, census, gens, OutputMode::Table);
    s.check(table == render_census_report("lambda0", l0, census, gens, OutputMode::Table),
            "table report not deterministic");
    s.check(table.rfind("# basis order: (x, y, thetaBar)", 0) == 0,
            "table report does not open with the conventions banner");

    // The round form stays healthy even on a deliberately coarse grid.
    FormDef coarse_def = doc.contact_forms.at("lambda0");
    coarse_def.grid_size = 8;
    ToricContactForm coarse = instantiate_form(coarse_def);
    s.check(coarse.validation().ok, "round form failed on the coarse grid");
    s.check(find_families(coarse, kTwoPi * 1.2).size() == 4, "coarse-grid census disagrees");
    return s.finish();
}

} // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    std::vector<SuiteResult> out;
    const int grid = options.grid_size;

    {
        std::mt19937 rng(20260815u);
        out.push_back(suite_trig_ring(rng));
    }
    out.push_back(suite_contact_validation(grid));
    out.push_back(suite_reeb_normalization(grid));
    out.push_back(suite_census_oracle(grid));
    out.push_back(suite_census_degenerate());
    out.push_back(suite_degree_zero(grid));
    {
        std::mt19937 rng(7101u);
        out.push_back(suite_ech_laws(rng, options.h_convention));
    }
    {
        std::mt19937 rng(7102u);
        out.push_back(suite_ech_naturality(rng, options.h_convention));
    }
    {
        std::mt19937 rng(7103u);
        out.push_back(suite_surgery_product(rng));
    }
    {
        std::mt19937 rng(7104u);
        out.push_back(suite_sl3_completion(rng));
    }
    {
        std::mt19937 rng(7105u);
        out.push_back(suite_gromov_recovery(rng));
    }
    {
        std::mt19937 rng(7106u);
        out.push_back(suite_index_identities(rng));
    }
    out.push_back(suite_index_basic());
    out.push_back(suite_io_roundtrip(grid));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

} // namespace t3kit
