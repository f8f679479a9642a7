#include "t3kit/errors.hpp"
#include "t3kit/rootfind.hpp"
#include "t3kit/trigpoly.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace t3kit;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("product expands with the product-to-sum identities") {
    TrigPoly c = TrigPoly::cosine(1, rat(1));
    TrigPoly s = TrigPoly::sine(1, rat(1));

    TrigPoly c2 = c * c; // cos^2 t = 1/2 + 1/2 cos 2t
    CHECK(c2.constant_term() == rat(1, 2));
    CHECK(c2.cos_coeff(2) == rat(1, 2));
    CHECK(c2.cos_coeff(1) == rat(0));
    CHECK(c2.sin_coeff(2) == rat(0));

    TrigPoly sc = s * c; // sin t cos t = 1/2 sin 2t
    CHECK(sc.constant_term() == rat(0));
    CHECK(sc.sin_coeff(2) == rat(1, 2));

    // Pythagoras, exactly.
    CHECK((c * c + s * s) == TrigPoly::constant(rat(1)));
    CHECK((c * s) == (s * c));
}

TEST_CASE("derivative is exact and satisfies the Leibniz rule") {
    TrigPoly c3 = TrigPoly::cosine(3, rat(2, 5));
    TrigPoly d = c3.derivative(); // -6/5 sin 3t
    CHECK(d.sin_coeff(3) == rat(-6, 5));
    CHECK(d.cos_coeff(3) == rat(0));

    TrigPoly f = TrigPoly::cosine(1, rat(1));
    f.add_sin(2, rat(1, 3));
    TrigPoly g = TrigPoly::sine(1, rat(1));
    g.add_cos(3, rat(-2, 7));
    CHECK((f * g).derivative() == (f.derivative() * g + f * g.derivative()));
}

TEST_CASE("negative and zero frequencies fold into canonical form") {
    TrigPoly f;
    f.add_cos(-2, rat(1)); // cos(-2t) = cos(2t)
    CHECK(f.cos_coeff(2) == rat(1));
    TrigPoly g;
    g.add_sin(-2, rat(1)); // sin(-2t) = -sin(2t)
    CHECK(g.sin_coeff(2) == rat(-1));
    TrigPoly h;
    h.add_cos(0, rat(3)); // cos(0) = 1
    CHECK(h.is_constant());
    CHECK(h.constant_term() == rat(3));
    TrigPoly z;
    z.add_sin(0, rat(5)); // sin(0) = 0
    CHECK(z.is_zero());
}

TEST_CASE("exact quarter-period evaluation matches numeric evaluation") {
    TrigPoly f = TrigPoly::constant(rat(1, 3));
    f.add_cos(1, rat(1, 2));
    f.add_sin(1, rat(-2, 5));
    f.add_cos(2, rat(3, 7));
    f.add_sin(3, rat(1, 11));

    for (long long m = -8; m <= 8; ++m) {
        Rat exact = f.eval_quarter(m);
        CHECK(exact == f.eval_quarter(m + 4 * 2)); // period 2*pi = 4 quarters
        double numeric = f.eval(static_cast<double>(m) * kTwoPi / 4.0);
        CHECK(std::fabs(to_double(exact) - numeric) <= 1e-12);
    }

    // cos(m*pi/2) cycles 1, 0, -1, 0.
    TrigPoly c = TrigPoly::cosine(1, rat(1));
    CHECK(c.eval_quarter(0) == rat(1));
    CHECK(c.eval_quarter(1) == rat(0));
    CHECK(c.eval_quarter(2) == rat(-1));
    CHECK(c.eval_quarter(3) == rat(0));
}

TEST_CASE("sup bound dominates sampled values") {
    TrigPoly f = TrigPoly::constant(rat(-1, 4));
    f.add_cos(1, rat(2, 3));
    f.add_sin(2, rat(-1, 2));
    f.add_cos(5, rat(1, 9));
    double bound = to_double(f.sup_bound());
    for (double v : sample_uniform(f, 512)) CHECK(std::fabs(v) <= bound + 1e-12);
}

TEST_CASE("compiled evaluator agrees with the exact one") {
    TrigPoly f = TrigPoly::cosine(1, rat(3, 2));
    f.add_sin(4, rat(-5, 8));
    TrigPolyEval fast = compiled(f);
    for (int i = 0; i < 97; ++i) {
        double t = kTwoPi * i / 97.0;
        CHECK(std::fabs(fast(t) - f.eval(t)) <= 1e-14);
    }
}

TEST_CASE("periodic root finder brackets simple roots") {
    std::vector<double> cos_roots = periodic_roots(TrigPoly::cosine(1, rat(1)));
    REQUIRE(cos_roots.size() == 2);
    CHECK(std::fabs(cos_roots[0] - kTwoPi / 4.0) <= 1e-12);
    CHECK(std::fabs(cos_roots[1] - 3.0 * kTwoPi / 4.0) <= 1e-12);

    std::vector<double> sin_roots = periodic_roots(TrigPoly::sine(1, rat(1)));
    REQUIRE(sin_roots.size() == 2);
    CHECK(std::fabs(sin_roots[0] - 0.0) <= 1e-12);
    CHECK(std::fabs(sin_roots[1] - kTwoPi / 2.0) <= 1e-12);
}

TEST_CASE("off-grid tangent zero is refused, shifted version is fine") {
    // -1 + (3/5) cos t + (4/5) sin t = cos(t - atan2(4,3)) - 1 touches zero
    // tangentially at an angle that is not a grid point.
    TrigPoly tangent = TrigPoly::constant(rat(-1));
    tangent.add_cos(1, rat(3, 5));
    tangent.add_sin(1, rat(4, 5));
    CHECK_THROWS_AS((void)periodic_roots(tangent), RootFinderError);

    // Lowering the offset turns it into two honest crossings at
    // atan2(4,3) +- pi/3.
    TrigPoly crossing = TrigPoly::constant(rat(-1, 2));
    crossing.add_cos(1, rat(3, 5));
    crossing.add_sin(1, rat(4, 5));
    std::vector<double> roots = periodic_roots(crossing);
    REQUIRE(roots.size() == 2);
    double center = std::atan2(4.0, 3.0);
    double third = kTwoPi / 6.0;
    // Sorted within [0, 2*pi): center - pi/3 wraps past zero.
    CHECK(std::fabs(roots[0] - (center + third)) <= 1e-10);
    CHECK(std::fabs(roots[1] - (center - third + kTwoPi)) <= 1e-10);
}

TEST_CASE("zero polynomial is rejected by the root finder") {
    CHECK_THROWS_AS((void)periodic_roots(TrigPoly()), ValidationError);
}
