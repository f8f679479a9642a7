#include "t3kit/census.hpp"
#include "t3kit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <utility>
#include <vector>

using namespace t3kit;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ToricContactForm lambda0() {
    return ToricContactForm(TrigPoly::cosine(1, rat(1)), TrigPoly::sine(1, rat(1)), 4096);
}

ToricContactForm ellipse() {
    return ToricContactForm(TrigPoly::cosine(1, rat(2)), TrigPoly::sine(1, rat(3)), 4096);
}

ToricContactForm wobble() {
    TrigPoly a1 = TrigPoly::cosine(1, rat(1));
    a1.add_cos(2, rat(1, 4));
    TrigPoly a2 = TrigPoly::sine(1, rat(1));
    a2.add_sin(2, rat(1, 4));
    return ToricContactForm(a1, a2, 4096);
}

std::set<std::pair<long long, long long>> class_set(const std::vector<MorseBottFamily>& fams) {
    std::set<std::pair<long long, long long>> out;
    for (const MorseBottFamily& f : fams) out.insert({f.cls.m, f.cls.n});
    return out;
}

} // namespace

TEST_CASE("round form: four coordinate families just above one loop") {
    std::vector<MorseBottFamily> fams = find_families(lambda0(), kTwoPi * 1.2);
    REQUIRE(fams.size() == 4);
    CHECK(class_set(fams) ==
          std::set<std::pair<long long, long long>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    for (const MorseBottFamily& f : fams) {
        CHECK(std::fabs(f.action - kTwoPi) <= 1e-9);
        CHECK(f.rotation_sign == 1);
        CHECK(std::fabs(f.rotation - 1.0) <= 1e-9);
    }
    // Sorted by (action, m, n, theta0); each class pins its own angle.
    CHECK(fams[0].cls == OrbitClass{-1, 0});
    CHECK(std::fabs(fams[0].theta0 - kTwoPi / 2.0) <= 1e-9);
    CHECK(fams[3].cls == OrbitClass{1, 0});
    CHECK(std::fabs(fams[3].theta0 - 0.0) <= 1e-9);
}

TEST_CASE("round form: diagonal families join at the next circumference") {
    std::vector<MorseBottFamily> fams = find_families(lambda0(), kTwoPi * 1.5);
    REQUIRE(fams.size() == 8);
    std::size_t diagonals = 0;
    for (const MorseBottFamily& f : fams)
        if (std::llabs(f.cls.m) == 1 && std::llabs(f.cls.n) == 1) {
            ++diagonals;
            CHECK(std::fabs(f.action - kTwoPi * std::sqrt(2.0)) <= 1e-9);
        }
    CHECK(diagonals == 4);
    CHECK_THROWS_AS((void)find_families(lambda0(), 0.0), ValidationError);
}

TEST_CASE("census splits every family into a hyperbolic/elliptic pair") {
    OrbitCensus census = bourgeois_census(lambda0(), kTwoPi * 1.5);
    CHECK(census.bourgeois_admissible);
    CHECK(census.l_flat_asserted);
    REQUIRE(census.orbits.size() == 2 * census.families.size());
    for (std::size_t i = 0; i < census.families.size(); ++i) {
        const PerturbedOrbit& hyp = census.orbits[2 * i];
        const PerturbedOrbit& ell = census.orbits[2 * i + 1];
        CHECK(hyp.kind == OrbitKind::PositiveHyperbolic);
        CHECK(ell.kind == OrbitKind::Elliptic);
        CHECK(hyp.cls == census.families[i].cls);
        CHECK(ell.cls == census.families[i].cls);
        CHECK(hyp.limit_action == census.families[i].action);
        CHECK(ell.limit_action == census.families[i].action);
        CHECK(ell.l_positive);
        CHECK(ell.family_index == i);
    }
}

TEST_CASE("degree-zero generators grow 3, 5, 9 with the cutoff") {
    {
        std::vector<DegreeZeroGenerator> gens =
            degree_zero_generators(bourgeois_census(lambda0(), kTwoPi * 1.2));
        REQUIRE(gens.size() == 3);
        CHECK(gens[0].empty_set);
        CHECK(gens[0].total_action == 0.0);
        CHECK(gens[1].pair_class == OrbitClass{0, 1});
        CHECK(gens[2].pair_class == OrbitClass{1, 0});
        CHECK(std::fabs(gens[1].total_action - 2.0 * kTwoPi) <= 1e-9);
    }
    CHECK(degree_zero_generators(bourgeois_census(lambda0(), kTwoPi * 1.5)).size() == 5);
    {
        std::vector<DegreeZeroGenerator> gens =
            degree_zero_generators(bourgeois_census(lambda0(), kTwoPi * 2.9));
        REQUIRE(gens.size() == 9);
        std::set<std::pair<long long, long long>> classes;
        for (const DegreeZeroGenerator& g : gens)
            if (!g.empty_set) classes.insert({g.pair_class.m, g.pair_class.n});
        CHECK(classes == std::set<std::pair<long long, long long>>{
                             {0, 1}, {1, 0}, {1, 1}, {1, -1}, {1, 2}, {1, -2}, {2, 1}, {2, -1}});
    }
}

TEST_CASE("integrated flow confirms the censused closures") {
    ToricContactForm form = lambda0();
    std::vector<FlowClosure> closures = numeric_flow_oracle(form, 0.0, 14.0);
    REQUIRE(closures.size() == 2);
    CHECK(closures[0].m == 1);
    CHECK(closures[0].n == 0);
    CHECK(closures[0].multiplicity == 1);
    CHECK(closures[0].primitive == OrbitClass{1, 0});
    CHECK(std::fabs(closures[0].period - kTwoPi) <= 1e-9);
    CHECK(closures[1].m == 2);
    CHECK(closures[1].multiplicity == 2);
    CHECK(std::fabs(closures[1].period - 2.0 * kTwoPi) <= 1e-9);

    // A generic start angle gives an irrational direction: nothing closes.
    CHECK(numeric_flow_oracle(form, 1.0, 14.0).empty());
}

TEST_CASE("elliptical form: twelve families below cutoff 32, all admissible") {
    OrbitCensus census = bourgeois_census(ellipse(), 32.0);
    REQUIRE(census.families.size() == 12);
    CHECK(census.orbits.size() == 24);
    CHECK(census.bourgeois_admissible);
    for (const MorseBottFamily& f : census.families) {
        CHECK(f.rotation_sign == 1);
        // action = 2*pi*|(2m, 3n)| on this path.
        double expect = kTwoPi * std::hypot(2.0 * f.cls.m, 3.0 * f.cls.n);
        CHECK(std::fabs(f.action - expect) <= 1e-9);
    }
    for (const PerturbedOrbit& orb : census.orbits)
        if (orb.kind == OrbitKind::Elliptic) CHECK(orb.l_positive);
}

TEST_CASE("vanishing twist at a family blocks the splitting step") {
    ToricContactForm form = wobble();
    std::vector<MorseBottFamily> fams = find_families(form, 5.0);
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].cls == OrbitClass{-1, 0});
    CHECK(std::fabs(fams[0].theta0 - kTwoPi / 2.0) <= 1e-9);
    CHECK(std::fabs(fams[0].action - 0.75 * kTwoPi) <= 1e-9);
    CHECK(fams[0].rotation_sign == 0);
    CHECK_THROWS_AS((void)bourgeois_census(form, 5.0), HypothesisViolationError);
    CHECK_THROWS_AS((void)degree_zero_generators(OrbitCensus{}), ValidationError);
}

TEST_CASE("census refuses invalid forms") {
    ToricContactForm bad(TrigPoly::constant(rat(1)), TrigPoly::constant(rat(0)), 4096);
    CHECK_THROWS_AS((void)find_families(bad, 10.0), ValidationError);
    CHECK_THROWS_AS((void)numeric_flow_oracle(bad, 0.0, 5.0), ValidationError);
}
