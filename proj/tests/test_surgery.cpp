#include "t3kit/errors.hpp"
#include "t3kit/surgery.hpp"

#include <doctest.h>

#include <vector>

using namespace t3kit;

TEST_CASE("completion carries the requested bottom row and determinant one") {
    TorusDiffeo f = complete_sl3(5, 4, 7);
    CHECK(f.h2.det() == 1);
    Vec3 row = f.h2.row(2);
    CHECK(row[0] == 4);
    CHECK(row[1] == 7);
    CHECK(row[2] == 5);
    CHECK(f.h1 == f.h2.inverse_transpose());
    CHECK(f.h1.det() == 1);
}

TEST_CASE("non-primitive triples admit no completion") {
    CHECK_THROWS_AS((void)complete_sl3(0, 0, 0), ValidationError);
    CHECK_THROWS_AS((void)complete_sl3(2, 4, 6), ValidationError);
    CHECK_THROWS_AS((void)complete_sl3(-3, 9, 0), ValidationError);
}

TEST_CASE("p = 1 completions are the shear normal form") {
    TorusDiffeo f = complete_sl3(1, 2, 3);
    Mat3 h2 = Mat3::identity();
    h2.at(2, 0) = 2;
    h2.at(2, 1) = 3;
    CHECK(f.h2 == h2);
    Mat3 h1 = Mat3::identity();
    h1.at(0, 2) = -2;
    h1.at(1, 2) = -3;
    CHECK(f.h1 == h1);
    CHECK(is_luttinger(f));
    CHECK_FALSE(is_luttinger(complete_sl3(2, 1, 0)));
}

TEST_CASE("worked example: surgery (5,4,7) on the invariant (2,-1,3)") {
    LocalTorusInvariant swl = assemble_swl(3, 2, -1); // ambient 3, degrees (2, -1)
    CHECK(swl.a == 2);
    CHECK(swl.b == -1);
    CHECK(swl.c == 3);
    TorusDiffeo f = complete_sl3(5, 4, 7);
    CHECK(predict_surgery(swl, f) == 16); // 4*2 + 7*(-1) + 5*3
    ProductFormulaResult closed = product_formula(swl, 5, 4, 7);
    CHECK(closed.value == 16);
    CHECK(closed.realizable);
}

TEST_CASE("closed formula is defined even for unrealizable triples") {
    LocalTorusInvariant swl = assemble_swl(1, 1, 1);
    ProductFormulaResult res = product_formula(swl, 2, 4, 6);
    CHECK(res.value == 2 + 4 + 6);
    CHECK_FALSE(res.realizable);
}

TEST_CASE("the three coordinate surgeries project out the three entries") {
    LocalTorusInvariant swl = assemble_swl(7, 1, 2);
    CHECK(predict_surgery(swl, complete_sl3(1, 0, 0)) == 7);
    CHECK(predict_surgery(swl, complete_sl3(0, 1, 0)) == 1);
    CHECK(predict_surgery(swl, complete_sl3(0, 0, 1)) == 2);
    CHECK(phi_n(Vec3{{9, 8, 7}}) == 7);
}

TEST_CASE("two coordinate equations pin the mod-2 degrees") {
    std::vector<GromovEquation> eqs = {{1, 0, true}, {0, 1, false}};
    GromovSolution sol = solve_gromov(false, eqs);
    CHECK(sol.status == GromovSolution::Status::Unique);
    CHECK(sol.a == true);
    CHECK(sol.b == false);
    CHECK(sol.a_pinned);
    CHECK(sol.b_pinned);
    CHECK(sol.free_directions.empty());

    // Same data with the base count flipped: the solution flips too.
    GromovSolution flipped = solve_gromov(true, eqs);
    CHECK(flipped.a == false);
    CHECK(flipped.b == true);
}

TEST_CASE("a single equation leaves one free direction") {
    GromovSolution sol = solve_gromov(false, {{1, 0, true}});
    CHECK(sol.status == GromovSolution::Status::Underdetermined);
    CHECK(sol.a == true);
    CHECK(sol.a_pinned);
    CHECK_FALSE(sol.b_pinned);
    REQUIRE(sol.free_directions.size() == 1);
    CHECK(sol.free_directions[0] == std::pair<bool, bool>{false, true});

    GromovSolution diag = solve_gromov(false, {{1, 1, false}});
    CHECK(diag.status == GromovSolution::Status::Underdetermined);
    CHECK_FALSE(diag.a_pinned);
    CHECK_FALSE(diag.b_pinned);
    REQUIRE(diag.free_directions.size() == 1);
    CHECK(diag.free_directions[0] == std::pair<bool, bool>{true, true});
}

TEST_CASE("contradictions come with a minimal certificate") {
    try {
        solve_gromov(false, {{1, 0, false}, {1, 0, true}});
        FAIL("expected a contradiction");
    } catch (const GromovContradictionError& e) {
        CHECK(e.conflict == std::vector<std::size_t>{0, 1});
    }
    try {
        // 2a + 2b is zero mod 2, so demanding an odd value is self-contradictory.
        solve_gromov(false, {{2, 2, true}});
        FAIL("expected a contradiction");
    } catch (const GromovContradictionError& e) {
        CHECK(e.conflict == std::vector<std::size_t>{0});
    }
    CHECK_THROWS_AS((void)solve_gromov(false, {}), ValidationError);
}

TEST_CASE("composition multiplies both homology actions") {
    TorusDiffeo f = complete_sl3(3, 1, 2);
    TorusDiffeo g = complete_sl3(2, 0, 1);
    Mat3 prod = f.h2 * g.h2;
    CHECK(prod.det() == 1);
    CHECK(prod.inverse_transpose() == f.h1 * g.h1);
}
