#include "t3kit/ech.hpp"
#include "t3kit/errors.hpp"
#include "t3kit/surgery.hpp"

#include <doctest.h>

using namespace t3kit;

TEST_CASE("h reduces a lattice vector mod 2 into the (x, y) plane") {
    CHECK(h_class(1, 0) == EchZeroClass{true, false, false});
    CHECK(h_class(0, 1) == EchZeroClass{false, true, false});
    CHECK(h_class(2, 3) == EchZeroClass{false, true, false});
    CHECK(h_class(-5, 7) == EchZeroClass{true, true, false});
    CHECK(h_class(0, 0) == EchZeroClass{});
    CHECK(h_class(4, -2) == EchZeroClass{}); // even vectors land on the identity
}

TEST_CASE("h is a homomorphism on a few hand cases") {
    CHECK(h_class(1, 0) + h_class(0, 1) == h_class(1, 1));
    CHECK(h_class(1, 1) + h_class(1, 1) == EchZeroClass{});
    CHECK(h_class(3, 5) + h_class(2, -4) == h_class(5, 1));
}

TEST_CASE("the contact invariant is the thetaBar generator and stays put") {
    CHECK(contact_invariant() == EchZeroClass{false, false, true});
    for (long long r = -3; r <= 3; ++r)
        for (long long s = -3; s <= 3; ++s) {
            TorusDiffeo f = complete_sl3(1, r, s);
            CHECK(act_contactomorphism(f, contact_invariant()) == contact_invariant());
        }
}

TEST_CASE("pushing forward along a surgery shifts the thetaBar bit") {
    TorusDiffeo f = complete_sl3(1, 1, 0);
    CHECK(act_contactomorphism(f, EchZeroClass{true, false, false}) ==
          EchZeroClass{true, false, true});
    CHECK(act_contactomorphism(f, EchZeroClass{false, true, false}) ==
          EchZeroClass{false, true, false});

    TorusDiffeo g = complete_sl3(1, 2, 3);
    // r = 2 is even, so only the y bit feeds the shift.
    CHECK(act_contactomorphism(g, EchZeroClass{true, true, false}) ==
          EchZeroClass{true, true, true});
    CHECK(act_contactomorphism(g, EchZeroClass{true, false, true}) ==
          EchZeroClass{true, false, true});
}

TEST_CASE("only gluings with p = 1 act on the degree-zero homology") {
    TorusDiffeo f = complete_sl3(2, 1, 0);
    CHECK_THROWS_AS((void)act_contactomorphism(f, contact_invariant()), ValidationError);
}

TEST_CASE("surgery counts assemble into the invariant class") {
    // All three counts odd: the differences vanish and only thetaBar remains.
    GrTriple t = gr_from_surgeries(true, true, true);
    CHECK(t.as_class() == EchZeroClass{false, false, true});

    // Only the (1,1,0) surgery flips parity: the x coefficient is 1.
    CHECK(gr_from_surgeries(false, true, false).as_class() ==
          EchZeroClass{true, false, false});
    CHECK(gr_from_surgeries(false, false, true).as_class() ==
          EchZeroClass{false, true, false});
    CHECK(gr_from_surgeries(true, false, false).as_class() ==
          EchZeroClass{true, true, true});
    CHECK(gr_from_surgeries(false, false, false).as_class() == EchZeroClass{});
}

TEST_CASE("classes print in both coordinate and sum form") {
    CHECK(format_class_triple(EchZeroClass{false, false, true}) == "(0,0,1)");
    CHECK(format_class_sum(EchZeroClass{false, false, true}) == "thetaBar");
    CHECK(format_class_triple(EchZeroClass{true, false, true}) == "(1,0,1)");
    CHECK(format_class_sum(EchZeroClass{true, false, true}) == "x + thetaBar");
    CHECK(format_class_sum(EchZeroClass{true, true, false}) == "x + y");
    CHECK(format_class_sum(EchZeroClass{}) == "0");
}
