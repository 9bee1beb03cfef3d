#include <doctest.h>

#include "basket3/packing.hpp"

using namespace basket3;

TEST_CASE("pack basics") {
    Basket B = Basket::parse("(1,2),(1,3)");
    Basket P = pack(B, {{1, 2}, {1, 3}, true});
    CHECK(P.str() == "(2,5)");
    CHECK(sigma_prime(B) - sigma_prime(P) == rat(1, 30));

    // slope-equal sources just regroup; sigma' drop is 0
    Basket T = Basket::parse("2x(1,2)");
    CHECK(pack(T, {{1, 2}, {1, 2}, false}).str() == "2x(1,2)");
    CHECK(sigma_prime_drop({{1, 2}, {1, 2}, false}) == 0);

    // case-I chain: packing (1,2)+(2,5) inside B^(5) produces (3,7)
    Basket B5 = Basket::parse("3x(1,2),2x(2,5),2x(1,3),(1,4)");
    Basket I1 = pack(B5, {{1, 2}, {2, 5}, true});
    CHECK(I1 == Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)").normalized());

    CHECK_THROWS_AS(pack(B, {{1, 2}, {1, 4}, false}), BasketError);
}

TEST_CASE("convenient packings") {
    auto steps = convenient_packings(Basket::parse("(1,2),(1,3)"));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].result() == SingleBasket{2, 5});

    CHECK(convenient_packings(Basket::parse("2x(1,2)")).empty());

    steps = convenient_packings(Basket::parse("(1,3),(1,4)"));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].result() == SingleBasket{2, 7});
}

TEST_CASE("farey brackets") {
    auto br = farey_interval(4, 2, 5);
    REQUIRE(br.around.has_value());
    CHECK(br.around->lower == Fraction{1, 3});
    CHECK(br.around->upper == Fraction{1, 2});

    br = farey_interval(5, 2, 5);
    REQUIRE(br.exact.has_value());
    CHECK(*br.exact == Fraction{2, 5});

    br = farey_interval(7, 5, 13);
    REQUIRE(br.around.has_value());
    CHECK(br.around->lower == Fraction{1, 3});
    CHECK(br.around->upper == Fraction{2, 5});

    // generalized input reduces first: 2/4 = 1/2 is an exact point of S^(0)
    br = farey_interval(0, 2, 4);
    REQUIRE(br.exact.has_value());
    CHECK(*br.exact == Fraction{1, 2});

    CHECK_THROWS(farey_interval(5, 3, 5));
    CHECK_THROWS(farey_interval(5, 0, 5));
}

TEST_CASE("initial basket") {
    CHECK(initial_basket(Basket::parse("(2,5)")) == Basket::parse("(1,2),(1,3)"));
    CHECK(initial_basket(Basket::parse("(1,7)")) == Basket::parse("(1,7)"));
    CHECK(initial_basket(Basket::parse("(5,13)")) == Basket::parse("2x(1,2),3x(1,3)"));
}

TEST_CASE("canonical approximation") {
    // baskets whose slopes already lie in S^(n) are fixed points
    Basket caseI_B0 = Basket::parse("5x(1,2),4x(1,3),(1,4)");
    CHECK(canonical_approx(caseI_B0, 5) == caseI_B0);

    // the level-5 approximation of the case-I minimal baskets is the case B^(5)
    Basket I1 = Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)");
    CHECK(canonical_approx(I1, 5) == Basket::parse("3x(1,2),2x(2,5),2x(1,3),(1,4)"));

    Basket B = Basket::parse("(5,13),(3,7)");
    CHECK(canonical_approx(B, 13) == B.normalized());
    CHECK(canonical_approx(Basket::parse("(5,13)"), 5) == Basket::parse("2x(2,5),(1,3)"));
}

TEST_CASE("epsilon_n") {
    // two (2,5) entries appear at level 5 for the case-I baskets
    Basket caseI_B5 = Basket::parse("3x(1,2),2x(2,5),2x(1,3),(1,4)");
    CHECK(epsilon_n(caseI_B5, 5) == 2);
    CHECK(epsilon_n(Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)"), 5) == 2);
    CHECK(epsilon_n(Basket::parse("(1,9)"), 5) == 0);
    CHECK(epsilon_n(Basket::parse("(1,9)"), 9) == 0);
    CHECK(epsilon_n(Basket::parse("(2,5)"), 5) == 1);
    CHECK(delta(canonical_approx(Basket::parse("(2,5)"), 4), 5) == 6);
}

TEST_CASE("dominates") {
    Basket B = Basket::parse("(3,8),(2,7)");
    CHECK(dominates(initial_basket(B), B));
    CHECK(dominates(B, B));
    CHECK_FALSE(dominates(Basket::parse("(2,5)"), Basket::parse("(1,2),(1,3)")));
    CHECK_FALSE(dominates(Basket::parse("(1,2),(1,3)"), Basket::parse("(2,5),(1,3)")));
    // a non-convenient merge is still a packing
    CHECK(dominates(Basket::parse("(1,2),(1,4)"), Basket::parse("2x(1,3)")));
}
