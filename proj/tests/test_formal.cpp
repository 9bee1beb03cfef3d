#include <doctest.h>

#include "basket3/formal.hpp"

using namespace basket3;

namespace {

PlurigenusVector vec(int64_t chi, std::vector<int64_t> p2up) {
    PlurigenusVector v;
    v.chi = chi;
    v.p = {0, 0};
    v.p.insert(v.p.end(), p2up.begin(), p2up.end());
    return v;
}

}  // namespace

TEST_CASE("volume") {
    CHECK(volume({Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)"), 1, 0}) == rat(1, 420));
    CHECK(volume({Basket::parse("(4,10),(1,3),(2,7),(2,8)"), 1, 0}) == rat(1, 210));
    CHECK(volume({Basket{}, -1, 4}) == 2);
}

TEST_CASE("plurigenus recursion") {
    FormalBasket I1{Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)"), 1, 0};
    CHECK(plurigenus(I1, 18) == 2);
    for (int64_t m = 4; m <= 17; m++) CHECK(plurigenus(I1, m) <= 1);
    CHECK(m0(I1) == 18);

    CHECK(plurigenus({Basket{}, 0, 0}, 3) == 0);

    // agrees with the closed form
    auto P = plurigenus_range(I1, 40);
    for (int64_t m = 2; m <= 40; m++)
        CHECK(Rat(P[static_cast<size_t>(m)]) == reid_plurigenus(volume(I1), 1, I1.basket, m));
}

TEST_CASE("admissibility and positivity") {
    FormalBasket I1{Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)"), 1, 0};
    CHECK(is_positive(I1));
    CHECK(is_admissible(I1));

    // the case VIII-ii B^(5) has volume exactly 0
    FormalBasket z{Basket::parse("(1,2),(2,5),3x(1,3),2x(1,4),(1,5)"), 1, 0};
    CHECK_FALSE(is_positive(z));

    CHECK(is_positive({Basket{}, -1, 4}));
}

TEST_CASE("linear forms from plurigenera") {
    auto inv = invariants_from_plurigenera(vec(1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(inv.sigma == 10);
    CHECK(inv.tau == 4);
    CHECK(inv.d[3] == 5);
    CHECK(inv.d[4] == 14);

    // case VIII: chi = 1, P_3 = P_4 = P_5 = P_6 = 1
    inv = invariants_from_plurigenera(vec(1, {0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(inv.sigma == 9);
    CHECK(inv.tau == 3);
    CHECK(inv.d[3] == 2);
    CHECK(inv.d[4] == 8);

    inv = invariants_from_plurigenera(vec(0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(inv.sigma == 0);
    for (int n = 3; n <= 12; n++) CHECK(inv.d[n] == 0);
}

TEST_CASE("initial coefficients") {
    PackingParameters none;
    auto c = initial_coeffs(vec(1, {0, 0, 0, 0, 0}), none);
    REQUIRE(c.has_value());
    CHECK(c->to_basket() == Basket::parse("5x(1,2),4x(1,3),(1,4)"));

    PackingParameters one5;
    one5.n15 = 1;
    c = initial_coeffs(vec(1, {0, 0, 0, 0, 1}), one5);
    REQUIRE(c.has_value());
    CHECK(c->to_basket() == Basket::parse("5x(1,2),4x(1,3),(1,5)"));

    // case V with four tail entries is infeasible (n^0_{1,4} < 0)
    PackingParameters v4;
    v4.n15 = 4;
    CHECK_FALSE(initial_coeffs(vec(1, {0, 0, 1, 0, 1}), v4).has_value());

    // case V-iii (two tail entries) is feasible at level 0 but dies at level 5
    PackingParameters viii;
    viii.n15 = 2;
    CHECK(initial_coeffs(vec(1, {0, 0, 1, 0, 1}), viii).has_value());
    CHECK_FALSE(b_level_coeffs(vec(1, {0, 0, 1, 0, 1, 0}), viii, 5).has_value());
}

TEST_CASE("level coefficients") {
    PackingParameters none;
    auto c5 = b_level_coeffs(vec(1, {0, 0, 0, 0, 0}), none, 5);
    REQUIRE(c5.has_value());
    CHECK(c5->values() == std::vector<int64_t>{3, 2, 2, 1, 0});

    // worked example: chi=2, P_8 = P_12 = 1, zeta = 1
    PackingParameters p;
    p.zeta = 1;
    auto c12 = b_level_coeffs(vec(2, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0}), p, 12);
    REQUIRE(c12.has_value());
    CHECK(c12->values() ==
          std::vector<int64_t>{4, 0, 1, 0, 0, 2, 1, 0, 3, 0, 0, 0, 2, 0, 0});
    CHECK(c12->to_basket() == Basket::parse("4x(1,2),(4,9),2x(2,5),(3,8),3x(1,3),2x(1,4)"));

    auto zero = b_level_coeffs(vec(0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), none, 12);
    REQUIRE(zero.has_value());
    CHECK(zero->to_basket().empty());

    // Assumption 5.6 enforced for levels >= 8
    PackingParameters tail6;
    tail6.tail[6] = 1;
    CHECK_THROWS(b_level_coeffs(vec(1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), tail6, 8));
}

TEST_CASE("epsilon formulas") {
    PackingParameters none;
    auto e = epsilon_formulas(vec(1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), none);
    CHECK(e.e5 == 2);
    CHECK(e.e6_residual == 0);

    // case VII: epsilon_5 = 2 exceeds the two (1,2) available
    auto e7 = epsilon_formulas(vec(1, {0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}), none);
    CHECK(e7.e5 == 2);
    auto b5 = b_level_coeffs(vec(1, {0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}), none, 5);
    CHECK_FALSE(b5.has_value());

    auto z = epsilon_formulas(vec(0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), none);
    CHECK(z.e5 == 0);
    CHECK(z.e7 == 0);
    CHECK(z.e12 == 0);
}

TEST_CASE("round trip through canonical approximation") {
    // for a basket satisfying Assumption 5.6, the closed-form level vectors
    // reproduce the actual approximations once the packing counts are read off
    Basket B = Basket::parse("2x(1,2),(4,9),(3,8),(2,7),(1,4),(1,5)");
    FormalBasket fb{B, 3, 0};
    auto v = plurigenus_vector(fb, 13);
    PackingParameters p;
    Basket b7 = canonical_approx(B, 7);
    for (const auto& e : b7.entries())
        if (e.s == SingleBasket{2, 7}) p.eta = e.mult;
    Basket b11 = canonical_approx(B, 11);
    for (const auto& e : b11.entries()) {
        if (e.s == SingleBasket{5, 11}) p.alpha = e.mult;
        if (e.s == SingleBasket{4, 11}) p.beta = e.mult;
    }
    Basket b9 = canonical_approx(B, 9);
    for (const auto& e : b9.entries())
        if (e.s == SingleBasket{4, 9}) p.zeta = e.mult;
    p.zeta += p.alpha;
    Basket b0 = initial_basket(B);
    for (const auto& e : b0.entries())
        if (e.s == SingleBasket{1, 5}) p.n15 = e.mult;

    for (int64_t lvl : {5, 7, 8, 9, 10, 11, 12}) {
        auto c = b_level_coeffs(v, p, lvl);
        REQUIRE(c.has_value());
        CHECK(c->to_basket() == canonical_approx(B, lvl));
    }
    auto c0 = initial_coeffs(v, p);
    REQUIRE(c0.has_value());
    CHECK(c0->to_basket() == initial_basket(B));
}

TEST_CASE("geometric filters") {
    // chi=1: exactly the eight admissible (P3..P6) patterns survive
    int count = 0;
    for (int p3 = 0; p3 <= 1; p3++)
        for (int p4 = 0; p4 <= 1; p4++)
            for (int p5 = 0; p5 <= 1; p5++)
                for (int p6 = 0; p6 <= 1; p6++)
                    if (geometric_filters(vec(1, {0, p3, p4, p5, p6}))) count++;
    CHECK(count == 8);

    CHECK_FALSE(geometric_filters(vec(1, {1, 0, 0, 0, 0})));  // P4 >= P2 + P2 fails
    CHECK(geometric_filters(vec(1, {0, 0, 0, 0, 0})));

    // multiplicativity readings differ when a value >= 2 appears
    PlurigenusVector v;
    v.chi = 2;
    v.p.assign(25, 0);
    v.p[6] = 1;
    v.p[16] = 2;
    v.p[22] = 1;
    // P_22 = 1 < P_6 * P_16 = 2: both readings reject
    CHECK_FALSE(multiplicativity_holds(v, 6, 16, MultiplicativityReading::LiteralProduct));
    CHECK_FALSE(multiplicativity_holds(v, 6, 16, MultiplicativityReading::MaxWhenOtherPositive));
    // P_2 = 0 factor: both readings are vacuous there
    CHECK(multiplicativity_holds(v, 2, 16, MultiplicativityReading::LiteralProduct));
    CHECK(multiplicativity_holds(v, 2, 16, MultiplicativityReading::MaxWhenOtherPositive));
    // both factors > 1: the literal rule is vacuous, the max reading is not
    v.p[6] = 2;
    v.p[16] = 3;
    CHECK(multiplicativity_holds(v, 6, 16, MultiplicativityReading::LiteralProduct));
    CHECK_FALSE(multiplicativity_holds(v, 6, 16, MultiplicativityReading::MaxWhenOtherPositive));
}
