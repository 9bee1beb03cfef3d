#include <doctest.h>

#include <numeric>
#include <random>

#include "basket3/basket.hpp"

using namespace basket3;

TEST_CASE("rational formatting") {
    CHECK(to_string(rat(4, 8)) == "1/2");
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_string(rat(6, 3)) == "2");
    CHECK(parse_rat("1681/420") == rat(1681, 420));
    CHECK(parse_rat("7") == rat(7, 1));
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("parse and canonical order") {
    Basket B = Basket::parse("5x(1,2),4x(1,3),(1,4)");
    CHECK(B.str() == "5x(1,2),4x(1,3),(1,4)");
    CHECK(B.size() == 10);

    // canonical order sorts by descending slope, ties by ascending r
    Basket C = Basket::parse("(1,4),(2,5),(1,2),(3,7)");
    CHECK(C.str() == "(1,2),(3,7),(2,5),(1,4)");

    // duplicates merge
    CHECK(Basket::parse("(1,2),(1,2)").str() == "2x(1,2)");

    CHECK(Basket::parse("").empty());
    CHECK_THROWS_AS(Basket::parse("(2,3)"), BasketError);   // 2b > r
    CHECK_THROWS_AS(Basket::parse("(0,4)"), BasketError);
    CHECK_THROWS_AS(Basket::parse("(1,2"), BasketError);
    CHECK_THROWS_AS(Basket::parse("x(1,2)"), BasketError);
}

TEST_CASE("normalize splits generalized entries") {
    CHECK(Basket::parse("(2,4)").normalized().str() == "2x(1,2)");
    CHECK(Basket::parse("(1,2)").normalized().str() == "(1,2)");
    CHECK(Basket::parse("(4,10),(2,6)").normalized().str() == "2x(2,5),2x(1,3)");

    // normalization preserves the invariants (Cor. 4.8), fuzzed over random
    // generalized baskets
    std::mt19937_64 gen(7);
    for (int t = 0; t < 200; t++) {
        std::vector<BasketEntry> es;
        int64_t k = 1 + static_cast<int64_t>(gen() % 5);
        for (int64_t i = 0; i < k; i++) {
            int64_t r = 2 + static_cast<int64_t>(gen() % 19);
            int64_t b = 1 + static_cast<int64_t>(gen() % static_cast<uint64_t>(std::max<int64_t>(r / 2, 1)));
            if (2 * b > r) b = r / 2;
            int64_t m = 1 + static_cast<int64_t>(gen() % 3);
            es.push_back({{b * m, r * m}, 1 + static_cast<int64_t>(gen() % 2)});
        }
        Basket G(std::move(es));
        Basket N = G.normalized();
        CHECK(N.is_reduced());
        CHECK(sigma(G) == sigma(N));
        CHECK(sigma_prime(G) == sigma_prime(N));
        for (int64_t n = 2; n <= 30; n++) CHECK(delta(G, n) == delta(N, n));
    }
}

TEST_CASE("sigma and sigma'") {
    CHECK(sigma(Basket::parse("5x(1,2),4x(1,3),(1,4)")) == 10);
    CHECK(sigma(Basket{}) == 0);
    CHECK(sigma(Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)")) == 10);

    CHECK(sigma_prime(Basket::parse("(1,2),(1,3)")) == rat(5, 6));
    CHECK(sigma_prime(Basket{}) == 0);
    CHECK(sigma_prime(Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)")) == rat(1681, 420));
}

TEST_CASE("delta") {
    CHECK(delta(Basket::parse("(3,7)"), 2) == 0);
    CHECK(delta(Basket::parse("(1,2)"), 3) == 1);
    CHECK(delta(Basket::parse("(1,2),(1,3)"), 5) == 6);
    CHECK(delta(Basket::parse("(2,5)"), 5) == 5);
    CHECK_THROWS(delta(Basket::parse("(1,2)"), 1));
}

TEST_CASE("delta residue identity") {
    // jb(r-jb)/2r with jb mod r, minus the same without reduction, is Delta^j
    for (int64_t r = 2; r <= 20; r++)
        for (int64_t b = 1; 2 * b <= r; b++) {
            if (std::gcd(b, r) != 1) continue;
            Basket B = Basket::parse("(" + std::to_string(b) + "," + std::to_string(r) + ")");
            for (int64_t j = 2; j <= 30; j++) {
                int64_t jb = (j * b) % r;
                Rat lhs = rat(jb * (r - jb), 2 * r) - rat(j * b * (r - j * b), 2 * r);
                CHECK(lhs == rat(delta(B, j), 1));
            }
        }
}

TEST_CASE("reid correction term") {
    CHECK(reid_correction(Basket::parse("(1,2)"), 2) == rat(1, 4));
    CHECK(reid_correction(Basket::parse("(3,7),(2,5)"), 1) == 0);
    CHECK(reid_correction(Basket::parse("(2,5)"), 3) == 1);

    // l(2) = (sigma - sigma')/2, and l is computed on the normalized form
    Basket B = Basket::parse("(2,4),(3,7)");
    CHECK(reid_correction(B, 2) == (rat(sigma(B), 1) - sigma_prime(B)) / 2);

    // monotone in m, and l(m+2) - l(m) - l(2) >= 0
    for (int64_t r = 2; r <= 20; r++)
        for (int64_t b = 1; 2 * b <= r; b++) {
            if (std::gcd(b, r) != 1) continue;
            Basket Q = Basket::parse("(" + std::to_string(b) + "," + std::to_string(r) + ")");
            Rat l2 = reid_correction(Q, 2);
            for (int64_t m = 2; m <= 30; m++) {
                CHECK(reid_correction(Q, m + 1) >= reid_correction(Q, m));
                CHECK(reid_correction(Q, m + 2) - reid_correction(Q, m) - l2 >= 0);
            }
        }
}

TEST_CASE("reid plurigenus closed form") {
    Basket caseI_B5 = Basket::parse("3x(1,2),2x(2,5),2x(1,3),(1,4)");
    CHECK(reid_plurigenus(rat(1, 60), 1, caseI_B5, 2) == 0);

    Basket I1 = Basket::parse("(2,4),(3,7),(2,5),(2,6),(1,4)");
    CHECK(reid_plurigenus(rat(1, 420), 1, I1, 18) == 2);
    for (int64_t m = 4; m <= 17; m++) CHECK(reid_plurigenus(rat(1, 420), 1, I1, m) <= 1);

    CHECK(reid_plurigenus(rat(7, 3), 2, Basket{}, 2) == rat(7, 6) - 6);  // k3/2 - 3*chi
}

TEST_CASE("grouped display") {
    CHECK(grouped_str(Basket::parse("2x(1,2),(3,7)")) == "(2,4),(3,7)");
    CHECK(grouped_str(Basket::parse("3x(1,4)")) == "(3,12)");
}
