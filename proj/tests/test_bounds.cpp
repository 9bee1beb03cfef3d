#include <doctest.h>

#include "basket3/bounds.hpp"

using namespace basket3;

TEST_CASE("volume lower bounds") {
    CHECK(volume_lower_bound(7, FibrationType::General) == rat(5, 2408));
    CHECK(volume_lower_bound(14, FibrationType::General) == rat(11, 37800));
    CHECK(volume_lower_bound(2, FibrationType::III) == rat(1, 3));
    CHECK(volume_lower_bound(15, FibrationType::General) == rat(11, 46080));
    CHECK(volume_lower_bound(16, FibrationType::General) == rat(11, 55488));
    CHECK(volume_lower_bound(18, FibrationType::General) == rat(11, 77976));
    CHECK(volume_lower_bound(12, FibrationType::General) == rat(5, 10764));
    CHECK_THROWS(volume_lower_bound(1, FibrationType::General));
}

TEST_CASE("small-m0 table refines the formulas") {
    // the I3 column repeats the II column and sits below formula (iii); the
    // other rows genuinely refine
    for (int64_t m0 = 2; m0 <= 12; m0++) {
        CHECK(volume_lower_bound(m0, FibrationType::III) >= rat(10, m0 * m0 * (3 * m0 + 2)));
        CHECK(volume_lower_bound(m0, FibrationType::II) >= rat(4, m0 * m0 * (3 * m0 + 2)));
        CHECK(volume_lower_bound(m0, FibrationType::I3) ==
              rat(36, 5 * m0 * (m0 + 2) * (m0 + 2)));
        CHECK(volume_lower_bound(m0, FibrationType::General) >=
              rat(11, 12 * m0 * (m0 + 1) * (m0 + 1)));
    }
    // monotone non-increasing in m0
    for (auto t : {FibrationType::III, FibrationType::II, FibrationType::I3,
                   FibrationType::General})
        for (int64_t m0 = 2; m0 <= 30; m0++)
            CHECK(volume_lower_bound(m0, t) >= volume_lower_bound(m0 + 1, t));
}

TEST_CASE("nonvanishing and birationality bounds") {
    CHECK(nonvanishing_bound(6, FibrationType::Ip) == 15);
    CHECK(nonvanishing_bound(6, FibrationType::In) == 22);
    CHECK(nonvanishing_bound(2, FibrationType::III) == 4);
    CHECK(nonvanishing_bound(5, FibrationType::I3) == 11);
    CHECK(birationality_bound(14) == 76);
    CHECK(birationality_bound(12) == 66);
    CHECK(birationality_bound(18) == 96);
    CHECK(volume_bound_pg_ge2() == rat(1, 3));
}

TEST_CASE("fibration names") {
    CHECK(parse_fibration("general") == FibrationType::General);
    CHECK(parse_fibration(fibration_name(FibrationType::I3)) == FibrationType::I3);
    CHECK_THROWS(parse_fibration("IV"));
}
