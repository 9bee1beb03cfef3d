#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "basket3/rational.hpp"

namespace basket3 {

// Hypersurface of degree d in P(a0..a4), weights sorted ascending.
// Canonically polarized candidates have d = sum(a) + 1.
struct WeightedHypersurface {
    std::array<int64_t, 5> a{};
    int64_t d = 0;

    friend auto operator<=>(const WeightedHypersurface&, const WeightedHypersurface&) = default;

    int64_t weight_sum() const;
    int64_t alpha() const { return d - weight_sum(); }
    static WeightedHypersurface parse(const std::string& text);  // "a0,a1,a2,a3,a4:d"
    std::string str() const;
};

// Well-formedness: for all i < j, gcd of the other three weights divides d;
// for all i, gcd of the other four weights is 1.
bool is_well_formed(const WeightedHypersurface& w);

// Quasismoothness + isolated terminal quotient singularities + not a linear
// cone, as arithmetic conditions on (a, d). fail() carries the first violated
// sub-condition id ("1i", "1ii", "1iii", "2i", "2ii", "2iii", "2iv", "3").
struct CriterionResult {
    bool pass = true;
    std::string failed_condition;  // empty iff pass
    int i = -1, j = -1;            // indices involved, when applicable
};
CriterionResult fletcher_criterion(const WeightedHypersurface& w);

// K^3 = d / (a0 a1 a2 a3 a4), exact.
Rat wps_volume(const WeightedHypersurface& w);

// P_m = number of monomials of weighted degree m, valid for 0 <= m < d.
int64_t plurigenus_wps(const WeightedHypersurface& w, int64_t m);

// All canonical families (d = sum + 1) with weight sum <= max_weight_sum
// passing is_well_formed and fletcher_criterion, sorted by (d, weights).
std::vector<WeightedHypersurface> enumerate_families(int64_t max_weight_sum);

struct SweepStats {
    int64_t examined = 0;   // tuples run through the full criterion
    int64_t skipped = 0;    // tuples eliminated before the full criterion
    std::vector<WeightedHypersurface> survivors;
};

// Exhaustive pass over all weight tuples with sum = d-1 for d in
// [d_min, d_max]. pruned applies the cheap eliminations first (a0 <= 4,
// a0 + a1 <= 11, exact volume >= 1/420); both passes must agree on survivors.
SweepStats emptiness_sweep(int64_t d_min, int64_t d_max, bool pruned, int threads = 0);

}  // namespace basket3
