#pragma once

#include <map>
#include <optional>
#include <vector>

#include "basket3/basket.hpp"
#include "basket3/packing.hpp"

namespace basket3 {

// Triple (B, chi, P2) from which every plurigenus and the volume are derived.
struct FormalBasket {
    Basket basket;
    int64_t chi = 1;
    int64_t p2 = 0;
};

// K^3 = -sigma + sigma' + 6 chi + 2 P2.
Rat volume(const FormalBasket& fb);

// P_m by the recursion seeded with P2 and P3 = -sigma + 10 chi + 5 P2:
//   P_{m+1} - P_m = m^2/2 (K^3 - sigma') - 2 chi + m/2 sigma + Delta^m.
// Always an integer (K^3 - sigma' and sigma have the same parity); agrees
// with the closed form reid_plurigenus for every m >= 2.
Int plurigenus(const FormalBasket& fb, int64_t m);

// P_2 .. P_mmax in one sweep; index i holds P_{i} (entries 0,1 unused = 0).
std::vector<Int> plurigenus_range(const FormalBasket& fb, int64_t mmax);

bool is_positive(const FormalBasket& fb);

// Admissible iff P_m >= 0 for all m >= 2. Finite check: beyond
// M* = max(24, least m with m(m-1) K^3 >= 12 chi) the closed form is
// nonnegative because l(m) >= 0, so scanning 2..M* is exhaustive.
int64_t admissibility_horizon(const FormalBasket& fb);
bool is_admissible(const FormalBasket& fb);

// First m in [2, horizon] with P_m < 0, if any.
std::optional<int64_t> first_negative_plurigenus(const FormalBasket& fb);

// Least m >= 2 with P_m >= 2. Requires a positive formal basket.
int64_t m0(const FormalBasket& fb);

// Datum (chi, P_2 .. P_max). p[m] indexed directly by m.
struct PlurigenusVector {
    int64_t chi = 1;
    std::vector<int64_t> p;  // p[0], p[1] unused

    int64_t max_m() const { return static_cast<int64_t>(p.size()) - 1; }
    int64_t at(int64_t m) const { return p[static_cast<size_t>(m)]; }
};

PlurigenusVector plurigenus_vector(const FormalBasket& fb, int64_t mmax);

// The twelve linear forms expressing basket data from plurigenera:
// sigma, tau = sigma' - K^3, and Delta^3 .. Delta^12. Needs P_2..P_13.
struct BasketInvariants {
    int64_t sigma = 0;
    int64_t tau = 0;
    int64_t d[13] = {};  // d[n] = Delta^n for 3 <= n <= 12
};
BasketInvariants invariants_from_plurigenera(const PlurigenusVector& v);

// Free data of the unpacking chain: the B^(0) tail n^0_{1,r} (r >= 5) and the
// four packing counts eta ((1,3)+(1,4) -> (2,7)), zeta ((1,2)+(3,7) -> (4,9)),
// alpha ((1,2)+(4,9) -> (5,11)), beta ((1,3)+(3,8) -> (4,11)).
struct PackingParameters {
    int64_t n15 = 0;                   // n^0_{1,5}
    std::map<int64_t, int64_t> tail;   // r >= 6 -> n^0_{1,r}
    int64_t eta = 0, zeta = 0, alpha = 0, beta = 0;

    int64_t sigma5() const;            // sum of all n^0_{1,r}, r >= 5
    int64_t eps() const;               // n^0_{1,5} + 2 * sum_{r>=6} n^0_{1,r}
    int64_t tail_at(int64_t r) const;
    bool assumption56(const PlurigenusVector& v) const;  // P2 = 0 and empty tail
};

// Coefficient vector of one approximation level, in canonical slot order.
struct LevelCoeffs {
    std::vector<std::pair<SingleBasket, int64_t>> slots;

    bool nonnegative() const;
    Basket to_basket() const;  // drops zero slots; requires nonnegative()
    std::vector<int64_t> values() const;
};

// B^(0) coefficients; nullopt when some coefficient is negative (infeasible).
std::optional<LevelCoeffs> initial_coeffs(const PlurigenusVector& v, const PackingParameters& p);

// B^(level) coefficients for level in {5,7,8,9,10,11,12}. Levels 5 and 7 take
// the general tail; levels >= 8 require Assumption 5.6 (P2 = 0, tail empty).
std::optional<LevelCoeffs> b_level_coeffs(const PlurigenusVector& v, const PackingParameters& p,
                                          int64_t level);

// Closed forms for epsilon_5 .. epsilon_12 plus the consistency flags:
// the epsilon_6 identity, nonnegativity, and inequality (5.3) with its R term.
struct EpsilonFormulas {
    int64_t e5 = 0, e7 = 0, e8 = 0, e9 = 0, e10 = 0, e12 = 0;
    std::optional<int64_t> e11;  // closed form only available under Assumption 5.6
    int64_t e6_residual = 0;     // must be 0
    bool ineq53 = false;
    bool is_consistent = false;
};
EpsilonFormulas epsilon_formulas(const PlurigenusVector& v, const PackingParameters& p);

// Reading of the subadditivity rule P_{m+n} >= P_m P_n ("if either factor <= 1").
enum class MultiplicativityReading {
    LiteralProduct,  // P_{m+n} >= P_m * P_n whenever P_m <= 1 or P_n <= 1
    MaxWhenOtherPositive,  // P_{m+n} >= max(P_m, P_n) whenever the other is >= 1
};

bool multiplicativity_holds(const PlurigenusVector& v, int64_t m, int64_t n,
                            MultiplicativityReading reading);

// Conjunction of the plurigenus growth constraints over the vector's range:
// P_{m+2} >= P_m + P_2 when chi = 1, the multiplicativity rule for all pairs,
// and P_4+P_5+P_6 >= 3 P_2 + P_3 + P_7 (the eps >= 0 face of the epsilon_6
// identity) when P_7 is in range.
bool geometric_filters(const PlurigenusVector& v,
                       MultiplicativityReading reading = MultiplicativityReading::LiteralProduct);

}  // namespace basket3
