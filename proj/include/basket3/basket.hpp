#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "basket3/rational.hpp"

namespace basket3 {

// Thrown on malformed basket text or entries violating 0 < b, 2b <= r.
class BasketError : public std::runtime_error {
  public:
    explicit BasketError(const std::string& what) : std::runtime_error(what) {}
};

// One quotient singularity of type 1/r(1,-1,b), written (b,r).
// Entries with gcd(b,r) > 1 are "generalized": (mb,mr) stands for m copies
// of (b,r) and is kept only as a display grouping.
struct SingleBasket {
    int64_t b = 0;
    int64_t r = 0;

    bool reduced() const;
    friend auto operator<=>(const SingleBasket&, const SingleBasket&) = default;
};

struct BasketEntry {
    SingleBasket s;
    int64_t mult = 1;

    friend auto operator<=>(const BasketEntry&, const BasketEntry&) = default;
};

// slope(a) > slope(b) first, ties by smaller r. This is the canonical order;
// it matches the slot order of the level-12 coefficient vectors.
bool slope_order(const SingleBasket& a, const SingleBasket& b);

// Finite multiset of single baskets in canonical order. May hold generalized
// entries as parsed; normalized() is the fully reduced form and is what every
// invariant is computed on.
class Basket {
  public:
    Basket() = default;
    explicit Basket(std::vector<BasketEntry> entries);  // validates + sorts + merges

    static Basket parse(const std::string& text);

    const std::vector<BasketEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    bool is_reduced() const;
    Basket normalized() const;

    // Total multiplicity and the invariant sums sigma = sum b, sum r.
    int64_t size() const;
    int64_t sum_b() const;
    int64_t sum_r() const;

    std::string str() const;  // round-trips through parse()

    friend auto operator<=>(const Basket&, const Basket&) = default;

  private:
    std::vector<BasketEntry> entries_;
};

// sigma(B) = sum of b over all entries (multiplicity counted).
int64_t sigma(const Basket& B);

// sigma'(B) = sum of b^2/r, exact.
Rat sigma_prime(const Basket& B);

// Delta^n(B) = sum over entries of i*b*n - (i^2+i)/2 * r with i = floor(bn/r).
// Non-negative; Delta^2 = 0 for every basket. Requires n >= 2.
int64_t delta(const Basket& B, int64_t n);

// Reid's correction term l(m) = sum_Q sum_{j=1}^{m-1} jb(r-jb)/(2r) with jb
// taken mod r. l(1) = 0, l(2) = (sigma - sigma')/2. Normalizes internally.
Rat reid_correction(const Basket& B, int64_t m);

// Reid's closed-form plurigenus
//   P_m = m(m-1)(2m-1)/12 * K^3 - (2m-1)*chi + l(m),    m >= 2.
// Integral for consistent (k3, chi, B); returned exact so callers can assert.
Rat reid_plurigenus(const Rat& k3, const Int& chi, const Basket& B, int64_t m);

// Reconstructs generalized display groupings: maximal runs of equal entries
// print as (mb,mr), e.g. {2x(1,2),(3,7)} -> "(2,4),(3,7)". Table output only.
std::string grouped_str(const Basket& B);

}  // namespace basket3
