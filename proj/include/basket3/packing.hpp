#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "basket3/basket.hpp"

namespace basket3 {

// Reduced fraction q/p in (0, 1/2], ordered by value.
struct Fraction {
    int64_t q = 0;  // numerator
    int64_t p = 1;  // denominator

    friend bool operator==(const Fraction&, const Fraction&) = default;
};
inline bool frac_less(const Fraction& a, const Fraction& b) { return a.q * b.p < b.q * a.p; }

// Bracket of b/r by consecutive elements of S^(n); exact when b/r is itself
// in S^(n). Adjacent elements always satisfy lower.p*upper.q - upper.p*lower.q = 1.
struct FareyInterval {
    Fraction lower, upper;
};
struct FareyBracket {
    std::optional<Fraction> exact;       // set iff b/r in S^(n)
    std::optional<FareyInterval> around; // set otherwise
};

// S^(n) bracket of b/r, 0 < b/r <= 1/2. S^(n) consists of all 1/m (m >= 2)
// plus every q/p with q >= 2 and p <= n. Never materialized; computed directly.
FareyBracket farey_interval(int64_t n, int64_t b, int64_t r);

// Merge of two entries (b1,r1)+(b2,r2) -> (b1+b2,r1+r2), sources ordered by
// descending slope. convenient iff b1*r2 - b2*r1 = 1.
struct PackingStep {
    SingleBasket first, second;
    bool convenient = false;

    SingleBasket result() const { return {first.b + second.b, first.r + second.r}; }
};

// Applies one step: sources removed, target added, result normalized.
// sigma is unchanged; sigma' drops by (r1 b2 - r2 b1)^2 / (r1 r2 (r1+r2)).
Basket pack(const Basket& B, const PackingStep& step);

// The exact sigma' drop of a step.
Rat sigma_prime_drop(const PackingStep& step);

// All convenient packings available on the normalized form of B, one per
// unordered pair of distinct entry types with determinant 1.
std::vector<PackingStep> convenient_packings(const Basket& B);

// B^(0): every entry (b,r) with 1/n > b/r >= 1/(n+1) unpacked into
// (nb+b-r) x (1,n) + (r-nb) x (1,n+1). Fixed point on entries (1,m).
Basket initial_basket(const Basket& B);

// B^(n): entries with slope outside S^(n) unpacked over their Farey bracket
// [q1/p1, q2/p2] into (r q2 - b p2) x (q1,p1) + (b p1 - r q1) x (q2,p2).
// B^(n) > B, chain B^(0)=...=B^(4) > B^(5) > ... > B, and
// B^(i)(B^(j)(B)) = B^(i)(B) for i <= j.
Basket canonical_approx(const Basket& B, int64_t n);

// epsilon_n(B): number of entries (j,n) in B^(n) with gcd(j,n)=1 and j > 1;
// equals Delta^n(B^(n-1)) - Delta^n(B^(n)). n >= 5.
int64_t epsilon_n(const Basket& B, int64_t n);

// Whether B2 is reachable from B1 by a finite sequence of packings (any
// determinant; slope-equal merges are identities on normalized forms).
// DFS over normalized canonical forms with memoization; pre-filtered by the
// necessary conditions sigma/sum-r equal, sigma' and Delta^n monotone.
bool dominates(const Basket& B1, const Basket& B2);

}  // namespace basket3
