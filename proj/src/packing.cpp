#include "basket3/packing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace basket3 {

static bool in_sn(int64_t n, int64_t q, int64_t p) {
    // q/p reduced, in (0,1/2]
    return q == 1 || p <= std::max<int64_t>(n, 4);
}

FareyBracket farey_interval(int64_t n, int64_t b, int64_t r) {
    if (n < 0) throw std::domain_error("farey_interval requires n >= 0");
    if (b <= 0 || r <= 0 || 2 * b > r) throw std::domain_error("slope must lie in (0, 1/2]");
    int64_t g = std::gcd(b, r);
    int64_t q0 = b / g, p0 = r / g;
    if (in_sn(n, q0, p0)) return {Fraction{q0, p0}, std::nullopt};

    // 1/m neighbors: largest 1/m < q0/p0 and smallest 1/m > q0/p0 (if >= 1/2 use q/p scan)
    Fraction lo{1, p0 / q0 + 1};              // 1/m < q0/p0  <=>  m > p0/q0
    std::optional<Fraction> hi;
    if ((p0 + q0 - 1) / q0 - 1 >= 2) hi = Fraction{1, (p0 + q0 - 1) / q0 - 1};  // m = ceil(p0/q0)-1

    for (int64_t p = 2; p <= std::max<int64_t>(n, 4); p++) {
        int64_t qdn = (p * q0 - 1) / p0;  // largest q with q/p < q0/p0
        if (qdn >= 1 && frac_less(lo, {qdn, p})) lo = {qdn, p};
        int64_t qup = (p * q0) / p0 + 1;  // smallest q with q/p > q0/p0
        if (2 * qup <= p && (!hi || frac_less({qup, p}, *hi))) hi = {qup, p};
    }
    int64_t gl = std::gcd(lo.q, lo.p);
    lo = {lo.q / gl, lo.p / gl};
    int64_t gh = std::gcd(hi->q, hi->p);
    Fraction up{hi->q / gh, hi->p / gh};
    return {std::nullopt, FareyInterval{lo, up}};
}

Rat sigma_prime_drop(const PackingStep& s) {
    int64_t det = s.first.r * s.second.b - s.second.r * s.first.b;
    return rat(det * det, s.first.r * s.second.r * (s.first.r + s.second.r));
}

Basket pack(const Basket& B, const PackingStep& step) {
    Basket N = B.normalized();
    std::vector<BasketEntry> out;
    bool got1 = false, got2 = false;
    for (auto e : N.entries()) {
        if (!got1 && e.s == step.first) {
            got1 = true;
            e.mult--;
        }
        if (!got2 && e.s == step.second) {
            got2 = true;
            e.mult--;
        }
        if (e.mult > 0) out.push_back(e);
    }
    if (!got1 || !got2)
        throw BasketError("packing step sources not present in basket " + N.str());
    out.push_back({step.result(), 1});
    return Basket(std::move(out)).normalized();
}

std::vector<PackingStep> convenient_packings(const Basket& B) {
    Basket N = B.normalized();
    const auto& es = N.entries();
    std::vector<PackingStep> steps;
    for (size_t i = 0; i < es.size(); i++) {
        for (size_t j = i + 1; j < es.size(); j++) {
            // entries are in descending slope order, so es[i] is the steeper one
            const auto& a = es[i].s;
            const auto& b = es[j].s;
            if (a.b * b.r - b.b * a.r == 1) steps.push_back({a, b, true});
        }
    }
    return steps;
}

Basket initial_basket(const Basket& B) { return canonical_approx(B, 0); }

Basket canonical_approx(const Basket& B, int64_t n) {
    if (n < 0) throw std::domain_error("canonical_approx requires n >= 0");
    std::vector<BasketEntry> out;
    Basket N = B.normalized();
    for (const auto& e : N.entries()) {
        auto br = farey_interval(n, e.s.b, e.s.r);
        if (br.exact) {
            out.push_back(e);
            continue;
        }
        auto [lo, up] = *br.around;
        int64_t c_lo = e.s.r * up.q - e.s.b * up.p;
        int64_t c_up = e.s.b * lo.p - e.s.r * lo.q;
        out.push_back({{lo.q, lo.p}, e.mult * c_lo});
        out.push_back({{up.q, up.p}, e.mult * c_up});
    }
    return Basket(std::move(out));
}

int64_t epsilon_n(const Basket& B, int64_t n) {
    if (n < 5) throw std::domain_error("epsilon_n requires n >= 5");
    int64_t count = 0;
    Basket Bn = canonical_approx(B, n);
    for (const auto& e : Bn.entries())
        if (e.s.r == n && e.s.b > 1) count += e.mult;
    return count;
}

namespace {

struct DominationSearch {
    Basket target;
    std::set<Basket> dead;

    bool run(const Basket& from) {
        if (from == target) return true;
        if (dead.count(from)) return false;
        const auto& es = from.entries();
        for (size_t i = 0; i < es.size(); i++) {
            for (size_t j = i + 1; j < es.size(); j++) {
                // distinct entry types always differ in slope or r; slope-equal
                // pairs of the same reduced type cannot occur, and merging two
                // distinct types with equal slope is impossible for reduced
                // entries, so every pair here is a genuine packing.
                if (es[i].s.b * es[j].s.r == es[j].s.b * es[i].s.r) continue;
                Basket next = pack(from, {es[i].s, es[j].s, false});
                if (run(next)) return true;
            }
        }
        dead.insert(from);
        return false;
    }
};

}  // namespace

bool dominates(const Basket& B1, const Basket& B2) {
    Basket a = B1.normalized(), b = B2.normalized();
    if (a.sum_b() != b.sum_b() || a.sum_r() != b.sum_r()) return false;
    if (sigma_prime(a) < sigma_prime(b)) return false;
    for (int64_t n = 3; n <= 30; n++)
        if (delta(a, n) < delta(b, n)) return false;
    DominationSearch search{b, {}};
    return search.run(a);
}

}  // namespace basket3
