#include "basket3/formal.hpp"

#include <cassert>

namespace basket3 {

Rat volume(const FormalBasket& fb) {
    Basket N = fb.basket.normalized();
    return sigma_prime(N) + rat(-sigma(N) + 6 * fb.chi + 2 * fb.p2, 1);
}

std::vector<Int> plurigenus_range(const FormalBasket& fb, int64_t mmax) {
    if (mmax < 2) throw std::domain_error("plurigenus requires m >= 2");
    Basket N = fb.basket.normalized();
    int64_t sig = sigma(N);
    int64_t t = 6 * fb.chi + 2 * fb.p2 - sig;  // K^3 - sigma', an integer
    std::vector<Int> P(static_cast<size_t>(mmax) + 1, 0);
    P[2] = fb.p2;
    if (mmax >= 3) P[3] = -sig + 10 * fb.chi + 5 * fb.p2;
    for (int64_t m = 3; m < mmax; m++) {
        Int step = Int(m) * m * t + Int(m) * sig;
        assert(step % 2 == 0);
        P[static_cast<size_t>(m) + 1] =
            P[static_cast<size_t>(m)] + step / 2 - 2 * fb.chi + delta(N, m);
    }
    return P;
}

Int plurigenus(const FormalBasket& fb, int64_t m) { return plurigenus_range(fb, m)[static_cast<size_t>(m)]; }

PlurigenusVector plurigenus_vector(const FormalBasket& fb, int64_t mmax) {
    auto P = plurigenus_range(fb, mmax);
    PlurigenusVector v;
    v.chi = fb.chi;
    v.p.resize(P.size());
    for (size_t i = 2; i < P.size(); i++) {
        if (!P[i].fits_slong_p()) throw std::overflow_error("plurigenus out of vector range");
        v.p[i] = P[i].get_si();
    }
    return v;
}

bool is_positive(const FormalBasket& fb) { return volume(fb) > 0; }

int64_t admissibility_horizon(const FormalBasket& fb) {
    Rat k3 = volume(fb);
    if (k3 <= 0) throw std::domain_error("horizon undefined for non-positive volume");
    int64_t m = 2;
    while (Rat(Int(m) * (m - 1)) * k3 < Rat(12 * fb.chi)) m++;
    return std::max<int64_t>(24, m);
}

std::optional<int64_t> first_negative_plurigenus(const FormalBasket& fb) {
    Rat k3 = volume(fb);
    if (k3 > 0) {
        int64_t hor = admissibility_horizon(fb);
        auto P = plurigenus_range(fb, hor);
        for (int64_t m = 2; m <= hor; m++)
            if (P[static_cast<size_t>(m)] < 0) return m;
        return std::nullopt;
    }
    // K^3 <= 0: P_m eventually goes negative; scan until it does.
    constexpr int64_t kCap = 100000;
    auto P = plurigenus_range(fb, kCap);
    for (int64_t m = 2; m <= kCap; m++)
        if (P[static_cast<size_t>(m)] < 0) return m;
    throw std::logic_error("no negative plurigenus found below cap despite K^3 <= 0");
}

bool is_admissible(const FormalBasket& fb) { return !first_negative_plurigenus(fb).has_value(); }

int64_t m0(const FormalBasket& fb) {
    if (!is_positive(fb)) throw std::domain_error("m0 requires a positive formal basket");
    constexpr int64_t kCap = 10000;
    auto P = plurigenus_range(fb, kCap);
    for (int64_t m = 2; m <= kCap; m++)
        if (P[static_cast<size_t>(m)] >= 2) return m;
    throw std::logic_error("m0 not found below cap");
}

static void need(const PlurigenusVector& v, int64_t m) {
    if (v.max_m() < m)
        throw std::domain_error("plurigenus vector must extend to P_" + std::to_string(m));
}

BasketInvariants invariants_from_plurigenera(const PlurigenusVector& v) {
    need(v, 13);
    const auto& P = v.p;
    int64_t chi = v.chi;
    BasketInvariants out;
    out.sigma = 10 * chi + 5 * P[2] - P[3];
    out.tau = 4 * chi + 3 * P[2] - P[3];
    out.d[3] = 5 * chi + 6 * P[2] - 4 * P[3] + P[4];
    out.d[4] = 14 * chi + 14 * P[2] - 6 * P[3] - P[4] + P[5];
    out.d[5] = 27 * chi + 25 * P[2] - 10 * P[3] - P[5] + P[6];
    out.d[6] = 44 * chi + 39 * P[2] - 15 * P[3] - P[6] + P[7];
    out.d[7] = 65 * chi + 56 * P[2] - 21 * P[3] - P[7] + P[8];
    out.d[8] = 90 * chi + 76 * P[2] - 28 * P[3] - P[8] + P[9];
    out.d[9] = 119 * chi + 99 * P[2] - 36 * P[3] - P[9] + P[10];
    out.d[10] = 152 * chi + 125 * P[2] - 45 * P[3] - P[10] + P[11];
    out.d[11] = 189 * chi + 154 * P[2] - 55 * P[3] - P[11] + P[12];
    out.d[12] = 230 * chi + 186 * P[2] - 66 * P[3] - P[12] + P[13];
    return out;
}

int64_t PackingParameters::sigma5() const {
    int64_t s = n15;
    for (const auto& [r, c] : tail) s += c;
    return s;
}

int64_t PackingParameters::eps() const {
    int64_t s = n15;
    for (const auto& [r, c] : tail) s += 2 * c;
    return s;
}

int64_t PackingParameters::tail_at(int64_t r) const {
    auto it = tail.find(r);
    return it == tail.end() ? 0 : it->second;
}

bool PackingParameters::assumption56(const PlurigenusVector& v) const {
    if (v.p[2] != 0) return false;
    for (const auto& [r, c] : tail)
        if (c != 0) return false;
    return true;
}

bool LevelCoeffs::nonnegative() const {
    for (const auto& [s, c] : slots)
        if (c < 0) return false;
    return true;
}

Basket LevelCoeffs::to_basket() const {
    std::vector<BasketEntry> es;
    for (const auto& [s, c] : slots)
        if (c > 0) es.push_back({s, c});
    return Basket(std::move(es));
}

std::vector<int64_t> LevelCoeffs::values() const {
    std::vector<int64_t> out;
    out.reserve(slots.size());
    for (const auto& [s, c] : slots) out.push_back(c);
    return out;
}

static std::optional<LevelCoeffs> finish(LevelCoeffs&& lc) {
    if (!lc.nonnegative()) return std::nullopt;
    return std::move(lc);
}

static void append_tail(LevelCoeffs& lc, const PackingParameters& p, bool with15) {
    if (with15) lc.slots.push_back({{1, 5}, p.n15});
    for (const auto& [r, c] : p.tail) lc.slots.push_back({{1, r}, c});
}

std::optional<LevelCoeffs> initial_coeffs(const PlurigenusVector& v, const PackingParameters& p) {
    need(v, 5);
    const auto& P = v.p;
    int64_t chi = v.chi, s5 = p.sigma5();
    LevelCoeffs lc;
    lc.slots = {
        {{1, 2}, 5 * chi + 6 * P[2] - 4 * P[3] + P[4]},
        {{1, 3}, 4 * chi + 2 * P[2] + 2 * P[3] - 3 * P[4] + P[5]},
        {{1, 4}, chi - 3 * P[2] + P[3] + 2 * P[4] - P[5] - s5},
    };
    append_tail(lc, p, true);
    return finish(std::move(lc));
}

std::optional<LevelCoeffs> b_level_coeffs(const PlurigenusVector& v, const PackingParameters& p,
                                          int64_t level) {
    const auto& P = v.p;
    int64_t chi = v.chi;
    int64_t s5 = p.sigma5();
    int64_t n15 = p.n15, n16 = p.tail_at(6);
    int64_t eta = p.eta, zeta = p.zeta, alpha = p.alpha, beta = p.beta;
    LevelCoeffs lc;

    if (level == 5) {
        need(v, 6);
        lc.slots = {
            {{1, 2}, 3 * chi + 6 * P[2] - 3 * P[3] + P[4] - 2 * P[5] + P[6] + s5},
            {{2, 5}, 2 * chi - P[3] + 2 * P[5] - P[6] - s5},
            {{1, 3}, 2 * chi + 2 * P[2] + 3 * P[3] - 3 * P[4] - P[5] + P[6] + s5},
            {{1, 4}, chi - 3 * P[2] + P[3] + 2 * P[4] - P[5] - s5},
        };
        append_tail(lc, p, true);
        return finish(std::move(lc));
    }

    if (level == 7) {
        need(v, 8);
        lc.slots = {
            {{1, 2}, 2 * chi + 7 * P[2] - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + 3 * s5 - 2 * n15 - n16 + eta},
            {{3, 7}, chi - P[2] - P[3] + P[6] + P[7] - P[8] - 2 * s5 + 2 * n15 + n16 - eta},
            {{2, 5}, chi + P[2] + 2 * P[5] - 2 * P[6] - P[7] + P[8] + s5 - 2 * n15 - n16 + eta},
            {{1, 3}, 2 * chi + 2 * P[2] + 3 * P[3] - 3 * P[4] - P[5] + P[6] + s5 - eta},
            {{2, 7}, eta},
            {{1, 4}, chi - 3 * P[2] + P[3] + 2 * P[4] - P[5] - s5 - eta},
        };
        append_tail(lc, p, true);
        return finish(std::move(lc));
    }

    if (level < 8 || level > 12) throw std::domain_error("b_level_coeffs: level must be 5 or 7..12");
    if (!p.assumption56(v))
        throw std::domain_error("levels 8..12 require P2 = 0 and n^0_{1,r} = 0 for r >= 6");

    if (level == 8) {
        need(v, 9);
        lc.slots = {
            {{1, 2}, 2 * chi - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + n15 + eta},
            {{3, 7}, chi - P[3] + P[6] + P[7] - P[8] - eta},
            {{2, 5}, chi + P[3] + P[4] + P[5] - 3 * P[6] - P[7] + P[9] - n15 + eta},
            {{3, 8}, -P[3] - P[4] + P[5] + P[6] + P[8] - P[9]},
            {{1, 3}, 2 * chi + 4 * P[3] - 2 * P[4] - 2 * P[5] - P[8] + P[9] + n15 - eta},
            {{2, 7}, eta},
            {{1, 4}, chi + P[3] + 2 * P[4] - P[5] - n15 - eta},
            {{1, 5}, n15},
        };
        return finish(std::move(lc));
    }

    if (level == 9) {
        need(v, 10);
        lc.slots = {
            {{1, 2}, 2 * chi - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + n15 + eta - zeta},
            {{4, 9}, zeta},
            {{3, 7}, chi - P[3] + P[6] + P[7] - P[8] - eta - zeta},
            {{2, 5}, chi + P[3] + P[4] + P[5] - 3 * P[6] - P[7] + P[9] - n15 + eta},
            {{3, 8}, -P[3] - P[4] + P[5] + P[6] + P[8] - P[9]},
            {{1, 3}, 2 * chi + 4 * P[3] - 2 * P[4] - 2 * P[5] - P[8] + P[9] + n15 - eta},
            {{2, 7}, eta},
            {{1, 4}, chi + 3 * P[3] + P[4] - 2 * P[5] + P[7] - P[8] - P[9] + P[10] - 2 * eta + zeta},
            {{2, 9}, -2 * P[3] + P[4] + P[5] - P[7] + P[8] + P[9] - P[10] - n15 + eta - zeta},
            {{1, 5}, 2 * P[3] - P[4] - P[5] + P[7] - P[8] - P[9] + P[10] + 2 * n15 - eta + zeta},
        };
        return finish(std::move(lc));
    }

    if (level == 10) {
        need(v, 11);
        lc.slots = {
            {{1, 2}, 2 * chi - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + n15 + eta - zeta},
            {{4, 9}, zeta},
            {{3, 7}, chi - P[3] + P[6] + P[7] - P[8] - eta - zeta},
            {{2, 5}, chi + P[3] + P[4] + P[5] - 3 * P[6] - P[7] + P[9] - n15 + eta},
            {{3, 8}, -P[3] - P[4] + P[5] + P[6] + P[8] - P[9]},
            {{1, 3}, 2 * chi + 5 * P[3] - 2 * P[4] - 2 * P[5] - 2 * P[6] - P[8] + P[9] - P[10] + P[11] + 2 * n15},
            {{3, 10}, -P[3] + 2 * P[6] + P[10] - P[11] - n15 - eta},
            {{2, 7}, P[3] - 2 * P[6] - P[10] + P[11] + n15 + 2 * eta},
            {{1, 4}, chi + 3 * P[3] + P[4] - 2 * P[5] + P[7] - P[8] - P[9] + P[10] - 2 * eta + zeta},
            {{2, 9}, -2 * P[3] + P[4] + P[5] - P[7] + P[8] + P[9] - P[10] - n15 + eta - zeta},
            {{1, 5}, 2 * P[3] - P[4] - P[5] + P[7] - P[8] - P[9] + P[10] + 2 * n15 - eta + zeta},
        };
        return finish(std::move(lc));
    }

    if (level == 11) {
        need(v, 12);
        lc.slots = {
            {{1, 2}, 2 * chi - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + n15 + eta - zeta - alpha},
            {{5, 11}, alpha},
            {{4, 9}, zeta - alpha},
            {{3, 7}, chi - P[3] + P[6] + P[7] - P[8] - eta - zeta},
            {{2, 5}, chi + P[3] + P[4] + P[5] - 3 * P[6] - P[7] + P[9] - n15 + eta},
            {{3, 8}, -P[3] - P[4] + P[5] + P[6] + P[8] - P[9] - beta},
            {{4, 11}, beta},
            {{1, 3}, 2 * chi + 5 * P[3] - 2 * P[4] - 2 * P[5] - 2 * P[6] - P[8] + P[9] - P[10] + P[11] + 2 * n15 - beta},
            {{3, 10}, -P[3] + 2 * P[6] + P[10] - P[11] - n15 - eta},
            {{2, 7}, -chi + 2 * P[3] - P[4] - 2 * P[6] + P[7] - P[9] - P[10] + P[12] + 2 * n15 + 2 * eta + zeta + alpha + beta},
            {{3, 11}, chi - P[3] + P[4] - P[7] + P[9] + P[11] - P[12] - n15 - zeta - alpha - beta},
            {{1, 4}, 4 * P[3] - 2 * P[5] + 2 * P[7] - P[8] - 2 * P[9] + P[10] - P[11] + P[12] + n15 - 2 * eta + 2 * zeta + alpha + beta},
            {{2, 9}, -2 * P[3] + P[4] + P[5] - P[7] + P[8] + P[9] - P[10] - n15 + eta - zeta},
            {{1, 5}, 2 * P[3] - P[4] - P[5] + P[7] - P[8] - P[9] + P[10] + 2 * n15 - eta + zeta},
        };
        return finish(std::move(lc));
    }

    // level == 12
    need(v, 13);
    lc.slots = {
        {{1, 2}, 2 * chi - 2 * P[3] + P[4] - 2 * P[5] - P[7] + P[8] + n15 + eta - zeta - alpha},
        {{5, 11}, alpha},
        {{4, 9}, zeta - alpha},
        {{3, 7}, 2 * chi + 2 * P[3] - 2 * P[5] + 2 * P[7] - 2 * P[8] - P[12] + P[13] - 2 * eta - zeta + n15},
        {{5, 12}, -chi - 3 * P[3] + 2 * P[5] + P[6] - P[7] + P[8] + P[12] - P[13] + eta - n15},
        {{2, 5}, 2 * chi + 4 * P[3] + P[4] - P[5] - 4 * P[6] - P[8] + P[9] - P[12] + P[13]},
        {{3, 8}, -P[3] - P[4] + P[5] + P[6] + P[8] - P[9] - beta},
        {{4, 11}, beta},
        {{1, 3}, 2 * chi + 5 * P[3] - 2 * P[4] - 2 * P[5] - 2 * P[6] - P[8] + P[9] - P[10] + P[11] + 2 * n15 - beta},
        {{3, 10}, -P[3] + 2 * P[6] + P[10] - P[11] - n15 - eta},
        {{2, 7}, -chi + 2 * P[3] - P[4] - 2 * P[6] + P[7] - P[9] - P[10] + P[12] + 2 * n15 + 2 * eta + zeta + alpha + beta},
        {{3, 11}, chi - P[3] + P[4] - P[7] + P[9] + P[11] - P[12] - n15 - zeta - alpha - beta},
        {{1, 4}, 4 * P[3] - 2 * P[5] + 2 * P[7] - P[8] - 2 * P[9] + P[10] - P[11] + P[12] + n15 - 2 * eta + 2 * zeta + alpha + beta},
        {{2, 9}, -2 * P[3] + P[4] + P[5] - P[7] + P[8] + P[9] - P[10] - n15 + eta - zeta},
        {{1, 5}, 2 * P[3] - P[4] - P[5] + P[7] - P[8] - P[9] + P[10] + 2 * n15 - eta + zeta},
    };
    return finish(std::move(lc));
}

EpsilonFormulas epsilon_formulas(const PlurigenusVector& v, const PackingParameters& p) {
    need(v, 13);
    const auto& P = v.p;
    int64_t chi = v.chi, s5 = p.sigma5();
    int64_t n15 = p.n15, n16 = p.tail_at(6), n17 = p.tail_at(7), n18 = p.tail_at(8),
            n19 = p.tail_at(9), n110 = p.tail_at(10), n111 = p.tail_at(11);
    EpsilonFormulas e;
    e.e5 = 2 * chi - P[3] + 2 * P[5] - P[6] - s5;
    e.e6_residual = -3 * P[2] - P[3] + P[4] + P[5] + P[6] - P[7] - p.eps();
    e.e7 = chi - P[2] - P[3] + P[6] + P[7] - P[8] - 2 * s5 + 2 * n15 + n16;
    e.e8 = -2 * P[2] - P[3] - P[4] + P[5] + P[6] + P[8] - P[9] - 3 * s5 + 3 * n15 + 2 * n16 + n17;
    e.e9 = -2 * P[2] - 2 * P[3] + P[4] + P[5] - P[7] + P[8] + P[9] - P[10] - 3 * s5 + p.eta +
           2 * n15 + 2 * n16 + 2 * n17 + n18;
    e.e10 = -5 * P[2] - P[3] + 2 * P[6] + P[10] - P[11] - 6 * s5 - p.eta + 5 * n15 + 4 * n16 +
            3 * n17 + 2 * n18 + n19;
    if (p.assumption56(v))
        e.e11 = chi - P[3] + P[4] - P[7] + P[9] + P[11] - P[12] - n15 - p.zeta;
    e.e12 = -chi - 5 * P[2] - 3 * P[3] + 2 * P[5] + P[6] - P[7] + P[8] + P[12] - P[13] - 8 * s5 +
            p.eta + 7 * n15 + 5 * n16 + 5 * n17 + 4 * n18 + 3 * n19 + 2 * n110 + n111;

    int64_t bigR = 2 * n15 + 5 * n16 + 6 * n17 + 8 * n18 + 10 * n19 + 12 * n110 + 13 * n111;
    for (const auto& [r, c] : p.tail)
        if (r >= 12) bigR += 14 * c;
    e.ineq53 = 2 * P[5] + 3 * P[6] + P[8] + P[10] + P[12] >=
               chi + 10 * P[2] + 4 * P[3] + P[7] + P[11] + P[13] + bigR;
    e.is_consistent = e.e6_residual == 0 && e.ineq53 && e.e5 >= 0 && e.e7 >= 0 && e.e8 >= 0 &&
                      e.e9 >= 0 && e.e10 >= 0 && e.e12 >= 0 && (!e.e11 || *e.e11 >= 0);
    return e;
}

bool multiplicativity_holds(const PlurigenusVector& v, int64_t m, int64_t n,
                            MultiplicativityReading reading) {
    int64_t pm = v.at(m), pn = v.at(n), pmn = v.at(m + n);
    if (reading == MultiplicativityReading::LiteralProduct) {
        if (pm <= 1 || pn <= 1) return pmn >= pm * pn;
        return true;
    }
    if (pn >= 1 && pmn < pm) return false;
    if (pm >= 1 && pmn < pn) return false;
    return true;
}

bool geometric_filters(const PlurigenusVector& v, MultiplicativityReading reading) {
    int64_t top = v.max_m();
    if (v.chi == 1) {
        for (int64_t m = 2; m + 2 <= top; m++)
            if (v.at(m + 2) < v.at(m) + v.at(2)) return false;
    }
    for (int64_t m = 2; 2 * m <= top; m++)
        for (int64_t n = m; m + n <= top; n++)
            if (!multiplicativity_holds(v, m, n, reading)) return false;
    if (top >= 7 && v.at(4) + v.at(5) + v.at(6) < 3 * v.at(2) + v.at(3) + v.at(7)) return false;
    return true;
}

}  // namespace basket3
