#include "basket3/wps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace basket3 {

int64_t WeightedHypersurface::weight_sum() const { return a[0] + a[1] + a[2] + a[3] + a[4]; }

WeightedHypersurface WeightedHypersurface::parse(const std::string& text) {
    WeightedHypersurface w;
    std::istringstream is(text);
    char sep = 0;
    for (int i = 0; i < 5; i++) {
        if (!(is >> w.a[static_cast<size_t>(i)])) throw std::invalid_argument("bad weights: " + text);
        if (i < 4 && (!(is >> sep) || sep != ',')) throw std::invalid_argument("bad weights: " + text);
    }
    if (!(is >> sep) || sep != ':' || !(is >> w.d))
        throw std::invalid_argument("expected \"a0,a1,a2,a3,a4:d\", got: " + text);
    std::sort(w.a.begin(), w.a.end());
    if (w.a[0] <= 0 || w.d <= 0) throw std::invalid_argument("weights and degree must be positive");
    return w;
}

std::string WeightedHypersurface::str() const {
    std::ostringstream os;
    os << "X" << d << "(" << a[0];
    for (int i = 1; i < 5; i++) os << "," << a[static_cast<size_t>(i)];
    os << ")";
    return os.str();
}

namespace {

int64_t gcd3(int64_t x, int64_t y, int64_t z) { return std::gcd(std::gcd(x, y), z); }

// is there a monomial of weighted degree m in the two weights?
bool two_var_degree(int64_t ai, int64_t aj, int64_t m) {
    for (int64_t n = 0; n * ai <= m; n++)
        if ((m - n * ai) % aj == 0) return true;
    return false;
}

// is there a monomial of weighted degree m in the three weights?
bool three_var_degree(int64_t x, int64_t y, int64_t z, int64_t m) {
    for (int64_t n = 0; n * x <= m; n++)
        if (two_var_degree(y, z, m - n * x)) return true;
    return false;
}

}  // namespace

bool is_well_formed(const WeightedHypersurface& w) {
    const auto& a = w.a;
    for (int i = 0; i < 5; i++) {
        int64_t g = 0;
        for (int k = 0; k < 5; k++)
            if (k != i) g = std::gcd(g, a[static_cast<size_t>(k)]);
        if (g != 1) return false;
    }
    for (int i = 0; i < 5; i++)
        for (int j = i + 1; j < 5; j++) {
            int64_t g = 0;
            for (int k = 0; k < 5; k++)
                if (k != i && k != j) g = std::gcd(g, a[static_cast<size_t>(k)]);
            if (w.d % g != 0) return false;
        }
    return true;
}

CriterionResult fletcher_criterion(const WeightedHypersurface& w) {
    const auto& a = w.a;
    int64_t d = w.d, alpha = w.alpha();
    auto fail = [](const char* cond, int i, int j) { return CriterionResult{false, cond, i, j}; };

    // (3) triple gcds first: cheapest and most selective
    for (int i = 0; i < 5; i++)
        for (int j = i + 1; j < 5; j++)
            for (int k = j + 1; k < 5; k++)
                if (gcd3(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)], a[static_cast<size_t>(k)]) != 1)
                    return fail("3", i, j);

    // (1), scanning the largest weights first (they fail most often)
    for (int i = 4; i >= 0; i--) {
        int64_t ai = a[static_cast<size_t>(i)];
        if (d <= ai) return fail("1i", i, -1);
        if (d % ai == 0) continue;  // (1ii) holds with e = i, (1iii) is vacuous
        bool found_e = false, found_pair = false;
        for (int e = 0; e < 5 && !found_pair; e++) {
            if ((d - a[static_cast<size_t>(e)]) % ai != 0) continue;
            found_e = true;
            for (int m = 0; m < 5; m++)
                if (m != i && m != e && (a[static_cast<size_t>(m)] + alpha) % ai == 0) {
                    found_pair = true;
                    break;
                }
        }
        if (!found_e) return fail("1ii", i, -1);
        if (!found_pair) return fail("1iii", i, -1);
    }

    // (2) pair conditions
    for (int i = 0; i < 5; i++)
        for (int j = i + 1; j < 5; j++) {
            int64_t ai = a[static_cast<size_t>(i)], aj = a[static_cast<size_t>(j)];
            int64_t h = std::gcd(ai, aj);
            if (h > 1) {
                if (d % h != 0) return fail("2i", i, j);
                bool ok = false;
                for (int m = 0; m < 5 && !ok; m++)
                    if (m != i && m != j && (a[static_cast<size_t>(m)] + alpha) % h == 0) ok = true;
                if (!ok) return fail("2ii", i, j);
            }
            if (!two_var_degree(ai, aj, d)) {
                int witnesses = 0;
                for (int e = 0; e < 5 && witnesses < 2; e++)
                    if (e != i && e != j && two_var_degree(ai, aj, d - a[static_cast<size_t>(e)]))
                        witnesses++;
                if (witnesses < 2) return fail("2iii", i, j);
            }
            {
                int others[3], t = 0;
                for (int k = 0; k < 5; k++)
                    if (k != i && k != j) others[t++] = k;
                if (!three_var_degree(a[static_cast<size_t>(others[0])], a[static_cast<size_t>(others[1])],
                                      a[static_cast<size_t>(others[2])], d))
                    return fail("2iv", i, j);
            }
        }

    return {};
}

Rat wps_volume(const WeightedHypersurface& w) {
    Int pi = 1;
    for (int64_t ai : w.a) pi *= ai;
    return rat(Int(w.d), pi);
}

int64_t plurigenus_wps(const WeightedHypersurface& w, int64_t m) {
    if (m < 0 || m >= w.d)
        throw std::domain_error("plurigenus_wps valid only for 0 <= m < d");
    // bounded knapsack count of e0 a0 + ... + e4 a4 = m
    std::vector<int64_t> count(static_cast<size_t>(m) + 1, 0);
    count[0] = 1;
    for (int64_t ai : w.a)
        for (int64_t v = ai; v <= m; v++) count[static_cast<size_t>(v)] += count[static_cast<size_t>(v - ai)];
    return count[static_cast<size_t>(m)];
}

namespace {

template <typename Fn>
void for_each_tuple(int64_t sum, Fn&& fn) {
    // nondecreasing 5-tuples with the given sum
    WeightedHypersurface w;
    w.d = sum + 1;
    for (int64_t a0 = 1; 5 * a0 <= sum; a0++)
        for (int64_t a1 = a0; a0 + 4 * a1 <= sum; a1++)
            for (int64_t a2 = a1; a0 + a1 + 3 * a2 <= sum; a2++)
                for (int64_t a3 = a2; a0 + a1 + a2 + 2 * a3 <= sum; a3++) {
                    int64_t a4 = sum - a0 - a1 - a2 - a3;
                    if (a4 < a3) continue;
                    w.a = {a0, a1, a2, a3, a4};
                    fn(w);
                }
}

bool passes_full(const WeightedHypersurface& w) {
    return is_well_formed(w) && fletcher_criterion(w).pass;
}

}  // namespace

std::vector<WeightedHypersurface> enumerate_families(int64_t max_weight_sum) {
    if (max_weight_sum < 5) return {};
    std::vector<WeightedHypersurface> out;
    for (int64_t sum = 5; sum <= max_weight_sum; sum++)
        for_each_tuple(sum, [&](const WeightedHypersurface& w) {
            if (passes_full(w)) out.push_back(w);
        });
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.a < y.a;
    });
    return out;
}

SweepStats emptiness_sweep(int64_t d_min, int64_t d_max, bool pruned, int threads) {
    if (d_min < 101) throw std::domain_error("sweep range starts at d >= 101");
    if (threads <= 0) {
        if (const char* env = std::getenv("BASKET3_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }

    std::vector<SweepStats> partial(static_cast<size_t>(threads));
    auto worker = [&](int tid) {
        SweepStats& st = partial[static_cast<size_t>(tid)];
        for (int64_t d = d_min + tid; d <= d_max; d += threads) {
            Rat min_vol = rat(1, 420);
            for_each_tuple(d - 1, [&](const WeightedHypersurface& w) {
                if (pruned) {
                    // a0 <= 4, a0+a1 <= 11, and volume >= 1/420 are necessary
                    // for a canonical candidate in this degree range
                    if (w.a[0] > 4 || w.a[0] + w.a[1] > 11 || wps_volume(w) < min_vol) {
                        st.skipped++;
                        return;
                    }
                }
                st.examined++;
                if (passes_full(w)) st.survivors.push_back(w);
            });
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();

    SweepStats total;
    for (auto& st : partial) {
        total.examined += st.examined;
        total.skipped += st.skipped;
        total.survivors.insert(total.survivors.end(), st.survivors.begin(), st.survivors.end());
    }
    std::sort(total.survivors.begin(), total.survivors.end(), [](const auto& x, const auto& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.a < y.a;
    });
    return total;
}

}  // namespace basket3
