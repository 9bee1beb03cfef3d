#include "basket3/basket.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace basket3 {

bool SingleBasket::reduced() const { return std::gcd(b, r) == 1; }

bool slope_order(const SingleBasket& a, const SingleBasket& b) {
    int64_t lhs = a.b * b.r, rhs = b.b * a.r;
    if (lhs != rhs) return lhs > rhs;
    return a.r < b.r;
}

static void check_entry(const SingleBasket& s, int64_t mult) {
    if (s.b <= 0 || s.r <= 0 || 2 * s.b > s.r)
        throw BasketError("entry (" + std::to_string(s.b) + "," + std::to_string(s.r) +
                          ") violates 0 < b, 2b <= r");
    if (mult <= 0) throw BasketError("entry multiplicity must be positive");
}

Basket::Basket(std::vector<BasketEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) check_entry(e.s, e.mult);
    std::sort(entries_.begin(), entries_.end(),
              [](const BasketEntry& a, const BasketEntry& b) {
                  if (a.s != b.s) return slope_order(a.s, b.s);
                  return false;
              });
    // merge equal (b,r)
    std::vector<BasketEntry> merged;
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().s == e.s)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

bool Basket::is_reduced() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const BasketEntry& e) { return e.s.reduced(); });
}

Basket Basket::normalized() const {
    std::vector<BasketEntry> out;
    for (const auto& e : entries_) {
        int64_t g = std::gcd(e.s.b, e.s.r);
        out.push_back({{e.s.b / g, e.s.r / g}, e.mult * g});
    }
    return Basket(std::move(out));
}

int64_t Basket::size() const {
    int64_t n = 0;
    for (const auto& e : entries_) n += e.mult;
    return n;
}

int64_t Basket::sum_b() const {
    int64_t n = 0;
    for (const auto& e : entries_) n += e.mult * e.s.b;
    return n;
}

int64_t Basket::sum_r() const {
    int64_t n = 0;
    for (const auto& e : entries_) n += e.mult * e.s.r;
    return n;
}

// grammar: basket := entry (',' entry)* | '' ; entry := [INT 'x'] '(' INT ',' INT ')'
Basket Basket::parse(const std::string& text) {
    std::vector<BasketEntry> entries;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
    auto fail = [&](const std::string& msg) {
        throw BasketError("basket syntax error at position " + std::to_string(i) + ": " + msg);
    };
    auto read_int = [&]() -> int64_t {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) i++;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stoll(text.substr(start, i - start));
    };

    skip_ws();
    while (i < text.size()) {
        int64_t mult = 1;
        skip_ws();
        if (i < text.size() && text[i] != '(') {
            mult = read_int();
            skip_ws();
            if (i >= text.size() || (text[i] != 'x' && text[i] != 'X')) fail("expected 'x' after multiplicity");
            i++;
        }
        skip_ws();
        if (i >= text.size() || text[i] != '(') fail("expected '('");
        i++;
        int64_t b = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ',') fail("expected ',' inside entry");
        i++;
        int64_t r = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')') fail("expected ')'");
        i++;
        entries.push_back({{b, r}, mult});
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') fail("expected ',' between entries");
            i++;
            skip_ws();
            if (i >= text.size()) fail("trailing ','");
        }
    }
    return Basket(std::move(entries));
}

std::string Basket::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ",";
        first = false;
        if (e.mult != 1) os << e.mult << "x";
        os << "(" << e.s.b << "," << e.s.r << ")";
    }
    return os.str();
}

std::string grouped_str(const Basket& B) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : B.entries()) {
        if (!first) os << ",";
        first = false;
        os << "(" << e.mult * e.s.b << "," << e.mult * e.s.r << ")";
    }
    return os.str();
}

int64_t sigma(const Basket& B) { return B.sum_b(); }

Rat sigma_prime(const Basket& B) {
    Rat s = 0;
    for (const auto& e : B.entries()) s += rat(e.mult * e.s.b * e.s.b, e.s.r);
    return s;
}

int64_t delta(const Basket& B, int64_t n) {
    if (n < 2) throw std::domain_error("delta requires n >= 2");
    int64_t total = 0;
    for (const auto& e : B.entries()) {
        int64_t i = (e.s.b * n) / e.s.r;
        total += e.mult * (i * e.s.b * n - (i * i + i) / 2 * e.s.r);
    }
    return total;
}

Rat reid_correction(const Basket& B, int64_t m) {
    if (m < 1) throw std::domain_error("reid_correction requires m >= 1");
    Rat total = 0;
    Basket N = B.normalized();
    for (const auto& e : N.entries()) {
        int64_t b = e.s.b, r = e.s.r;
        Int num = 0;  // sum of jb(r - jb) over j with jb taken mod r
        for (int64_t j = 1; j < m; j++) {
            int64_t jb = (j * b) % r;
            num += jb * (r - jb);
        }
        total += rat(Int(e.mult) * num, Int(2 * r));
    }
    return total;
}

Rat reid_plurigenus(const Rat& k3, const Int& chi, const Basket& B, int64_t m) {
    if (m < 2) throw std::domain_error("reid_plurigenus requires m >= 2");
    Rat p = rat(Int(m) * (m - 1) * (2 * m - 1), 12) * k3;
    p -= Rat(Int(2 * m - 1) * chi);
    p += reid_correction(B, m);
    return p;
}

}  // namespace basket3
