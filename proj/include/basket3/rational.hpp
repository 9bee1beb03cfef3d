#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace basket3 {

using Int = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
// mpq_class keeps that invariant under arithmetic as long as every value is
// canonicalized on construction, so all construction goes through rat().
using Rat = mpq_class;

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long long num, long long den = 1) {
    return rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// "p/q" in lowest terms, or just "p" when integral.
inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "p/q", optional leading '-'; whitespace not allowed.
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rat(Int(text), 1);
        return rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    }
}

}  // namespace basket3
