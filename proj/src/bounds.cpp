#include "basket3/bounds.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

namespace basket3 {

const char* fibration_name(FibrationType t) {
    switch (t) {
        case FibrationType::III: return "III";
        case FibrationType::II: return "II";
        case FibrationType::I3: return "I3";
        case FibrationType::Ip: return "Ip";
        case FibrationType::In: return "In";
        case FibrationType::General: return "general";
    }
    return "?";
}

FibrationType parse_fibration(const std::string& name) {
    if (name == "III") return FibrationType::III;
    if (name == "II") return FibrationType::II;
    if (name == "I3") return FibrationType::I3;
    if (name == "Ip") return FibrationType::Ip;
    if (name == "In") return FibrationType::In;
    if (name == "general") return FibrationType::General;
    throw std::invalid_argument("unknown fibration type: " + name);
}

namespace {

struct Frac {
    long num, den;
};

// Small-m0 refinements, m0 = 2..12.
constexpr std::array<Frac, 11> kSmallIII = {{{1, 3},
                                             {8, 81},
                                             {1, 22},
                                             {8, 325},
                                             {1, 72},
                                             {4, 441},
                                             {1, 160},
                                             {4, 891},
                                             {2, 625},
                                             {8, 3267},
                                             {1, 522}}};
constexpr std::array<Frac, 11> kSmallII = {{{1, 8},
                                            {2, 45},
                                            {1, 52},
                                            {1, 100},
                                            {1, 162},
                                            {4, 1029},
                                            {1, 384},
                                            {2, 1053},
                                            {1, 725},
                                            {1, 968},
                                            {1, 1224}}};
constexpr std::array<Frac, 11> kSmallGeneral = {{{5, 96},
                                                 {5, 264},
                                                 {1, 108},
                                                 {1, 192},
                                                 {5, 1554},
                                                 {5, 2408},
                                                 {5, 3456},
                                                 {1, 954},
                                                 {1, 1276},
                                                 {5, 8448},
                                                 {5, 10764}}};

Rat formula_bound(int64_t m0, FibrationType t) {
    switch (t) {
        case FibrationType::III: return rat(10, m0 * m0 * (3 * m0 + 2));
        case FibrationType::II: return rat(4, m0 * m0 * (3 * m0 + 2));
        case FibrationType::I3: return rat(36, 5 * m0 * (m0 + 2) * (m0 + 2));
        default: return rat(11, 12 * m0 * (m0 + 1) * (m0 + 1));
    }
}

const std::array<Frac, 11>* small_table(FibrationType t) {
    switch (t) {
        case FibrationType::III: return &kSmallIII;
        case FibrationType::II:
        case FibrationType::I3: return &kSmallII;
        default: return &kSmallGeneral;
    }
}

}  // namespace

Rat volume_lower_bound(int64_t m0, FibrationType t) {
    if (m0 < 2) throw std::domain_error("volume_lower_bound requires m0 >= 2");
    Rat f = formula_bound(m0, t);
    if (m0 <= 12) {
        const Frac& e = (*small_table(t))[static_cast<size_t>(m0 - 2)];
        Rat tab = rat(e.num, e.den);
        if (tab > f) return tab;
    }
    return f;
}

int64_t nonvanishing_bound(int64_t m0, FibrationType t) {
    if (m0 < 1) throw std::domain_error("nonvanishing_bound requires m0 >= 1");
    switch (t) {
        case FibrationType::III:
        case FibrationType::II: return 2 * m0;
        case FibrationType::Ip: return 2 * m0 + 3;
        case FibrationType::I3: return 3 * m0 / 2 + 4;
        default: return 3 * m0 + 4;
    }
}

int64_t birationality_bound(int64_t m0) { return 5 * m0 + 6; }

Rat volume_bound_pg_ge2() { return rat(1, 3); }

}  // namespace basket3
