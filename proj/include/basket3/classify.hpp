#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "basket3/bounds.hpp"
#include "basket3/formal.hpp"

namespace basket3 {

struct ExclusionReason {
    enum class Kind { VolumeBound, PlurigenusContradiction, NegativePlurigenus };
    Kind kind;
    int64_t m = 0, n = 0;  // contradiction pair (m,n), or (m,0) for a negative P_m
    Rat bound;             // the violated lower bound, for VolumeBound

    std::string str() const;
};

// One classified formal basket: a chi=1 minimal positive basket, a chi>=2
// B^(12) row, or a row's minimal positive descendant (sub-row).
struct ClassificationRecord {
    std::string label;      // "I-1", "no.2", "no.2a", "extra-*"
    int64_t chi = 1;
    Basket basket;          // normalized form
    std::string display;    // generalized grouping for table output
    std::vector<int64_t> level_vector;  // B^(5) (chi=1) or B^(12) (chi>=2) coefficients
    int64_t level = 5;
    Basket level_basket;    // the approximation the record was searched under
    Rat k3;
    int64_t m0 = 0;
    int64_t p18 = 0, p24 = 0;
    PlurigenusVector pvec;  // P_2..P_24 of (basket, chi, 0)
    bool is_subrow = false;
    int parent_row = 0;     // Table B row number; 0 for chi=1 records

    FormalBasket formal() const { return {basket, chi, 0}; }
};

struct TableBRow {
    ClassificationRecord primary;                 // the B^(12) formal basket
    std::vector<ClassificationRecord> subrows;    // minimal positive descendants
};

// All minimal positive baskets dominated by B through convenient packings:
// positive baskets none of whose convenient packings stays positive. Every
// intermediate state on a chain to a positive basket is itself positive, so
// the search prunes at the first non-positive packing.
std::set<Basket> minimal_positive_descendants(const Basket& B, int64_t chi, int64_t p2);

// All positive baskets reachable from B by convenient packings (B included),
// with the packing edges; used for the intermediate-basket analysis.
struct PackingDag {
    std::map<Basket, std::vector<Basket>> children;

    std::set<Basket> ancestors_of(const Basket& target) const;  // proper + B itself
};
PackingDag positive_packing_dag(const Basket& B, int64_t chi, int64_t p2);

// The chi = 1 classification: for each admissible (P_3..P_6) pattern with
// P_2 = 0, every feasible initial-basket tail gives a B^(5); all minimal
// positive descendants whose recomputed plurigenera match the pattern are
// emitted, labelled against the golden table.
std::vector<ClassificationRecord> classify_chi1();

// The chi >= 2 classification: enumerates P_3..P_12 in {0,1}, P_13 within
// inequality (5.3), chi in [2,8] and the packing parameters in their derived
// ranges, keeps solutions with nonnegative coefficients at every level and
// positive volume. Exactly the 63 golden rows, each with its minimal
// positive descendants.
std::vector<TableBRow> classify_chi_ge2();

// First applicable among: some P_m < 0; a multiplicativity violation
// P_{m+n} < P_m P_n (scanned for 2 <= m <= n, m+n <= 24); volume below the
// general lower bound for the record's m0. nullopt = geometric-plausible.
std::optional<ExclusionReason> geometric_exclusion(
    const ClassificationRecord& rec,
    MultiplicativityReading reading = MultiplicativityReading::LiteralProduct);

struct TheoremCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const;
};

// Verifies, over the classification outputs with intermediate-basket
// analysis: min K^3 on the chi=1 list is 1/420; the global survivor minimum
// is 1/2660 attained at 11a/59a; P_12 >= 1 and P_24 >= 2 on every record;
// every record has m0 <= 18; P_m > 0 for m >= 14 (chi=1) resp. m >= 24
// (Table B) on every record.
TheoremReport verify_theorems(const std::vector<ClassificationRecord>& chi1,
                              const std::vector<TableBRow>& tableb);

}  // namespace basket3
