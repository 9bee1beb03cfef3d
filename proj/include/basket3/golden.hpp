#pragma once

#include <string>
#include <vector>

#include "basket3/classify.hpp"

namespace basket3 {

// Reference rows the classifiers are checked against. Values are data, loaded
// once and sanity-checked (sigma of every coefficient vector must equal
// 10*chi - P_3; discrepancies are reported, not silently corrected).

struct GoldenChi1Row {
    const char* label;
    int p3, p4, p5, p6;
    const char* basket;  // generalized display grouping
    const char* k3;
    int m0;
};

struct GoldenSubRow {
    const char* label;
    int p18, p24, m0;
    const char* bmin;  // display: the packed entries replacing part of B^(12)
    const char* k3;
};

struct GoldenTableBRow {
    int no;
    int p[9];  // P_3..P_11
    int p18, p24, m0, chi;
    int v[15];  // B^(12) slots (1,2),(5,11),(4,9),(3,7),(5,12),(2,5),(3,8),
                //             (4,11),(1,3),(3,10),(2,7),(3,11),(1,4),(2,9),(1,5)
    const char* k3;
    std::vector<GoldenSubRow> subs;
};

struct GoldenExclusion {
    const char* label;
    ExclusionReason::Kind kind;
};

const std::vector<GoldenChi1Row>& golden_chi1();
const std::vector<GoldenTableBRow>& golden_tableb();
const std::vector<GoldenExclusion>& golden_exclusions();  // Table B cases + VIII-3

// The 15 slot types of the level-12 coefficient vector, descending slope.
const std::vector<SingleBasket>& level12_slots();

}  // namespace basket3
