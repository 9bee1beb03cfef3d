#include "basket3/golden.hpp"

#include <stdexcept>

namespace basket3 {

const std::vector<SingleBasket>& level12_slots() {
    static const std::vector<SingleBasket> slots = {
        {1, 2}, {5, 11}, {4, 9}, {3, 7}, {5, 12}, {2, 5}, {3, 8}, {4, 11},
        {1, 3}, {3, 10}, {2, 7}, {3, 11}, {1, 4}, {2, 9}, {1, 5},
    };
    return slots;
}

const std::vector<GoldenChi1Row>& golden_chi1() {
    static const std::vector<GoldenChi1Row> rows = {
        {"I-1", 0, 0, 0, 0, "(2,4),(3,7),(2,5),(2,6),(1,4)", "1/420", 18},
        {"I-2", 0, 0, 0, 0, "(3,6),(2,5),(4,11),(1,4)", "1/220", 14},
        {"I-3", 0, 0, 0, 0, "(3,6),(5,13),(1,3),(1,4)", "1/156", 12},
        {"I-4", 0, 0, 0, 0, "(3,6),(4,10),(1,3),(2,7)", "1/210", 14},
        {"II-1", 0, 0, 0, 1, "(6,13),(1,3),(3,10)", "1/390", 9},
        {"II-2", 0, 0, 0, 1, "(1,2),(5,11),(4,13)", "1/286", 9},
        {"II-3", 0, 0, 0, 1, "(4,8),(3,8),(3,10)", "1/40", 8},
        {"II-4", 0, 0, 0, 1, "(4,8),(4,11),(2,7)", "2/77", 8},
        {"II-5", 0, 0, 0, 1, "(4,8),(5,14),(1,4)", "1/28", 8},
        {"II-6", 0, 0, 0, 1, "(5,10),(4,12),(1,5)", "1/30", 8},
        {"III-1", 0, 0, 1, 0, "(9,22),(1,3)", "1/66", 9},
        {"III-2", 0, 0, 1, 0, "(7,17),(3,8)", "1/136", 10},
        {"III-3", 0, 0, 1, 0, "(5,12),(5,13)", "1/156", 10},
        {"III-4", 0, 0, 1, 0, "(3,7),(7,18)", "1/126", 10},
        {"III-5", 0, 0, 1, 0, "(1,2),(9,23)", "1/46", 8},
        // IV volumes/m0 are not printed in the source table (only dominations);
        // frozen here from the exact computation.
        {"IV-1", 0, 0, 1, 1, "(8,19),(2,6)", "2/57", 7},
        {"IV-2", 0, 0, 1, 1, "(6,14),(4,11)", "2/77", 7},
        {"IV-3", 0, 0, 1, 1, "(4,9),(6,16)", "1/36", 7},
        {"IV-4", 0, 0, 1, 1, "(2,4),(8,21)", "1/21", 7},
        {"V-1", 0, 1, 0, 1, "(7,15),(3,12)", "1/60", 7},
        {"V-2", 0, 1, 0, 1, "(6,12),(1,3),(3,13)", "1/39", 8},
        {"V-3", 0, 1, 0, 1, "(6,12),(3,11),(1,5)", "1/55", 8},
        {"VI-1", 0, 1, 1, 1, "(1,2),(7,16),(2,9)", "1/144", 7},
        {"VI-2", 0, 1, 1, 1, "(6,13),(2,5),(2,9)", "8/585", 7},
        {"VI-3", 0, 1, 1, 1, "(8,18),(1,4),(1,5)", "1/180", 7},
        {"VI-4", 0, 1, 1, 1, "(1,2),(6,13),(1,3),(2,10)", "1/390", 8},
        {"VI-5", 0, 1, 1, 1, "(5,10),(3,8),(2,10)", "1/40", 8},
        {"VI-6", 0, 1, 1, 1, "(3,6),(3,7),(2,5),(1,4),(1,6)", "1/420", 10},
        {"VIII-1", 1, 1, 1, 1, "(5,13),(1,3),(3,12)", "1/156", 7},
        {"VIII-2", 1, 1, 1, 1, "(2,5),(4,11),(3,12)", "1/220", 7},
        {"VIII-3", 1, 1, 1, 1, "(4,10),(1,3),(3,11),(1,4)", "1/660", 7},
    };
    return rows;
}

const std::vector<GoldenTableBRow>& golden_tableb() {
    static const std::vector<GoldenTableBRow> rows = {
        {1, {0, 0, 0, 0, 0, 0, 0, 1, 0}, 4, 8, 14, 2,
         {5, 0, 0, 1, 0, 3, 0, 0, 3, 0, 0, 1, 0, 0, 0}, "3/770", {}},
        {2, {0, 0, 0, 0, 0, 1, 0, 0, 0}, 3, 7, 15, 2,
         {4, 0, 1, 0, 0, 2, 1, 0, 3, 0, 0, 0, 2, 0, 0}, "1/360",
         {{"2a", 2, 3, 18, "{(2,5),(3,8),*} -> {(5,13),*}", "1/1170"}}},
        {3, {0, 0, 0, 0, 0, 1, 0, 1, 0}, 3, 7, 15, 3,
         {6, 1, 0, 0, 0, 4, 1, 0, 4, 0, 1, 0, 2, 0, 0}, "23/9240",
         {{"3a", 2, 3, 18, "{(2,5),(3,8),*} -> {(5,13),*}", "17/30030"}}},
        {4, {0, 0, 0, 0, 0, 1, 0, 1, 0}, 4, 9, 14, 3,
         {7, 0, 1, 0, 0, 4, 0, 1, 3, 0, 1, 0, 2, 0, 0}, "13/3465",
         {{"4a", 1, 2, 14, "{(4,11),(2,6),*} -> {(6,17),*}", "1/5355"}}},
        {5, {0, 0, 0, 0, 0, 1, 0, 1, 0}, 5, 10, 14, 3,
         {7, 0, 1, 0, 0, 4, 1, 0, 4, 0, 0, 1, 1, 0, 0}, "17/3960",
         {{"5a", 4, 3, 15, "{(8,20),(3,8),*} -> {(11,28),*}", "1/1386"},
          {"5b", 3, 3, 15, "{(5,13),(4,15),*}", "1/1170"}}},
        {6, {0, 0, 0, 1, 0, 0, 0, 1, 0}, 3, 6, 14, 3,
         {9, 0, 0, 2, 0, 1, 0, 1, 4, 0, 2, 0, 0, 0, 1}, "1/462", {}},
        {7, {0, 0, 0, 1, 0, 0, 1, 0, 0}, 3, 5, 14, 2,
         {5, 0, 1, 1, 0, 0, 0, 0, 5, 0, 1, 0, 0, 0, 1}, "1/630",
         {{"7a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"}}},
        {8, {0, 0, 0, 1, 0, 0, 1, 1, 0}, 3, 5, 14, 3,
         {7, 1, 0, 1, 0, 2, 0, 0, 6, 0, 2, 0, 0, 0, 1}, "1/770", {}},
        {9, {0, 0, 0, 1, 0, 1, 0, 0, 0}, 2, 2, 14, 3,
         {9, 0, 0, 2, 0, 0, 1, 1, 4, 0, 1, 0, 0, 1, 0}, "1/5544", {}},
        {10, {0, 0, 0, 1, 0, 1, 0, 0, 0}, 3, 6, 14, 3,
         {8, 0, 1, 1, 0, 0, 2, 0, 5, 0, 1, 0, 1, 0, 1}, "1/630",
         {{"10a", 2, 4, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"}}},
        {11, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 2, 4, 14, 3,
         {9, 0, 0, 2, 0, 0, 1, 1, 3, 1, 0, 0, 1, 0, 1}, "3/3080",
         {{"11a", 2, 3, 14, "{(3,8),(4,11),*} -> {(7,19),*}", "1/2660"}}},
        {12, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 5, 11, 14, 3,
         {9, 0, 1, 0, 0, 1, 2, 0, 4, 0, 2, 0, 0, 0, 1}, "1/252",
         {{"12a", 4, 6, 14, "{(2,5),(6,16),*} -> {(8,21),*}", "1/630"}}},
        {13, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 3, 4, 14, 4,
         {12, 0, 0, 2, 0, 2, 0, 2, 4, 0, 2, 0, 0, 1, 0}, "4/3465", {}},
        {14, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 3, 6, 14, 4,
         {10, 1, 0, 1, 0, 2, 2, 0, 6, 0, 2, 0, 1, 0, 1}, "1/770", {}},
        {15, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 4, 8, 14, 4,
         {11, 0, 1, 1, 0, 2, 1, 1, 5, 0, 2, 0, 1, 0, 1}, "71/27720",
         {{"15a", 2, 4, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/2520"},
          {"15b", 3, 4, 14, "{(2,5),(3,8),*} -> {(5,13),*}", "23/36036"},
          {"15c", 3, 5, 14, "{(7,16),(7,19),*}", "31/31920"}}},
        {16, {0, 0, 0, 1, 0, 1, 0, 1, 0}, 5, 9, 14, 4,
         {11, 0, 1, 1, 0, 2, 2, 0, 6, 0, 1, 1, 0, 0, 1}, "43/13860",
         {{"16a", 4, 3, 14, "{(4,10),(3,8),*} -> {(7,18),*}", "1/3080"},
          {"16b", 4, 4, 14, "{(2,5),(6,16),*} -> {(8,21),*}", "1/1386"},
          {"16c", 3, 3, 14, "{(7,16),(5,13),*}", "3/16016"}}},
        {17, {0, 0, 0, 1, 0, 1, 0, 1, 1}, 3, 6, 14, 3,
         {9, 0, 0, 2, 0, 0, 0, 2, 3, 0, 1, 0, 1, 0, 1}, "3/1540", {}},
        {18, {0, 0, 0, 1, 0, 1, 0, 1, 1}, 4, 7, 14, 3,
         {9, 0, 0, 2, 0, 0, 1, 1, 4, 0, 0, 1, 0, 0, 1}, "23/9240",
         {{"18a", 2, 3, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/3080"},
          {"18b", 4, 6, 14, "{(3,8),(4,11),*} -> {(7,19),*}", "83/43890"}}},
        {19, {0, 0, 0, 1, 0, 1, 1, 0, 0}, 3, 3, 14, 3,
         {8, 0, 1, 1, 0, 1, 0, 1, 5, 0, 1, 0, 0, 1, 0}, "2/3465", {}},
        {20, {0, 0, 0, 1, 0, 1, 1, 0, 0}, 4, 7, 14, 3,
         {7, 0, 2, 0, 0, 1, 1, 0, 6, 0, 1, 0, 1, 0, 1}, "1/504",
         {{"20a", 3, 3, 18, "{(2,5),(3,8),*} -> {(5,13),*}", "1/16380"}}},
        {21, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 4, 8, 14, 2,
         {6, 0, 1, 0, 0, 0, 1, 0, 3, 1, 0, 0, 0, 0, 1}, "1/360",
         {{"21a", 2, 3, 16, "{(1,3),(3,10),*} -> {(4,13),*}", "1/4680"}}},
        {22, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 2, 3, 18, 3,
         {7, 1, 0, 1, 0, 1, 1, 0, 5, 1, 0, 0, 1, 0, 1}, "1/9240", {}},
        {23, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 3, 5, 14, 3,
         {8, 0, 1, 1, 0, 1, 0, 1, 4, 1, 0, 0, 1, 0, 1}, "19/13860",
         {{"23a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/2640"}}},
        {24, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 3, 3, 14, 4,
         {10, 1, 0, 1, 0, 3, 0, 1, 6, 0, 2, 0, 0, 1, 0}, "1/3465", {}},
        {25, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 4, 7, 14, 4,
         {9, 1, 1, 0, 0, 3, 1, 0, 7, 0, 2, 0, 1, 0, 1}, "47/27720",
         {{"25a", 4, 6, 14, "{(5,11),(4,9),*} -> {(9,20),*}", "1/840"}}},
        {26, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 5, 9, 14, 4,
         {10, 0, 2, 0, 0, 3, 0, 1, 6, 0, 2, 0, 1, 0, 1}, "41/13860",
         {{"26a", 3, 5, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/1260"}}},
        {27, {0, 0, 0, 1, 0, 1, 1, 1, 0}, 6, 10, 14, 4,
         {10, 0, 2, 0, 0, 3, 1, 0, 7, 0, 1, 1, 0, 0, 1}, "97/27720",
         {{"27a", 5, 3, 14, "{(6,15),(3,8),*} -> {(9,23),*}", "19/79695"},
          {"27b", 5, 5, 14, "{(5,13),(5,18),*}", "1/1170"}}},
        {28, {0, 0, 0, 1, 0, 1, 1, 1, 1}, 4, 8, 14, 2,
         {5, 1, 0, 0, 0, 0, 1, 0, 4, 0, 1, 0, 0, 0, 1}, "23/9240", {}},
        {29, {0, 0, 0, 1, 0, 1, 1, 1, 1}, 5, 10, 14, 2,
         {6, 0, 1, 0, 0, 0, 0, 1, 3, 0, 1, 0, 0, 0, 1}, "13/3465",
         {{"29a", 2, 3, 14, "{(4,11),(2,6),*} -> {(6,17),*}", "1/5355"}}},
        {30, {0, 0, 0, 1, 0, 1, 1, 1, 1}, 3, 5, 14, 3,
         {7, 1, 0, 1, 0, 1, 0, 1, 5, 0, 1, 0, 1, 0, 1}, "1/924", {}},
        {31, {0, 0, 0, 1, 0, 1, 1, 1, 1}, 4, 6, 14, 3,
         {7, 1, 0, 1, 0, 1, 1, 0, 6, 0, 0, 1, 0, 0, 1}, "1/616", {}},
        {32, {0, 0, 0, 1, 0, 1, 1, 1, 1}, 5, 8, 14, 3,
         {8, 0, 1, 1, 0, 1, 0, 1, 5, 0, 0, 1, 0, 0, 1}, "2/693",
         {{"32a", 4, 6, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/528"},
          {"32b", 2, 2, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/1386"}}},
        {33, {0, 0, 0, 1, 1, 0, 0, 1, 0}, 2, 4, 14, 2,
         {5, 0, 0, 2, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0}, "1/840",
         {{"33a", 1, 3, 14, "{(3,10),(2,7),*} -> {(5,17),*}", "1/2856"}}},
        {34, {0, 0, 0, 1, 1, 0, 0, 1, 0}, 4, 8, 14, 3,
         {7, 0, 1, 1, 0, 2, 1, 0, 3, 0, 3, 0, 0, 0, 0}, "1/360",
         {{"34a", 3, 6, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/560"},
          {"34b", 3, 4, 14, "{(2,5),(3,8),*} -> {(5,13),*}", "1/1170"}}},
        {35, {0, 0, 0, 1, 1, 0, 0, 1, 1}, 3, 6, 14, 2,
         {5, 0, 0, 2, 0, 0, 0, 1, 1, 0, 2, 0, 0, 0, 0}, "1/462", {}},
        {36, {0, 0, 0, 1, 1, 0, 1, 1, 0}, 3, 5, 14, 2,
         {4, 0, 1, 1, 0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 0}, "1/630",
         {{"36a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"},
          {"36b", 2, 4, 14, "{(3,10),(2,7),*} -> {(5,17),*}", "4/5355"}}},
        {37, {0, 0, 0, 1, 1, 0, 1, 1, 0}, 5, 9, 14, 3,
         {6, 0, 2, 0, 0, 3, 0, 0, 4, 0, 3, 0, 0, 0, 0}, "1/315", {}},
        {38, {0, 0, 0, 1, 1, 0, 1, 1, 1}, 3, 5, 14, 2,
         {3, 1, 0, 1, 0, 1, 0, 0, 3, 0, 2, 0, 0, 0, 0}, "1/770", {}},
        {39, {0, 0, 0, 1, 1, 1, 0, 1, 0}, 3, 6, 14, 3,
         {7, 0, 1, 1, 0, 1, 2, 0, 2, 1, 1, 0, 1, 0, 0}, "1/630",
         {{"39a", 2, 4, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"},
          {"39b", 2, 5, 14, "{(3,10),(2,7),*} -> {(5,17),*}", "4/5355"}}},
        {40, {0, 0, 0, 1, 1, 1, 0, 1, 0}, 5, 10, 14, 4,
         {9, 0, 2, 0, 0, 3, 2, 0, 4, 0, 3, 0, 1, 0, 0}, "1/315",
         {{"40a", 4, 4, 14, "{(4,10),(3,8),*} -> {(7,18),*}", "1/2520"},
          {"40b", 4, 5, 14, "{(2,5),(6,16),*} -> {(8,21),*}", "1/1260"}}},
        {41, {0, 0, 0, 1, 1, 1, 0, 1, 1}, 5, 11, 13, 2,
         {5, 0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 0, 0, 0, 0}, "1/252", {}},
        {42, {0, 0, 0, 1, 1, 1, 0, 1, 1}, 3, 6, 14, 3,
         {6, 1, 0, 1, 0, 1, 2, 0, 3, 0, 2, 0, 1, 0, 0}, "1/770", {}},
        {43, {0, 0, 0, 1, 1, 1, 0, 1, 1}, 4, 8, 14, 3,
         {7, 0, 1, 1, 0, 1, 1, 1, 2, 0, 2, 0, 1, 0, 0}, "71/27720",
         {{"43a", 2, 4, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/2520"},
          {"43b", 3, 4, 14, "{(2,5),(3,8),*} -> {(5,13),*}", "23/36036"},
          {"43c", 3, 5, 14, "{(7,16),(7,19),*}", "31/31920"}}},
        {44, {0, 0, 0, 1, 1, 1, 0, 1, 1}, 5, 9, 14, 3,
         {7, 0, 1, 1, 0, 1, 2, 0, 3, 0, 1, 1, 0, 0, 0}, "43/13860",
         {{"44a", 4, 4, 14, "{(2,5),(6,16),*} -> {(8,21),*}", "1/1386"},
          {"44b", 3, 3, 14, "{(7,16),(5,13),*}", "3/16016"},
          {"44c", 4, 6, 14, "{(7,16),(5,18),*}", "1/720"},
          {"44d", 4, 4, 14, "{(5,13),(5,18),*}", "1/2184"}}},
        {45, {0, 0, 0, 1, 1, 1, 1, 0, 1}, 4, 7, 14, 2,
         {3, 0, 2, 0, 0, 0, 1, 0, 3, 0, 1, 0, 1, 0, 0}, "1/504", {}},
        {46, {0, 0, 0, 1, 1, 1, 1, 1, 0}, 4, 7, 14, 3,
         {6, 0, 2, 0, 0, 2, 1, 0, 3, 1, 1, 0, 1, 0, 0}, "1/504",
         {{"46a", 3, 3, 16, "{(2,5),(3,8),*} -> {(5,13),*}", "1/16380"},
          {"46b", 3, 6, 14, "{(3,10),(2,7),*} -> {(5,17),*}", "7/6120"}}},
        {47, {0, 0, 0, 1, 1, 1, 1, 1, 1}, 2, 3, 16, 2,
         {3, 1, 0, 1, 0, 0, 1, 0, 2, 1, 0, 0, 1, 0, 0}, "1/9240", {}},
        {48, {0, 0, 0, 1, 1, 1, 1, 1, 1}, 3, 5, 14, 2,
         {4, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0}, "19/13860",
         {{"48a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/2640"}}},
        {49, {0, 0, 0, 1, 1, 1, 1, 1, 1}, 4, 7, 14, 3,
         {5, 1, 1, 0, 0, 2, 1, 0, 4, 0, 2, 0, 1, 0, 0}, "47/27720",
         {{"49a", 4, 6, 14, "{(5,11),(4,9),*} -> {(9,20),*}", "1/840"}}},
        {50, {0, 0, 0, 1, 1, 1, 1, 1, 1}, 5, 9, 14, 3,
         {6, 0, 2, 0, 0, 2, 0, 1, 3, 0, 2, 0, 1, 0, 0}, "41/13860",
         {{"50a", 3, 5, 14, "{(4,11),(1,3),*} -> {(5,14),*}", "1/1260"}}},
        {51, {0, 0, 0, 1, 1, 1, 1, 1, 1}, 6, 10, 14, 3,
         {6, 0, 2, 0, 0, 2, 1, 0, 4, 0, 1, 1, 0, 0, 0}, "97/27720",
         {{"51a", 5, 4, 14, "{(4,10),(3,8),*} -> {(7,18),*}", "1/1386"},
          {"51b", 5, 5, 14, "{(5,13),(5,18),*}", "1/1170"}}},
        {52, {0, 0, 1, 0, 0, 1, 0, 1, 0}, 3, 7, 14, 2,
         {4, 0, 0, 1, 0, 2, 2, 0, 2, 0, 0, 0, 0, 0, 1}, "1/420",
         {{"52a", 2, 3, 18, "{(2,5),(3,8),*} -> {(5,13),*}", "1/2184"}}},
        {53, {0, 0, 1, 0, 0, 1, 1, 1, 0}, 4, 8, 14, 2,
         {3, 0, 1, 0, 0, 3, 1, 0, 3, 0, 0, 0, 0, 0, 1}, "1/360",
         {{"53a", 3, 4, 15, "{(2,5),(3,8),*} -> {(5,13),*}", "1/1170"}}},
        {54, {0, 0, 1, 0, 1, 0, 0, 1, 0}, 2, 4, 14, 2,
         {2, 0, 0, 2, 0, 3, 1, 0, 1, 0, 1, 0, 0, 0, 0}, "1/840", {}},
        {55, {0, 0, 1, 0, 1, 0, 0, 1, 0}, 2, 2, 14, 3,
         {4, 0, 0, 3, 0, 4, 1, 0, 3, 0, 0, 1, 0, 0, 0}, "1/3080", {}},
        {56, {0, 0, 1, 0, 1, 0, 1, 1, 0}, 3, 5, 14, 2,
         {1, 0, 1, 1, 0, 4, 0, 0, 2, 0, 1, 0, 0, 0, 0}, "1/630",
         {{"56a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"}}},
        {57, {0, 0, 1, 0, 1, 0, 1, 1, 0}, 3, 3, 14, 3,
         {3, 0, 1, 2, 0, 5, 0, 0, 4, 0, 0, 1, 0, 0, 0}, "1/1386", {}},
        {58, {0, 0, 1, 0, 1, 1, 0, 1, 0}, 3, 6, 14, 3,
         {4, 0, 1, 1, 0, 4, 2, 0, 2, 0, 1, 0, 1, 0, 0}, "1/630",
         {{"58a", 2, 4, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/1680"}}},
        {59, {0, 0, 1, 0, 1, 1, 0, 1, 1}, 2, 4, 14, 2,
         {2, 0, 0, 2, 0, 2, 1, 1, 0, 0, 0, 0, 1, 0, 0}, "3/3080",
         {{"59a", 2, 3, 14, "{(3,8),(4,11),*} -> {(7,19),*}", "1/2660"}}},
        {60, {0, 0, 1, 0, 1, 1, 1, 1, 0}, 4, 7, 14, 3,
         {3, 0, 2, 0, 0, 5, 1, 0, 3, 0, 1, 0, 1, 0, 0}, "1/504",
         {{"60a", 3, 3, 15, "{(2,5),(3,8),*} -> {(5,13),*}", "1/16380"}}},
        {61, {0, 0, 1, 0, 1, 1, 1, 1, 1}, 2, 3, 15, 2,
         {0, 1, 0, 1, 0, 3, 1, 0, 2, 0, 0, 0, 1, 0, 0}, "1/9240", {}},
        {62, {0, 0, 1, 0, 1, 1, 1, 1, 1}, 3, 5, 14, 2,
         {1, 0, 1, 1, 0, 3, 0, 1, 1, 0, 0, 0, 1, 0, 0}, "19/13860",
         {{"62a", 2, 3, 14, "{(4,9),(3,7),*} -> {(7,16),*}", "1/2640"}}},
        {63, {0, 0, 1, 1, 1, 1, 1, 1, 1}, 3, 4, 14, 3,
         {5, 0, 1, 2, 0, 1, 1, 1, 3, 0, 1, 0, 0, 0, 1}, "1/5544", {}},
    };
    return rows;
}

const std::vector<GoldenExclusion>& golden_exclusions() {
    using K = ExclusionReason::Kind;
    // kinds are the first rule to fire in the (negativity, multiplicativity,
    // volume) order; several cases fail an earlier rule than the one the
    // volume-bound argument quotes for them
    static const std::vector<GoldenExclusion> excl = {
        {"VIII-3", K::VolumeBound},
        {"4a", K::NegativePlurigenus},
        {"9", K::NegativePlurigenus},
        {"16a", K::NegativePlurigenus},
        {"16c", K::NegativePlurigenus},
        {"18a", K::PlurigenusContradiction},
        {"20a", K::NegativePlurigenus},
        {"21a", K::PlurigenusContradiction},
        {"22", K::PlurigenusContradiction},
        {"24", K::PlurigenusContradiction},
        {"27a", K::NegativePlurigenus},
        {"29a", K::PlurigenusContradiction},
        {"33a", K::PlurigenusContradiction},
        {"44b", K::PlurigenusContradiction},
        {"46a", K::PlurigenusContradiction},
        {"47", K::VolumeBound},
        {"52a", K::PlurigenusContradiction},
        {"55", K::PlurigenusContradiction},
        {"60a", K::PlurigenusContradiction},
        {"61", K::VolumeBound},
        {"63", K::PlurigenusContradiction},
    };
    return excl;
}

}  // namespace basket3
