#pragma once

#include "basket3/rational.hpp"

namespace basket3 {

// Type of the fibration induced from phi_{m0}; "general" is the bound valid
// with no type information.
enum class FibrationType { III, II, I3, Ip, In, General };

const char* fibration_name(FibrationType t);
FibrationType parse_fibration(const std::string& name);

// Lower bound on K^3 given P_{m0} >= 2:
//   III: 10/(m0^2 (3m0+2)),  II: 4/(m0^2 (3m0+2)),
//   I3:  36/(5 m0 (m0+2)^2), general (and Ip, In): 11/(12 m0 (m0+1)^2),
// refined for 2 <= m0 <= 12 by the tabulated small-m0 constants (the I3
// column of the table repeats the II column and is weaker than the formula
// there; the max of the two is returned throughout).
Rat volume_lower_bound(int64_t m0, FibrationType t);

// Upper bound for m1 (P_m >= 2 for all m >= bound):
//   III, II: 2 m0;  Ip: 2 m0 + 3;  In (and general): 3 m0 + 4;
//   I3: floor(3 m0 / 2) + 4.
int64_t nonvanishing_bound(int64_t m0, FibrationType t);

// phi_m is birational for all m >= 5 m0 + 6.
int64_t birationality_bound(int64_t m0);

// K^3 >= 1/3 whenever p_g >= 2 (external input used by the census pruning).
Rat volume_bound_pg_ge2();

}  // namespace basket3
