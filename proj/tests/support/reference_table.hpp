#pragma once

// Published values of the six named sequences for n = -5..8.

#include <array>
#include <string_view>

namespace horadam::testing {

struct ReferenceRow {
    std::string_view sequence;
    std::array<std::string_view, 14> values;
};

inline constexpr std::int64_t kTableLo = -5;
inline constexpr std::int64_t kTableHi = 8;

inline constexpr std::array<ReferenceRow, 6> kReferenceTable = {{
    {"fibonacci", {"5", "-3", "2", "-1", "1", "0", "1", "1", "2", "3", "5", "8", "13", "21"}},
    {"lucas", {"-11", "7", "-4", "3", "-1", "2", "1", "3", "4", "7", "11", "18", "29", "47"}},
    {"pell", {"29", "-12", "5", "-2", "1", "0", "1", "2", "5", "12", "29", "70", "169", "408"}},
    {"pell-lucas", {"-82", "34", "-14", "6", "-2", "2", "2", "6", "14", "34", "82", "198", "478", "1154"}},
    {"jacobsthal", {"11/32", "-5/16", "3/8", "-1/4", "1/2", "0", "1", "1", "3", "5", "11", "21", "43", "85"}},
    {"jacobsthal-lucas", {"-31/32", "17/16", "-7/8", "5/4", "-1/2", "2", "1", "5", "7", "17", "31", "65", "127", "257"}},
}};

}  // namespace horadam::testing
