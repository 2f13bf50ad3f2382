#pragma once

// Published counts of rational knots by crossing number n = 3..26 (chiral
// pairs counted once, except sigma0 which counts them twice). Zero marks an
// empty cell.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ratknot::table1 {

inline constexpr int kFirstN = 3;
inline constexpr int kLastN = 26;
using Row = std::array<std::int64_t, kLastN - kFirstN + 1>;

// fibered
inline constexpr Row f = {1,   1,   1,   2,    3,    4,    7,    10,   16,   25,   40,   62,
                          101, 159, 257, 410, 663, 1062, 1719, 2764, 4472, 7209, 11664, 18828};
// fibered and achiral
inline constexpr Row fa = {0, 1, 0, 1, 0, 2, 0, 3, 0, 5, 0, 8, 0, 13, 0, 21, 0, 34, 0, 55, 0, 89, 0, 144};
// unknotting number one
inline constexpr Row u = {1,  1,  1,   3,   3,   6,   7,   15,  15,  30,   31,   63,
                          63, 126, 127, 255, 255, 510, 511, 1023, 1023, 2046, 2047, 4095};
// unknotting number one and achiral
inline constexpr Row au = {0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1};
// fibered with unknotting number one
inline constexpr Row fu = {1, 1, 0, 2,  2,  2,  2,  4,  4,  6,   6,   10,
                           10, 16, 16, 26, 26, 42, 42, 68, 68, 110, 110, 178};
// positive (up to mirror)
inline constexpr Row p = {1, 0, 2, 0, 5, 0, 12, 0, 30, 0, 76, 0, 195, 0, 504, 0, 1309, 0, 3410, 0, 8900, 0, 23256, 0};
// signature zero, chiral pairs counted twice
inline constexpr Row sigma0 = {0,     1,     0,     3,      2,      9,      6,      29,
                               30,    99,    112,   351,    450,    1275,   1734,   4707,
                               6762,  17577, 26208, 66197, 101862, 250953, 395804, 956385};

inline constexpr std::array<std::string_view, 7> kRowNames = {"f", "fa", "u", "au", "fu", "p", "sigma0"};

inline const Row* row(std::string_view name) {
  if (name == "f") return &f;
  if (name == "fa") return &fa;
  if (name == "u") return &u;
  if (name == "au") return &au;
  if (name == "fu") return &fu;
  if (name == "p") return &p;
  if (name == "sigma0") return &sigma0;
  return nullptr;
}

inline std::int64_t at(const Row& r, int n) { return r[static_cast<std::size_t>(n - kFirstN)]; }

}  // namespace ratknot::table1
