#pragma once

// Shared fixtures: the two order-8 braces on C2 x C4 used as a counterexample
// pair, and the listed solution representatives of sizes 4 and 5.

#include <array>
#include <map>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/census.hpp"
#include "skewbrace/ybe.hpp"

namespace fixtures {

using sb::braces::SkewBrace;

// carrier index = x*4 + y with x in C2, y in C4
inline SkewBrace brace_a8() {
  std::vector<std::vector<int>> add(8, std::vector<int>(8)), circ(8, std::vector<int>(8));
  for (int x1 = 0; x1 < 2; ++x1)
    for (int y1 = 0; y1 < 4; ++y1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y2 = 0; y2 < 4; ++y2) {
          add[x1 * 4 + y1][x2 * 4 + y2] = ((x1 + x2) % 2) * 4 + (y1 + y2) % 4;
          circ[x1 * 4 + y1][x2 * 4 + y2] = ((x1 + x2) % 2) * 4 + (y1 + y2 + 2 * x1 * y2) % 4;
        }
  return sb::braces::validate_brace_tables(add, circ, true);
}

inline SkewBrace brace_b8() {
  std::vector<std::vector<int>> add(8, std::vector<int>(8)), circ(8, std::vector<int>(8));
  for (int x1 = 0; x1 < 2; ++x1)
    for (int y1 = 0; y1 < 4; ++y1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y2 = 0; y2 < 4; ++y2) {
          add[x1 * 4 + y1][x2 * 4 + y2] = ((x1 + x2) % 2) * 4 + (y1 + y2) % 4;
          circ[x1 * 4 + y1][x2 * 4 + y2] =
              ((x1 + x2) % 2) * 4 + (y1 + y2 + 2 * (x1 + y1) * x2 + 2 * y1 * y2) % 4;
        }
  return sb::braces::validate_brace_tables(add, circ, true);
}

inline const std::array<const char*, 4>& size4_reps() {
  static const std::array<const char*, 4> reps = {
      "flip",
      "s1=id; s2=id; s3=(3 4); s4=(1 2)(3 4)",
      "s1=(3 4); s2=(1 3 2 4); s3=(1 4 2 3); s4=(1 2)",
      "s1=(1 2); s2=(1 3 2 4); s3=(3 4); s4=(1 4 2 3)",
  };
  return reps;
}

inline const std::array<const char*, 6>& size5_reps() {
  static const std::array<const char*, 6> reps = {
      "flip",
      "s1=id; s2=id; s3=id; s4=(4 5); s5=(2 3)(4 5)",
      "s1=id; s2=id; s3=id; s4=(2 3)(4 5); s5=(1 2)(4 5)",
      "s1=id; s2=(4 5); s3=(2 4 3 5); s4=(2 5 3 4); s5=(2 3)",
      "s1=id; s2=(2 3); s3=(2 4 3 5); s4=(4 5); s5=(2 5 3 4)",
      "s1=(4 5); s2=(4 5); s3=(1 4)(2 5); s4=(1 2); s5=(1 2)",
  };
  return reps;
}

inline sb::ybe::Solution solution_from(const char* line, int n) {
  return sb::ybe::from_sigma_involutive(sb::ybe::parse_sigma_line(line, n));
}

// multipermutation level two: three idle points and s4 = (2 3)
inline sb::ybe::Solution level_two_solution() {
  return solution_from("s1=id; s2=id; s3=id; s4=(2 3)", 4);
}

// indecomposable cyclic solution r(x,y) = (s(y), s^-1(x)) with s = (1 2 3 4)
inline sb::ybe::Solution cyclic_solution4() {
  return solution_from("s1=(1 2 3 4); s2=(1 2 3 4); s3=(1 2 3 4); s4=(1 2 3 4)", 4);
}

// censuses shared across test cases
inline const std::vector<sb::census::BraceRecord>& census_of(int order) {
  static std::map<int, std::vector<sb::census::BraceRecord>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, sb::census::enumerate_braces(order)).first;
  return it->second;
}

inline std::vector<SkewBrace> braces_up_to_order(int maxn) {
  std::vector<SkewBrace> out;
  for (int n = 1; n <= maxn; ++n)
    for (const auto& r : census_of(n)) out.push_back(r.brace);
  return out;
}

}  // namespace fixtures
