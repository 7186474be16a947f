#pragma once

// Finite non-degenerate set-theoretic solutions r(x,y) = (sigma_x(y), tau_y(x))
// of the braid identity, their retractions, and the skew brace carried by the
// group generated by the sigma maps of an involutive solution.

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/isoclinism.hpp"

namespace sb::ybe {

using groups::Idx;
using groups::Perm;
using groups::PermGroup;

struct Solution {
  int n = 0;
  std::vector<Perm> sigma;
  std::vector<Perm> tau;
  bool involutive = false;
};

Solution validate_solution(std::vector<Perm> sigma, std::vector<Perm> tau);
// tau derived from tau_y(x) = sigma^{-1}_{sigma_x(y)}(x); rejects non-involutive input
Solution from_sigma_involutive(std::vector<Perm> sigma);

struct Retraction {
  Solution solution;
  std::vector<Idx> class_of;  // carrier -> class label, labelled by first appearance
};
Retraction retraction(const Solution& s);

struct RetractionTower {
  std::vector<Solution> levels;  // S, Ret(S), ... until size 1 or stabilization
  std::optional<int> mp_level;
};
RetractionTower retraction_tower(const Solution& s);
std::optional<int> multipermutation_level(const Solution& s);

PermGroup permutation_group(const Solution& s);  // closure of all sigma_x and tau_x

// The brace on the group generated by the sigma maps, with composition as the
// multiplicative structure and the additive structure transported along the
// coordinate vectors accumulated during generation.
braces::SkewBrace permutation_brace(const Solution& s);

std::optional<iso::IsoclinismWitness> are_permutation_isoclinic(const Solution& a,
                                                                const Solution& b);

// all involutive solutions of size n up to relabelling, canonically ordered
std::vector<Solution> enumerate_involutive(int n, int jobs = 0, bool reverse_order = false);

bool is_indecomposable(const Solution& s);

struct SolutionClassTable {
  std::vector<std::vector<int>> classes;  // ascending input indices per class
  std::vector<int> class_of;              // per input index
};
SolutionClassTable classify_solutions(const std::vector<Solution>& sols, int jobs = 0);

// "s1=(3 4); s2=(1 3 2 4); s3=id; s4=(1 2)"  (1-indexed); "flip" = all identity
std::vector<Perm> parse_sigma_line(const std::string& text, int n);
std::string format_sigma_line(const Solution& s);

// lex-minimal encoding of the sigma family over all relabellings of X
std::string canonical_key(const Solution& s);

}  // namespace sb::ybe
