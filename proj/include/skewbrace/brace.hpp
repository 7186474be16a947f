#pragma once

// Finite skew braces on explicit carriers: two group structures (A,+), (A,o)
// on {0..n-1} with identity 0 satisfying a o (b+c) = a o b - a + a o c.

#include <optional>
#include <span>
#include <vector>

#include "skewbrace/groups.hpp"

namespace sb::braces {

using groups::CayleyGroup;
using groups::Idx;
using groups::Perm;
using groups::PermGroup;

struct SkewBrace {
  int n = 0;
  CayleyGroup add;
  CayleyGroup circ;
  std::vector<Idx> lam_, rho_, star_tab_;  // n*n tables filled at validation

  int plus(int a, int b) const { return add.mul(a, b); }
  int neg(int a) const { return add.inv(a); }
  int cmul(int a, int b) const { return circ.mul(a, b); }
  int cinv(int a) const { return circ.inv(a); }

  int lambda(int a, int b) const { return lam_[static_cast<size_t>(a) * n + b]; }
  int rho(int a, int b) const { return rho_[static_cast<size_t>(a) * n + b]; }
  int star(int a, int b) const { return star_tab_[static_cast<size_t>(a) * n + b]; }
  // [a,b]_+ and [a,b]_o
  int bplus(int a, int b) const { return plus(plus(a, b), plus(neg(a), neg(b))); }
  int bcirc(int a, int b) const { return cmul(cmul(a, b), cmul(cinv(a), cinv(b))); }

  bool is_trivial() const { return add.tab == circ.tab; }
};

// Validates both groups, the compatibility law on all triples, and (optionally)
// that lambda/rho are action homomorphisms by automorphisms.
SkewBrace validate_brace(const CayleyGroup& add, const CayleyGroup& circ, bool deep = false);
SkewBrace validate_brace_tables(const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& circ, bool deep = false);

struct BraceSubset {
  std::vector<Idx> elements;  // sorted, contains 0
  bool is_subbrace = false;
  bool is_left_ideal = false;
  bool is_ideal = false;
};
BraceSubset make_subset(const SkewBrace& a, std::span<const Idx> elements);

bool is_subbrace(const SkewBrace& a, std::span<const Idx> s);
bool is_left_ideal(const SkewBrace& a, std::span<const Idx> s);
bool is_ideal(const SkewBrace& a, std::span<const Idx> s);

// smallest additive subgroup containing S
std::vector<Idx> additive_closure(const SkewBrace& a, std::span<const Idx> s);
// smallest sub skew brace containing S
std::vector<Idx> subbrace_closure(const SkewBrace& a, std::span<const Idx> s);
// smallest ideal containing S
std::vector<Idx> ideal_closure(const SkewBrace& a, std::span<const Idx> s);

// A' = additive subgroup generated by all [a,b]_+ and all a*b; always an ideal
BraceSubset commutator_ideal(const SkewBrace& a);

struct CharacteristicSubsets {
  std::vector<Idx> ker_lambda;
  std::vector<Idx> center_add;
  std::vector<Idx> center_circ;
  std::vector<Idx> socle;       // ker lambda  intersect  Z(A,+)
  std::vector<Idx> annihilator; // socle  intersect  Z(A,o)
};
CharacteristicSubsets characteristic_subsets(const SkewBrace& a);

struct QuotientBrace {
  SkewBrace brace;
  std::vector<Idx> proj;
};
QuotientBrace quotient_brace(const SkewBrace& a, std::span<const Idx> ideal);

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b);  // index = x*|B| + y
SkewBrace trivial_brace(const CayleyGroup& g);

// sub skew brace on its own carrier; elements must be a subbrace, sorted
struct SubBraceView {
  SkewBrace brace;
  std::vector<Idx> elements;  // position -> parent carrier index
};
SubBraceView subbrace_as_brace(const SkewBrace& a, std::span<const Idx> elements);

struct RightSeries {
  std::vector<std::vector<Idx>> terms;  // A = A^(1) >= A^(2) >= ...
  bool right_nilpotent = false;
};
RightSeries right_series(const SkewBrace& a);
bool is_right_nilpotent(const SkewBrace& a);

struct BracePredicates {
  bool is_trivial = false;
  bool is_two_sided = false;
  bool is_abelian_type = false;
  bool is_nilpotent_type = false;
  bool is_radical_ring = false;
  bool is_annihilator_nilpotent = false;
};
BracePredicates predicates(const SkewBrace& a);

// carrier Z/n with x o y = x + dxy + y; requires d | n and every prime of n divides d
SkewBrace make_cnd(int n, int d);

std::optional<Perm> brace_isomorphic(const SkewBrace& a, const SkewBrace& b);

// G <= Hol(A+) regular; circ[a][b] = g_a(b) for the unique g_a with g_a(0) = a
SkewBrace brace_from_regular_subgroup(const CayleyGroup& aplus, const PermGroup& g);

// every sub skew brace of A containing I (I itself a sub skew brace)
std::vector<BraceSubset> sub_braces_containing(const SkewBrace& a, std::span<const Idx> i);

// orbit sizes of the carrier under all lambda_a (resp. rho_a)
std::vector<int> lambda_orbit_sizes(const SkewBrace& a);
std::vector<int> rho_orbit_sizes(const SkewBrace& a);

}  // namespace sb::braces
