#pragma once

// Exact arithmetic for small finite groups on explicit carriers.
// Carriers are always {0..n-1} with identity 0; permutations act on {0..n-1}.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/errors.hpp"

namespace sb::groups {

using Idx = std::uint8_t;

// ---------------------------------------------------------------------------
// permutations

struct Perm {
  std::vector<Idx> img;

  Perm() = default;
  explicit Perm(std::vector<Idx> images) : img(std::move(images)) {}

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[static_cast<size_t>(x)]; }
  bool is_identity() const;
  int order() const;
  int fixed_point_count() const;

  Perm inverse() const;
  auto operator<=>(const Perm&) const = default;
};

// (f * g)(x) = f(g(x))
Perm compose(const Perm& f, const Perm& g);
bool is_bijection(std::span<const Idx> images);

// Cycle notation, 1-indexed by default ("(3 4)(1 2)"; "id" or "()" for identity).
std::string cycle_string(const Perm& p, int index_base = 1);
Perm perm_from_cycles(const std::string& text, int degree, int index_base = 1);

// ---------------------------------------------------------------------------
// materialized permutation groups

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // lex-sorted, closed under product and inverse

  std::size_t order() const { return elements.size(); }
  std::optional<std::uint32_t> index_of(const Perm& p) const;
  bool is_transitive() const;
};

// Breadth-first closure of the generated subgroup of Sym(degree).
PermGroup closure(int degree, std::vector<Perm> generators);

// ---------------------------------------------------------------------------
// Cayley tables

struct CayleyGroup {
  int n = 0;
  std::vector<Idx> tab;   // n*n, row-major: tab[a*n+b] = a*b
  std::vector<Idx> invs;  // two-sided inverses

  int mul(int a, int b) const { return tab[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const { return invs[static_cast<size_t>(a)]; }
  bool is_abelian() const;
};

// Validates all group axioms; errors name the first violation.
CayleyGroup validate_group(const std::vector<std::vector<int>>& table);
CayleyGroup validate_group_flat(int n, std::vector<Idx> tab);

int element_order(const CayleyGroup& g, int a);
std::vector<std::pair<int, int>> order_profile(const CayleyGroup& g);  // (order, count), sorted
std::vector<Idx> center(const CayleyGroup& g);
std::vector<Idx> derived_subgroup(const CayleyGroup& g);
std::vector<Idx> subgroup_closure(const CayleyGroup& g, std::span<const Idx> seed);
bool is_subgroup(const CayleyGroup& g, std::span<const Idx> s);
bool is_normal_subgroup(const CayleyGroup& g, std::span<const Idx> s);
std::vector<int> conjugacy_class_sizes(const CayleyGroup& g);  // per element

struct GroupInvariants {
  std::vector<Idx> center;
  std::vector<Idx> derived_subgroup;
  bool is_abelian = false;
  bool is_nilpotent = false;
  std::vector<std::pair<int, int>> order_profile;
};
GroupInvariants group_invariants(const CayleyGroup& g);

struct QuotientGroup {
  CayleyGroup group;
  std::vector<Idx> proj;  // carrier of g -> carrier of quotient
};
// Cosets relabelled {0..k-1}: coset of 0 first, the rest ordered by smallest member.
QuotientGroup quotient_group(const CayleyGroup& g, std::span<const Idx> normal);

// ---------------------------------------------------------------------------
// isomorphism machinery (shared by the brace layer)

// Searches bijections f with f(T(x,y)) = T'(f(x), f(y)) for every paired table.
// Elements may only map to elements with an equal profile word. The visitor
// returns true to stop the search; the function reports whether it stopped.
bool for_each_table_isomorphism(std::span<const CayleyGroup* const> src,
                                std::span<const CayleyGroup* const> dst,
                                std::span<const std::uint64_t> src_profile,
                                std::span<const std::uint64_t> dst_profile,
                                const std::function<bool(const std::vector<Idx>&)>& visit);

std::optional<Perm> are_isomorphic(const CayleyGroup& g, const CayleyGroup& h);
PermGroup automorphism_group(const CayleyGroup& g);

// ---------------------------------------------------------------------------
// holomorphs and regular subgroups

// All maps x -> g + f(x) with f an automorphism; order |G|*|Aut(G)|.
PermGroup holomorph(const CayleyGroup& g);

enum class RegFusion { raw, by_stabilizer0 };

// All subgroups of H of order n acting regularly on {0..n-1}, up to conjugation
// by the point stabilizer of 0 (unless RegFusion::raw). Deterministic output.
std::vector<PermGroup> regular_subgroups(const PermGroup& h, int n,
                                         RegFusion fusion = RegFusion::by_stabilizer0,
                                         int jobs = 0);

// ---------------------------------------------------------------------------
// group constructors and the small-order catalog

CayleyGroup cyclic_group(int n);
CayleyGroup abelian_group(const std::vector<int>& cyclic_factors);
CayleyGroup direct_product_group(const CayleyGroup& a, const CayleyGroup& b);  // index = x*|B| + y
CayleyGroup dihedral_group(int order);                   // order = 2m, m >= 1
CayleyGroup dicyclic_group(int order);                   // order = 4m; Dic_m, Q8 = dicyclic(8)
CayleyGroup semidirect_cyclic(int m, int k, int t);      // C_m x| C_k, generator acts by x -> t*x
// A x| H with act[h] an automorphism of A and act[h1*h2] = act[h1]*act[h2].
CayleyGroup semidirect_product(const CayleyGroup& a, const CayleyGroup& h,
                               const std::vector<Perm>& act);
CayleyGroup group_from_permgroup(const PermGroup& pg);   // Cayley table on element indices
CayleyGroup heisenberg27();                              // UT(3,3), exponent 3

struct CatalogEntry {
  std::string name;
  CayleyGroup group;
};
// One representative per isomorphism class, orders 1..30.
std::vector<CatalogEntry> catalog_groups(int n);

}  // namespace sb::groups
