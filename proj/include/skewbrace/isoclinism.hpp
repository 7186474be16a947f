#pragma once

// Isoclinism of skew braces: a pair of isomorphisms xi: A/Ann(A) -> B/Ann(B)
// and theta: A' -> B' that transport the commutator map (a,b) -> [a,b]_+ and
// the star map (a,b) -> a*b. Fingerprints collect invariants that isoclinic
// braces must share and are used to pre-bucket classification.

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace sb::iso {

using braces::SkewBrace;
using groups::CayleyGroup;
using groups::Idx;
using groups::Perm;

struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d);
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// cached per-brace analysis

struct Analysis {
  braces::CharacteristicSubsets chars;
  braces::BraceSubset commutator;
  braces::QuotientBrace quotient;        // by the annihilator
  std::vector<Idx> lift;                 // quotient class -> smallest representative
  braces::SubBraceView commutator_brace; // A' on its own carrier
  braces::BracePredicates preds;
  bool right_nilpotent = false;
};
Analysis analyze(const SkewBrace& a);

// ---------------------------------------------------------------------------
// fingerprints

struct Fingerprint {
  int ord_quotient = 0;
  int ord_commutator = 0;
  bool trivial = false;
  bool two_sided = false;
  bool right_nilpotent = false;
  bool abelian_type = false;
  bool nilpotent_type = false;
  std::vector<std::pair<int, int>> quotient_add_profile;
  std::vector<std::pair<int, int>> quotient_circ_profile;
  std::vector<std::pair<int, int>> commutator_add_profile;
  std::vector<std::pair<int, int>> commutator_circ_profile;
  std::vector<std::pair<int, Rational>> lambda_orbits;  // (orbit size, count / |A|)
  std::vector<std::pair<int, Rational>> rho_orbits;

  bool operator==(const Fingerprint&) const = default;
  std::string key() const;
  // name of the first field where the two differ, or "" if equal
  static std::string first_difference(const Fingerprint& a, const Fingerprint& b);
};
Fingerprint fingerprint(const SkewBrace& a);
Fingerprint fingerprint(const SkewBrace& a, const Analysis& x);

// ---------------------------------------------------------------------------
// the phi maps on quotient-class pairs, with values in A'

struct PhiMaps {
  int qn = 0;
  std::vector<Idx> plus_tab, star_tab, circ_tab;  // qn x qn, values in the parent carrier
  int phi_plus(int p, int q) const { return plus_tab[static_cast<size_t>(p) * qn + q]; }
  int phi_star(int p, int q) const { return star_tab[static_cast<size_t>(p) * qn + q]; }
  int phi_circ(int p, int q) const { return circ_tab[static_cast<size_t>(p) * qn + q]; }
};
// verifies representative independence of all three maps
PhiMaps phi_maps(const SkewBrace& a);

// ---------------------------------------------------------------------------
// isoclinism decision with witnesses

struct IsoclinismWitness {
  std::vector<Idx> xi;         // carrier of A/Ann(A) -> carrier of B/Ann(B)
  std::vector<Idx> theta_dom;  // sorted elements of A'
  std::vector<Idx> theta_img;  // images in B's carrier, elements of B'
};

std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const SkewBrace& b);
std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const Analysis& xa,
                                               const SkewBrace& b, const Analysis& xb);

// exhaustive re-check of a witness; also checks the induced [.,.]_o square
bool verify_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w,
                       std::string* why = nullptr);

IsoclinismWitness invert_witness(const IsoclinismWitness& w);
IsoclinismWitness compose_witness(const IsoclinismWitness& ab, const IsoclinismWitness& bc);

// transport of a sub skew brace A1 containing Ann(A) through a witness
std::vector<Idx> corresponding_subbrace(const SkewBrace& a, const SkewBrace& b,
                                        const IsoclinismWitness& w, std::span<const Idx> a1);

// ---------------------------------------------------------------------------
// stem braces

bool is_stem(const SkewBrace& a);                                 // Ann(A) contained in A'
std::optional<size_t> stem_search(std::span<const SkewBrace> cls);  // minimal-order stem member

// ---------------------------------------------------------------------------
// the conjugation action of (A/Ann)+ x| (A/Ann)o on the carrier

struct ActionGroup {
  int m = 0;                 // |A/Ann(A)|
  CayleyGroup group;         // on pairs, index a*m + b
  std::vector<Perm> action;  // permutation of A's carrier per pair
};
ActionGroup action_group(const SkewBrace& a);

enum class OrbitSelector { lambda, rho, full };
// orbit-size histogram (size, count), sorted by size
std::vector<std::pair<int, int>> h_orbit_stats(const SkewBrace& a, OrbitSelector sel);
std::vector<std::pair<int, int>> h_orbit_stats(const SkewBrace& a, const ActionGroup& ag,
                                               const std::vector<int>& subgroup_pairs);
// the selector subgroups as pair indices
std::vector<int> selector_pairs(const ActionGroup& ag, OrbitSelector sel);
// transport a subgroup of A's action group through xi (pairwise image)
std::vector<int> transport_subgroup(const ActionGroup& aga, const ActionGroup& agb,
                                    const IsoclinismWitness& w, const std::vector<int>& pairs);

// ---------------------------------------------------------------------------
// two-sided braces: class equation of the triple action

struct ClassEquation {
  int ann_size = 0;
  std::vector<int> orbit_sizes;  // nontrivial orbits, ascending
};
ClassEquation two_sided_class_equation(const SkewBrace& b);

// ---------------------------------------------------------------------------
// classification

struct ClassEntry {
  int representative = 0;     // index into the input list
  std::vector<int> members;   // ascending input indices
  std::vector<IsoclinismWitness> witnesses;  // aligned with members; rep -> member
};
struct ClassTable {
  std::vector<ClassEntry> classes;
};
ClassTable partition_classes(const std::vector<SkewBrace>& braces, int jobs = 0,
                             bool with_witnesses = true);

}  // namespace sb::iso
