#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "skewbrace/groups.hpp"

namespace sb::groups {

namespace {

std::string idx3(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

bool CayleyGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

CayleyGroup validate_group_flat(int n, std::vector<Idx> tab) {
  if (n <= 0 || tab.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    raise(Errc::parse_error, "ParseError: table is not n x n");
  CayleyGroup g;
  g.n = n;
  g.tab = std::move(tab);
  for (Idx v : g.tab)
    if (v >= n) raise(Errc::parse_error, "ParseError: table entry out of range");
  // identity at 0
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      raise(Errc::no_identity_at_zero, "NoIdentityAtZero: 0 is not a two-sided identity");
  // two-sided inverses
  g.invs.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int x = 0; x < n; ++x)
      if (g.mul(a, x) == 0 && g.mul(x, a) == 0) {
        found = x;
        break;
      }
    if (found < 0) raise(Errc::not_invertible, "NotInvertible(" + std::to_string(a) + ")");
    g.invs[static_cast<size_t>(a)] = static_cast<Idx>(found);
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(static_cast<size_t>(n), 0), col(static_cast<size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      if (row[static_cast<size_t>(g.mul(a, b))]++)
        raise(Errc::not_latin, "NotLatin(row " + std::to_string(a) + ")");
      if (col[static_cast<size_t>(g.mul(b, a))]++)
        raise(Errc::not_latin, "NotLatin(col " + std::to_string(a) + ")");
    }
  }
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          raise(Errc::not_associative, "NotAssociative" + idx3(a, b, c));
  return g;
}

CayleyGroup validate_group(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  std::vector<Idx> flat;
  flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) raise(Errc::parse_error, "ParseError: ragged table");
    for (int v : row) {
      if (v < 0 || v >= n) raise(Errc::parse_error, "ParseError: table entry out of range");
      flat.push_back(static_cast<Idx>(v));
    }
  }
  return validate_group_flat(n, std::move(flat));
}

int element_order(const CayleyGroup& g, int a) {
  int x = a, ord = 1;
  while (x != 0) {
    x = g.mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<std::pair<int, int>> order_profile(const CayleyGroup& g) {
  std::map<int, int> m;
  for (int a = 0; a < g.n; ++a) ++m[element_order(g, a)];
  return {m.begin(), m.end()};
}

std::vector<Idx> center(const CayleyGroup& g) {
  std::vector<Idx> z;
  for (int a = 0; a < g.n; ++a) {
    bool central = true;
    for (int b = 0; b < g.n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(static_cast<Idx>(a));
  }
  return z;
}

std::vector<Idx> subgroup_closure(const CayleyGroup& g, std::span<const Idx> seed) {
  std::vector<char> in(static_cast<size_t>(g.n), 0);
  std::vector<Idx> elems;
  auto add = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      elems.push_back(static_cast<Idx>(x));
    }
  };
  add(0);
  for (Idx s : seed) add(s);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
    add(g.inv(elems[i]));
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Idx> derived_subgroup(const CayleyGroup& g) {
  std::vector<Idx> comms;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      comms.push_back(static_cast<Idx>(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))));
  return subgroup_closure(g, comms);
}

bool is_subgroup(const CayleyGroup& g, std::span<const Idx> s) {
  std::vector<char> in(static_cast<size_t>(g.n), 0);
  bool has_id = false;
  for (Idx x : s) {
    if (x >= g.n) return false;
    in[x] = 1;
    if (x == 0) has_id = true;
  }
  if (!has_id) return false;
  for (Idx a : s)
    for (Idx b : s)
      if (!in[static_cast<size_t>(g.mul(a, b))]) return false;
  for (Idx a : s)
    if (!in[static_cast<size_t>(g.inv(a))]) return false;
  return true;
}

bool is_normal_subgroup(const CayleyGroup& g, std::span<const Idx> s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<char> in(static_cast<size_t>(g.n), 0);
  for (Idx x : s) in[x] = 1;
  for (int a = 0; a < g.n; ++a)
    for (Idx x : s)
      if (!in[static_cast<size_t>(g.mul(g.mul(a, x), g.inv(a)))]) return false;
  return true;
}

std::vector<int> conjugacy_class_sizes(const CayleyGroup& g) {
  std::vector<int> cls(static_cast<size_t>(g.n), -1);
  std::vector<int> sizes(static_cast<size_t>(g.n), 0);
  for (int a = 0; a < g.n; ++a) {
    if (cls[static_cast<size_t>(a)] >= 0) continue;
    std::vector<int> orbit;
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    for (int x = 0; x < g.n; ++x) {
      int y = g.mul(g.mul(x, a), g.inv(x));
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        orbit.push_back(y);
      }
    }
    for (int y : orbit) cls[static_cast<size_t>(y)] = a;
    for (int y : orbit) sizes[static_cast<size_t>(y)] = static_cast<int>(orbit.size());
  }
  return sizes;
}

namespace {

// [S, G] as a subgroup
std::vector<Idx> commutator_with_group(const CayleyGroup& g, std::span<const Idx> s) {
  std::vector<Idx> comms;
  for (Idx a : s)
    for (int b = 0; b < g.n; ++b)
      comms.push_back(static_cast<Idx>(g.mul(g.mul(a, static_cast<Idx>(b)),
                                             g.mul(g.inv(a), g.inv(b)))));
  return subgroup_closure(g, comms);
}

bool nilpotent_by_lower_central(const CayleyGroup& g) {
  std::vector<Idx> term(static_cast<size_t>(g.n));
  std::iota(term.begin(), term.end(), Idx{0});
  while (true) {
    std::vector<Idx> next = commutator_with_group(g, term);
    if (next.size() == 1) return true;
    if (next == term) return false;
    term = std::move(next);
  }
}

}  // namespace

GroupInvariants group_invariants(const CayleyGroup& g) {
  GroupInvariants inv;
  inv.center = center(g);
  inv.derived_subgroup = derived_subgroup(g);
  inv.is_abelian = g.is_abelian();
  inv.is_nilpotent = nilpotent_by_lower_central(g);
  inv.order_profile = order_profile(g);
  return inv;
}

QuotientGroup quotient_group(const CayleyGroup& g, std::span<const Idx> normal) {
  if (!is_subgroup(g, normal)) raise(Errc::not_subgroup, "NotSubgroup");
  if (!is_normal_subgroup(g, normal)) raise(Errc::not_normal, "NotNormal");
  // cosets keyed by smallest member
  std::vector<int> coset_min(static_cast<size_t>(g.n), -1);
  for (int a = 0; a < g.n; ++a) {
    if (coset_min[static_cast<size_t>(a)] >= 0) continue;
    int mn = g.n;
    std::vector<int> members;
    for (Idx x : normal) {
      int y = g.mul(a, x);
      members.push_back(y);
      mn = std::min(mn, y);
    }
    for (int y : members) coset_min[static_cast<size_t>(y)] = mn;
  }
  std::vector<int> reps;
  for (int a = 0; a < g.n; ++a)
    if (coset_min[static_cast<size_t>(a)] == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());
  // coset of 0 has min 0; reps sorted => label 0 goes to it
  std::vector<int> label_of_rep(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < reps.size(); ++i) label_of_rep[static_cast<size_t>(reps[i])] = static_cast<int>(i);
  QuotientGroup q;
  q.proj.assign(static_cast<size_t>(g.n), 0);
  for (int a = 0; a < g.n; ++a)
    q.proj[static_cast<size_t>(a)] = static_cast<Idx>(label_of_rep[static_cast<size_t>(coset_min[static_cast<size_t>(a)])]);
  int k = static_cast<int>(reps.size());
  std::vector<Idx> tab(static_cast<size_t>(k) * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      tab[static_cast<size_t>(i) * k + j] = q.proj[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
  q.group = validate_group_flat(k, std::move(tab));
  return q;
}

}  // namespace sb::groups
