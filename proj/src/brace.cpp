#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "skewbrace/brace.hpp"

namespace sb::braces {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<int> orbit_sizes_under(const SkewBrace& a, bool use_rho) {
  int n = a.n;
  std::vector<int> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      int y = use_rho ? a.rho(g, x) : a.lambda(g, x);
      int rx = find(x), ry = find(y);
      if (rx != ry) root[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
    }
  std::vector<int> count(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) ++count[static_cast<size_t>(find(x))];
  std::vector<int> size(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) size[static_cast<size_t>(x)] = count[static_cast<size_t>(find(x))];
  return size;
}

}  // namespace

SkewBrace validate_brace(const CayleyGroup& addg, const CayleyGroup& circg, bool deep) {
  if (addg.n != circg.n) raise(Errc::bad_parameters, "BadParameters: carrier sizes differ");
  SkewBrace a;
  a.n = addg.n;
  a.add = addg;
  a.circ = circg;
  int n = a.n;
  // compatibility on all triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = a.cmul(x, a.plus(y, z));
        int rhs = a.plus(a.plus(a.cmul(x, y), a.neg(x)), a.cmul(x, z));
        if (lhs != rhs) raise(Errc::compatibility_fails, "CompatibilityFails" + triple(x, y, z));
      }
  a.lam_.resize(static_cast<size_t>(n) * n);
  a.rho_.resize(static_cast<size_t>(n) * n);
  a.star_tab_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int l = a.plus(a.neg(x), a.cmul(x, y));
      int r = a.plus(a.cmul(x, y), a.neg(x));
      a.lam_[static_cast<size_t>(x) * n + y] = static_cast<Idx>(l);
      a.rho_[static_cast<size_t>(x) * n + y] = static_cast<Idx>(r);
      a.star_tab_[static_cast<size_t>(x) * n + y] = static_cast<Idx>(a.plus(l, a.neg(y)));
    }
  if (deep) {
    // lambda/rho are actions of (A,o) on (A,+) by automorphisms
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (a.lambda(x, a.plus(y, z)) != a.plus(a.lambda(x, y), a.lambda(x, z)))
            raise(Errc::internal_axiom_failure, "lambda not additive at " + triple(x, y, z));
          if (a.rho(x, a.plus(y, z)) != a.plus(a.rho(x, y), a.rho(x, z)))
            raise(Errc::internal_axiom_failure, "rho not additive at " + triple(x, y, z));
          if (a.lambda(a.cmul(x, y), z) != a.lambda(x, a.lambda(y, z)))
            raise(Errc::internal_axiom_failure, "lambda not an action at " + triple(x, y, z));
          if (a.rho(a.cmul(x, y), z) != a.rho(x, a.rho(y, z)))
            raise(Errc::internal_axiom_failure, "rho not an action at " + triple(x, y, z));
        }
        if (a.cmul(x, y) != a.plus(x, a.lambda(x, y)) ||
            a.cmul(x, y) != a.plus(a.rho(x, y), x))
          raise(Errc::internal_axiom_failure, "lambda/rho inconsistent with o");
      }
  }
  return a;
}

SkewBrace validate_brace_tables(const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& circ, bool deep) {
  return validate_brace(groups::validate_group(add), groups::validate_group(circ), deep);
}

bool is_subbrace(const SkewBrace& a, std::span<const Idx> s) {
  std::vector<char> in(static_cast<size_t>(a.n), 0);
  bool has0 = false;
  for (Idx x : s) {
    in[x] = 1;
    if (x == 0) has0 = true;
  }
  if (!has0) return false;
  for (Idx x : s) {
    if (!in[static_cast<size_t>(a.neg(x))] || !in[static_cast<size_t>(a.cinv(x))]) return false;
    for (Idx y : s)
      if (!in[static_cast<size_t>(a.plus(x, y))] || !in[static_cast<size_t>(a.cmul(x, y))])
        return false;
  }
  return true;
}

bool is_left_ideal(const SkewBrace& a, std::span<const Idx> s) {
  if (!groups::is_subgroup(a.add, s)) return false;
  std::vector<char> in(static_cast<size_t>(a.n), 0);
  for (Idx x : s) in[x] = 1;
  for (int g = 0; g < a.n; ++g)
    for (Idx x : s)
      if (!in[static_cast<size_t>(a.lambda(g, x))]) return false;
  return true;
}

bool is_ideal(const SkewBrace& a, std::span<const Idx> s) {
  return is_left_ideal(a, s) && groups::is_normal_subgroup(a.add, s) &&
         groups::is_normal_subgroup(a.circ, s);
}

BraceSubset make_subset(const SkewBrace& a, std::span<const Idx> elements) {
  BraceSubset b;
  b.elements.assign(elements.begin(), elements.end());
  std::sort(b.elements.begin(), b.elements.end());
  b.elements.erase(std::unique(b.elements.begin(), b.elements.end()), b.elements.end());
  b.is_subbrace = is_subbrace(a, b.elements);
  b.is_left_ideal = b.is_subbrace && is_left_ideal(a, b.elements);
  b.is_ideal = b.is_left_ideal && is_ideal(a, b.elements);
  return b;
}

std::vector<Idx> additive_closure(const SkewBrace& a, std::span<const Idx> s) {
  return groups::subgroup_closure(a.add, s);
}

namespace {

// fixed-point closure under a family of unary maps applied to members
std::vector<Idx> closure_under(const SkewBrace& a, std::span<const Idx> seed,
                               bool circ_ops, bool ideal_ops) {
  std::vector<char> in(static_cast<size_t>(a.n), 0);
  std::vector<Idx> elems;
  auto push = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      elems.push_back(static_cast<Idx>(x));
    }
  };
  push(0);
  for (Idx x : seed) push(x);
  for (size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    push(a.neg(x));
    if (circ_ops) push(a.cinv(x));
    for (size_t j = 0; j <= i; ++j) {
      int y = elems[j];
      push(a.plus(x, y));
      push(a.plus(y, x));
      if (circ_ops) {
        push(a.cmul(x, y));
        push(a.cmul(y, x));
      }
    }
    if (ideal_ops) {
      for (int g = 0; g < a.n; ++g) {
        push(a.lambda(g, x));
        push(a.plus(a.plus(g, x), a.neg(g)));
        push(a.cmul(a.cmul(g, x), a.cinv(g)));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<Idx> subbrace_closure(const SkewBrace& a, std::span<const Idx> s) {
  return closure_under(a, s, true, false);
}

std::vector<Idx> ideal_closure(const SkewBrace& a, std::span<const Idx> s) {
  return closure_under(a, s, true, true);
}

BraceSubset commutator_ideal(const SkewBrace& a) {
  std::vector<Idx> gens;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      gens.push_back(static_cast<Idx>(a.bplus(x, y)));
      gens.push_back(static_cast<Idx>(a.star(x, y)));
    }
  BraceSubset b = make_subset(a, additive_closure(a, gens));
  if (!b.is_ideal)
    raise(Errc::internal_ideal_check_failed, "InternalIdealCheckFailed: A' is not an ideal");
  return b;
}

CharacteristicSubsets characteristic_subsets(const SkewBrace& a) {
  CharacteristicSubsets c;
  for (int x = 0; x < a.n; ++x) {
    bool ker = true;
    for (int y = 0; y < a.n && ker; ++y) ker = a.lambda(x, y) == y;
    if (ker) c.ker_lambda.push_back(static_cast<Idx>(x));
  }
  c.center_add = groups::center(a.add);
  c.center_circ = groups::center(a.circ);
  std::set_intersection(c.ker_lambda.begin(), c.ker_lambda.end(), c.center_add.begin(),
                        c.center_add.end(), std::back_inserter(c.socle));
  std::set_intersection(c.socle.begin(), c.socle.end(), c.center_circ.begin(),
                        c.center_circ.end(), std::back_inserter(c.annihilator));
  if (!is_ideal(a, c.socle) || !is_ideal(a, c.annihilator))
    raise(Errc::internal_ideal_check_failed, "InternalIdealCheckFailed: Soc/Ann not ideals");
  return c;
}

QuotientBrace quotient_brace(const SkewBrace& a, std::span<const Idx> ideal) {
  if (!is_ideal(a, ideal)) raise(Errc::not_an_ideal, "NotAnIdeal");
  groups::QuotientGroup qa = groups::quotient_group(a.add, ideal);
  // additive and multiplicative cosets coincide for ideals
  for (int x = 0; x < a.n; ++x) {
    std::set<int> addc, mulc;
    for (Idx i : ideal) {
      addc.insert(a.plus(x, i));
      mulc.insert(a.cmul(x, i));
    }
    if (addc != mulc)
      raise(Errc::internal_axiom_failure, "quotient_brace: cosets disagree at " + std::to_string(x));
  }
  int k = qa.group.n;
  std::vector<Idx> reps(static_cast<size_t>(k), 0);
  std::vector<char> have(static_cast<size_t>(k), 0);
  for (int x = 0; x < a.n; ++x) {
    Idx c = qa.proj[static_cast<size_t>(x)];
    if (!have[c]) {
      have[c] = 1;
      reps[c] = static_cast<Idx>(x);  // smallest member: first hit in carrier order
    }
  }
  std::vector<Idx> circ_tab(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      circ_tab[static_cast<size_t>(i) * k + j] =
          qa.proj[static_cast<size_t>(a.cmul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
  QuotientBrace out;
  out.brace = validate_brace(qa.group, groups::validate_group_flat(k, std::move(circ_tab)));
  out.proj = std::move(qa.proj);
  return out;
}

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return validate_brace(groups::direct_product_group(a.add, b.add),
                        groups::direct_product_group(a.circ, b.circ));
}

SkewBrace trivial_brace(const CayleyGroup& g) { return validate_brace(g, g); }

SubBraceView subbrace_as_brace(const SkewBrace& a, std::span<const Idx> elements) {
  if (!is_subbrace(a, elements)) raise(Errc::bad_parameters, "BadParameters: not a sub skew brace");
  SubBraceView v;
  v.elements.assign(elements.begin(), elements.end());
  std::sort(v.elements.begin(), v.elements.end());
  int k = static_cast<int>(v.elements.size());
  std::vector<int> pos(static_cast<size_t>(a.n), -1);
  for (int i = 0; i < k; ++i) pos[v.elements[static_cast<size_t>(i)]] = i;
  std::vector<Idx> at(static_cast<size_t>(k) * k), ct(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      at[static_cast<size_t>(i) * k + j] = static_cast<Idx>(
          pos[static_cast<size_t>(a.plus(v.elements[static_cast<size_t>(i)], v.elements[static_cast<size_t>(j)]))]);
      ct[static_cast<size_t>(i) * k + j] = static_cast<Idx>(
          pos[static_cast<size_t>(a.cmul(v.elements[static_cast<size_t>(i)], v.elements[static_cast<size_t>(j)]))]);
    }
  v.brace = validate_brace(groups::validate_group_flat(k, std::move(at)),
                           groups::validate_group_flat(k, std::move(ct)));
  return v;
}

RightSeries right_series(const SkewBrace& a) {
  RightSeries s;
  std::vector<Idx> whole(static_cast<size_t>(a.n));
  std::iota(whole.begin(), whole.end(), Idx{0});
  s.terms.push_back(whole);
  while (true) {
    const std::vector<Idx>& cur = s.terms.back();
    std::vector<Idx> gens;
    for (Idx x : cur)
      for (int y = 0; y < a.n; ++y) gens.push_back(static_cast<Idx>(a.star(x, y)));
    std::vector<Idx> next = additive_closure(a, gens);
    bool repeat = next == cur;
    s.terms.push_back(std::move(next));
    if (s.terms.back().size() == 1) {
      s.right_nilpotent = true;
      break;
    }
    if (repeat) break;
  }
  return s;
}

bool is_right_nilpotent(const SkewBrace& a) { return right_series(a).right_nilpotent; }

BracePredicates predicates(const SkewBrace& a) {
  BracePredicates p;
  p.is_trivial = a.is_trivial();
  p.is_two_sided = true;
  for (int x = 0; x < a.n && p.is_two_sided; ++x)
    for (int y = 0; y < a.n && p.is_two_sided; ++y)
      for (int z = 0; z < a.n; ++z) {
        int lhs = a.cmul(a.plus(x, y), z);
        int rhs = a.plus(a.plus(a.cmul(x, z), a.neg(z)), a.cmul(y, z));
        if (lhs != rhs) {
          p.is_two_sided = false;
          break;
        }
      }
  p.is_abelian_type = a.add.is_abelian();
  p.is_nilpotent_type = groups::group_invariants(a.add).is_nilpotent;
  p.is_radical_ring = p.is_two_sided && p.is_abelian_type;
  // upper annihilator series: quotient by Ann until trivial
  SkewBrace cur = a;
  p.is_annihilator_nilpotent = true;
  while (cur.n > 1) {
    std::vector<Idx> ann = characteristic_subsets(cur).annihilator;
    if (ann.size() == 1) {
      p.is_annihilator_nilpotent = false;
      break;
    }
    cur = quotient_brace(cur, ann).brace;
  }
  return p;
}

SkewBrace make_cnd(int n, int d) {
  auto bad = [&] {
    raise(Errc::bad_parameters,
          "BadParameters(" + std::to_string(n) + "," + std::to_string(d) + ")");
  };
  if (n < 2 || d < 1 || n % d != 0) bad();
  int m = n;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    if (d % p != 0) bad();
    while (m % p == 0) m /= p;
  }
  std::vector<Idx> circ(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      circ[static_cast<size_t>(x) * n + y] =
          static_cast<Idx>((x + (static_cast<long long>(d) * x) % n * y + y) % n);
  return validate_brace(groups::cyclic_group(n), groups::validate_group_flat(n, std::move(circ)));
}

SkewBrace brace_from_regular_subgroup(const CayleyGroup& aplus, const PermGroup& g) {
  if (g.degree != aplus.n) raise(Errc::not_regular, "NotRegular: degree mismatch");
  std::vector<int> who(static_cast<size_t>(aplus.n), -1);
  for (size_t i = 0; i < g.elements.size(); ++i) {
    int a = g.elements[i](0);
    if (who[static_cast<size_t>(a)] != -1) raise(Errc::not_regular, "NotRegular: stabilizer nontrivial");
    who[static_cast<size_t>(a)] = static_cast<int>(i);
  }
  for (int a = 0; a < aplus.n; ++a)
    if (who[static_cast<size_t>(a)] < 0) raise(Errc::not_regular, "NotRegular: not transitive");
  std::vector<Idx> circ(static_cast<size_t>(aplus.n) * aplus.n);
  for (int a = 0; a < aplus.n; ++a)
    for (int b = 0; b < aplus.n; ++b)
      circ[static_cast<size_t>(a) * aplus.n + b] =
          static_cast<Idx>(g.elements[static_cast<size_t>(who[static_cast<size_t>(a)])](b));
  return validate_brace(aplus, groups::validate_group_flat(aplus.n, std::move(circ)));
}

std::optional<Perm> brace_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.n != b.n) return std::nullopt;
  auto profile = [](const SkewBrace& x) {
    std::vector<int> lo = lambda_orbit_sizes(x);
    std::vector<std::uint64_t> p(static_cast<size_t>(x.n));
    for (int e = 0; e < x.n; ++e)
      p[static_cast<size_t>(e)] =
          (static_cast<std::uint64_t>(groups::element_order(x.add, e)) << 40) |
          (static_cast<std::uint64_t>(groups::element_order(x.circ, e)) << 20) |
          static_cast<std::uint64_t>(lo[static_cast<size_t>(e)]);
    return p;
  };
  std::vector<std::uint64_t> pa = profile(a), pb = profile(b);
  const CayleyGroup* ta[2] = {&a.add, &a.circ};
  const CayleyGroup* tb[2] = {&b.add, &b.circ};
  std::optional<Perm> found;
  groups::for_each_table_isomorphism(ta, tb, pa, pb, [&](const std::vector<Idx>& f) {
    found = Perm(f);
    return true;
  });
  return found;
}

std::vector<BraceSubset> sub_braces_containing(const SkewBrace& a, std::span<const Idx> i) {
  std::vector<Idx> base(i.begin(), i.end());
  std::sort(base.begin(), base.end());
  if (!is_subbrace(a, base))
    raise(Errc::bad_parameters, "BadParameters: seed is not a sub skew brace");
  std::set<std::vector<Idx>> found;
  std::vector<std::vector<Idx>> queue{base};
  found.insert(base);
  for (size_t q = 0; q < queue.size(); ++q) {
    std::vector<Idx> cur = queue[q];
    for (int x = 0; x < a.n; ++x) {
      if (std::binary_search(cur.begin(), cur.end(), static_cast<Idx>(x))) continue;
      std::vector<Idx> seed = cur;
      seed.push_back(static_cast<Idx>(x));
      std::vector<Idx> cl = subbrace_closure(a, seed);
      if (found.insert(cl).second) queue.push_back(std::move(cl));
    }
  }
  std::vector<BraceSubset> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(make_subset(a, s));
  return out;
}

std::vector<int> lambda_orbit_sizes(const SkewBrace& a) { return orbit_sizes_under(a, false); }
std::vector<int> rho_orbit_sizes(const SkewBrace& a) { return orbit_sizes_under(a, true); }

}  // namespace sb::braces
