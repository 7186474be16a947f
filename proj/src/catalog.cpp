#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "skewbrace/groups.hpp"

namespace sb::groups {

CayleyGroup cyclic_group(int n) {
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[static_cast<size_t>(a) * n + b] = static_cast<Idx>((a + b) % n);
  return validate_group_flat(n, std::move(tab));
}

CayleyGroup direct_product_group(const CayleyGroup& a, const CayleyGroup& b) {
  int n = a.n * b.n;
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
      tab[static_cast<size_t>(x) * n + y] =
          static_cast<Idx>(a.mul(xa, ya) * b.n + b.mul(xb, yb));
    }
  return validate_group_flat(n, std::move(tab));
}

CayleyGroup abelian_group(const std::vector<int>& cyclic_factors) {
  CayleyGroup g = cyclic_group(1);
  for (int f : cyclic_factors) g = direct_product_group(g, cyclic_group(f));
  return g;
}

CayleyGroup semidirect_product(const CayleyGroup& a, const CayleyGroup& h,
                               const std::vector<Perm>& act) {
  int n = a.n * h.n;
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto id = [&](int x, int u) { return x * h.n + u; };
  for (int x = 0; x < a.n; ++x)
    for (int u = 0; u < h.n; ++u)
      for (int y = 0; y < a.n; ++y)
        for (int v = 0; v < h.n; ++v)
          tab[static_cast<size_t>(id(x, u)) * n + id(y, v)] =
              static_cast<Idx>(id(a.mul(x, act[static_cast<size_t>(u)](y)), h.mul(u, v)));
  return validate_group_flat(n, std::move(tab));
}

CayleyGroup semidirect_cyclic(int m, int k, int t) {
  CayleyGroup a = cyclic_group(m);
  CayleyGroup h = cyclic_group(k);
  std::vector<Perm> act;
  act.reserve(static_cast<size_t>(k));
  long long tp = 1;
  for (int u = 0; u < k; ++u) {
    std::vector<Idx> img(static_cast<size_t>(m));
    for (int x = 0; x < m; ++x)
      img[static_cast<size_t>(x)] = static_cast<Idx>((tp * x) % m);
    act.emplace_back(std::move(img));
    tp = (tp * t) % m;
  }
  if ((tp % m + m) % m != 1)
    raise(Errc::bad_parameters, "BadParameters: t^k != 1 mod m");
  return semidirect_product(a, h, act);
}

CayleyGroup dihedral_group(int order) {
  if (order % 2 != 0 || order < 2) raise(Errc::bad_parameters, "BadParameters: dihedral order");
  int m = order / 2;
  if (m == 1) return cyclic_group(2);
  return semidirect_cyclic(m, 2, m - 1);
}

CayleyGroup dicyclic_group(int order) {
  if (order % 4 != 0) raise(Errc::bad_parameters, "BadParameters: dicyclic order");
  int m = order / 2;  // rotation subgroup C_{2m'}, here m = 2*m'
  // elements (i, e): i in Z_m, e in {0,1}; b^2 = a^{m/2}, b a b^-1 = a^-1
  int n = order;
  int half = m / 2;
  auto id = [&](int i, int e) { return e * m + i; };
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < m; ++j)
        for (int f = 0; f < 2; ++f) {
          int x, y;
          if (e == 0) {
            x = (i + j) % m;
            y = f;
          } else if (f == 0) {
            x = ((i - j) % m + m) % m;
            y = 1;
          } else {
            x = (((i - j) % m + m) + half) % m;
            y = 0;
          }
          tab[static_cast<size_t>(id(i, e)) * n + id(j, f)] = static_cast<Idx>(id(x, y));
        }
  return validate_group_flat(n, std::move(tab));
}

CayleyGroup group_from_permgroup(const PermGroup& pg) {
  int n = static_cast<int>(pg.order());
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Perm p = compose(pg.elements[static_cast<size_t>(i)], pg.elements[static_cast<size_t>(j)]);
      auto k = pg.index_of(p);
      if (!k) raise(Errc::not_subgroup, "NotSubgroup: element list not closed");
      tab[static_cast<size_t>(i) * n + j] = static_cast<Idx>(*k);
    }
  return validate_group_flat(n, std::move(tab));
}

CayleyGroup heisenberg27() {
  // triples (a,b,c) over F3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
  int n = 27;
  auto id = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
  std::vector<Idx> tab(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              tab[static_cast<size_t>(id(a, b, c)) * n + id(a2, b2, c2)] =
                  static_cast<Idx>(id((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3));
  return validate_group_flat(n, std::move(tab));
}

namespace {

PermGroup sym_group(int n, std::vector<std::string> cycles) {
  std::vector<Perm> gens;
  gens.reserve(cycles.size());
  for (const std::string& c : cycles) gens.push_back(perm_from_cycles(c, n));
  return closure(n, std::move(gens));
}

// all partitions of e, as exponent vectors -> cyclic factor lists p^e1, p^e2, ...
void partitions(int e, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions(e - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<CayleyGroup> abelian_groups_of_order(int n) {
  // factor n, take partitions per prime, cross products
  std::vector<std::pair<int, int>> fac;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<std::vector<int>> lists{{}};  // lists of cyclic factors
  for (auto [p, e] : fac) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<int>> next;
    for (const auto& l : lists)
      for (const auto& pt : parts) {
        std::vector<int> nl = l;
        for (int ex : pt) {
          int f = 1;
          for (int i = 0; i < ex; ++i) f *= p;
          nl.push_back(f);
        }
        next.push_back(nl);
      }
    lists = std::move(next);
  }
  std::vector<CayleyGroup> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(abelian_group(l));
  return out;
}

// homomorphisms H -> C2 given as sign vectors (1 = invert), one per index-2 subgroup;
// only used for |H| <= 16, so a subset scan is fine
std::vector<std::vector<char>> sign_homs(const CayleyGroup& h) {
  std::vector<std::vector<char>> out;
  if (h.n % 2 != 0 || h.n > 16) return out;
  int half = h.n / 2;
  for (std::uint32_t mask = 1; mask < (1u << h.n); ++mask) {
    if (!(mask & 1u)) continue;  // kernel contains 0
    if (std::popcount(mask) != half) continue;
    std::vector<Idx> k;
    for (int a = 0; a < h.n; ++a)
      if (mask & (1u << a)) k.push_back(static_cast<Idx>(a));
    if (!is_subgroup(h, k)) continue;
    std::vector<char> sgn(static_cast<size_t>(h.n), 1);
    for (Idx x : k) sgn[x] = 0;
    out.push_back(std::move(sgn));
  }
  return out;
}

// A x| H where elements of H outside the kernel act by inversion on abelian A
CayleyGroup semidirect_by_sign(const CayleyGroup& a, const CayleyGroup& h,
                               const std::vector<char>& sgn) {
  std::vector<Perm> act;
  act.reserve(static_cast<size_t>(h.n));
  Perm inv_perm(a.invs);
  for (int u = 0; u < h.n; ++u)
    act.push_back(sgn[static_cast<size_t>(u)] ? inv_perm : Perm::identity(a.n));
  return semidirect_product(a, h, act);
}

CayleyGroup sl23() {
  // Q8 x| C3 with the automorphism cycling i -> j -> k
  CayleyGroup q8 = dicyclic_group(8);
  PermGroup aut = automorphism_group(q8);
  for (const Perm& f : aut.elements) {
    if (f.order() != 3) continue;
    std::vector<Perm> act{Perm::identity(8), f, compose(f, f)};
    CayleyGroup g = semidirect_product(q8, cyclic_group(3), act);
    std::vector<std::pair<int, int>> prof = order_profile(g);
    // SL(2,3) has a unique involution
    bool one_inv = false;
    for (auto [o, c] : prof)
      if (o == 2) one_inv = (c == 1);
    if (one_inv) return g;
  }
  raise(Errc::internal_axiom_failure, "sl23 construction failed");
}

void add_candidate(std::vector<CatalogEntry>& out, const std::string& name, CayleyGroup g) {
  for (const CatalogEntry& e : out)
    if (e.group.n == g.n && are_isomorphic(e.group, g)) return;
  out.push_back({name, std::move(g)});
}

}  // namespace

std::vector<CatalogEntry> catalog_groups(int n) {
  if (n < 1 || n > 30) raise(Errc::unsupported_order, "UnsupportedOrder(" + std::to_string(n) + ")");
  std::vector<CatalogEntry> out;
  // abelian classes
  int ab_index = 0;
  for (CayleyGroup& g : abelian_groups_of_order(n))
    add_candidate(out, "abelian_" + std::to_string(ab_index++), std::move(g));
  // dihedral / dicyclic
  if (n >= 6 && n % 2 == 0) add_candidate(out, "dihedral_" + std::to_string(n), dihedral_group(n));
  if (n >= 8 && n % 4 == 0) add_candidate(out, "dicyclic_" + std::to_string(n), dicyclic_group(n));
  // products of smaller catalog entries
  for (int d = 2; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    int e = n / d;
    if (d > e) break;
    for (const CatalogEntry& x : catalog_groups(d))
      for (const CatalogEntry& y : catalog_groups(e))
        add_candidate(out, x.name + "*" + y.name, direct_product_group(x.group, y.group));
  }
  // split metacyclic groups C_m x| C_k with faithful-ish actions
  for (int m = 3; m < n; ++m) {
    if (n % m != 0) continue;
    int k = n / m;
    if (k < 2) continue;
    for (int t = 2; t < m; ++t) {
      // t must have multiplicative order dividing k mod m
      long long tp = 1;
      bool unit = true;
      for (int i = 0; i < k; ++i) tp = (tp * t) % m;
      if (std::gcd(t, m) != 1) unit = false;
      if (!unit || tp != 1) continue;
      add_candidate(out,
                    "C" + std::to_string(m) + ":C" + std::to_string(k) + "_t" + std::to_string(t),
                    semidirect_cyclic(m, k, t));
    }
  }
  // odd abelian A x| H by sign (covers the remaining order-18/24 classes)
  for (int d = 3; d < n; d += 2) {
    if (n % d != 0) continue;
    int k = n / d;
    if (k < 2 || k > 8) continue;
    for (const CayleyGroup& a : abelian_groups_of_order(d)) {
      for (const CatalogEntry& h : catalog_groups(k)) {
        for (const auto& sgn : sign_homs(h.group))
          add_candidate(out, "sgn", semidirect_by_sign(a, h.group, sgn));
      }
    }
  }
  // specials
  switch (n) {
    case 8:
      break;  // covered: C8, C4xC2, C2^3, D8 (dihedral), Q8 (dicyclic)
    case 12:
      add_candidate(out, "A4", group_from_permgroup(sym_group(4, {"(1 2 3)", "(1 2)(3 4)"})));
      break;
    case 16: {
      // C4 x| C4 and C2^2 x| C4 and the central product D8 * C4
      add_candidate(out, "C4:C4", semidirect_cyclic(4, 4, 3));
      CayleyGroup c2c2 = abelian_group({2, 2});
      std::vector<Perm> swap4;
      Perm sw(std::vector<Idx>{0, 2, 1, 3});  // swaps the two C2 coordinates
      swap4 = {Perm::identity(4), sw, Perm::identity(4), sw};
      add_candidate(out, "C2^2:C4", semidirect_product(c2c2, cyclic_group(4), swap4));
      CayleyGroup d8c4 = direct_product_group(dihedral_group(8), cyclic_group(4));
      // central subgroup {(0,0), (r^2, 2)}: r^2 = rotation by 2 in the dihedral table
      CayleyGroup d8 = dihedral_group(8);
      int r2 = -1;
      for (int a = 1; a < 8; ++a) {
        bool central = true;
        for (int b = 0; b < 8 && central; ++b) central = d8.mul(a, b) == d8.mul(b, a);
        if (central) r2 = a;
      }
      std::vector<Idx> z{0, static_cast<Idx>(r2 * 4 + 2)};
      add_candidate(out, "D8*C4", quotient_group(d8c4, z).group);
      break;
    }
    case 24:
      add_candidate(out, "SL(2,3)", sl23());
      add_candidate(out, "S4",
                    group_from_permgroup(sym_group(4, {"(1 2 3 4)", "(1 2)"})));
      break;
    case 27:
      add_candidate(out, "heisenberg27", heisenberg27());
      add_candidate(out, "C9:C3", semidirect_cyclic(9, 3, 4));
      break;
    default:
      break;
  }
  return out;
}

}  // namespace sb::groups
