#include <algorithm>
#include <array>
#include <cstring>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "skewbrace/groups.hpp"
#include "skewbrace/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sb::groups {

namespace {

struct BytesHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  size_t operator()(const std::string& s) const { return std::hash<std::string_view>{}(s); }
};

struct VecHash {
  size_t operator()(const std::vector<Idx>& v) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
  }
};

struct VecU32Hash {
  size_t operator()(const std::vector<std::uint32_t>& v) const {
    return std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(v.data()), v.size() * sizeof(std::uint32_t)));
  }
};

}  // namespace

std::optional<std::uint32_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it != elements.end() && *it == p)
    return static_cast<std::uint32_t>(it - elements.begin());
  return std::nullopt;
}

bool PermGroup::is_transitive() const {
  if (degree == 0) return true;
  std::vector<char> seen(static_cast<size_t>(degree), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  const std::vector<Perm>& gens = generators.empty() ? elements : generators;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      int y = g(x);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

PermGroup closure(int degree, std::vector<Perm> generators) {
  std::unordered_set<std::vector<Idx>, VecHash> seen;
  std::vector<Perm> elems;
  Perm id = Perm::identity(degree);
  seen.insert(id.img);
  elems.push_back(id);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : generators) {
      Perm p = compose(elems[i], g);
      if (seen.insert(p.img).second) elems.push_back(std::move(p));
    }
  }
  std::sort(elems.begin(), elems.end());
  PermGroup out;
  out.degree = degree;
  out.generators = std::move(generators);
  out.elements = std::move(elems);
  return out;
}

PermGroup holomorph(const CayleyGroup& g) {
  PermGroup aut = automorphism_group(g);
  std::vector<Perm> elems;
  elems.reserve(static_cast<size_t>(g.n) * aut.order());
  for (int a = 0; a < g.n; ++a) {
    for (const Perm& f : aut.elements) {
      std::vector<Idx> img(static_cast<size_t>(g.n));
      for (int x = 0; x < g.n; ++x)
        img[static_cast<size_t>(x)] = static_cast<Idx>(g.mul(a, f(x)));
      elems.emplace_back(std::move(img));
    }
  }
  std::sort(elems.begin(), elems.end());
  if (elems.size() != static_cast<size_t>(g.n) * aut.order())
    raise(Errc::internal_axiom_failure, "holomorph: duplicate elements");

  // generators: translations of a generating set plus Aut generators
  std::vector<Perm> gens;
  std::vector<Idx> closed{0};
  for (int a = 1; a < g.n; ++a) {
    if (std::binary_search(closed.begin(), closed.end(), static_cast<Idx>(a))) continue;
    std::vector<Idx> seed = closed;
    seed.push_back(static_cast<Idx>(a));
    closed = subgroup_closure(g, seed);
    std::vector<Idx> img(static_cast<size_t>(g.n));
    for (int x = 0; x < g.n; ++x) img[static_cast<size_t>(x)] = static_cast<Idx>(g.mul(a, x));
    gens.emplace_back(std::move(img));
    if (static_cast<int>(closed.size()) == g.n) break;
  }
  for (const Perm& f : aut.generators) gens.push_back(f);

  PermGroup out;
  out.degree = g.n;
  out.generators = std::move(gens);
  out.elements = std::move(elems);
  return out;
}

// ---------------------------------------------------------------------------
// regular subgroup search
//
// Subgroups are generated along their canonical chain: each new generator must
// be the smallest element its closure adds, and generators increase. Under
// those two rules every admissible subgroup is produced exactly once, so the
// search needs no cross-branch deduplication and top-level branches can run on
// independent workers.

namespace {

struct RegCtx {
  int degree = 0;
  int n = 0;  // target order
  std::uint32_t count = 0;
  std::vector<Idx> flat;  // count x degree
  std::unordered_map<std::string_view, std::uint32_t, BytesHash, std::equal_to<>> index;
  std::vector<char> member_ok;
  std::vector<std::uint32_t> cand;

  std::span<const Idx> el(std::uint32_t i) const {
    return {flat.data() + static_cast<size_t>(i) * degree, static_cast<size_t>(degree)};
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::array<Idx, 256> buf;
    auto pa = el(a);
    auto pb = el(b);
    for (int x = 0; x < degree; ++x) buf[static_cast<size_t>(x)] = pa[pb[static_cast<size_t>(x)]];
    auto it = index.find(std::string_view(reinterpret_cast<const char*>(buf.data()),
                                          static_cast<size_t>(degree)));
    if (it == index.end()) raise(Errc::internal_axiom_failure, "regular_subgroups: product escaped the group");
    return it->second;
  }
};

struct RegScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
};

bool close_subgroup(const RegCtx& cx, const std::vector<std::uint32_t>& base, std::uint32_t g,
                    RegScratch& sc, std::vector<std::uint32_t>& out) {
  ++sc.epoch;
  auto seen = [&](std::uint32_t x) { return sc.stamp[x] == sc.epoch; };
  out.clear();
  for (std::uint32_t b : base) {
    sc.stamp[b] = sc.epoch;
    out.push_back(b);
  }
  size_t frontier = out.size();
  if (!cx.member_ok[g]) return false;
  sc.stamp[g] = sc.epoch;
  out.push_back(g);
  for (size_t i = frontier; i < out.size(); ++i) {
    std::uint32_t x = out[i];
    for (size_t j = 0; j < out.size(); ++j) {
      std::uint32_t y = out[j];
      std::uint32_t prods[2] = {cx.mul(x, y), cx.mul(y, x)};
      for (std::uint32_t p : prods) {
        if (seen(p)) continue;
        if (!cx.member_ok[p]) return false;
        if (out.size() >= static_cast<size_t>(cx.n)) return false;
        sc.stamp[p] = sc.epoch;
        out.push_back(p);
      }
    }
  }
  if (cx.n % static_cast<int>(out.size()) != 0) return false;
  std::sort(out.begin(), out.end());
  return true;
}

// smallest element of K \ C (both sorted); K strictly contains C here
std::uint32_t min_new_element(const std::vector<std::uint32_t>& k,
                              const std::vector<std::uint32_t>& c) {
  size_t i = 0, j = 0;
  while (i < k.size()) {
    if (j < c.size() && k[i] == c[j]) {
      ++i;
      ++j;
    } else {
      return k[i];
    }
  }
  raise(Errc::internal_axiom_failure, "min_new_element: closure did not grow");
}

void extend_chain(const RegCtx& cx, const std::vector<std::uint32_t>& c, std::uint32_t last,
                  RegScratch& sc, std::vector<std::vector<std::uint32_t>>& results) {
  auto it = std::upper_bound(cx.cand.begin(), cx.cand.end(), last);
  std::vector<std::uint32_t> k;
  for (; it != cx.cand.end(); ++it) {
    std::uint32_t g = *it;
    if (std::binary_search(c.begin(), c.end(), g)) continue;
    if (!close_subgroup(cx, c, g, sc, k)) continue;
    if (min_new_element(k, c) != g) continue;
    if (static_cast<int>(k.size()) == cx.n) {
      results.push_back(k);
    } else {
      extend_chain(cx, k, g, sc, results);
    }
  }
}

std::vector<Perm> stabilizer0_generators(const PermGroup& h) {
  std::vector<Perm> stab;
  for (const Perm& p : h.elements)
    if (p(0) == 0) stab.push_back(p);
  std::vector<Perm> gens;
  PermGroup closed = closure(h.degree, {});
  for (const Perm& p : stab) {
    if (closed.index_of(p)) continue;
    gens.push_back(p);
    closed = closure(h.degree, gens);
    if (closed.order() == stab.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<PermGroup> regular_subgroups(const PermGroup& h, int n, RegFusion fusion, int jobs) {
  if (h.degree != n)
    raise(Errc::bad_parameters, "BadParameters: subgroup order must equal the degree");
  if (!h.elements.empty() && !h.elements.front().is_identity())
    raise(Errc::internal_axiom_failure, "regular_subgroups: elements not canonically sorted");

  auto subgroup_from_indices = [&](const std::vector<std::uint32_t>& idxs) {
    PermGroup s;
    s.degree = h.degree;
    for (std::uint32_t i : idxs) s.elements.push_back(h.elements[i]);
    // sorted because h.elements is sorted and idxs ascend
    PermGroup closed = closure(h.degree, {});
    for (const Perm& p : s.elements) {
      if (closed.index_of(p)) continue;
      s.generators.push_back(p);
      closed = closure(h.degree, s.generators);
      if (closed.order() == s.elements.size()) break;
    }
    return s;
  };

  if (n == 1) return {subgroup_from_indices({0})};

  RegCtx cx;
  cx.degree = h.degree;
  cx.n = n;
  cx.count = static_cast<std::uint32_t>(h.order());
  cx.flat.resize(static_cast<size_t>(cx.count) * cx.degree);
  for (std::uint32_t i = 0; i < cx.count; ++i)
    std::memcpy(cx.flat.data() + static_cast<size_t>(i) * cx.degree, h.elements[i].img.data(),
                static_cast<size_t>(cx.degree));
  cx.index.reserve(cx.count * 2);
  for (std::uint32_t i = 0; i < cx.count; ++i)
    cx.index.emplace(std::string_view(reinterpret_cast<const char*>(cx.flat.data()) +
                                          static_cast<size_t>(i) * cx.degree,
                                      static_cast<size_t>(cx.degree)),
                     i);
  cx.member_ok.assign(cx.count, 0);
  cx.member_ok[0] = 1;
  for (std::uint32_t i = 1; i < cx.count; ++i) {
    const Perm& p = h.elements[i];
    if (p.fixed_point_count() != 0) continue;
    if (n % p.order() != 0) continue;
    cx.member_ok[i] = 1;
    cx.cand.push_back(i);
  }

  std::vector<std::vector<std::uint32_t>> raw;
  int njobs = par::effective(jobs);
  std::vector<std::uint32_t> root{0};
  if (njobs <= 1) {
    RegScratch sc;
    sc.stamp.assign(cx.count, 0);
    extend_chain(cx, root, 0, sc, raw);
  } else {
    std::vector<std::vector<std::vector<std::uint32_t>>> per_cand(cx.cand.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(njobs)
    {
      RegScratch sc;
      sc.stamp.assign(cx.count, 0);
      std::vector<std::uint32_t> k;
#pragma omp for schedule(dynamic)
      for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(cx.cand.size()); ++ci) {
        std::uint32_t g = cx.cand[static_cast<size_t>(ci)];
        if (!close_subgroup(cx, root, g, sc, k)) continue;
        if (min_new_element(k, root) != g) continue;
        if (static_cast<int>(k.size()) == cx.n)
          per_cand[static_cast<size_t>(ci)].push_back(k);
        else
          extend_chain(cx, k, g, sc, per_cand[static_cast<size_t>(ci)]);
      }
    }
#else
    RegScratch sc;
    sc.stamp.assign(cx.count, 0);
    extend_chain(cx, root, 0, sc, raw);
#endif
    for (auto& v : per_cand)
      for (auto& s : v) raw.push_back(std::move(s));
  }
  std::sort(raw.begin(), raw.end());

  if (fusion == RegFusion::raw) {
    std::vector<PermGroup> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(subgroup_from_indices(s));
    return out;
  }

  // fuse by conjugation under the stabilizer of 0
  std::vector<Perm> stab_gens = stabilizer0_generators(h);
  std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> all(raw.begin(), raw.end());
  std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> visited;
  std::vector<std::vector<std::uint32_t>> reps;
  for (const auto& s : raw) {
    if (visited.count(s)) continue;
    std::vector<std::vector<std::uint32_t>> orbit{s};
    visited.insert(s);
    std::vector<std::uint32_t> best = s;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      std::vector<std::uint32_t> cur = orbit[qi];
      for (const Perm& f : stab_gens) {
        Perm finv = f.inverse();
        std::vector<std::uint32_t> conj;
        conj.reserve(cur.size());
        for (std::uint32_t i : cur) {
          Perm q = compose(compose(f, h.elements[i]), finv);
          auto it = cx.index.find(std::string_view(
              reinterpret_cast<const char*>(q.img.data()), static_cast<size_t>(cx.degree)));
          if (it == cx.index.end())
            raise(Errc::internal_axiom_failure, "regular_subgroups: conjugate escaped the group");
          conj.push_back(it->second);
        }
        std::sort(conj.begin(), conj.end());
        if (!all.count(conj))
          raise(Errc::internal_axiom_failure, "regular_subgroups: orbit left the result set");
        if (visited.insert(conj).second) orbit.push_back(conj);
        if (conj < best) best = conj;
      }
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<PermGroup> out;
  out.reserve(reps.size());
  for (const auto& s : reps) out.push_back(subgroup_from_indices(s));
  return out;
}

}  // namespace sb::groups
