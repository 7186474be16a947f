#include <algorithm>
#include <cstdint>

#include "skewbrace/groups.hpp"

namespace sb::groups {

namespace {

// Backtracking over images of a growing generating set. Every time an element
// is assigned, products and inverses against all assigned elements are forced,
// so a complete assignment is a verified isomorphism of every paired table.
struct IsoEngine {
  int n = 0;
  std::span<const CayleyGroup* const> src, dst;
  std::span<const std::uint64_t> pa, pb;
  const std::function<bool(const std::vector<Idx>&)>* visit = nullptr;

  std::vector<int> img, pre;
  std::vector<int> trail;
  bool stop = false;

  bool assign(int a, int b) {
    if (img[static_cast<size_t>(a)] != -1) return img[static_cast<size_t>(a)] == b;
    if (pre[static_cast<size_t>(b)] != -1) return false;
    if (pa[static_cast<size_t>(a)] != pb[static_cast<size_t>(b)]) return false;
    img[static_cast<size_t>(a)] = b;
    pre[static_cast<size_t>(b)] = a;
    trail.push_back(a);
    return true;
  }

  bool propagate(size_t qstart) {
    for (size_t qi = qstart; qi < trail.size(); ++qi) {
      int u = trail[qi];
      for (size_t t = 0; t < src.size(); ++t) {
        const CayleyGroup& ta = *src[t];
        const CayleyGroup& tb = *dst[t];
        if (!assign(ta.inv(u), tb.inv(img[static_cast<size_t>(u)]))) return false;
        for (size_t vj = 0; vj < trail.size(); ++vj) {
          int v = trail[vj];
          if (!assign(ta.mul(u, v), tb.mul(img[static_cast<size_t>(u)], img[static_cast<size_t>(v)])))
            return false;
          if (!assign(ta.mul(v, u), tb.mul(img[static_cast<size_t>(v)], img[static_cast<size_t>(u)])))
            return false;
        }
      }
    }
    return true;
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      int a = trail.back();
      trail.pop_back();
      pre[static_cast<size_t>(img[static_cast<size_t>(a)])] = -1;
      img[static_cast<size_t>(a)] = -1;
    }
  }

  void dfs() {
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (img[static_cast<size_t>(i)] == -1) {
        a = i;
        break;
      }
    if (a == -1) {
      std::vector<Idx> out(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = static_cast<Idx>(img[static_cast<size_t>(i)]);
      if ((*visit)(out)) stop = true;
      return;
    }
    for (int b = 0; b < n && !stop; ++b) {
      if (pre[static_cast<size_t>(b)] != -1) continue;
      if (pa[static_cast<size_t>(a)] != pb[static_cast<size_t>(b)]) continue;
      size_t mark = trail.size();
      if (assign(a, b) && propagate(mark)) dfs();
      rollback(mark);
    }
  }
};

std::uint64_t pack_group_profile(int order, int cls) {
  return (static_cast<std::uint64_t>(order) << 32) | static_cast<std::uint64_t>(cls);
}

std::vector<std::uint64_t> group_profile(const CayleyGroup& g) {
  std::vector<int> cls = conjugacy_class_sizes(g);
  std::vector<std::uint64_t> p(static_cast<size_t>(g.n));
  for (int a = 0; a < g.n; ++a)
    p[static_cast<size_t>(a)] = pack_group_profile(element_order(g, a), cls[static_cast<size_t>(a)]);
  return p;
}

}  // namespace

bool for_each_table_isomorphism(std::span<const CayleyGroup* const> src,
                                std::span<const CayleyGroup* const> dst,
                                std::span<const std::uint64_t> src_profile,
                                std::span<const std::uint64_t> dst_profile,
                                const std::function<bool(const std::vector<Idx>&)>& visit) {
  int n = src[0]->n;
  if (dst[0]->n != n) return false;
  // profile multisets must match
  std::vector<std::uint64_t> sa(src_profile.begin(), src_profile.end());
  std::vector<std::uint64_t> sb(dst_profile.begin(), dst_profile.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  IsoEngine e;
  e.n = n;
  e.src = src;
  e.dst = dst;
  e.pa = src_profile;
  e.pb = dst_profile;
  e.visit = &visit;
  e.img.assign(static_cast<size_t>(n), -1);
  e.pre.assign(static_cast<size_t>(n), -1);
  if (e.assign(0, 0) && e.propagate(0)) e.dfs();
  return e.stop;
}

std::optional<Perm> are_isomorphic(const CayleyGroup& g, const CayleyGroup& h) {
  if (g.n != h.n) return std::nullopt;
  std::vector<std::uint64_t> pa = group_profile(g), pb = group_profile(h);
  const CayleyGroup* sa[1] = {&g};
  const CayleyGroup* sb[1] = {&h};
  std::optional<Perm> found;
  for_each_table_isomorphism(sa, sb, pa, pb, [&](const std::vector<Idx>& f) {
    found = Perm(f);
    return true;
  });
  return found;
}

PermGroup automorphism_group(const CayleyGroup& g) {
  std::vector<std::uint64_t> p = group_profile(g);
  const CayleyGroup* sa[1] = {&g};
  std::vector<Perm> all;
  for_each_table_isomorphism(sa, sa, p, p, [&](const std::vector<Idx>& f) {
    all.emplace_back(f);
    return false;
  });
  std::sort(all.begin(), all.end());
  PermGroup out;
  out.degree = g.n;
  out.elements = std::move(all);
  // greedy generating subset
  PermGroup closed = closure(g.n, {});
  for (const Perm& e : out.elements) {
    if (closed.index_of(e)) continue;
    out.generators.push_back(e);
    closed = closure(g.n, out.generators);
    if (closed.order() == out.order()) break;
  }
  return out;
}

}  // namespace sb::groups
