#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "skewbrace/isoclinism.hpp"
#include "skewbrace/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sb::iso {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) raise(Errc::bad_parameters, "BadParameters: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Analysis analyze(const SkewBrace& a) {
  Analysis x;
  x.chars = braces::characteristic_subsets(a);
  x.commutator = braces::commutator_ideal(a);
  x.quotient = braces::quotient_brace(a, x.chars.annihilator);
  x.lift.assign(static_cast<size_t>(x.quotient.brace.n), 0);
  std::vector<char> have(static_cast<size_t>(x.quotient.brace.n), 0);
  for (int e = 0; e < a.n; ++e) {
    Idx c = x.quotient.proj[static_cast<size_t>(e)];
    if (!have[c]) {
      have[c] = 1;
      x.lift[c] = static_cast<Idx>(e);
    }
  }
  x.commutator_brace = braces::subbrace_as_brace(a, x.commutator.elements);
  x.preds = braces::predicates(a);
  x.right_nilpotent = braces::is_right_nilpotent(a);
  return x;
}

namespace {

std::vector<std::pair<int, Rational>> orbit_profile(const std::vector<int>& sizes, int n) {
  std::map<int, int> count;  // orbit size -> number of orbits
  std::map<int, int> seen;   // orbit size -> elements seen
  for (int s : sizes) ++seen[s];
  for (auto [s, c] : seen) count[s] = c / s;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(count.size());
  for (auto [s, c] : count) out.emplace_back(s, Rational(c, n));
  return out;
}

}  // namespace

Fingerprint fingerprint(const SkewBrace& a, const Analysis& x) {
  Fingerprint f;
  f.ord_quotient = x.quotient.brace.n;
  f.ord_commutator = static_cast<int>(x.commutator.elements.size());
  f.trivial = x.preds.is_trivial;
  f.two_sided = x.preds.is_two_sided;
  f.right_nilpotent = x.right_nilpotent;
  f.abelian_type = x.preds.is_abelian_type;
  f.nilpotent_type = x.preds.is_nilpotent_type;
  f.quotient_add_profile = groups::order_profile(x.quotient.brace.add);
  f.quotient_circ_profile = groups::order_profile(x.quotient.brace.circ);
  f.commutator_add_profile = groups::order_profile(x.commutator_brace.brace.add);
  f.commutator_circ_profile = groups::order_profile(x.commutator_brace.brace.circ);
  f.lambda_orbits = orbit_profile(braces::lambda_orbit_sizes(a), a.n);
  f.rho_orbits = orbit_profile(braces::rho_orbit_sizes(a), a.n);
  return f;
}

Fingerprint fingerprint(const SkewBrace& a) { return fingerprint(a, analyze(a)); }

std::string Fingerprint::key() const {
  std::ostringstream os;
  os << ord_quotient << '|' << ord_commutator << '|' << trivial << two_sided << right_nilpotent
     << abelian_type << nilpotent_type;
  auto prof = [&os](const std::vector<std::pair<int, int>>& p) {
    os << '|';
    for (auto [o, c] : p) os << o << ':' << c << ',';
  };
  prof(quotient_add_profile);
  prof(quotient_circ_profile);
  prof(commutator_add_profile);
  prof(commutator_circ_profile);
  auto orb = [&os](const std::vector<std::pair<int, Rational>>& p) {
    os << '|';
    for (const auto& [s, r] : p) os << s << ':' << r.str() << ',';
  };
  orb(lambda_orbits);
  orb(rho_orbits);
  return os.str();
}

std::string Fingerprint::first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.ord_quotient != b.ord_quotient) return "ord_quotient";
  if (a.ord_commutator != b.ord_commutator) return "ord_commutator";
  if (a.trivial != b.trivial) return "trivial";
  if (a.two_sided != b.two_sided) return "two_sided";
  if (a.right_nilpotent != b.right_nilpotent) return "right_nilpotent";
  if (a.abelian_type != b.abelian_type) return "abelian_type";
  if (a.nilpotent_type != b.nilpotent_type) return "nilpotent_type";
  if (a.quotient_add_profile != b.quotient_add_profile) return "quotient_add_profile";
  if (a.quotient_circ_profile != b.quotient_circ_profile) return "quotient_circ_profile";
  if (a.commutator_add_profile != b.commutator_add_profile) return "commutator_add_profile";
  if (a.commutator_circ_profile != b.commutator_circ_profile) return "commutator_circ_profile";
  if (a.lambda_orbits != b.lambda_orbits) return "lambda_orbits";
  if (a.rho_orbits != b.rho_orbits) return "rho_orbits";
  return "";
}

PhiMaps phi_maps(const SkewBrace& a) {
  Analysis x = analyze(a);
  int qn = x.quotient.brace.n;
  PhiMaps m;
  m.qn = qn;
  m.plus_tab.assign(static_cast<size_t>(qn) * qn, 0);
  m.star_tab.assign(static_cast<size_t>(qn) * qn, 0);
  m.circ_tab.assign(static_cast<size_t>(qn) * qn, 0);
  for (int p = 0; p < qn; ++p)
    for (int q = 0; q < qn; ++q) {
      int u = x.lift[static_cast<size_t>(p)], v = x.lift[static_cast<size_t>(q)];
      m.plus_tab[static_cast<size_t>(p) * qn + q] = static_cast<Idx>(a.bplus(u, v));
      m.star_tab[static_cast<size_t>(p) * qn + q] = static_cast<Idx>(a.star(u, v));
      m.circ_tab[static_cast<size_t>(p) * qn + q] = static_cast<Idx>(a.bcirc(u, v));
    }
  // representative independence, exhaustively
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) {
      int p = x.quotient.proj[static_cast<size_t>(u)], q = x.quotient.proj[static_cast<size_t>(v)];
      if (a.bplus(u, v) != m.phi_plus(p, q) || a.star(u, v) != m.phi_star(p, q) ||
          a.bcirc(u, v) != m.phi_circ(p, q))
        raise(Errc::well_definedness_violation, "WellDefinednessViolation in phi maps");
    }
  return m;
}

// ---------------------------------------------------------------------------
// isoclinism decision

namespace {

std::vector<std::uint64_t> brace_element_profile(const SkewBrace& x) {
  std::vector<int> lo = braces::lambda_orbit_sizes(x);
  std::vector<std::uint64_t> p(static_cast<size_t>(x.n));
  for (int e = 0; e < x.n; ++e)
    p[static_cast<size_t>(e)] =
        (static_cast<std::uint64_t>(groups::element_order(x.add, e)) << 40) |
        (static_cast<std::uint64_t>(groups::element_order(x.circ, e)) << 20) |
        static_cast<std::uint64_t>(lo[static_cast<size_t>(e)]);
  return p;
}

// Given xi on the quotients, theta is forced on every [a,b]_+ and a*b and then
// extends additively; any conflict rejects xi.
std::optional<IsoclinismWitness> force_theta(const SkewBrace& a, const Analysis& xa,
                                             const SkewBrace& b, const Analysis& xb,
                                             const std::vector<Idx>& xi) {
  int qn = xa.quotient.brace.n;
  std::vector<int> th(static_cast<size_t>(a.n), -1);
  auto set = [&](int g, int h) {
    if (th[static_cast<size_t>(g)] == -1) {
      th[static_cast<size_t>(g)] = h;
      return true;
    }
    return th[static_cast<size_t>(g)] == h;
  };
  for (int p = 0; p < qn; ++p)
    for (int q = 0; q < qn; ++q) {
      int u = xa.lift[static_cast<size_t>(p)], v = xa.lift[static_cast<size_t>(q)];
      int bu = xb.lift[xi[static_cast<size_t>(p)]], bv = xb.lift[xi[static_cast<size_t>(q)]];
      if (!set(a.bplus(u, v), b.bplus(bu, bv))) return std::nullopt;
      if (!set(a.star(u, v), b.star(bu, bv))) return std::nullopt;
    }
  if (th[0] != 0 && !set(0, 0)) return std::nullopt;
  // additive fixpoint over the known part
  const std::vector<Idx>& aprime = xa.commutator.elements;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Idx u : aprime) {
      if (th[u] == -1) continue;
      for (Idx v : aprime) {
        if (th[v] == -1) continue;
        int w = a.plus(u, v);
        int hw = b.plus(th[u], th[v]);
        if (th[static_cast<size_t>(w)] == -1) {
          th[static_cast<size_t>(w)] = hw;
          changed = true;
        } else if (th[static_cast<size_t>(w)] != hw) {
          return std::nullopt;
        }
      }
    }
  }
  // theta must be a bijection A' -> B'
  std::vector<Idx> img;
  for (Idx u : aprime) {
    if (th[u] == -1) return std::nullopt;
    img.push_back(static_cast<Idx>(th[u]));
  }
  std::vector<Idx> sorted_img = img;
  std::sort(sorted_img.begin(), sorted_img.end());
  if (sorted_img != xb.commutator.elements) return std::nullopt;
  // multiplicative on A'
  for (Idx u : aprime)
    for (Idx v : aprime)
      if (th[static_cast<size_t>(a.cmul(u, v))] != b.cmul(th[u], th[v])) return std::nullopt;
  IsoclinismWitness w;
  w.xi = xi;
  w.theta_dom = aprime;
  w.theta_img = std::move(img);
  return w;
}

}  // namespace

std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const Analysis& xa,
                                               const SkewBrace& b, const Analysis& xb) {
  if (fingerprint(a, xa) != fingerprint(b, xb)) return std::nullopt;
  const SkewBrace& qa = xa.quotient.brace;
  const SkewBrace& qb = xb.quotient.brace;
  std::vector<std::uint64_t> pa = brace_element_profile(qa), pb = brace_element_profile(qb);
  const CayleyGroup* ta[2] = {&qa.add, &qa.circ};
  const CayleyGroup* tb[2] = {&qb.add, &qb.circ};
  std::optional<IsoclinismWitness> found;
  groups::for_each_table_isomorphism(ta, tb, pa, pb, [&](const std::vector<Idx>& xi) {
    std::optional<IsoclinismWitness> w = force_theta(a, xa, b, xb, xi);
    if (w) {
      found = std::move(w);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<IsoclinismWitness> are_isoclinic(const SkewBrace& a, const SkewBrace& b) {
  return are_isoclinic(a, analyze(a), b, analyze(b));
}

bool verify_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w,
                       std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Analysis xa = analyze(a), xb = analyze(b);
  const SkewBrace& qa = xa.quotient.brace;
  const SkewBrace& qb = xb.quotient.brace;
  if (static_cast<int>(w.xi.size()) != qa.n || qa.n != qb.n) return fail("xi size mismatch");
  std::vector<char> hit(static_cast<size_t>(qb.n), 0);
  for (Idx v : w.xi) {
    if (v >= qb.n || hit[v]) return fail("xi not a bijection");
    hit[v] = 1;
  }
  for (int p = 0; p < qa.n; ++p)
    for (int q = 0; q < qa.n; ++q) {
      if (w.xi[static_cast<size_t>(qa.plus(p, q))] != qb.plus(w.xi[static_cast<size_t>(p)], w.xi[static_cast<size_t>(q)]))
        return fail("xi not additive");
      if (w.xi[static_cast<size_t>(qa.cmul(p, q))] != qb.cmul(w.xi[static_cast<size_t>(p)], w.xi[static_cast<size_t>(q)]))
        return fail("xi not multiplicative");
    }
  if (w.theta_dom != xa.commutator.elements) return fail("theta domain is not A'");
  std::vector<int> th(static_cast<size_t>(a.n), -1);
  for (size_t i = 0; i < w.theta_dom.size(); ++i) th[w.theta_dom[i]] = w.theta_img[i];
  std::vector<Idx> sorted_img = w.theta_img;
  std::sort(sorted_img.begin(), sorted_img.end());
  if (sorted_img != xb.commutator.elements) return fail("theta image is not B'");
  for (Idx u : w.theta_dom)
    for (Idx v : w.theta_dom) {
      if (th[static_cast<size_t>(a.plus(u, v))] != b.plus(th[u], th[v]))
        return fail("theta not additive");
      if (th[static_cast<size_t>(a.cmul(u, v))] != b.cmul(th[u], th[v]))
        return fail("theta not multiplicative");
    }
  for (int p = 0; p < qa.n; ++p)
    for (int q = 0; q < qa.n; ++q) {
      int u = xa.lift[static_cast<size_t>(p)], v = xa.lift[static_cast<size_t>(q)];
      int bp = xb.lift[w.xi[static_cast<size_t>(p)]], bq = xb.lift[w.xi[static_cast<size_t>(q)]];
      if (th[static_cast<size_t>(a.bplus(u, v))] != b.bplus(bp, bq))
        return fail("commutator square does not commute");
      if (th[static_cast<size_t>(a.star(u, v))] != b.star(bp, bq))
        return fail("star square does not commute");
      if (th[static_cast<size_t>(a.bcirc(u, v))] != b.bcirc(bp, bq))
        return fail("circle commutator square does not commute");
    }
  return true;
}

IsoclinismWitness invert_witness(const IsoclinismWitness& w) {
  IsoclinismWitness inv;
  inv.xi.assign(w.xi.size(), 0);
  for (size_t i = 0; i < w.xi.size(); ++i) inv.xi[w.xi[i]] = static_cast<Idx>(i);
  std::vector<std::pair<Idx, Idx>> pairs;
  pairs.reserve(w.theta_dom.size());
  for (size_t i = 0; i < w.theta_dom.size(); ++i)
    pairs.emplace_back(w.theta_img[i], w.theta_dom[i]);
  std::sort(pairs.begin(), pairs.end());
  for (auto [d, im] : pairs) {
    inv.theta_dom.push_back(d);
    inv.theta_img.push_back(im);
  }
  return inv;
}

IsoclinismWitness compose_witness(const IsoclinismWitness& ab, const IsoclinismWitness& bc) {
  IsoclinismWitness w;
  w.xi.reserve(ab.xi.size());
  for (Idx v : ab.xi) w.xi.push_back(bc.xi[v]);
  std::unordered_map<int, int> th2;
  for (size_t i = 0; i < bc.theta_dom.size(); ++i) th2[bc.theta_dom[i]] = bc.theta_img[i];
  w.theta_dom = ab.theta_dom;
  w.theta_img.reserve(ab.theta_img.size());
  for (Idx v : ab.theta_img) w.theta_img.push_back(static_cast<Idx>(th2.at(v)));
  return w;
}

std::vector<Idx> corresponding_subbrace(const SkewBrace& a, const SkewBrace& b,
                                        const IsoclinismWitness& w, std::span<const Idx> a1) {
  Analysis xa = analyze(a), xb = analyze(b);
  std::vector<char> in(static_cast<size_t>(a.n), 0);
  for (Idx x : a1) in[x] = 1;
  for (Idx z : xa.chars.annihilator)
    if (!in[z]) raise(Errc::ann_not_contained, "AnnNotContained");
  std::set<Idx> classes;
  for (Idx x : a1) classes.insert(xa.quotient.proj[x]);
  std::set<Idx> image;
  for (Idx c : classes) image.insert(w.xi[c]);
  std::vector<Idx> out;
  for (int y = 0; y < b.n; ++y)
    if (image.count(xb.quotient.proj[static_cast<size_t>(y)])) out.push_back(static_cast<Idx>(y));
  return out;
}

bool is_stem(const SkewBrace& a) {
  Analysis x = analyze(a);
  return std::includes(x.commutator.elements.begin(), x.commutator.elements.end(),
                       x.chars.annihilator.begin(), x.chars.annihilator.end());
}

std::optional<size_t> stem_search(std::span<const SkewBrace> cls) {
  std::optional<size_t> best;
  auto bytes = [](const SkewBrace& x) {
    std::string s;
    s.reserve(2 * x.add.tab.size());
    s.append(reinterpret_cast<const char*>(x.add.tab.data()), x.add.tab.size());
    s.append(reinterpret_cast<const char*>(x.circ.tab.data()), x.circ.tab.size());
    return s;
  };
  for (size_t i = 0; i < cls.size(); ++i) {
    if (!is_stem(cls[i])) continue;
    if (!best || cls[i].n < cls[*best].n ||
        (cls[i].n == cls[*best].n && bytes(cls[i]) < bytes(cls[*best])))
      best = i;
  }
  return best;
}

// ---------------------------------------------------------------------------
// action groups and orbits

ActionGroup action_group(const SkewBrace& a) {
  Analysis x = analyze(a);
  const SkewBrace& q = x.quotient.brace;
  int m = q.n;
  // rho-bar on the quotient, checked well-defined across all representatives
  std::vector<Idx> rho_bar(static_cast<size_t>(m) * m);
  for (int bb = 0; bb < m; ++bb)
    for (int cc = 0; cc < m; ++cc)
      rho_bar[static_cast<size_t>(bb) * m + cc] = x.quotient.proj[static_cast<size_t>(
          a.rho(x.lift[static_cast<size_t>(bb)], x.lift[static_cast<size_t>(cc)]))];
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) {
      int bb = x.quotient.proj[static_cast<size_t>(u)], cc = x.quotient.proj[static_cast<size_t>(v)];
      if (x.quotient.proj[static_cast<size_t>(a.rho(u, v))] != rho_bar[static_cast<size_t>(bb) * m + cc])
        raise(Errc::well_definedness_violation, "WellDefinednessViolation: rho-bar");
    }
  ActionGroup ag;
  ag.m = m;
  int n2 = m * m;
  std::vector<Idx> tab(static_cast<size_t>(n2) * n2);
  auto pid = [m](int aa, int bb) { return aa * m + bb; };
  for (int aa = 0; aa < m; ++aa)
    for (int bb = 0; bb < m; ++bb)
      for (int cc = 0; cc < m; ++cc)
        for (int dd = 0; dd < m; ++dd)
          tab[static_cast<size_t>(pid(aa, bb)) * n2 + pid(cc, dd)] = static_cast<Idx>(
              pid(q.plus(aa, rho_bar[static_cast<size_t>(bb) * m + cc]), q.cmul(bb, dd)));
  ag.group = groups::validate_group_flat(n2, std::move(tab));
  ag.action.reserve(static_cast<size_t>(n2));
  for (int aa = 0; aa < m; ++aa)
    for (int bb = 0; bb < m; ++bb) {
      int la = x.lift[static_cast<size_t>(aa)], lb = x.lift[static_cast<size_t>(bb)];
      std::vector<Idx> img(static_cast<size_t>(a.n));
      for (int c = 0; c < a.n; ++c)
        img[static_cast<size_t>(c)] =
            static_cast<Idx>(a.plus(a.plus(la, a.rho(lb, c)), a.neg(la)));
      ag.action.emplace_back(std::move(img));
    }
  // representative independence of the action
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) {
      int aa = x.quotient.proj[static_cast<size_t>(u)], bb = x.quotient.proj[static_cast<size_t>(v)];
      const Perm& p = ag.action[static_cast<size_t>(pid(aa, bb))];
      for (int c = 0; c < a.n; ++c)
        if (p(c) != a.plus(a.plus(u, a.rho(v, c)), a.neg(u)))
          raise(Errc::well_definedness_violation, "WellDefinednessViolation: action");
    }
  return ag;
}

std::vector<int> selector_pairs(const ActionGroup& ag, OrbitSelector sel) {
  std::vector<int> pairs;
  int m = ag.m;
  // quotient addition is recoverable from the group on pairs with b = 0
  for (int c = 0; c < m; ++c) {
    switch (sel) {
      case OrbitSelector::lambda: {
        // (-c, c): need the additive inverse of c in the quotient; pairs (x,0)*(y,0)=(x+y,0)
        int negc = -1;
        for (int x = 0; x < m; ++x)
          if (ag.group.mul(x * m, c * m) == 0) {
            negc = x;
            break;
          }
        pairs.push_back(negc * m + c);
        break;
      }
      case OrbitSelector::rho:
        pairs.push_back(c);  // (0, c)
        break;
      case OrbitSelector::full:
        break;
    }
  }
  if (sel == OrbitSelector::full) {
    pairs.resize(static_cast<size_t>(m) * m);
    std::iota(pairs.begin(), pairs.end(), 0);
  }
  return pairs;
}

std::vector<std::pair<int, int>> h_orbit_stats(const SkewBrace& a, const ActionGroup& ag,
                                               const std::vector<int>& subgroup_pairs) {
  // verify the pair set is a subgroup of the action group
  std::vector<char> in(static_cast<size_t>(ag.group.n), 0);
  bool has_id = false;
  for (int p : subgroup_pairs) {
    in[static_cast<size_t>(p)] = 1;
    if (p == 0) has_id = true;
  }
  if (!has_id) raise(Errc::not_a_subgroup, "NotASubgroup: missing identity");
  for (int p : subgroup_pairs)
    for (int q : subgroup_pairs)
      if (!in[static_cast<size_t>(ag.group.mul(p, q))])
        raise(Errc::not_a_subgroup, "NotASubgroup: not closed");
  // orbits under the generating permutations
  std::vector<int> root(static_cast<size_t>(a.n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (root[static_cast<size_t>(v)] != v) {
      root[static_cast<size_t>(v)] = root[static_cast<size_t>(root[static_cast<size_t>(v)])];
      v = root[static_cast<size_t>(v)];
    }
    return v;
  };
  for (int p : subgroup_pairs) {
    const Perm& f = ag.action[static_cast<size_t>(p)];
    for (int c = 0; c < a.n; ++c) {
      int rx = find(c), ry = find(f(c));
      if (rx != ry) root[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
    }
  }
  std::map<int, int> size_of;
  for (int c = 0; c < a.n; ++c) ++size_of[find(c)];
  std::map<int, int> hist;
  for (auto [r, s] : size_of) ++hist[s];
  return {hist.begin(), hist.end()};
}

std::vector<std::pair<int, int>> h_orbit_stats(const SkewBrace& a, OrbitSelector sel) {
  ActionGroup ag = action_group(a);
  return h_orbit_stats(a, ag, selector_pairs(ag, sel));
}

std::vector<int> transport_subgroup(const ActionGroup& aga, const ActionGroup& agb,
                                    const IsoclinismWitness& w, const std::vector<int>& pairs) {
  (void)agb;
  std::vector<int> out;
  out.reserve(pairs.size());
  int m = aga.m;
  for (int p : pairs) {
    int aa = p / m, bb = p % m;
    out.push_back(w.xi[static_cast<size_t>(aa)] * m + w.xi[static_cast<size_t>(bb)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassEquation two_sided_class_equation(const SkewBrace& b) {
  if (!braces::predicates(b).is_two_sided) raise(Errc::not_two_sided, "NotTwoSided");
  int n = b.n;
  std::vector<int> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (root[static_cast<size_t>(v)] != v) {
      root[static_cast<size_t>(v)] = root[static_cast<size_t>(root[static_cast<size_t>(v)])];
      v = root[static_cast<size_t>(v)];
    }
    return v;
  };
  // (a,b,c) acts by d -> a + rho_b(c o d o c') - a
  for (int aa = 0; aa < n; ++aa)
    for (int bb = 0; bb < n; ++bb)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          int conj = b.cmul(b.cmul(cc, d), b.cinv(cc));
          int y = b.plus(b.plus(aa, b.rho(bb, conj)), b.neg(aa));
          int rx = find(d), ry = find(y);
          if (rx != ry) root[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
        }
  std::map<int, int> size_of;
  for (int c = 0; c < n; ++c) ++size_of[find(c)];
  std::vector<Idx> fixed;
  ClassEquation eq;
  for (int c = 0; c < n; ++c)
    if (size_of[find(c)] == 1) fixed.push_back(static_cast<Idx>(c));
  std::vector<int> nontrivial;
  for (auto [r, s] : size_of)
    if (s > 1) nontrivial.push_back(s);
  std::sort(nontrivial.begin(), nontrivial.end());
  std::vector<Idx> ann = braces::characteristic_subsets(b).annihilator;
  if (fixed != ann)
    raise(Errc::internal_axiom_failure, "class equation: fixed points differ from the annihilator");
  int total = static_cast<int>(fixed.size());
  for (int s : nontrivial) total += s;
  if (total != n) raise(Errc::internal_axiom_failure, "class equation does not balance");
  eq.ann_size = static_cast<int>(fixed.size());
  eq.orbit_sizes = std::move(nontrivial);
  return eq;
}

// ---------------------------------------------------------------------------
// classification

ClassTable partition_classes(const std::vector<SkewBrace>& braces_in, int jobs,
                             bool with_witnesses) {
  int n = static_cast<int>(braces_in.size());
  std::vector<Analysis> xs;
  xs.reserve(static_cast<size_t>(n));
  std::vector<Fingerprint> fps;
  fps.reserve(static_cast<size_t>(n));
  for (const SkewBrace& b : braces_in) {
    xs.push_back(analyze(b));
    fps.push_back(fingerprint(b, xs.back()));
  }
  std::map<std::string, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[fps[static_cast<size_t>(i)].key()].push_back(i);

  std::vector<int> root(static_cast<size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (root[static_cast<size_t>(v)] != v) {
      root[static_cast<size_t>(v)] = root[static_cast<size_t>(root[static_cast<size_t>(v)])];
      v = root[static_cast<size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx != ry) root[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
  };

  int njobs = par::effective(jobs);
  for (const auto& [key, idxs] : buckets) {
    if (idxs.size() < 2) continue;
    if (njobs <= 1) {
      for (size_t i = 0; i < idxs.size(); ++i)
        for (size_t j = i + 1; j < idxs.size(); ++j) {
          if (find(idxs[i]) == find(idxs[j])) continue;
          if (are_isoclinic(braces_in[static_cast<size_t>(idxs[i])], xs[static_cast<size_t>(idxs[i])],
                            braces_in[static_cast<size_t>(idxs[j])], xs[static_cast<size_t>(idxs[j])]))
            unite(idxs[i], idxs[j]);
        }
    } else {
      std::vector<std::pair<int, int>> pairs;
      for (size_t i = 0; i < idxs.size(); ++i)
        for (size_t j = i + 1; j < idxs.size(); ++j) pairs.emplace_back(idxs[i], idxs[j]);
      std::vector<char> verdict(pairs.size(), 0);
#ifdef SKEWBRACE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(njobs)
#endif
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) {
        auto [i, j] = pairs[static_cast<size_t>(k)];
        verdict[static_cast<size_t>(k)] =
            are_isoclinic(braces_in[static_cast<size_t>(i)], xs[static_cast<size_t>(i)],
                          braces_in[static_cast<size_t>(j)], xs[static_cast<size_t>(j)])
                ? 1
                : 0;
      }
      for (size_t k = 0; k < pairs.size(); ++k)
        if (verdict[k]) unite(pairs[k].first, pairs[k].second);
    }
  }

  auto bytes = [&](int i) {
    const SkewBrace& x = braces_in[static_cast<size_t>(i)];
    std::string s;
    s.push_back(static_cast<char>(x.n));
    s.append(reinterpret_cast<const char*>(x.add.tab.data()), x.add.tab.size());
    s.append(reinterpret_cast<const char*>(x.circ.tab.data()), x.circ.tab.size());
    return s;
  };
  std::map<int, std::vector<int>> groups_by_root;
  for (int i = 0; i < n; ++i) groups_by_root[find(i)].push_back(i);
  std::vector<std::pair<std::string, ClassEntry>> keyed;
  for (auto& [r, members] : groups_by_root) {
    ClassEntry e;
    e.members = members;
    e.representative = members.front();
    std::string best = bytes(members.front());
    for (int m : members) {
      std::string s = bytes(m);
      if (s < best) {
        best = s;
        e.representative = m;
      }
    }
    keyed.emplace_back(best, std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ClassTable table;
  for (auto& [key, e] : keyed) {
    if (with_witnesses) {
      for (int m : e.members) {
        std::optional<IsoclinismWitness> w =
            are_isoclinic(braces_in[static_cast<size_t>(e.representative)],
                          xs[static_cast<size_t>(e.representative)],
                          braces_in[static_cast<size_t>(m)], xs[static_cast<size_t>(m)]);
        if (!w) raise(Errc::internal_axiom_failure, "classification witness vanished");
        e.witnesses.push_back(std::move(*w));
      }
    }
    table.classes.push_back(std::move(e));
  }
  return table;
}

}  // namespace sb::iso
