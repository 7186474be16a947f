#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "skewbrace/parallel.hpp"
#include "skewbrace/ybe.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sb::ybe {

namespace {

struct VecHash {
  size_t operator()(const std::vector<Idx>& v) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
  }
};

std::pair<int, int> apply_r(const Solution& s, int x, int y) {
  return {s.sigma[static_cast<size_t>(x)](y),
          s.tau[static_cast<size_t>(y)](x)};
}

}  // namespace

Solution validate_solution(std::vector<Perm> sigma, std::vector<Perm> tau) {
  int n = static_cast<int>(sigma.size());
  if (n == 0 || tau.size() != sigma.size())
    raise(Errc::parse_error, "ParseError: sigma/tau family sizes disagree");
  for (const Perm& p : sigma)
    if (p.degree() != n || !groups::is_bijection(p.img))
      raise(Errc::not_bijective, "NotBijective: sigma");
  for (const Perm& p : tau)
    if (p.degree() != n || !groups::is_bijection(p.img))
      raise(Errc::not_bijective, "NotBijective: tau");
  Solution s;
  s.n = n;
  s.sigma = std::move(sigma);
  s.tau = std::move(tau);
  // r bijective on X^2
  std::vector<char> hit(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = apply_r(s, x, y);
      if (hit[static_cast<size_t>(u) * n + v]++) raise(Errc::not_bijective, "NotBijective: r");
    }
  // braid identity on all triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        auto [a1, b1] = apply_r(s, x, y);
        auto [b2, c2] = apply_r(s, b1, z);
        auto [a3, b3] = apply_r(s, a1, b2);
        // (id x r)(r x id)(id x r)
        auto [p1, q1] = apply_r(s, y, z);
        auto [o2, p2] = apply_r(s, x, p1);
        auto [p3, q3] = apply_r(s, p2, q1);
        if (a3 != o2 || b3 != p3 || c2 != q3)
          raise(Errc::braid_fails, "BraidFails(" + std::to_string(x) + "," + std::to_string(y) +
                                       "," + std::to_string(z) + ")");
      }
  // involutive iff r^2 = id
  s.involutive = true;
  for (int x = 0; x < n && s.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = apply_r(s, x, y);
      auto [x2, y2] = apply_r(s, u, v);
      if (x2 != x || y2 != y) {
        s.involutive = false;
        break;
      }
    }
  return s;
}

Solution from_sigma_involutive(std::vector<Perm> sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<Perm> sinv;
  sinv.reserve(sigma.size());
  for (const Perm& p : sigma) {
    if (p.degree() != n || !groups::is_bijection(p.img))
      raise(Errc::not_bijective, "NotBijective: sigma");
    sinv.push_back(p.inverse());
  }
  std::vector<Perm> tau;
  tau.reserve(sigma.size());
  for (int y = 0; y < n; ++y) {
    std::vector<Idx> img(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      int sxy = sigma[static_cast<size_t>(x)](y);
      img[static_cast<size_t>(x)] = static_cast<Idx>(sinv[static_cast<size_t>(sxy)](x));
    }
    if (!groups::is_bijection(img)) raise(Errc::not_bijective, "NotBijective: derived tau");
    tau.emplace_back(std::move(img));
  }
  Solution s = validate_solution(std::move(sigma), std::move(tau));
  if (!s.involutive) raise(Errc::not_involutive, "NotInvolutive");
  return s;
}

Retraction retraction(const Solution& s) {
  int n = s.n;
  std::vector<int> label(static_cast<size_t>(n), -1);
  int k = 0;
  for (int x = 0; x < n; ++x) {
    if (label[static_cast<size_t>(x)] != -1) continue;
    for (int y = x; y < n; ++y)
      if (s.sigma[static_cast<size_t>(y)] == s.sigma[static_cast<size_t>(x)] &&
          s.tau[static_cast<size_t>(y)] == s.tau[static_cast<size_t>(x)])
        label[static_cast<size_t>(y)] = k;
    ++k;
  }
  std::vector<int> rep(static_cast<size_t>(k), -1);
  for (int x = n - 1; x >= 0; --x) rep[static_cast<size_t>(label[static_cast<size_t>(x)])] = x;
  std::vector<Perm> sig, tau;
  for (int c = 0; c < k; ++c) {
    std::vector<Idx> si(static_cast<size_t>(k)), ti(static_cast<size_t>(k));
    int x = rep[static_cast<size_t>(c)];
    for (int d = 0; d < k; ++d) {
      int y = rep[static_cast<size_t>(d)];
      si[static_cast<size_t>(d)] = static_cast<Idx>(label[static_cast<size_t>(s.sigma[static_cast<size_t>(x)](y))]);
      ti[static_cast<size_t>(d)] = static_cast<Idx>(label[static_cast<size_t>(s.tau[static_cast<size_t>(x)](y))]);
    }
    sig.emplace_back(std::move(si));
    tau.emplace_back(std::move(ti));
  }
  // well-definedness across representatives
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = label[static_cast<size_t>(x)], cy = label[static_cast<size_t>(y)];
      if (sig[static_cast<size_t>(cx)](cy) != label[static_cast<size_t>(s.sigma[static_cast<size_t>(x)](y))] ||
          tau[static_cast<size_t>(cx)](cy) != label[static_cast<size_t>(s.tau[static_cast<size_t>(x)](y))])
        raise(Errc::induced_not_well_defined, "InducedNotWellDefined");
    }
  Retraction r;
  r.solution = validate_solution(std::move(sig), std::move(tau));
  r.class_of.assign(label.begin(), label.end());
  return r;
}

RetractionTower retraction_tower(const Solution& s) {
  RetractionTower t;
  t.levels.push_back(s);
  while (t.levels.back().n > 1) {
    Retraction r = retraction(t.levels.back());
    if (r.solution.n == t.levels.back().n) return t;  // stabilized above a point
    t.levels.push_back(std::move(r.solution));
  }
  t.mp_level = std::max<int>(1, static_cast<int>(t.levels.size()) - 1);
  return t;
}

std::optional<int> multipermutation_level(const Solution& s) {
  return retraction_tower(s).mp_level;
}

PermGroup permutation_group(const Solution& s) {
  std::vector<Perm> gens = s.sigma;
  gens.insert(gens.end(), s.tau.begin(), s.tau.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return groups::closure(s.n, std::move(gens));
}

braces::SkewBrace permutation_brace(const Solution& s) {
  if (!s.involutive)
    raise(Errc::unsupported_solution_kind,
          "UnsupportedSolutionKind: only involutive solutions carry this construction");
  int n = s.n;
  std::vector<Perm> sinv;
  sinv.reserve(static_cast<size_t>(n));
  for (const Perm& p : s.sigma) sinv.push_back(p.inverse());
  // diagonal map x -> sigma_x^{-1}(x) is bijective for involutive solutions
  std::vector<int> tinv(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int t = sinv[static_cast<size_t>(x)](x);
    if (tinv[static_cast<size_t>(t)] != -1)
      raise(Errc::internal_axiom_failure, "InternalAxiomFailure: diagonal map not bijective");
    tinv[static_cast<size_t>(t)] = x;
  }

  // generate <sigma_x> with one coordinate vector per element (plus one alternate)
  struct Node {
    Perm g;
    std::vector<int> v;
    std::vector<int> alt;
    bool has_alt = false;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::vector<Idx>, int, VecHash> index;
  Node id;
  id.g = Perm::identity(n);
  id.v.assign(static_cast<size_t>(n), 0);
  index.emplace(id.g.img, 0);
  nodes.push_back(std::move(id));
  for (size_t qi = 0; qi < nodes.size(); ++qi) {
    for (int x = 0; x < n; ++x) {
      for (int dir = 0; dir < 2; ++dir) {
        Perm g2 = compose(nodes[qi].g, dir == 0 ? s.sigma[static_cast<size_t>(x)]
                                                : sinv[static_cast<size_t>(x)]);
        std::vector<int> v2 = nodes[qi].v;
        if (dir == 0)
          v2[static_cast<size_t>(nodes[qi].g(x))] += 1;
        else
          v2[static_cast<size_t>(nodes[qi].g(sinv[static_cast<size_t>(x)](x)))] -= 1;
        auto it = index.find(g2.img);
        if (it == index.end()) {
          Node nd;
          nd.g = std::move(g2);
          nd.v = std::move(v2);
          index.emplace(nd.g.img, static_cast<int>(nodes.size()));
          nodes.push_back(std::move(nd));
        } else if (!nodes[static_cast<size_t>(it->second)].has_alt &&
                   v2 != nodes[static_cast<size_t>(it->second)].v) {
          nodes[static_cast<size_t>(it->second)].alt = std::move(v2);
          nodes[static_cast<size_t>(it->second)].has_alt = true;
        }
      }
    }
  }

  // canonical order: lex on the permutations (identity lands at 0)
  int m = static_cast<int>(nodes.size());
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nodes[static_cast<size_t>(a)].g < nodes[static_cast<size_t>(b)].g; });
  std::vector<int> pos(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  auto index_of_perm = [&](const Perm& p) {
    auto it = index.find(p.img);
    if (it == index.end())
      raise(Errc::internal_axiom_failure, "InternalAxiomFailure: fold left the group");
    return pos[static_cast<size_t>(it->second)];
  };

  // u + e_y = u o sigma_{u^-1(y)};  u - e_y = u o sigma_z^-1 with sigma_z^-1(z) = u^-1(y)
  auto fold = [&](const Perm& start, const std::vector<int>& v) {
    Perm u = start;
    for (int y = 0; y < n; ++y) {
      int c = v[static_cast<size_t>(y)];
      while (c > 0) {
        int uy = u.inverse()(y);
        u = compose(u, s.sigma[static_cast<size_t>(uy)]);
        --c;
      }
      while (c < 0) {
        int uy = u.inverse()(y);
        int z = tinv[static_cast<size_t>(uy)];
        u = compose(u, sinv[static_cast<size_t>(z)]);
        ++c;
      }
    }
    return u;
  };

  std::vector<Idx> add_tab(static_cast<size_t>(m) * m), circ_tab(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const Node& gi = nodes[static_cast<size_t>(order[static_cast<size_t>(i)])];
    for (int j = 0; j < m; ++j) {
      const Node& gj = nodes[static_cast<size_t>(order[static_cast<size_t>(j)])];
      circ_tab[static_cast<size_t>(i) * m + j] = static_cast<Idx>(index_of_perm(compose(gi.g, gj.g)));
      add_tab[static_cast<size_t>(i) * m + j] = static_cast<Idx>(index_of_perm(fold(gi.g, gj.v)));
    }
  }
  braces::SkewBrace brace;
  try {
    brace = braces::validate_brace(groups::validate_group_flat(m, std::move(add_tab)),
                                   groups::validate_group_flat(m, std::move(circ_tab)));
  } catch (const Error& e) {
    raise(Errc::internal_axiom_failure,
          std::string("InternalAxiomFailure: permutation brace invalid: ") + e.what());
  }
  // lambda_{sigma_x}(sigma_y) = sigma_{sigma_x(y)}
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int gx = index_of_perm(s.sigma[static_cast<size_t>(x)]);
      int gy = index_of_perm(s.sigma[static_cast<size_t>(y)]);
      int gz = index_of_perm(s.sigma[static_cast<size_t>(s.sigma[static_cast<size_t>(x)](y))]);
      if (brace.lambda(gx, gy) != gz)
        raise(Errc::internal_axiom_failure, "InternalAxiomFailure: lambda identity fails");
    }
  // additions recomputed from alternate generation words must agree
  int checked = 0;
  for (int j = 0; j < m && checked < 100; ++j) {
    const Node& gj = nodes[static_cast<size_t>(order[static_cast<size_t>(j)])];
    if (!gj.has_alt) continue;
    for (int i = 0; i < m && checked < 100; ++i) {
      const Node& gi = nodes[static_cast<size_t>(order[static_cast<size_t>(i)])];
      if (index_of_perm(fold(gi.g, gj.v)) != index_of_perm(fold(gi.g, gj.alt)))
        raise(Errc::internal_axiom_failure, "InternalAxiomFailure: addition is word-dependent");
      ++checked;
    }
  }
  return brace;
}

std::optional<iso::IsoclinismWitness> are_permutation_isoclinic(const Solution& a,
                                                                const Solution& b) {
  return iso::are_isoclinic(permutation_brace(a), permutation_brace(b));
}

// ---------------------------------------------------------------------------
// enumeration of involutive solutions
//
// A sigma family defines an involutive non-degenerate solution exactly when
// sigma_x sigma_{sigma_x^-1(y)} = sigma_y sigma_{sigma_y^-1(x)} for all x, y;
// the search assigns sigma one point at a time and checks every pair whose
// four participating indices are known.

namespace {

struct EnumCtx {
  int n = 0;
  std::vector<Perm> all, all_inv;
  std::vector<int> order;  // assignment order of the points
};

struct EnumState {
  std::vector<int> sig;  // point -> index into all, or -1
};

bool pairs_ok(const EnumCtx& cx, const EnumState& st, int fresh) {
  int n = cx.n;
  for (int x = 0; x < n; ++x) {
    if (st.sig[static_cast<size_t>(x)] < 0) continue;
    const Perm& sx = cx.all[static_cast<size_t>(st.sig[static_cast<size_t>(x)])];
    const Perm& sxi = cx.all_inv[static_cast<size_t>(st.sig[static_cast<size_t>(x)])];
    for (int y = 0; y < n; ++y) {
      if (st.sig[static_cast<size_t>(y)] < 0) continue;
      int u = sxi(y);
      if (st.sig[static_cast<size_t>(u)] < 0) continue;
      const Perm& sy = cx.all[static_cast<size_t>(st.sig[static_cast<size_t>(y)])];
      const Perm& syi = cx.all_inv[static_cast<size_t>(st.sig[static_cast<size_t>(y)])];
      int v = syi(x);
      if (st.sig[static_cast<size_t>(v)] < 0) continue;
      if (x != fresh && y != fresh && u != fresh && v != fresh) continue;
      const Perm& su = cx.all[static_cast<size_t>(st.sig[static_cast<size_t>(u)])];
      const Perm& sv = cx.all[static_cast<size_t>(st.sig[static_cast<size_t>(v)])];
      for (int p = 0; p < n; ++p)
        if (sx(su(p)) != sy(sv(p))) return false;
    }
  }
  return true;
}

void enum_rec(const EnumCtx& cx, EnumState& st, size_t depth, std::set<std::string>& keys) {
  if (depth == static_cast<size_t>(cx.n)) {
    // canonical form under relabelling
    Solution sol;
    sol.n = cx.n;
    for (int x = 0; x < cx.n; ++x) sol.sigma.push_back(cx.all[static_cast<size_t>(st.sig[static_cast<size_t>(x)])]);
    keys.insert(canonical_key(sol));
    return;
  }
  int var = cx.order[depth];
  for (size_t c = 0; c < cx.all.size(); ++c) {
    st.sig[static_cast<size_t>(var)] = static_cast<int>(c);
    if (pairs_ok(cx, st, var)) enum_rec(cx, st, depth + 1, keys);
  }
  st.sig[static_cast<size_t>(var)] = -1;
}

}  // namespace

std::string canonical_key(const Solution& s) {
  int n = s.n;
  std::vector<Idx> relab(static_cast<size_t>(n));
  std::iota(relab.begin(), relab.end(), Idx{0});
  std::string best;
  std::string cur(static_cast<size_t>(n) * n, '\0');
  do {
    Perm f{std::vector<Idx>(relab.begin(), relab.end())};
    Perm fi = f.inverse();
    for (int x = 0; x < n; ++x) {
      const Perm& sg = s.sigma[static_cast<size_t>(fi(x))];
      for (int y = 0; y < n; ++y)
        cur[static_cast<size_t>(x) * n + y] = static_cast<char>(f(sg(fi(y))));
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(relab.begin(), relab.end()));
  return best;
}

std::vector<Solution> enumerate_involutive(int n, int jobs, bool reverse_order) {
  if (n < 1) raise(Errc::bad_parameters, "BadParameters: size must be positive");
  EnumCtx cx;
  cx.n = n;
  std::vector<Idx> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), Idx{0});
  do {
    cx.all.emplace_back(std::vector<Idx>(img.begin(), img.end()));
  } while (std::next_permutation(img.begin(), img.end()));
  for (const Perm& p : cx.all) cx.all_inv.push_back(p.inverse());
  cx.order.resize(static_cast<size_t>(n));
  std::iota(cx.order.begin(), cx.order.end(), 0);
  if (reverse_order) std::reverse(cx.order.begin(), cx.order.end());

  std::set<std::string> keys;
  int njobs = par::effective(jobs);
  if (njobs <= 1 || n == 1) {
    EnumState st;
    st.sig.assign(static_cast<size_t>(n), -1);
    enum_rec(cx, st, 0, keys);
  } else {
    std::vector<std::set<std::string>> parts(cx.all.size());
#ifdef SKEWBRACE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(njobs)
#endif
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(cx.all.size()); ++c) {
      EnumState st;
      st.sig.assign(static_cast<size_t>(n), -1);
      int var = cx.order[0];
      st.sig[static_cast<size_t>(var)] = static_cast<int>(c);
      if (pairs_ok(cx, st, var)) enum_rec(cx, st, 1, parts[static_cast<size_t>(c)]);
    }
    for (const auto& part : parts) keys.insert(part.begin(), part.end());
  }

  std::vector<Solution> out;
  out.reserve(keys.size());
  for (const std::string& k : keys) {
    std::vector<Perm> sigma;
    sigma.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      std::vector<Idx> im(static_cast<size_t>(n));
      for (int y = 0; y < n; ++y) im[static_cast<size_t>(y)] = static_cast<Idx>(k[static_cast<size_t>(x) * n + y]);
      sigma.emplace_back(std::move(im));
    }
    out.push_back(from_sigma_involutive(std::move(sigma)));
  }
  return out;
}

bool is_indecomposable(const Solution& s) { return permutation_group(s).is_transitive(); }

SolutionClassTable classify_solutions(const std::vector<Solution>& sols, int jobs) {
  std::vector<braces::SkewBrace> braces_list;
  braces_list.reserve(sols.size());
  for (const Solution& s : sols) braces_list.push_back(permutation_brace(s));
  iso::ClassTable t = iso::partition_classes(braces_list, jobs, /*with_witnesses=*/false);
  SolutionClassTable out;
  out.class_of.assign(sols.size(), -1);
  for (const iso::ClassEntry& e : t.classes) {
    out.classes.push_back(e.members);
    for (int m : e.members) out.class_of[static_cast<size_t>(m)] = static_cast<int>(out.classes.size()) - 1;
  }
  return out;
}

std::vector<Perm> parse_sigma_line(const std::string& text, int n) {
  std::vector<Perm> sigma(static_cast<size_t>(n), Perm::identity(n));
  std::string trimmed;
  for (char c : text)
    if (c != '\r' && c != '\n') trimmed += c;
  // strip whitespace at both ends
  size_t b = trimmed.find_first_not_of(" \t");
  size_t e = trimmed.find_last_not_of(" \t");
  if (b == std::string::npos) raise(Errc::parse_error, "ParseError: empty sigma line");
  trimmed = trimmed.substr(b, e - b + 1);
  if (trimmed == "flip") return sigma;
  std::stringstream ss(trimmed);
  std::string part;
  while (std::getline(ss, part, ';')) {
    size_t pb = part.find_first_not_of(" \t");
    if (pb == std::string::npos) continue;
    size_t pe = part.find_last_not_of(" \t");
    part = part.substr(pb, pe - pb + 1);
    if (part.empty()) continue;
    if (part[0] != 's') raise(Errc::parse_error, "ParseError: expected sK=..., got '" + part + "'");
    size_t eq = part.find('=');
    if (eq == std::string::npos) raise(Errc::parse_error, "ParseError: expected '=' in '" + part + "'");
    int k = 0;
    try {
      k = std::stoi(part.substr(1, eq - 1));
    } catch (const std::exception&) {
      raise(Errc::parse_error, "ParseError: bad sigma index in '" + part + "'");
    }
    if (k < 1 || k > n) raise(Errc::parse_error, "ParseError: sigma index out of range");
    std::string rhs = part.substr(eq + 1);
    sigma[static_cast<size_t>(k - 1)] = groups::perm_from_cycles(rhs, n);
  }
  // unset entries stay the identity
  return sigma;
}

std::string format_sigma_line(const Solution& s) {
  std::string out;
  for (int x = 0; x < s.n; ++x) {
    if (x) out += "; ";
    out += "s" + std::to_string(x + 1) + "=" + groups::cycle_string(s.sigma[static_cast<size_t>(x)]);
  }
  return out;
}

}  // namespace sb::ybe
