#include <fstream>
#include <sstream>

#include "skewbrace/json_io.hpp"

namespace sb::io {

namespace {

std::vector<std::vector<int>> table_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::parse_error, "ParseError: table must be an array of rows");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array()) raise(Errc::parse_error, "ParseError: table row must be an array");
    t.push_back(row.get<std::vector<int>>());
  }
  return t;
}

json table_to_json(const std::vector<groups::Idx>& flat, int n) {
  json rows = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(static_cast<int>(flat[static_cast<size_t>(a) * n + b]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json profile_to_json(const std::vector<std::pair<int, int>>& p) {
  json out = json::array();
  for (auto [o, c] : p) out.push_back(json::array({o, c}));
  return out;
}

std::vector<std::pair<int, int>> profile_from_json(const json& j) {
  std::vector<std::pair<int, int>> p;
  for (const auto& e : j) p.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return p;
}

json orbits_to_json(const std::vector<std::pair<int, iso::Rational>>& p) {
  json out = json::array();
  for (const auto& [s, r] : p) out.push_back(json::array({s, r.str()}));
  return out;
}

std::vector<std::pair<int, iso::Rational>> orbits_from_json(const json& j) {
  std::vector<std::pair<int, iso::Rational>> p;
  for (const auto& e : j) {
    std::string s = e.at(1).get<std::string>();
    size_t slash = s.find('/');
    if (slash == std::string::npos) raise(Errc::parse_error, "ParseError: bad rational " + s);
    p.emplace_back(e.at(0).get<int>(),
                   iso::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))));
  }
  return p;
}

}  // namespace

json group_to_json(const groups::CayleyGroup& g) {
  return json{{"n", g.n}, {"table", table_to_json(g.tab, g.n)}};
}

groups::CayleyGroup group_from_json(const json& j) {
  return groups::validate_group(table_from_json(j.at("table")));
}

json brace_to_json(const braces::SkewBrace& b) {
  return json{{"n", b.n}, {"add", table_to_json(b.add.tab, b.n)}, {"circ", table_to_json(b.circ.tab, b.n)}};
}

braces::SkewBrace brace_from_json(const json& j, bool deep) {
  return braces::validate_brace_tables(table_from_json(j.at("add")), table_from_json(j.at("circ")),
                                       deep);
}

json solution_to_json(const ybe::Solution& s) {
  json sig = json::array(), tau = json::array();
  for (const auto& p : s.sigma) sig.push_back(std::vector<int>(p.img.begin(), p.img.end()));
  for (const auto& p : s.tau) tau.push_back(std::vector<int>(p.img.begin(), p.img.end()));
  return json{{"n", s.n}, {"sigma", std::move(sig)}, {"tau", std::move(tau)}};
}

ybe::Solution solution_from_json(const json& j) {
  auto perms = [](const json& arr) {
    std::vector<groups::Perm> out;
    for (const auto& p : arr) {
      std::vector<int> v = p.get<std::vector<int>>();
      std::vector<groups::Idx> img(v.begin(), v.end());
      out.emplace_back(std::move(img));
    }
    return out;
  };
  std::vector<groups::Perm> sigma = perms(j.at("sigma"));
  if (j.contains("tau") && !j.at("tau").empty())
    return ybe::validate_solution(std::move(sigma), perms(j.at("tau")));
  return ybe::from_sigma_involutive(std::move(sigma));
}

json witness_to_json(const iso::IsoclinismWitness& w) {
  return json{{"xi", std::vector<int>(w.xi.begin(), w.xi.end())},
              {"theta", std::vector<int>(w.theta_img.begin(), w.theta_img.end())},
              {"theta_domain", std::vector<int>(w.theta_dom.begin(), w.theta_dom.end())}};
}

iso::IsoclinismWitness witness_from_json(const json& j) {
  iso::IsoclinismWitness w;
  for (int v : j.at("xi").get<std::vector<int>>()) w.xi.push_back(static_cast<groups::Idx>(v));
  for (int v : j.at("theta").get<std::vector<int>>())
    w.theta_img.push_back(static_cast<groups::Idx>(v));
  for (int v : j.at("theta_domain").get<std::vector<int>>())
    w.theta_dom.push_back(static_cast<groups::Idx>(v));
  return w;
}

json fingerprint_to_json(const iso::Fingerprint& f) {
  return json{{"ord_quotient", f.ord_quotient},
              {"ord_commutator", f.ord_commutator},
              {"trivial", f.trivial},
              {"two_sided", f.two_sided},
              {"right_nilpotent", f.right_nilpotent},
              {"abelian_type", f.abelian_type},
              {"nilpotent_type", f.nilpotent_type},
              {"quotient_add_profile", profile_to_json(f.quotient_add_profile)},
              {"quotient_circ_profile", profile_to_json(f.quotient_circ_profile)},
              {"commutator_add_profile", profile_to_json(f.commutator_add_profile)},
              {"commutator_circ_profile", profile_to_json(f.commutator_circ_profile)},
              {"lambda_orbits", orbits_to_json(f.lambda_orbits)},
              {"rho_orbits", orbits_to_json(f.rho_orbits)}};
}

iso::Fingerprint fingerprint_from_json(const json& j) {
  iso::Fingerprint f;
  f.ord_quotient = j.at("ord_quotient").get<int>();
  f.ord_commutator = j.at("ord_commutator").get<int>();
  f.trivial = j.at("trivial").get<bool>();
  f.two_sided = j.at("two_sided").get<bool>();
  f.right_nilpotent = j.at("right_nilpotent").get<bool>();
  f.abelian_type = j.at("abelian_type").get<bool>();
  f.nilpotent_type = j.at("nilpotent_type").get<bool>();
  f.quotient_add_profile = profile_from_json(j.at("quotient_add_profile"));
  f.quotient_circ_profile = profile_from_json(j.at("quotient_circ_profile"));
  f.commutator_add_profile = profile_from_json(j.at("commutator_add_profile"));
  f.commutator_circ_profile = profile_from_json(j.at("commutator_circ_profile"));
  f.lambda_orbits = orbits_from_json(j.at("lambda_orbits"));
  f.rho_orbits = orbits_from_json(j.at("rho_orbits"));
  return f;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "ParseError: invalid JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "IoError: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "IoError: cannot write " + path);
  out << text;
  if (!out) raise(Errc::io_error, "IoError: write failed for " + path);
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "IoError: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sb::io
