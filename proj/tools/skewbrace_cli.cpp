// Command-line front end: enumerate censuses, classify isoclinism classes,
// analyze single braces, decide isoclinism with witnesses, and work with
// set-theoretic solutions.
//
// Exit codes: 0 success / YES, 1 NO, 2 usage or unsupported input,
//             3 I/O error, 4 data error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skewbrace/census.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/parallel.hpp"
#include "skewbrace/ybe.hpp"

using namespace sb;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::unsupported_order:
    case Errc::unsupported_solution_kind:
    case Errc::bad_parameters:
      return 2;
    case Errc::io_error:
      return 3;
    default:
      return 4;
  }
}

std::string orbit_text(const std::vector<std::pair<int, iso::Rational>>& orbits, int n) {
  std::string s;
  for (const auto& [size, r] : orbits) {
    long long count = r.num * n / r.den;
    if (!s.empty()) s += " ";
    s += std::to_string(size) + "x" + std::to_string(count);
  }
  return s;
}

struct AnalyzeReport {
  io::json j;
  std::string text;
};

AnalyzeReport analyze_brace(const braces::SkewBrace& b) {
  iso::Analysis x = iso::analyze(b);
  iso::Fingerprint f = iso::fingerprint(b, x);
  braces::RightSeries rs = braces::right_series(b);
  census::RecordFlags flags = census::compute_flags(b);
  bool ann_nilp = braces::predicates(b).is_annihilator_nilpotent;
  AnalyzeReport rep;
  io::json& j = rep.j;
  j["order"] = b.n;
  j["id"] = census::content_hash(b);
  j["trivial"] = flags.trivial;
  j["two_sided"] = flags.two_sided;
  j["abelian_type"] = flags.abelian_type;
  j["nilpotent_type"] = f.nilpotent_type;
  j["radical_ring"] = flags.radical_ring;
  j["right_nilpotent"] = flags.right_nilpotent;
  j["annihilator_nilpotent"] = ann_nilp;
  j["stem"] = flags.stem;
  j["commutator"] = std::vector<int>(x.commutator.elements.begin(), x.commutator.elements.end());
  j["socle"] = std::vector<int>(x.chars.socle.begin(), x.chars.socle.end());
  j["annihilator"] = std::vector<int>(x.chars.annihilator.begin(), x.chars.annihilator.end());
  std::vector<int> series_sizes;
  for (const auto& t : rs.terms) series_sizes.push_back(static_cast<int>(t.size()));
  j["right_series_sizes"] = series_sizes;
  j["fingerprint"] = io::fingerprint_to_json(f);

  std::string& t = rep.text;
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  t += "order: " + std::to_string(b.n) + "   id: " + j["id"].get<std::string>() + "\n";
  t += std::string("trivial: ") + yn(flags.trivial) + "   two_sided: " + yn(flags.two_sided) +
       "   abelian_type: " + yn(flags.abelian_type) + "   nilpotent_type: " + yn(f.nilpotent_type) +
       "\n";
  t += std::string("radical_ring: ") + yn(flags.radical_ring) +
       "   right_nilpotent: " + yn(flags.right_nilpotent) +
       "   annihilator_nilpotent: " + yn(ann_nilp) + "   stem: " + yn(flags.stem) + "\n";
  t += "|A'| = " + std::to_string(x.commutator.elements.size()) +
       "   |Soc| = " + std::to_string(x.chars.socle.size()) +
       "   |Ann| = " + std::to_string(x.chars.annihilator.size()) +
       "   |A/Ann| = " + std::to_string(f.ord_quotient) + "\n";
  t += "right series sizes:";
  for (int s : series_sizes) t += " " + std::to_string(s);
  t += "\nlambda orbits (size x count): " + orbit_text(f.lambda_orbits, b.n) + "\n";
  t += "rho orbits (size x count): " + orbit_text(f.rho_orbits, b.n) + "\n";
  return rep;
}

void print_classify(const census::ClassifyResult& res, const std::string& format,
                    bool with_witnesses) {
  if (format == "json") {
    io::json j;
    j["filter"] = census::to_string(res.filter);
    j["order"] = res.order;
    j["braces"] = res.brace_count;
    j["class_count"] = static_cast<int>(res.classes.size());
    io::json cls = io::json::array();
    for (const auto& c : res.classes) {
      io::json e;
      e["class_id"] = c.class_id;
      e["representative"] = c.representative_id;
      e["members"] = c.member_ids;
      if (with_witnesses) {
        io::json ws = io::json::array();
        for (const auto& w : c.witnesses) ws.push_back(io::witness_to_json(w));
        e["witnesses"] = ws;
      }
      cls.push_back(std::move(e));
    }
    j["classes"] = std::move(cls);
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("filter=%s order=%d braces=%d classes=%zu\n", census::to_string(res.filter).c_str(),
                res.order, res.brace_count, res.classes.size());
    for (const auto& c : res.classes) {
      std::printf("%s: size=%zu rep=%s members=", c.class_id.c_str(), c.member_ids.size(),
                  c.representative_id.c_str());
      for (size_t i = 0; i < c.member_ids.size(); ++i)
        std::printf("%s%s", i ? "," : "", c.member_ids[i].c_str());
      std::printf("\n");
    }
  }
}

ybe::Solution load_solution(const std::string& path, const std::string& cycles, int size) {
  if (!cycles.empty()) {
    if (size <= 0) raise(Errc::bad_parameters, "BadParameters: --size required with --cycles");
    return ybe::from_sigma_involutive(ybe::parse_sigma_line(cycles, size));
  }
  return io::solution_from_json(io::load_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew braces, isoclinism, and set-theoretic solutions"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker count (default: all cores)");

  // --- enumerate ---
  auto* cmd_enum = app.add_subcommand("enumerate", "census of all skew braces of one order");
  int order = 0;
  std::string out_path;
  bool resume = false;
  cmd_enum->add_option("--order", order, "brace order")->required();
  cmd_enum->add_option("--out", out_path, "output database (JSON lines)")->required();
  cmd_enum->add_flag("--resume", resume, "reuse per-group checkpoint files");

  // --- classify ---
  auto* cmd_classify = app.add_subcommand("classify", "isoclinism classes of a census database");
  std::string db_path, filter_str = "all", format = "table", classify_out;
  bool verify = false;
  cmd_classify->add_option("--db", db_path, "census database")->required();
  cmd_classify->add_option("--filter", filter_str, "all | two-sided | abelian | radical");
  cmd_classify->add_option("--format", format, "table | json");
  cmd_classify->add_option("--out", classify_out, "also write the annotated database here");
  cmd_classify->add_flag("--verify", verify, "re-verify every witness before printing");

  // --- analyze ---
  auto* cmd_analyze = app.add_subcommand("analyze", "invariant report for one brace");
  std::string brace_path, analyze_format = "table";
  cmd_analyze->add_option("file", brace_path, "brace JSON file")->required();
  cmd_analyze->add_option("--format", analyze_format, "table | json");

  // --- isoclinic ---
  auto* cmd_iso = app.add_subcommand("isoclinic", "decide isoclinism of two braces");
  std::string a_path, b_path, iso_format = "table";
  bool iso_verify = false;
  cmd_iso->add_option("a", a_path, "first brace JSON")->required();
  cmd_iso->add_option("b", b_path, "second brace JSON")->required();
  cmd_iso->add_option("--format", iso_format, "table | json");
  cmd_iso->add_flag("--verify", iso_verify, "re-check the witness exhaustively");

  // --- ybe ---
  auto* cmd_ybe = app.add_subcommand("ybe", "set-theoretic solutions");
  cmd_ybe->require_subcommand(1);
  auto* ybe_enum = cmd_ybe->add_subcommand("enumerate", "involutive solutions of one size");
  int size = 0;
  std::string ybe_out;
  ybe_enum->add_option("--size", size, "solution size (<= 5)")->required();
  ybe_enum->add_option("--out", ybe_out, "write solutions as JSON lines");
  auto* ybe_classify = cmd_ybe->add_subcommand("classify", "permutation-isoclinism classes");
  int csize = 0;
  std::string ybe_db, match_file, ybe_format = "table";
  ybe_classify->add_option("--size", csize, "solution size to enumerate and classify");
  ybe_classify->add_option("--db", ybe_db, "classify solutions from a JSON-lines file instead");
  ybe_classify->add_option("--format", ybe_format, "table | json");
  ybe_classify->add_option("--match-representatives", match_file,
                           "file of 'name: s1=..; s2=..' lines to locate in the classification");
  auto* ybe_analyze = cmd_ybe->add_subcommand("analyze", "report for one solution");
  std::string sol_path, cycles;
  int asize = 0;
  std::string ybe_an_format = "table";
  ybe_analyze->add_option("file", sol_path, "solution JSON file");
  ybe_analyze->add_option("--cycles", cycles, "sigma family in cycle notation");
  ybe_analyze->add_option("--size", asize, "size when --cycles is used");
  ybe_analyze->add_option("--format", ybe_an_format, "table | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    par::set_jobs(jobs);

    if (cmd_enum->parsed()) {
      census::EnumerateOptions opt;
      opt.jobs = jobs;
      opt.checkpoint_dir = out_path + ".ckpt";
      opt.resume = resume;
      opt.progress = [](const std::string& m) { std::fprintf(stderr, "%s\n", m.c_str()); };
      std::vector<census::BraceRecord> recs = census::enumerate_braces(order, opt);
      census::save_db(out_path, recs);
      std::printf("%zu skew braces of order %d -> %s\n", recs.size(), order, out_path.c_str());
      return 0;
    }

    if (cmd_classify->parsed()) {
      std::vector<census::BraceRecord> recs = census::load_db(db_path, true);
      census::Filter f = census::filter_from_string(filter_str);
      census::ClassifyResult res = census::classify_census(recs, f, jobs, verify);
      if (verify) {
        std::vector<const census::BraceRecord*> by_id;
        for (const auto& r : recs) by_id.push_back(&r);
        auto find = [&](const std::string& id) -> const census::BraceRecord& {
          for (const auto* r : by_id)
            if (r->id == id) return *r;
          raise(Errc::internal_axiom_failure, "record lookup failed");
        };
        for (const auto& c : res.classes)
          for (size_t i = 0; i < c.member_ids.size(); ++i) {
            std::string why;
            if (!iso::verify_isoclinism(find(c.representative_id).brace,
                                        find(c.member_ids[i]).brace, c.witnesses[i], &why))
              raise(Errc::internal_axiom_failure, "witness failed verification: " + why);
          }
      }
      print_classify(res, format, verify);
      if (!classify_out.empty()) census::save_db(classify_out, recs);
      return 0;
    }

    if (cmd_analyze->parsed()) {
      braces::SkewBrace b = io::brace_from_json(io::load_json_file(brace_path));
      AnalyzeReport rep = analyze_brace(b);
      if (analyze_format == "json")
        std::cout << rep.j.dump(2) << "\n";
      else
        std::cout << rep.text;
      return 0;
    }

    if (cmd_iso->parsed()) {
      braces::SkewBrace a = io::brace_from_json(io::load_json_file(a_path));
      braces::SkewBrace b = io::brace_from_json(io::load_json_file(b_path));
      std::optional<iso::IsoclinismWitness> w = iso::are_isoclinic(a, b);
      if (w) {
        if (iso_verify) {
          std::string why;
          if (!iso::verify_isoclinism(a, b, *w, &why))
            raise(Errc::internal_axiom_failure, "witness failed verification: " + why);
        }
        if (iso_format == "json") {
          io::json j{{"verdict", "YES"}, {"witness", io::witness_to_json(*w)}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::printf("YES\n%s\n", io::witness_to_json(*w).dump().c_str());
        }
        return 0;
      }
      std::string field =
          iso::Fingerprint::first_difference(iso::fingerprint(a), iso::fingerprint(b));
      if (field.empty()) field = "no quotient isomorphism extends to a witness";
      if (iso_format == "json") {
        io::json j{{"verdict", "NO"}, {"distinguishing", field}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("NO\ndistinguishing: %s\n", field.c_str());
      }
      return 1;
    }

    if (ybe_enum->parsed()) {
      if (size < 1 || size > 5) raise(Errc::unsupported_order, "UnsupportedOrder: size must be 1..5");
      std::vector<ybe::Solution> sols = ybe::enumerate_involutive(size, jobs);
      if (!ybe_out.empty()) {
        std::string text;
        for (const auto& s : sols) text += io::solution_to_json(s).dump() + "\n";
        io::save_text_file(ybe_out, text);
      }
      std::printf("%zu involutive solutions of size %d\n", sols.size(), size);
      return 0;
    }

    if (ybe_classify->parsed()) {
      std::vector<ybe::Solution> sols;
      if (!ybe_db.empty()) {
        std::istringstream ss(io::load_text_file(ybe_db));
        std::string line;
        while (std::getline(ss, line))
          if (!line.empty()) sols.push_back(io::solution_from_json(io::parse_json(line)));
      } else {
        if (csize < 1 || csize > 5)
          raise(Errc::unsupported_order, "UnsupportedOrder: size must be 1..5");
        sols = ybe::enumerate_involutive(csize, jobs);
      }
      ybe::SolutionClassTable t = ybe::classify_solutions(sols, jobs);
      io::json j;
      j["solutions"] = static_cast<int>(sols.size());
      j["class_count"] = static_cast<int>(t.classes.size());
      if (ybe_format == "json") {
        j["classes"] = t.classes;
      } else {
        std::printf("%zu solutions in %zu permutation-isoclinism classes\n", sols.size(),
                    t.classes.size());
      }
      if (!match_file.empty()) {
        std::istringstream ss(io::load_text_file(match_file));
        std::string line;
        io::json matches = io::json::array();
        while (std::getline(ss, line)) {
          if (line.empty()) continue;
          size_t colon = line.find(':');
          if (colon == std::string::npos)
            raise(Errc::parse_error, "ParseError: expected 'name: s1=..' in " + match_file);
          std::string name = line.substr(0, colon);
          int n = sols.empty() ? csize : sols.front().n;
          ybe::Solution rep =
              ybe::from_sigma_involutive(ybe::parse_sigma_line(line.substr(colon + 1), n));
          braces::SkewBrace rb = ybe::permutation_brace(rep);
          int found = -1;
          for (size_t c = 0; c < t.classes.size() && found < 0; ++c) {
            const ybe::Solution& member = sols[static_cast<size_t>(t.classes[c].front())];
            if (iso::are_isoclinic(rb, ybe::permutation_brace(member)))
              found = static_cast<int>(c);
          }
          if (ybe_format == "json")
            matches.push_back(io::json{{"name", name}, {"class", found}});
          else
            std::printf("representative %s -> class %d\n", name.c_str(), found);
        }
        if (ybe_format == "json") j["representatives"] = std::move(matches);
      }
      if (ybe_format == "json") std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (ybe_analyze->parsed()) {
      ybe::Solution s = load_solution(sol_path, cycles, asize);
      io::json j;
      j["n"] = s.n;
      j["involutive"] = s.involutive;
      std::optional<int> mp = ybe::multipermutation_level(s);
      j["multipermutation_level"] = mp ? io::json(*mp) : io::json(nullptr);
      groups::PermGroup pg = ybe::permutation_group(s);
      j["permutation_group_order"] = static_cast<int>(pg.order());
      j["indecomposable"] = ybe::is_indecomposable(s);
      if (s.involutive) {
        braces::SkewBrace pb = ybe::permutation_brace(s);
        j["brace_order"] = pb.n;
        j["brace"] = analyze_brace(pb).j;
      }
      if (ybe_an_format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("size: %d\ninvolutive: %s\nmultipermutation level: %s\n", s.n,
                    s.involutive ? "yes" : "no", mp ? std::to_string(*mp).c_str() : "none");
        std::printf("permutation group order: %zu\nindecomposable: %s\n", pg.order(),
                    ybe::is_indecomposable(s) ? "yes" : "no");
        if (s.involutive)
          std::printf("permutation brace order: %d\n", j["brace_order"].get<int>());
      }
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 2;
}
