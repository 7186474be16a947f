#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewbrace/census.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/parallel.hpp"

namespace sb::census {

namespace fs = std::filesystem;

std::string content_hash(const braces::SkewBrace& b) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < 4; ++i) mix(static_cast<std::uint8_t>((b.n >> (8 * i)) & 0xff));
  for (groups::Idx v : b.add.tab) mix(v);
  for (groups::Idx v : b.circ.tab) mix(v);
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

RecordFlags compute_flags(const braces::SkewBrace& b) {
  braces::BracePredicates p = braces::predicates(b);
  RecordFlags f;
  f.trivial = p.is_trivial;
  f.two_sided = p.is_two_sided;
  f.abelian_type = p.is_abelian_type;
  f.radical_ring = p.is_radical_ring;
  f.right_nilpotent = braces::is_right_nilpotent(b);
  f.stem = iso::is_stem(b);
  return f;
}

BraceRecord make_record(braces::SkewBrace b) {
  BraceRecord r;
  r.order = b.n;
  r.id = content_hash(b);
  r.flags = compute_flags(b);
  r.fingerprint = iso::fingerprint(b);
  r.brace = std::move(b);
  return r;
}

namespace {

std::string checkpoint_path(const EnumerateOptions& opt, int order, size_t gi) {
  return (fs::path(opt.checkpoint_dir) /
          ("order" + std::to_string(order) + "_group" + std::to_string(gi) + ".jsonl"))
      .string();
}

std::vector<BraceRecord> records_from_lines(const std::string& text, bool verify);

}  // namespace

std::vector<BraceRecord> enumerate_braces(int order, const EnumerateOptions& opt) {
  std::vector<groups::CatalogEntry> cat = groups::catalog_groups(order);
  std::vector<BraceRecord> records;
  bool use_ckpt = !opt.checkpoint_dir.empty();
  if (use_ckpt) fs::create_directories(opt.checkpoint_dir);
  for (size_t gi = 0; gi < cat.size(); ++gi) {
    const groups::CatalogEntry& entry = cat[gi];
    if (use_ckpt && opt.resume && fs::exists(checkpoint_path(opt, order, gi))) {
      std::vector<BraceRecord> part =
          records_from_lines(io::load_text_file(checkpoint_path(opt, order, gi)), true);
      if (opt.progress)
        opt.progress("group " + std::to_string(gi + 1) + "/" + std::to_string(cat.size()) + " (" +
                     entry.name + "): " + std::to_string(part.size()) + " braces [resumed]");
      for (BraceRecord& r : part) records.push_back(std::move(r));
      continue;
    }
    groups::PermGroup hol = groups::holomorph(entry.group);
    std::vector<groups::PermGroup> regs =
        groups::regular_subgroups(hol, order, groups::RegFusion::by_stabilizer0, opt.jobs);
    std::vector<BraceRecord> part;
    for (const groups::PermGroup& g : regs) {
      braces::SkewBrace b = braces::brace_from_regular_subgroup(entry.group, g);
      // fusion by Aut-conjugacy already separates isomorphism classes; re-check
      bool dup = false;
      for (const BraceRecord& r : part)
        if (braces::brace_isomorphic(r.brace, b)) {
          dup = true;
          break;
        }
      if (!dup) part.push_back(make_record(std::move(b)));
    }
    std::sort(part.begin(), part.end(),
              [](const BraceRecord& a, const BraceRecord& b) { return a.id < b.id; });
    if (use_ckpt) {
      std::string text;
      for (const BraceRecord& r : part) text += record_to_line(r) + "\n";
      io::save_text_file(checkpoint_path(opt, order, gi), text);
    }
    if (opt.progress)
      opt.progress("group " + std::to_string(gi + 1) + "/" + std::to_string(cat.size()) + " (" +
                   entry.name + "): |Hol| = " + std::to_string(hol.order()) + ", " +
                   std::to_string(part.size()) + " braces");
    for (BraceRecord& r : part) records.push_back(std::move(r));
  }
  // cross-group safety net; additive groups differ, so this mostly re-checks hashes
  for (size_t i = 0; i < records.size(); ++i)
    for (size_t j = i + 1; j < records.size(); ++j)
      if (braces::brace_isomorphic(records[i].brace, records[j].brace))
        raise(Errc::internal_axiom_failure, "census contains isomorphic records");
  std::sort(records.begin(), records.end(),
            [](const BraceRecord& a, const BraceRecord& b) { return a.id < b.id; });
  return records;
}

Filter filter_from_string(const std::string& s) {
  if (s == "all") return Filter::all;
  if (s == "two-sided" || s == "two_sided") return Filter::two_sided;
  if (s == "abelian" || s == "abelian_type") return Filter::abelian_type;
  if (s == "radical" || s == "radical_ring") return Filter::radical_ring;
  raise(Errc::parse_error, "ParseError: unknown filter '" + s + "'");
}

std::string to_string(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::two_sided: return "two-sided";
    case Filter::abelian_type: return "abelian";
    case Filter::radical_ring: return "radical";
  }
  return "?";
}

bool passes(const RecordFlags& f, Filter filter) {
  switch (filter) {
    case Filter::all: return true;
    case Filter::two_sided: return f.two_sided;
    case Filter::abelian_type: return f.abelian_type;
    case Filter::radical_ring: return f.radical_ring;
  }
  return false;
}

ClassifyResult classify_census(std::vector<BraceRecord>& records, Filter filter, int jobs,
                               bool with_witnesses) {
  ClassifyResult res;
  res.filter = filter;
  res.order = records.empty() ? 0 : records.front().order;
  std::vector<int> picked;
  std::vector<braces::SkewBrace> braces_list;
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].order != res.order)
      raise(Errc::bad_parameters, "BadParameters: records of mixed order");
    if (passes(records[i].flags, filter)) {
      picked.push_back(static_cast<int>(i));
      braces_list.push_back(records[i].brace);
    }
  }
  res.brace_count = static_cast<int>(picked.size());
  iso::ClassTable table = iso::partition_classes(braces_list, jobs, with_witnesses);
  for (size_t c = 0; c < table.classes.size(); ++c) {
    const iso::ClassEntry& e = table.classes[c];
    ClassInfo info;
    std::ostringstream id;
    id << "c";
    id.width(3);
    id.fill('0');
    id << c;
    info.class_id = id.str();
    info.representative_id = records[static_cast<size_t>(picked[static_cast<size_t>(e.representative)])].id;
    for (size_t mi = 0; mi < e.members.size(); ++mi) {
      int m = e.members[mi];
      BraceRecord& r = records[static_cast<size_t>(picked[static_cast<size_t>(m)])];
      info.member_ids.push_back(r.id);
      if (filter == Filter::all) r.class_id = info.class_id;
      if (with_witnesses) info.witnesses.push_back(e.witnesses[mi]);
    }
    res.classes.push_back(std::move(info));
  }
  return res;
}

std::string record_to_line(const BraceRecord& r) {
  io::json j;
  j["id"] = r.id;
  j["order"] = r.order;
  io::json b = io::brace_to_json(r.brace);
  j["add"] = b["add"];
  j["circ"] = b["circ"];
  j["flags"] = io::json{{"trivial", r.flags.trivial},
                        {"two_sided", r.flags.two_sided},
                        {"abelian_type", r.flags.abelian_type},
                        {"radical_ring", r.flags.radical_ring},
                        {"right_nilpotent", r.flags.right_nilpotent},
                        {"stem", r.flags.stem}};
  j["fingerprint"] = io::fingerprint_to_json(r.fingerprint);
  if (r.class_id) j["class_id"] = *r.class_id;
  return j.dump();
}

namespace {

BraceRecord record_from_line(const std::string& line, int lineno, bool verify) {
  io::json j = io::json::parse(line, nullptr, false);
  if (j.is_discarded())
    raise(Errc::parse_error, "ParseError(line " + std::to_string(lineno) + ")");
  BraceRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<int>();
    io::json bj{{"n", r.order}, {"add", j.at("add")}, {"circ", j.at("circ")}};
    r.brace = io::brace_from_json(bj);
    const io::json& fj = j.at("flags");
    r.flags.trivial = fj.at("trivial").get<bool>();
    r.flags.two_sided = fj.at("two_sided").get<bool>();
    r.flags.abelian_type = fj.at("abelian_type").get<bool>();
    r.flags.radical_ring = fj.at("radical_ring").get<bool>();
    r.flags.right_nilpotent = fj.at("right_nilpotent").get<bool>();
    r.flags.stem = fj.at("stem").get<bool>();
    r.fingerprint = io::fingerprint_from_json(j.at("fingerprint"));
    if (j.contains("class_id")) r.class_id = j.at("class_id").get<std::string>();
  } catch (const io::json::exception& e) {
    raise(Errc::parse_error,
          "ParseError(line " + std::to_string(lineno) + "): " + std::string(e.what()));
  }
  if (verify) {
    if (content_hash(r.brace) != r.id)
      raise(Errc::hash_mismatch, "HashMismatch(" + r.id + ")");
    if (!(compute_flags(r.brace) == r.flags))
      raise(Errc::flag_mismatch, "FlagMismatch(" + r.id + ")");
  }
  return r;
}

std::vector<BraceRecord> records_from_lines(const std::string& text, bool verify) {
  std::vector<BraceRecord> out;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.empty()) continue;
    out.push_back(record_from_line(line, lineno, verify));
  }
  return out;
}

}  // namespace

void save_db(const std::string& path, const std::vector<BraceRecord>& records) {
  std::vector<const BraceRecord*> sorted;
  sorted.reserve(records.size());
  for (const BraceRecord& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const BraceRecord* a, const BraceRecord* b) { return a->id < b->id; });
  std::string text;
  for (const BraceRecord* r : sorted) text += record_to_line(*r) + "\n";
  io::save_text_file(path, text);
}

std::vector<BraceRecord> load_db(const std::string& path, bool verify) {
  return records_from_lines(io::load_text_file(path), verify);
}

}  // namespace sb::census
