#pragma once

// Census of all skew braces of a small order up to isomorphism, built from
// regular subgroups of holomorphs, with a JSON-lines database format.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/isoclinism.hpp"

namespace sb::census {

struct RecordFlags {
  bool trivial = false;
  bool two_sided = false;
  bool abelian_type = false;
  bool radical_ring = false;
  bool right_nilpotent = false;
  bool stem = false;
  bool operator==(const RecordFlags&) const = default;
};

struct BraceRecord {
  std::string id;  // content hash of (n, add, circ)
  int order = 0;
  braces::SkewBrace brace;
  RecordFlags flags;
  iso::Fingerprint fingerprint;
  std::optional<std::string> class_id;
};

std::string content_hash(const braces::SkewBrace& b);
RecordFlags compute_flags(const braces::SkewBrace& b);
BraceRecord make_record(braces::SkewBrace b);

struct EnumerateOptions {
  int jobs = 0;
  std::string checkpoint_dir;  // per-additive-group partial files; empty = none
  bool resume = false;
  std::function<void(const std::string&)> progress;
};

// one record per isomorphism class, sorted by id
std::vector<BraceRecord> enumerate_braces(int order, const EnumerateOptions& opt = {});

enum class Filter { all, two_sided, abelian_type, radical_ring };
Filter filter_from_string(const std::string& s);
std::string to_string(Filter f);
bool passes(const RecordFlags& f, Filter filter);

struct ClassInfo {
  std::string class_id;
  std::string representative_id;
  std::vector<std::string> member_ids;
  std::vector<iso::IsoclinismWitness> witnesses;  // rep -> member; empty unless requested
};
struct ClassifyResult {
  Filter filter = Filter::all;
  int order = 0;
  int brace_count = 0;
  std::vector<ClassInfo> classes;
};
// stamps class ids onto the filtered records
ClassifyResult classify_census(std::vector<BraceRecord>& records, Filter filter, int jobs = 0,
                               bool with_witnesses = false);

void save_db(const std::string& path, const std::vector<BraceRecord>& records);
std::vector<BraceRecord> load_db(const std::string& path, bool verify = true);
std::string record_to_line(const BraceRecord& r);

}  // namespace sb::census
