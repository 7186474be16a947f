#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "skewbrace/census.hpp"
#include "skewbrace/json_io.hpp"

using namespace sb;
using namespace sb::census;
using braces::SkewBrace;
using groups::Idx;

TEST_CASE("census counts for small orders") {
  CHECK(fixtures::census_of(1).size() == 1);
  CHECK(fixtures::census_of(2).size() == 1);
  CHECK(fixtures::census_of(4).size() == 4);
  CHECK(fixtures::census_of(8).size() == 47);
  CHECK_THROWS_AS(enumerate_braces(31), Error);
}

TEST_CASE("order-4 census against the brute-force oracle") {
  const auto& recs = fixtures::census_of(4);
  size_t oracle_total = 0;
  groups::CayleyGroup c4 = groups::cyclic_group(4);
  groups::CayleyGroup c22 = groups::abelian_group({2, 2});
  for (const groups::CayleyGroup* add : {&c4, &c22}) {
    std::set<std::vector<Idx>> tables = oracles::brute_brace_circle_tables(*add);
    oracle_total += tables.size();
    // every oracle brace is isomorphic to exactly one census record
    for (const std::vector<Idx>& circ : tables) {
      SkewBrace b = braces::validate_brace(*add, groups::validate_group_flat(4, circ));
      int matches = 0;
      for (const auto& r : recs)
        if (braces::brace_isomorphic(r.brace, b)) ++matches;
      CHECK(matches == 1);
    }
  }
  CHECK(oracle_total == recs.size());
}

TEST_CASE("census classification counts for order 8") {
  auto recs = fixtures::census_of(8);
  CHECK(classify_census(recs, Filter::all).classes.size() == 20);
  CHECK(classify_census(recs, Filter::two_sided).classes.size() == 16);
  CHECK(classify_census(recs, Filter::abelian_type).classes.size() == 12);
  CHECK(classify_census(recs, Filter::radical_ring).classes.size() == 8);
}

TEST_CASE("census membership checks") {
  auto contains = [](const std::vector<BraceRecord>& recs, const SkewBrace& b) {
    for (const auto& r : recs)
      if (braces::brace_isomorphic(r.brace, b)) return true;
    return false;
  };
  CHECK(contains(fixtures::census_of(4), braces::make_cnd(4, 2)));
  CHECK(contains(fixtures::census_of(9), braces::make_cnd(9, 3)));
  CHECK(contains(fixtures::census_of(8), fixtures::brace_a8()));
  CHECK(contains(fixtures::census_of(8), fixtures::brace_b8()));
}

TEST_CASE("census records are pairwise non-isomorphic and well formed") {
  const auto& recs = fixtures::census_of(8);
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].id == content_hash(recs[i].brace));
    CHECK(compute_flags(recs[i].brace) == recs[i].flags);
    for (size_t j = i + 1; j < recs.size(); ++j)
      CHECK(!braces::brace_isomorphic(recs[i].brace, recs[j].brace));
  }
}

TEST_CASE("raw regular subgroup constructions fold into the census") {
  const auto& recs = fixtures::census_of(8);
  int spot = 0;
  for (const groups::CatalogEntry& e : groups::catalog_groups(8)) {
    groups::PermGroup hol = groups::holomorph(e.group);
    for (const groups::PermGroup& g :
         groups::regular_subgroups(hol, 8, groups::RegFusion::raw)) {
      if (++spot % 3) continue;  // sample
      SkewBrace b = braces::brace_from_regular_subgroup(e.group, g);
      int matches = 0;
      for (const auto& r : recs)
        if (braces::brace_isomorphic(r.brace, b)) ++matches;
      CHECK(matches == 1);
    }
  }
  CHECK(spot > 100);
}

TEST_CASE("annihilator behaviour across the order-8 census") {
  bool trivial_ann = false;
  for (const auto& r : fixtures::census_of(8)) {
    size_t ann = braces::characteristic_subsets(r.brace).annihilator.size();
    if (ann == 1) trivial_ann = true;
    if (r.flags.two_sided) {
      CHECK(ann > 1);
      CHECK(braces::commutator_ideal(r.brace).elements.size() < 8);
    }
  }
  CHECK(trivial_ann);  // prime-power braces can have trivial annihilator
}

TEST_CASE("database round trip and integrity checks") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sb_census_test";
  fs::create_directories(dir);
  std::string path = (dir / "b4.jsonl").string();
  auto recs = fixtures::census_of(4);
  save_db(path, recs);
  std::string bytes1 = io::load_text_file(path);
  std::vector<BraceRecord> loaded = load_db(path, true);
  CHECK(loaded.size() == recs.size());
  save_db(path, loaded);
  CHECK(io::load_text_file(path) == bytes1);

  // corrupted line
  std::string corrupt = (dir / "corrupt.jsonl").string();
  io::save_text_file(corrupt, "{not json\n");
  CHECK_THROWS_AS(load_db(corrupt, true), Error);

  // tampered flags
  io::json j = io::parse_json(bytes1.substr(0, bytes1.find('\n')));
  j["flags"]["two_sided"] = !j["flags"]["two_sided"].get<bool>();
  std::string flagged = (dir / "flags.jsonl").string();
  io::save_text_file(flagged, j.dump() + "\n");
  try {
    load_db(flagged, true);
    FAIL("expected FlagMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::flag_mismatch);
  }

  // tampered id
  io::json j2 = io::parse_json(bytes1.substr(0, bytes1.find('\n')));
  j2["id"] = "0000000000000000";
  std::string hashed = (dir / "hash.jsonl").string();
  io::save_text_file(hashed, j2.dump() + "\n");
  try {
    load_db(hashed, true);
    FAIL("expected HashMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hash_mismatch);
  }
  fs::remove_all(dir);
}

TEST_CASE("checkpointing and resume") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sb_ckpt_test";
  fs::remove_all(dir);
  EnumerateOptions opt;
  opt.checkpoint_dir = dir.string();
  std::vector<BraceRecord> first = enumerate_braces(8, opt);
  CHECK(fs::exists(dir));
  // drop one checkpoint file; resume must still reproduce the census
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (files == 0) fs::remove(e.path());
    ++files;
  }
  CHECK(files == 5);  // one per additive group
  opt.resume = true;
  std::vector<BraceRecord> second = enumerate_braces(8, opt);
  REQUIRE(second.size() == first.size());
  for (size_t i = 0; i < first.size(); ++i) CHECK(first[i].id == second[i].id);
  fs::remove_all(dir);
}
