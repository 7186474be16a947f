#include "doctest.h"
#include "fixtures.hpp"
#include "skewbrace/json_io.hpp"

using namespace sb;

TEST_CASE("json round trips") {
  groups::CayleyGroup d8 = groups::dihedral_group(8);
  groups::CayleyGroup d8b = io::group_from_json(io::group_to_json(d8));
  CHECK(d8b.tab == d8.tab);

  braces::SkewBrace a8 = fixtures::brace_a8();
  braces::SkewBrace a8b = io::brace_from_json(io::brace_to_json(a8));
  CHECK(a8b.add.tab == a8.add.tab);
  CHECK(a8b.circ.tab == a8.circ.tab);

  ybe::Solution rep2 = fixtures::solution_from(fixtures::size4_reps()[1], 4);
  ybe::Solution rep2b = io::solution_from_json(io::solution_to_json(rep2));
  CHECK(rep2b.sigma == rep2.sigma);
  CHECK(rep2b.tau == rep2.tau);
  CHECK(rep2b.involutive);

  // solutions given without tau derive it through the involutive formula
  io::json j = io::solution_to_json(rep2);
  j.erase("tau");
  ybe::Solution derived = io::solution_from_json(j);
  CHECK(derived.tau == rep2.tau);

  auto w = iso::are_isoclinic(braces::make_cnd(9, 3), braces::make_cnd(27, 9));
  REQUIRE(w.has_value());
  iso::IsoclinismWitness wb = io::witness_from_json(io::witness_to_json(*w));
  CHECK(wb.xi == w->xi);
  CHECK(wb.theta_dom == w->theta_dom);
  CHECK(wb.theta_img == w->theta_img);
  CHECK(iso::verify_isoclinism(braces::make_cnd(9, 3), braces::make_cnd(27, 9), wb));

  iso::Fingerprint f = iso::fingerprint(a8);
  CHECK(io::fingerprint_from_json(io::fingerprint_to_json(f)) == f);
}

TEST_CASE("parse and io errors") {
  CHECK_THROWS_AS(io::parse_json("{oops"), Error);
  CHECK_THROWS_AS(io::load_json_file("/nonexistent/nowhere.json"), Error);
  try {
    io::load_text_file("/nonexistent/nowhere.txt");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_error);
  }
  // brace json with a broken table reports a data error
  io::json j = io::brace_to_json(braces::make_cnd(4, 2));
  j["circ"][1][1] = 1;
  CHECK_THROWS_AS(io::brace_from_json(j), Error);
}
