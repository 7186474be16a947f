#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "skewbrace/ybe.hpp"

using namespace sb;
using namespace sb::ybe;
using groups::Idx;
using groups::Perm;

namespace {

std::vector<Perm> id_family(int n) {
  return std::vector<Perm>(static_cast<size_t>(n), Perm::identity(n));
}

}  // namespace

TEST_CASE("validate_solution") {
  Solution flip = validate_solution(id_family(4), id_family(4));
  CHECK(flip.involutive);
  Solution rep2 = fixtures::solution_from(fixtures::size4_reps()[1], 4);
  CHECK(rep2.involutive);
  // sigma_1 = (12), everything else the identity, breaks the braid identity
  std::vector<Perm> sig = id_family(2);
  sig[0] = groups::perm_from_cycles("(1 2)", 2);
  try {
    validate_solution(sig, id_family(2));
    FAIL("expected BraidFails");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::braid_fails);
  }
  // a valid non-involutive solution: r(x,y) = (s(y), x) with s = (1 2)
  std::vector<Perm> s12(2, groups::perm_from_cycles("(1 2)", 2));
  Solution ni = validate_solution(s12, id_family(2));
  CHECK(!ni.involutive);
}

TEST_CASE("from_sigma_involutive") {
  Solution flip = from_sigma_involutive(id_family(3));
  CHECK(flip.involutive);
  for (const Perm& t : flip.tau) CHECK(t.is_identity());
  Solution rep3 = fixtures::solution_from(fixtures::size4_reps()[2], 4);
  CHECK(rep3.involutive);
  // tau_1 of that solution is (2 4), which lies outside <sigma>
  CHECK(groups::cycle_string(rep3.tau[0]) == "(2 4)");
  Solution lvl2 = fixtures::level_two_solution();
  CHECK(lvl2.involutive);
  // a sigma family that yields no involutive solution is rejected
  std::vector<Perm> bad = id_family(2);
  bad[0] = groups::perm_from_cycles("(1 2)", 2);
  CHECK_THROWS_AS(from_sigma_involutive(bad), Error);
}

TEST_CASE("retraction") {
  Retraction rf = retraction(from_sigma_involutive(id_family(4)));
  CHECK(rf.solution.n == 1);
  Retraction r2 = retraction(fixtures::level_two_solution());
  CHECK(r2.solution.n == 2);
  CHECK(r2.class_of == std::vector<Idx>{0, 0, 0, 1});
  Retraction rr = retraction(fixtures::solution_from(fixtures::size4_reps()[1], 4));
  CHECK(rr.solution.n == 3);
  CHECK(rr.class_of == std::vector<Idx>{0, 0, 1, 2});
}

TEST_CASE("multipermutation levels") {
  CHECK(multipermutation_level(from_sigma_involutive(id_family(4))) == 1);
  CHECK(multipermutation_level(from_sigma_involutive(id_family(1))) == 1);
  CHECK(multipermutation_level(fixtures::level_two_solution()) == 2);
  CHECK(multipermutation_level(fixtures::cyclic_solution4()) == 1);
  CHECK(!multipermutation_level(fixtures::solution_from(fixtures::size4_reps()[2], 4)).has_value());
  CHECK(!multipermutation_level(fixtures::solution_from(fixtures::size4_reps()[3], 4)).has_value());
  // the level drops by one under retraction
  for (const Solution& s : enumerate_involutive(4)) {
    auto mp = multipermutation_level(s);
    if (mp && *mp >= 2) CHECK(multipermutation_level(retraction(s).solution) == *mp - 1);
  }
}

TEST_CASE("permutation groups") {
  CHECK(permutation_group(from_sigma_involutive(id_family(4))).order() == 1);
  groups::PermGroup pg = permutation_group(fixtures::cyclic_solution4());
  CHECK(pg.order() == 4);
  CHECK(groups::are_isomorphic(groups::group_from_permgroup(pg), groups::cyclic_group(4))
            .has_value());
  CHECK(permutation_group(fixtures::level_two_solution()).order() == 2);
  // for size-4 representative 3 the full permutation group is S4 while the
  // sigma maps generate a dihedral group of order 8
  Solution rep3 = fixtures::solution_from(fixtures::size4_reps()[2], 4);
  CHECK(permutation_group(rep3).order() == 24);
  CHECK(permutation_brace(rep3).n == 8);
}

TEST_CASE("permutation braces") {
  CHECK(permutation_brace(from_sigma_involutive(id_family(4))).n == 1);
  braces::SkewBrace cyc = permutation_brace(fixtures::cyclic_solution4());
  CHECK(cyc.n == 4);
  CHECK(cyc.is_trivial());
  CHECK(groups::are_isomorphic(cyc.add, groups::cyclic_group(4)).has_value());
  braces::SkewBrace b2 = permutation_brace(fixtures::solution_from(fixtures::size4_reps()[1], 4));
  CHECK(b2.n == 4);
  CHECK(!b2.is_trivial());
  CHECK(braces::is_right_nilpotent(b2));
  // non-involutive input is rejected
  std::vector<Perm> s12(2, groups::perm_from_cycles("(1 2)", 2));
  Solution ni = validate_solution(s12, id_family(2));
  try {
    permutation_brace(ni);
    FAIL("expected UnsupportedSolutionKind");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_solution_kind);
  }
}

TEST_CASE("multipermutation matches right nilpotency of the brace") {
  for (int n : {3, 4}) {
    for (const Solution& s : enumerate_involutive(n)) {
      braces::SkewBrace b = permutation_brace(s);
      bool rn = braces::is_right_nilpotent(b) &&
                groups::group_invariants(b.add).is_nilpotent;
      CHECK(multipermutation_level(s).has_value() == rn);
    }
  }
}

TEST_CASE("permutation isoclinism") {
  Solution flip4 = from_sigma_involutive(id_family(4));
  Solution flip5 = from_sigma_involutive(id_family(5));
  CHECK(are_permutation_isoclinic(flip4, flip5).has_value());
  Solution s54 = fixtures::solution_from(fixtures::size5_reps()[3], 5);
  Solution s43 = fixtures::solution_from(fixtures::size4_reps()[2], 4);
  CHECK(are_permutation_isoclinic(s54, s43).has_value());
  Solution s41 = from_sigma_involutive(id_family(4));
  CHECK(!are_permutation_isoclinic(s41, s43).has_value());
  // the level-two solution and the indecomposable cyclic solution both
  // collapse onto the flip class
  CHECK(are_permutation_isoclinic(fixtures::level_two_solution(), flip4).has_value());
  CHECK(are_permutation_isoclinic(fixtures::cyclic_solution4(), flip5).has_value());
  CHECK(is_indecomposable(fixtures::cyclic_solution4()));
  CHECK(!is_indecomposable(flip4));
}

TEST_CASE("enumeration counts with oracles") {
  CHECK(enumerate_involutive(1).size() == 1);
  std::vector<Solution> s2 = enumerate_involutive(2);
  CHECK(s2.size() == 2);
  for (int n : {2, 3}) {
    std::set<std::string> got;
    for (const Solution& s : enumerate_involutive(n)) got.insert(canonical_key(s));
    CHECK(got == oracles::brute_involutive_keys(n));
  }
  CHECK(enumerate_involutive(4).size() == 23);
}

TEST_CASE("reverse assignment order agrees") {
  for (int n : {3, 4}) {
    std::set<std::string> a, b;
    for (const Solution& s : enumerate_involutive(n, 0, false)) a.insert(canonical_key(s));
    for (const Solution& s : enumerate_involutive(n, 0, true)) b.insert(canonical_key(s));
    CHECK(a == b);
  }
}

TEST_CASE("size-4 classification") {
  std::vector<Solution> sols = enumerate_involutive(4);
  SolutionClassTable t = classify_solutions(sols);
  CHECK(t.classes.size() == 4);
  // the four listed representatives land in four distinct classes
  std::set<int> classes;
  for (const char* rep : fixtures::size4_reps()) {
    Solution r = fixtures::solution_from(rep, 4);
    braces::SkewBrace rb = permutation_brace(r);
    int found = -1;
    for (size_t c = 0; c < t.classes.size(); ++c)
      if (iso::are_isoclinic(rb, permutation_brace(sols[static_cast<size_t>(t.classes[c][0])])))
        found = static_cast<int>(c);
    REQUIRE(found >= 0);
    classes.insert(found);
  }
  CHECK(classes.size() == 4);
  // isoclinic solutions agree on being multipermutation
  for (const auto& cls : t.classes) {
    bool mp0 = multipermutation_level(sols[static_cast<size_t>(cls[0])]).has_value();
    for (int m : cls)
      CHECK(multipermutation_level(sols[static_cast<size_t>(m)]).has_value() == mp0);
  }
}

TEST_CASE("cycle notation parsing") {
  std::vector<Perm> sig = parse_sigma_line("s1=(3 4); s2=(1 3 2 4); s3=(1 4 2 3); s4=(1 2)", 4);
  CHECK(sig[0].img == std::vector<Idx>{0, 1, 3, 2});
  CHECK(sig[1].img == std::vector<Idx>{2, 3, 1, 0});
  std::vector<Perm> f = parse_sigma_line("flip", 4);
  for (const Perm& p : f) CHECK(p.is_identity());
  std::vector<Perm> partial = parse_sigma_line("s4=(2 3)", 4);
  CHECK(partial[0].is_identity());
  CHECK(!partial[3].is_identity());
  CHECK_THROWS_AS(parse_sigma_line("s9=(1 2)", 4), Error);
  CHECK_THROWS_AS(parse_sigma_line("nonsense", 4), Error);
  Solution rep2 = fixtures::solution_from(fixtures::size4_reps()[1], 4);
  std::vector<Perm> round = parse_sigma_line(format_sigma_line(rep2), 4);
  for (int x = 0; x < 4; ++x) CHECK(round[static_cast<size_t>(x)] == rep2.sigma[static_cast<size_t>(x)]);
}
