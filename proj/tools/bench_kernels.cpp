// Compares the serial reference paths (jobs = 1) against the OpenMP paths for
// the three parallel kernels and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "skewbrace/census.hpp"
#include "skewbrace/parallel.hpp"
#include "skewbrace/ybe.hpp"

using namespace sb;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = par::hardware_jobs();
  bool with27 = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--order27") with27 = true;
    if (a.rfind("--jobs=", 0) == 0) jobs = std::stoi(a.substr(7));
  }
  std::printf("parallel jobs: %d\n", jobs);
  std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    groups::PermGroup hol = groups::holomorph(groups::abelian_group({2, 2, 2}));
    std::vector<groups::PermGroup> s, p;
    double ts = run_ms([&] { s = groups::regular_subgroups(hol, 8, groups::RegFusion::raw, 1); });
    double tp = run_ms([&] { p = groups::regular_subgroups(hol, 8, groups::RegFusion::raw, jobs); });
    bool eq = s.size() == p.size();
    for (size_t i = 0; eq && i < s.size(); ++i) eq = s[i].elements == p[i].elements;
    row("regular_subgroups Hol(C2^3)", ts, tp, eq);
  }
  {
    std::vector<census::BraceRecord> s, p;
    census::EnumerateOptions o1, oj;
    o1.jobs = 1;
    oj.jobs = jobs;
    double ts = run_ms([&] { s = census::enumerate_braces(8, o1); });
    double tp = run_ms([&] { p = census::enumerate_braces(8, oj); });
    bool eq = s.size() == p.size();
    for (size_t i = 0; eq && i < s.size(); ++i) eq = s[i].id == p[i].id;
    row("census order 8", ts, tp, eq);

    census::ClassifyResult cs, cp;
    double cs_t = run_ms([&] { cs = census::classify_census(s, census::Filter::all, 1); });
    double cp_t = run_ms([&] { cp = census::classify_census(p, census::Filter::all, jobs); });
    bool ceq = cs.classes.size() == cp.classes.size();
    for (size_t i = 0; ceq && i < cs.classes.size(); ++i)
      ceq = cs.classes[i].member_ids == cp.classes[i].member_ids;
    row("classify order 8 (all)", cs_t, cp_t, ceq);
  }
  {
    std::vector<ybe::Solution> s, p;
    double ts = run_ms([&] { s = ybe::enumerate_involutive(5, 1); });
    double tp = run_ms([&] { p = ybe::enumerate_involutive(5, jobs); });
    bool eq = s.size() == p.size();
    for (size_t i = 0; eq && i < s.size(); ++i) eq = ybe::canonical_key(s[i]) == ybe::canonical_key(p[i]);
    row("ybe enumerate size 5", ts, tp, eq);
  }
  if (with27) {
    groups::PermGroup hol = groups::holomorph(groups::abelian_group({3, 3, 3}));
    std::vector<groups::PermGroup> s, p;
    double ts = run_ms([&] { s = groups::regular_subgroups(hol, 27, groups::RegFusion::by_stabilizer0, 1); });
    double tp = run_ms([&] { p = groups::regular_subgroups(hol, 27, groups::RegFusion::by_stabilizer0, jobs); });
    bool eq = s.size() == p.size();
    for (size_t i = 0; eq && i < s.size(); ++i) eq = s[i].elements == p[i].elements;
    row("regular_subgroups Hol(C3^3)", ts, tp, eq);
  }
  return 0;
}
