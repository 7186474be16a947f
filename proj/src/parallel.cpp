#include <algorithm>
#include <atomic>
#include <thread>

#include "skewbrace/parallel.hpp"

namespace sb::par {

namespace {
std::atomic<int> g_jobs{0};
}

int hardware_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

int jobs() {
  int j = g_jobs.load();
  return j > 0 ? j : hardware_jobs();
}

void set_jobs(int n) { g_jobs.store(std::max(0, n)); }

int effective(int requested) { return requested > 0 ? requested : jobs(); }

}  // namespace sb::par
