#include "karma/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace karma::par {

namespace {
std::atomic<int> g_max_threads{0};

int hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}
}  // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  const int n = g_max_threads.load();
  return n == 0 ? hardware_threads() : n;
}

int workers_for(std::int64_t n) {
  if (n <= 1) return 1;
  const int cap = max_threads();
  return n < cap ? static_cast<int>(n) : cap;
}

void init_from_env() {
  const char* v = std::getenv("KARMA_BENCH_THREADS");
  if (v == nullptr || *v == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 0) return;
  set_max_threads(static_cast<int>(n));
}

}  // namespace karma::par
