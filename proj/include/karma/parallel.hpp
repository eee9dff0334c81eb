// Thread-count control and the parallel-for primitive used by every kernel.
//
// The determinism contract: a kernel's output is a pure function of its
// inputs, never of the worker count. Kernels therefore only parallelize over
// disjoint output slots, each filled by serial inner arithmetic. Changing
// KARMA_BENCH_THREADS (or set_max_threads) changes timing, not bytes.
#pragma once

#include <cstdint>

namespace karma::par {

// 0 = auto (hardware concurrency). Thread-safe to read, set at startup.
void set_max_threads(int n);
int max_threads();

// Effective worker count for a loop of `n` items.
int workers_for(std::int64_t n);

// Reads KARMA_BENCH_THREADS; unset, empty or invalid means auto.
void init_from_env();

#if defined(_OPENMP)
template <class Fn>
void for_index(std::int64_t n, Fn&& fn) {
  const int nw = workers_for(n);
  if (nw <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(static) num_threads(nw)
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

// Dynamic scheduling for uneven per-item cost (tree growing). Output slots
// are still disjoint, so scheduling never affects results.
template <class Fn>
void for_index_dynamic(std::int64_t n, Fn&& fn) {
  const int nw = workers_for(n);
  if (nw <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(nw)
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}
#else
template <class Fn>
void for_index(std::int64_t n, Fn&& fn) {
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

template <class Fn>
void for_index_dynamic(std::int64_t n, Fn&& fn) {
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}
#endif

}  // namespace karma::par
