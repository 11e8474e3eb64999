// Verification sweeps: run an indexed batch of independent checks and
// collect failures. Two interchangeable drivers — a plain serial loop (the
// reference) and an OpenMP one — produce identical results; the parallel
// driver buckets failures per thread and merges them back into index order.
#ifndef BRAUER_SWEEP_HPP
#define BRAUER_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace brauer {

struct SweepResult {
  std::size_t cases = 0;
  // (case index, failure description), sorted by index.
  std::vector<std::pair<std::size_t, std::string>> failures;

  bool ok() const { return failures.empty(); }
};

// fn(i) -> std::optional<std::string>: nullopt on pass, a description on
// failure. fn must not throw.
template <typename Fn>
SweepResult sweep_serial(std::size_t count, Fn&& fn) {
  SweepResult result;
  result.cases = count;
  for (std::size_t i = 0; i < count; ++i)
    if (auto failure = fn(i)) result.failures.emplace_back(i, *failure);
  return result;
}

template <typename Fn>
SweepResult sweep_parallel(std::size_t count, Fn&& fn) {
#ifndef _OPENMP
  return sweep_serial(count, std::forward<Fn>(fn));
#else
  SweepResult result;
  result.cases = count;
  std::vector<std::vector<std::pair<std::size_t, std::string>>> buckets(
      omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    if (auto failure = fn(static_cast<std::size_t>(i)))
      buckets[omp_get_thread_num()].emplace_back(
          static_cast<std::size_t>(i), *failure);
  }
  for (auto& bucket : buckets)
    result.failures.insert(result.failures.end(),
                           std::make_move_iterator(bucket.begin()),
                           std::make_move_iterator(bucket.end()));
  std::sort(result.failures.begin(), result.failures.end());
  return result;
#endif
}

}  // namespace brauer

#endif  // BRAUER_SWEEP_HPP
