#pragma once

// Subset-scan kernels. Every brute-force oracle in the library walks all
// 2^n masks of a small carrier; these are the only loops worth running in
// parallel. The serial versions are the reference the parallel ones are
// tested against, and both return identical, ascending results.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace finloc {

enum class Execution { serial, parallel };

namespace serial {

/// Every mask in [0, 2^n) satisfying pred, ascending.
template <class Pred>
std::vector<std::uint64_t> filter_subsets(int n, Pred&& pred) {
  std::vector<std::uint64_t> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m)
    if (pred(m)) out.push_back(m);
  return out;
}

/// Smallest mask on which holds() is false.
template <class Pred>
std::optional<std::uint64_t> first_failing_subset(int n, Pred&& holds) {
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m)
    if (!holds(m)) return m;
  return std::nullopt;
}

/// f(i) for i in [0, count), results in index order.
template <class R, class F>
std::vector<R> map_indices(int count, F&& f) {
  std::vector<R> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace parallel {

inline constexpr int kChunkBits = 10;

template <class Pred>
std::vector<std::uint64_t> filter_subsets(int n, Pred&& pred) {
  if (n <= kChunkBits) return serial::filter_subsets(n, pred);
  const std::int64_t chunks = std::int64_t{1} << (n - kChunkBits);
  std::vector<std::vector<std::uint64_t>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) << kChunkBits;
    const std::uint64_t hi = lo + (std::uint64_t{1} << kChunkBits);
    for (std::uint64_t m = lo; m < hi; ++m)
      if (pred(m)) parts[c].push_back(m);
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

template <class Pred>
std::optional<std::uint64_t> first_failing_subset(int n, Pred&& holds) {
  if (n <= kChunkBits) return serial::first_failing_subset(n, holds);
  const std::int64_t chunks = std::int64_t{1} << (n - kChunkBits);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) << kChunkBits;
    const std::uint64_t hi = lo + (std::uint64_t{1} << kChunkBits);
    if (lo >= best) continue;
    for (std::uint64_t m = lo; m < hi; ++m)
      if (!holds(m)) {
        best = std::min(best, m);
        break;
      }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

template <class R, class F>
std::vector<R> map_indices(int count, F&& f) {
  std::vector<std::optional<R>> slots(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) slots[i].emplace(f(i));
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace parallel

template <class Pred>
std::vector<std::uint64_t> filter_subsets(int n, Pred&& pred, Execution exec) {
  return exec == Execution::parallel ? parallel::filter_subsets(n, pred)
                                     : serial::filter_subsets(n, pred);
}

template <class Pred>
std::optional<std::uint64_t> first_failing_subset(int n, Pred&& holds, Execution exec) {
  return exec == Execution::parallel ? parallel::first_failing_subset(n, holds)
                                     : serial::first_failing_subset(n, holds);
}

template <class R, class F>
std::vector<R> map_indices(int count, F&& f, Execution exec) {
  return exec == Execution::parallel ? parallel::map_indices<R>(count, f)
                                     : serial::map_indices<R>(count, f);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace finloc
