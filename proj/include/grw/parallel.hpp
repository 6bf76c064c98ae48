#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace grw {

// Worker count for the OpenMP kernels; 0 leaves the runtime default.
void set_num_workers(int n);
int num_workers();

// Runs `scan(i)` for i in [0, n) across workers and returns the smallest i
// whose scan produced a value, together with that value. Rows above the
// current best are skipped, so the answer equals the serial first hit
// regardless of schedule.
template <class T, class Scan>
std::optional<std::pair<std::size_t, T>> first_hit(std::size_t n, Scan&& scan) {
  std::vector<std::optional<T>> hits(n);
  std::atomic<long> best{static_cast<long>(n)};
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    hits[i] = scan(static_cast<std::size_t>(i));
    if (hits[i]) {
      long cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const long b = best.load();
  if (b == static_cast<long>(n)) return std::nullopt;
  return std::pair{static_cast<std::size_t>(b), std::move(*hits[b])};
}

// Runs `collect(i, out_i)` for every row and concatenates in row order.
template <class T, class Collect>
std::vector<T> collect_rows(std::size_t n, Collect&& collect) {
  std::vector<std::vector<T>> rows(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) collect(static_cast<std::size_t>(i), rows[i]);
  std::vector<T> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace grw
