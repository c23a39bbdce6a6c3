#pragma once

// Deterministic parallel evaluation. Work items are computed into slots
// indexed by item number and reduced with a fixed pairwise tree, so the
// floating-point result does not depend on the number of workers.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace dml {

struct Exec {
  unsigned threads = 1;
};

/// Calls fn(i) for i in [0, n) on exec.threads workers with a strided
/// partition. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, const Exec& exec, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, exec.threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <class Fn>
auto parallel_map(std::size_t n, const Exec& exec, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  std::vector<std::invoke_result_t<Fn&, std::size_t>> out(n);
  parallel_for(n, exec, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

/// Pairwise (tree) summation with leaves of at most 8 terms.
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.size() <= 8) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

}  // namespace dml
