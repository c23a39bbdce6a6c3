#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dml/arith.hpp"

namespace dml {

inline constexpr u64 kSieveCap = 100'000'000;

/// Primes up to a fixed limit, produced by a segmented sieve of
/// Eratosthenes. Immutable once built.
class PrimeTable {
 public:
  explicit PrimeTable(u64 limit);
  PrimeTable(u64 limit, std::vector<std::uint32_t> primes);

  u64 limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// Primes p <= x; x must not exceed limit().
  std::span<const std::uint32_t> primes_up_to(double x) const;
  /// Primes lo < p <= hi.
  std::span<const std::uint32_t> primes_between(double lo, double hi) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> primes_;
};

/// Segmented sieve over [2, limit] with the given segment length in bytes.
std::vector<std::uint32_t> segmented_sieve(u64 limit, std::size_t segment_bytes = 1 << 18);

/// Process-wide table covering at least `limit`, built once and shared
/// read-only. Throws SieveCapacityError above kSieveCap. When the
/// DML_SIEVE_CACHE environment variable names a directory, tables are
/// loaded from / saved to it.
std::shared_ptr<const PrimeTable> shared_primes(u64 limit);

}  // namespace dml
