#pragma once

#include <cstdint>
#include <vector>

namespace dml {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  int exponent;
  u64 value;  // prime^exponent
};

/// Trial-division factorization, primes ascending.
std::vector<PrimePower> factorize(u64 n);

u64 euler_phi(u64 n);
int mobius(u64 n);

/// All positive divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Multiplicative order of a modulo m; a must be a unit mod m.
u64 multiplicative_order(u64 a, u64 m);

/// Least primitive root modulo p^e for an odd prime p.
u64 least_primitive_root(u64 p, int e);

/// Residue class of n modulo m in [0, m).
constexpr u64 residue(i64 n, u64 m) {
  const i64 r = n % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

bool is_prime(u64 n);

}  // namespace dml
