#include "dml/arith.hpp"

#include <algorithm>
#include <numeric>

#include "dml/error.hpp"

namespace dml {

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  if (n == 0) throw DomainError("factorize: n must be positive");
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (const auto& pp : factorize(n)) phi *= pp.value / pp.prime * (pp.prime - 1);
  return phi;
}

int mobius(u64 n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = divs.size();
    u64 power = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (std::gcd(a, m) != 1) throw DomainError("multiplicative_order: not a unit");
  if (m == 1) return 1;
  u64 order = euler_phi(m);
  for (const auto& pp : factorize(order)) {
    for (int e = 0; e < pp.exponent; ++e) {
      if (pow_mod(a, order / pp.prime, m) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

u64 least_primitive_root(u64 p, int e) {
  if (p == 2) throw DomainError("least_primitive_root: p must be odd");
  u64 modulus = 1;
  for (int i = 0; i < e; ++i) modulus *= p;
  const u64 phi = modulus / p * (p - 1);
  const auto phi_factors = factorize(phi);
  for (u64 g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    const bool generates = std::all_of(phi_factors.begin(), phi_factors.end(),
        [&](const PrimePower& r) { return pow_mod(g, phi / r.prime, modulus) != 1; });
    if (generates) return g;
  }
  throw DomainError("least_primitive_root: none found");
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace dml
