#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dml/arith.hpp"

namespace dml {

using cplx = std::complex<double>;

enum class Parity { even, odd };

std::string to_string(Parity parity);
Parity parse_parity(const std::string& text);

/// One cyclic factor of (Z/qZ)^*. Odd prime powers contribute one factor
/// generated by their least primitive root; 2^e contributes -1 (order 2,
/// e >= 2) and 5 (order 2^(e-2), e >= 3).
struct CyclicFactor {
  u64 prime;
  u64 prime_power;      // modulus of the local component
  u64 local_generator;  // generator modulo prime_power
  u64 generator;        // CRT lift: local_generator mod prime_power, 1 elsewhere
  u64 order;
};

/// The unit group modulo q with exact discrete-log tables.
class Modulus {
 public:
  explicit Modulus(u64 q);
  static std::shared_ptr<const Modulus> make(u64 q);

  u64 q() const { return q_; }
  u64 phi() const { return phi_; }
  /// Exponent of the group: lcm of the cyclic factor orders.
  u64 exponent() const { return exponent_; }
  std::span<const PrimePower> factorization() const { return factorization_; }
  std::span<const CyclicFactor> factors() const { return factors_; }

  /// Discrete-log coordinates of n (one per cyclic factor), or nothing
  /// when gcd(n, q) > 1.
  std::optional<std::span<const std::uint32_t>> logs(i64 n) const;

  /// e(k / exponent()) with exact values on the axes.
  cplx root_of_unity(u64 k) const { return roots_[k % exponent_]; }

 private:
  u64 q_;
  u64 phi_;
  u64 exponent_;
  std::vector<PrimePower> factorization_;
  std::vector<CyclicFactor> factors_;
  std::vector<std::uint32_t> log_table_;  // q * factors, kNotUnit when not coprime
  std::vector<cplx> roots_;
};

/// A character modulo q stored as exponents over the cyclic factors:
/// chi(g_j) = e(exponent_j / order_j).
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const Modulus> modulus, std::vector<u64> exponents);

  const Modulus& modulus() const { return *modulus_; }
  const std::shared_ptr<const Modulus>& modulus_ptr() const { return modulus_; }
  u64 q() const { return modulus_->q(); }
  std::span<const u64> exponents() const { return exponents_; }

  /// Position in enumerate_characters(q) order (mixed radix, factor 0 fastest).
  u64 index() const;
  int kappa() const { return kappa_; }
  bool is_even() const { return kappa_ == 0; }
  bool is_odd() const { return kappa_ == 1; }
  Parity parity() const { return kappa_ == 0 ? Parity::even : Parity::odd; }
  u64 conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q(); }
  bool is_principal() const;
  bool is_real() const;
  u64 order() const;

  /// k with chi(n) = e(k / modulus().exponent()), or nothing if gcd(n, q) > 1.
  std::optional<u64> phase(i64 n) const;
  cplx operator()(i64 n) const;
  DirichletCharacter conjugate() const;

  /// chi(0), chi(1), ..., chi(q - 1).
  std::vector<cplx> values() const;

 private:
  std::shared_ptr<const Modulus> modulus_;
  std::vector<u64> exponents_;
  std::vector<u64> weights_;  // exponent_j * (exponent / order_j) mod exponent
  int kappa_ = 0;
  u64 conductor_ = 1;
};

struct ConductorInfo {
  u64 conductor;
  bool primitive;
};

/// All phi(q) characters, index 0 the principal one.
std::vector<DirichletCharacter> enumerate_characters(u64 q);
std::vector<DirichletCharacter> enumerate_characters(const std::shared_ptr<const Modulus>& modulus);

/// Primitive characters, optionally restricted to one parity.
std::vector<DirichletCharacter> primitive_characters(u64 q, std::optional<Parity> parity = {});

cplx eval_character(const DirichletCharacter& chi, i64 n);

/// Conductor from the local structure of each cyclic factor.
ConductorInfo conductor_and_primitivity(const DirichletCharacter& chi);

/// Smallest d | q such that chi is trivial on units congruent to 1 mod d,
/// found by direct search over the divisors.
u64 conductor_by_induction(const DirichletCharacter& chi);

/// sum_{d | q} mu(d) phi(q / d).
i64 primitive_count_formula(u64 q);

/// tau(chi) = sum_{n=1}^{q} chi(n) e(n / q).
cplx gauss_sum(const DirichletCharacter& chi);

}  // namespace dml
