#include "dml/characters.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "dml/error.hpp"
#include "dml/parallel.hpp"

namespace dml {

namespace {

constexpr std::uint32_t kNotUnit = std::numeric_limits<std::uint32_t>::max();

u64 crt_lift(u64 local, u64 prime_power, u64 q) {
  const u64 rest = q / prime_power;
  for (u64 k = 0; k < prime_power; ++k) {
    const u64 x = 1 + k * rest;  // always 1 modulo the other factors
    if (x % prime_power == local % prime_power) return x % q;
  }
  throw DomainError("crt_lift: no lift");
}

// e(num / den), exact on multiples of 1/8.
cplx unit_root(u64 num, u64 den) {
  num %= den;
  if ((8 * num) % den == 0) {
    static constexpr double h = std::numbers::sqrt2 / 2;
    static const cplx octants[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    return octants[8 * num / den];
  }
  // Reduce to (-1/2, 1/2] before scaling to keep the argument small.
  const double frac = (2 * num > den) ? -static_cast<double>(den - num) / static_cast<double>(den)
                                      : static_cast<double>(num) / static_cast<double>(den);
  const double angle = 2 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw DomainError("parity must be 'even' or 'odd', got '" + text + "'");
}

Modulus::Modulus(u64 q) : q_(q) {
  if (q == 0) throw DomainError("modulus must be positive");
  if (q > (u64{1} << 31)) throw DomainError("modulus too large for exact tables");
  factorization_ = factorize(q);
  phi_ = euler_phi(q);

  // Local discrete-log tables, one per cyclic factor, indexed by residue
  // modulo the factor's prime power.
  std::vector<std::vector<std::uint32_t>> local_logs;
  for (const auto& pp : factorization_) {
    if (pp.prime != 2) {
      const u64 g = least_primitive_root(pp.prime, pp.exponent);
      const u64 order = pp.value / pp.prime * (pp.prime - 1);
      std::vector<std::uint32_t> table(pp.value, kNotUnit);
      u64 x = 1;
      for (u64 k = 0; k < order; ++k) {
        table[x] = static_cast<std::uint32_t>(k);
        x = x * g % pp.value;
      }
      factors_.push_back({pp.prime, pp.value, g, crt_lift(g, pp.value, q), order});
      local_logs.push_back(std::move(table));
      continue;
    }
    if (pp.exponent == 1) continue;
    // -1 component.
    std::vector<std::uint32_t> sign(pp.value, kNotUnit);
    for (u64 r = 1; r < pp.value; r += 2) sign[r] = (r % 4 == 3) ? 1 : 0;
    factors_.push_back({2, pp.value, pp.value - 1, crt_lift(pp.value - 1, pp.value, q), 2});
    local_logs.push_back(std::move(sign));
    if (pp.exponent == 2) continue;
    // 5 component: r = (+-1) * 5^b.
    const u64 order = pp.value / 4;
    std::vector<std::uint32_t> five(pp.value, kNotUnit);
    u64 x = 1;
    for (u64 b = 0; b < order; ++b) {
      five[x] = static_cast<std::uint32_t>(b);
      five[pp.value - x] = static_cast<std::uint32_t>(b);
      x = x * 5 % pp.value;
    }
    factors_.push_back({2, pp.value, 5, crt_lift(5, pp.value, q), order});
    local_logs.push_back(std::move(five));
  }

  exponent_ = 1;
  for (const auto& f : factors_) exponent_ = std::lcm(exponent_, f.order);

  const std::size_t r = factors_.size();
  log_table_.assign(q * std::max<std::size_t>(r, 1), kNotUnit);
  for (u64 n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    if (r == 0) {
      log_table_[n] = 0;
      continue;
    }
    for (std::size_t j = 0; j < r; ++j)
      log_table_[n * r + j] = local_logs[j][n % factors_[j].prime_power];
  }

  roots_.resize(exponent_);
  for (u64 k = 0; k < exponent_; ++k) roots_[k] = unit_root(k, exponent_);
}

std::shared_ptr<const Modulus> Modulus::make(u64 q) { return std::make_shared<const Modulus>(q); }

std::optional<std::span<const std::uint32_t>> Modulus::logs(i64 n) const {
  const u64 r = residue(n, q_);
  const std::size_t width = factors_.size();
  if (width == 0) {
    if (log_table_[r] == kNotUnit) return std::nullopt;
    return std::span<const std::uint32_t>{};
  }
  if (log_table_[r * width] == kNotUnit) return std::nullopt;
  return std::span<const std::uint32_t>(log_table_.data() + r * width, width);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const Modulus> modulus, std::vector<u64> exponents)
    : modulus_(std::move(modulus)), exponents_(std::move(exponents)) {
  const auto factors = modulus_->factors();
  if (exponents_.size() != factors.size())
    throw DomainError("character needs one exponent per cyclic factor");
  const u64 L = modulus_->exponent();
  weights_.resize(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    exponents_[j] %= factors[j].order;
    weights_[j] = exponents_[j] * (L / factors[j].order) % L;
  }
  const auto minus_one = phase(-1);
  kappa_ = (minus_one && *minus_one != 0) ? 1 : 0;
  conductor_ = conductor_and_primitivity(*this).conductor;
}

u64 DirichletCharacter::index() const {
  u64 idx = 0;
  u64 stride = 1;
  const auto factors = modulus_->factors();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    idx += exponents_[j] * stride;
    stride *= factors[j].order;
  }
  return idx;
}

bool DirichletCharacter::is_principal() const {
  for (const u64 e : exponents_)
    if (e != 0) return false;
  return true;
}

bool DirichletCharacter::is_real() const {
  const auto factors = modulus_->factors();
  for (std::size_t j = 0; j < factors.size(); ++j)
    if ((2 * exponents_[j]) % factors[j].order != 0) return false;
  return true;
}

u64 DirichletCharacter::order() const {
  u64 ord = 1;
  const auto factors = modulus_->factors();
  for (std::size_t j = 0; j < factors.size(); ++j)
    ord = std::lcm(ord, factors[j].order / std::gcd(exponents_[j], factors[j].order));
  return ord;
}

std::optional<u64> DirichletCharacter::phase(i64 n) const {
  const auto logs = modulus_->logs(n);
  if (!logs) return std::nullopt;
  const u64 L = modulus_->exponent();
  u64 k = 0;
  for (std::size_t j = 0; j < weights_.size(); ++j) k = (k + weights_[j] * (*logs)[j]) % L;
  return k;
}

cplx DirichletCharacter::operator()(i64 n) const {
  const auto k = phase(n);
  return k ? modulus_->root_of_unity(*k) : cplx{0.0, 0.0};
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<u64> conj(exponents_.size());
  const auto factors = modulus_->factors();
  for (std::size_t j = 0; j < conj.size(); ++j)
    conj[j] = (factors[j].order - exponents_[j]) % factors[j].order;
  return DirichletCharacter(modulus_, std::move(conj));
}

std::vector<cplx> DirichletCharacter::values() const {
  std::vector<cplx> out(q());
  for (u64 n = 0; n < q(); ++n) out[n] = (*this)(static_cast<i64>(n));
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(const std::shared_ptr<const Modulus>& modulus) {
  const auto factors = modulus->factors();
  std::vector<DirichletCharacter> out;
  out.reserve(modulus->phi());
  for (u64 idx = 0; idx < modulus->phi(); ++idx) {
    std::vector<u64> exps(factors.size());
    u64 rest = idx;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      exps[j] = rest % factors[j].order;
      rest /= factors[j].order;
    }
    out.emplace_back(modulus, std::move(exps));
  }
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(u64 q) {
  if (q == 0) throw DomainError("--q must be at least 1");
  return enumerate_characters(Modulus::make(q));
}

std::vector<DirichletCharacter> primitive_characters(u64 q, std::optional<Parity> parity) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(q)) {
    if (!chi.is_primitive()) continue;
    if (parity && chi.parity() != *parity) continue;
    out.push_back(std::move(chi));
  }
  return out;
}

cplx eval_character(const DirichletCharacter& chi, i64 n) { return chi(n); }

ConductorInfo conductor_and_primitivity(const DirichletCharacter& chi) {
  const Modulus& m = chi.modulus();
  const auto factors = m.factors();
  const auto exps = chi.exponents();
  u64 conductor = 1;
  std::size_t j = 0;
  for (const auto& pp : m.factorization()) {
    if (pp.prime != 2) {
      const u64 order = factors[j].order / std::gcd(exps[j], factors[j].order);
      ++j;
      if (order == 1) continue;
      u64 local = pp.prime;
      for (u64 o = order; o % pp.prime == 0; o /= pp.prime) local *= pp.prime;
      conductor *= local;
      continue;
    }
    if (pp.exponent == 1) continue;
    const bool sign = exps[j] != 0;
    ++j;
    if (pp.exponent == 2) {
      if (sign) conductor *= 4;
      continue;
    }
    const u64 five_order = factors[j].order / std::gcd(exps[j], factors[j].order);
    ++j;
    if (five_order == 1) {
      if (sign) conductor *= 4;
    } else {
      conductor *= 4 * five_order;
    }
  }
  return {conductor, conductor == m.q()};
}

u64 conductor_by_induction(const DirichletCharacter& chi) {
  const u64 q = chi.q();
  for (const u64 d : divisors(q)) {
    bool induced = true;
    for (u64 n = 1 + d; n < q && induced; n += d) {
      const auto k = chi.phase(static_cast<i64>(n));
      if (k && *k != 0) induced = false;
    }
    if (induced) return d;
  }
  return q;
}

i64 primitive_count_formula(u64 q) {
  i64 total = 0;
  for (const u64 d : divisors(q)) total += mobius(d) * static_cast<i64>(euler_phi(q / d));
  return total;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  const u64 q = chi.q();
  const u64 L = chi.modulus().exponent();
  std::vector<cplx> terms;
  terms.reserve(q);
  for (u64 n = 1; n <= q; ++n) {
    const auto k = chi.phase(static_cast<i64>(n));
    if (!k) continue;
    // chi(n) e(n/q) = e((k q + n L) / (L q)).
    terms.push_back(unit_root((*k * q + n * L) % (L * q), L * q));
  }
  return pairwise_sum(terms);
}

}  // namespace dml
