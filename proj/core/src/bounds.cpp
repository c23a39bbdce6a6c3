#include "dml/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dml/error.hpp"
#include "dml/parallel.hpp"
#include "dml/sieve.hpp"

namespace dml {

double ShiftConfig::a_total() const { return std::accumulate(a.begin(), a.end(), 0.0) + 10.0; }

void ShiftConfig::validate() const {
  if (a.empty()) throw DomainError("shift config: exponent list is empty");
  if (a.size() != t.size()) throw DomainError("shift config: exponent and shift lists differ in length");
  for (double v : a)
    if (!(v > 0)) throw DomainError("shift config: exponents must be positive");
  for (double v : t)
    if (!std::isfinite(v)) throw DomainError("shift config: shifts must be finite");
  if (!(A > 0)) throw DomainError("shift config: A must be positive");
}

cplx h_value(const ShiftConfig& cfg, u64 n) {
  if (n < 2) throw DomainError("h_value: n must be at least 2");
  const double log_n = std::log(static_cast<double>(n));
  cplx sum = 0;
  for (std::size_t j = 0; j < cfg.a.size(); ++j) sum += cfg.a[j] * std::polar(1.0, -cfg.t[j] * log_n);
  return 0.5 * sum;
}

namespace {

double three_case(double x, double scale_log) {
  // x >= e^scale is tested as log x >= scale.
  const double scale = std::exp(scale_log);
  const bool beyond = x > 0 && std::log(x) >= scale;
  if (x <= 1.0 / scale_log || beyond) return scale_log;
  if (x <= 10.0) return 1.0 / x;
  return std::log(std::log(x));
}

}  // namespace

double correlation_g(double x, double q) {
  if (!(q >= 3)) throw DomainError("correlation_g: q must be at least 3");
  if (!(x >= 0)) throw DomainError("correlation_g: x must be nonnegative");
  return three_case(x, std::log(q));
}

double correlation_g_star(double x, double y) {
  if (!(y >= 2)) throw DomainError("correlation_g_star: y must be at least 2");
  if (!(x >= 0)) throw DomainError("correlation_g_star: x must be nonnegative");
  return three_case(x, std::log(y));
}

double mertens_cos_sum(double x, double alpha) {
  if (!(x >= 2)) throw DomainError("mertens_cos_sum: x must be at least 2");
  if (x > static_cast<double>(kSieveCap)) throw SieveCapacityError("mertens_cos_sum: x exceeds sieve cap");
  const auto table = shared_primes(static_cast<u64>(x));
  const auto primes = table->primes_up_to(x);
  std::vector<double> terms(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double p = primes[i];
    terms[i] = std::cos(alpha * std::log(p)) / p;
  }
  return pairwise_sum(terms);
}

namespace {

void check_majorant_range(const DirichletCharacter& chi, double x) {
  if (!(x >= 2)) throw DomainError("majorant: x must be at least 2");
  if (x > static_cast<double>(chi.q())) throw DomainError("majorant: x must not exceed q");
}

}  // namespace

double sound_majorant(const DirichletCharacter& chi, double t, double x, std::optional<double> y) {
  check_majorant_range(chi, x);
  if (y && !(*y >= 2)) throw DomainError("majorant: y must be at least 2");
  const double log_x = std::log(x);
  double sigma0 = 0.5 + 1.0 / log_x;
  if (y) sigma0 = 0.5 + std::max(1.0 / std::log(*y), 1.0 / log_x);

  const auto table = shared_primes(static_cast<u64>(x));
  std::vector<double> terms;
  for (const std::uint32_t p : table->primes_up_to(x)) {
    // n = p^k contributes Lambda(n)/log n = 1/k.
    double n = p;
    for (int k = 1; n <= x; ++k, n *= p) {
      const auto phase = chi.phase(static_cast<i64>(std::llround(n)));
      if (!phase) break;
      const double log_n = std::log(n);
      const cplx value = chi.modulus().root_of_unity(*phase) *
                         std::exp(-cplx{sigma0, t} * log_n) / static_cast<double>(k);
      terms.push_back(value.real() * std::log(x / n) / log_x);
    }
  }
  const double log_plus_t = std::abs(t) > 1.0 ? std::log(std::abs(t)) : 0.0;
  return pairwise_sum(terms) + (std::log(static_cast<double>(chi.q())) + log_plus_t) / log_x;
}

PrimeSquareSplit prime_square_split(const DirichletCharacter& chi, const ShiftConfig& cfg, double x) {
  cfg.validate();
  check_majorant_range(chi, x);
  const double log_x = std::log(x);
  const double sigma0 = 0.5 + 1.0 / log_x;
  const auto table = shared_primes(static_cast<u64>(x));

  std::vector<double> linear_terms;
  for (const std::uint32_t p : table->primes_up_to(x)) {
    const cplx chi_p = chi(p);
    if (chi_p == cplx{0, 0}) continue;
    const double pd = p;
    const cplx term = h_value(cfg, p) * chi_p * std::pow(pd, -sigma0);
    linear_terms.push_back(2.0 * term.real() * std::log(x / pd) / log_x);
  }
  std::vector<double> square_terms;
  for (const std::uint32_t p : table->primes_up_to(std::sqrt(x))) {
    const u64 p2 = static_cast<u64>(p) * p;
    const cplx chi_p2 = chi(static_cast<i64>(p2));
    if (chi_p2 == cplx{0, 0}) continue;
    square_terms.push_back((h_value(cfg, p2) * chi_p2).real() / p);
  }
  const double error = (cfg.A + 1.0) * cfg.a_total() * std::log(static_cast<double>(chi.q())) / log_x;
  return {pairwise_sum(linear_terms), pairwise_sum(square_terms), error};
}

std::string to_string(LadderMode mode) { return mode == LadderMode::paper ? "paper" : "demo"; }

LadderMode parse_ladder_mode(const std::string& text) {
  if (text == "paper") return LadderMode::paper;
  if (text == "demo") return LadderMode::demo;
  throw DomainError("unknown ladder mode '" + text + "'");
}

double DyadicLadder::threshold(std::size_t i) const { return std::pow(beta(i), -0.75); }

DyadicLadder dyadic_ladder(u64 q, const ShiftConfig& cfg, LadderMode mode, double threshold) {
  cfg.validate();
  const double loglog = std::log(std::log(static_cast<double>(q)));
  if (!(q >= 3 && loglog > 1.0)) throw DomainError("dyadic_ladder: log log q must exceed 1");
  if (mode == LadderMode::demo && !(threshold > 0)) throw DomainError("dyadic_ladder: threshold must be positive");
  const double a = cfg.a_total();
  const double cap = mode == LadderMode::paper ? std::exp(-10000.0 * a * a * (cfg.A + 1.0)) : threshold;

  auto beta = [&](std::size_t i) { return i == 0 ? 0.0 : std::pow(20.0, static_cast<double>(i) - 1.0) / (loglog * loglog); };
  std::size_t last = 0;
  while (beta(last + 1) <= cap) ++last;
  DyadicLadder ladder{q, mode, cap, {}, last + 1, last == 0};
  for (std::size_t i = 0; i <= ladder.cap_index; ++i) ladder.betas.push_back(beta(i));
  return ladder;
}

cplx segment_G(const DirichletCharacter& chi, std::size_t i, std::size_t j, const DyadicLadder& ladder,
               const ShiftConfig& cfg) {
  if (!(1 <= i && i <= j && j <= ladder.cap_index)) throw DomainError("segment_G: need 1 <= i <= j <= I");
  const double log_q = std::log(static_cast<double>(ladder.q));
  const double lo = std::exp(ladder.beta(i - 1) * log_q);
  const double hi = std::exp(ladder.beta(i) * log_q);
  const double log_x = ladder.beta(j) * log_q;  // log q^{beta_j}
  if (hi > static_cast<double>(kSieveCap)) throw SieveCapacityError("segment_G: prime range exceeds sieve cap");
  const double sigma = 0.5 + 1.0 / log_x;
  const auto table = shared_primes(static_cast<u64>(std::max(hi, 2.0)));
  std::vector<cplx> terms;
  for (const std::uint32_t p : table->primes_between(lo, hi)) {
    const cplx chi_p = chi(p);
    if (chi_p == cplx{0, 0}) continue;
    const double log_p = std::log(static_cast<double>(p));
    terms.push_back(chi_p * h_value(cfg, p) * std::exp(-sigma * log_p) * (log_x - log_p) / log_x);
  }
  return pairwise_sum(terms);
}

std::string ClassLabel::name() const { return kind == Kind::T ? "T" : "S(" + std::to_string(j) + ")"; }

ClassLabel classify_character(const DirichletCharacter& chi, const DyadicLadder& ladder, const ShiftConfig& cfg) {
  const std::size_t top = ladder.cap_index;
  ClassLabel label{ClassLabel::Kind::T, 0, 0, {}};
  // G[(i, l)] stored for 1 <= i <= l <= I.
  std::vector<std::vector<cplx>> grid(top + 1);
  for (std::size_t i = 1; i <= top; ++i) {
    grid[i].assign(top + 1, cplx{0, 0});
    for (std::size_t l = i; l <= top; ++l) {
      grid[i][l] = segment_G(chi, i, l, ladder, cfg);
      label.segments.push_back(grid[i][l]);
    }
  }
  auto violates = [&](std::size_t i, std::size_t l) { return std::abs(grid[i][l].real()) > ladder.threshold(i); };

  bool in_T = true;
  for (std::size_t i = 1; i <= top; ++i) in_T = in_T && !violates(i, top);
  if (in_T) return label;

  // The first i with a violation at some l >= i fixes j = i - 1.
  for (std::size_t i = 1; i <= top; ++i) {
    for (std::size_t l = i; l <= top; ++l) {
      if (violates(i, l)) {
        label.kind = ClassLabel::Kind::S;
        label.j = i - 1;
        label.witness = l;
        return label;
      }
    }
  }
  return label;
}

double log_predicted_bound_B(u64 q, const ShiftConfig& cfg) {
  cfg.validate();
  if (q < 3) throw DomainError("predicted_bound_B: q must be at least 3");
  const double log_q = std::log(static_cast<double>(q));
  double sum_sq = 0;
  for (double v : cfg.a) sum_sq += v * v;
  double result = std::log(static_cast<double>(euler_phi(q))) + sum_sq / 4.0 * std::log(log_q);
  for (std::size_t i = 0; i < cfg.a.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.a.size(); ++j)
      result += cfg.a[i] * cfg.a[j] / 2.0 * std::log(correlation_g(std::abs(cfg.t[i] - cfg.t[j]), static_cast<double>(q)));
  return result;
}

double predicted_bound_B(u64 q, const ShiftConfig& cfg) { return std::exp(log_predicted_bound_B(q, cfg)); }

double log_predicted_bound_g_star(u64 q, double y, const ShiftConfig& cfg) {
  cfg.validate();
  const double log_y = std::log(y);
  double sum_sq = 0;
  for (double v : cfg.a) sum_sq += v * v;
  double result = std::log(static_cast<double>(euler_phi(q))) + sum_sq / 4.0 * std::log(log_y);
  for (std::size_t i = 0; i < cfg.a.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.a.size(); ++j)
      result += cfg.a[i] * cfg.a[j] / 2.0 * std::log(correlation_g_star(std::abs(cfg.t[i] - cfg.t[j]), y));
  return result;
}

namespace {

u64 factorial(u64 n) {
  u64 r = 1;
  for (u64 i = 2; i <= n; ++i) r *= i;
  return r;
}

u64 binomial(u64 n, u64 k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Depth-first enumeration of ordered tuples over `candidates`, consuming
// prime multiplicities from `remaining`; with signs, also tracks the net
// exponent of each prime, which must end at zero.
struct TupleCounter {
  std::size_t length;
  bool signed_tuples;
  std::vector<int> remaining;
  std::vector<int> net;
  u64 count = 0;

  void run(std::size_t pos) {
    if (pos == length) {
      if (!signed_tuples || std::all_of(net.begin(), net.end(), [](int v) { return v == 0; })) ++count;
      return;
    }
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      if (signed_tuples) {
        for (int sign : {1, -1}) {
          net[c] += sign;
          if (std::abs(net[c]) <= remaining[c]) run(pos + 1);
          net[c] -= sign;
        }
      } else {
        run(pos + 1);
      }
      ++remaining[c];
    }
  }
};

}  // namespace

FactorizationCounts count_signed_factorizations(const std::vector<u64>& primes) {
  if (primes.empty() || primes.size() > 6) throw DomainError("count_signed_factorizations: need 1 to 6 primes");
  std::map<u64, int> alpha;
  for (u64 p : primes) {
    if (!is_prime(p)) throw DomainError("count_signed_factorizations: entries must be prime");
    ++alpha[p];
  }
  const u64 largest = alpha.rbegin()->first;
  // Every prime up to the largest is a candidate; those absent from the
  // multiset start with multiplicity zero and are never placed.
  std::vector<int> pairs_mult, signed_mult;
  for (u64 c = 2; c <= largest; ++c) {
    if (!is_prime(c)) continue;
    const auto it = alpha.find(c);
    const int a = it == alpha.end() ? 0 : it->second;
    pairs_mult.push_back(a);
    signed_mult.push_back(2 * a);
  }
  const std::size_t m = primes.size();
  TupleCounter pairs{m, false, pairs_mult, std::vector<int>(pairs_mult.size(), 0)};
  pairs.run(0);
  TupleCounter signs{2 * m, true, signed_mult, std::vector<int>(signed_mult.size(), 0)};
  signs.run(0);

  u64 formula_pairs = factorial(m);
  u64 formula_signed = factorial(2 * m);
  for (const auto& [p, a] : alpha) {
    formula_pairs /= factorial(a);
    formula_signed /= factorial(2 * a);
  }
  for (const auto& [p, a] : alpha) formula_signed *= binomial(2 * a, a);
  return {pairs.count, signs.count, formula_pairs, formula_signed};
}

}  // namespace dml
