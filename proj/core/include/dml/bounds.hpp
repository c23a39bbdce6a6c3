#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dml/characters.hpp"

namespace dml {

/// Exponents a_1..a_{2k}, shifts t_1..t_{2k} and the growth parameter A.
struct ShiftConfig {
  std::vector<double> a;
  std::vector<double> t;
  double A = 1.0;

  std::size_t two_k() const { return a.size(); }
  /// a_1 + ... + a_{2k} + 10.
  double a_total() const;
  /// Throws DomainError unless the lists are nonempty, equally long, a_j > 0, A > 0.
  void validate() const;
};

/// h(n) = (a_1 n^{-it_1} + ... + a_{2k} n^{-it_{2k}}) / 2.
cplx h_value(const ShiftConfig& cfg, u64 n);

/// Three-case correlation factor with scale log q; first matching case wins.
double correlation_g(double x, double q);
/// Same with log y in place of log q.
double correlation_g_star(double x, double y);

/// sum_{p <= x} cos(alpha log p) / p.
double mertens_cos_sum(double x, double alpha);

/// Re sum_{n <= x} Lambda(n) chi(n) / (n^{sigma0 + it} log n) * log(x/n)/log x
/// + (log q + log+ |t|) / log x, with sigma0 = 1/2 + 1/log x, or
/// 1/2 + max(1/log y, 1/log x) when y is given. Requires 2 <= x <= q.
double sound_majorant(const DirichletCharacter& chi, double t, double x,
                      std::optional<double> y = std::nullopt);

struct PrimeSquareSplit {
  double linear;
  double square;
  double error;
  double total() const { return linear + square + error; }
};

/// The linear prime sum, the prime-square sum and (A+1) a log q / log x.
PrimeSquareSplit prime_square_split(const DirichletCharacter& chi, const ShiftConfig& cfg, double x);

enum class LadderMode { paper, demo };

std::string to_string(LadderMode mode);
LadderMode parse_ladder_mode(const std::string& text);

inline constexpr double kDemoThreshold = 0.05;

/// beta_0 = 0, beta_i = 20^{i-1} / (log log q)^2, cap index
/// I = 1 + max{i >= 0 : beta_i <= cap}.
struct DyadicLadder {
  u64 q;
  LadderMode mode;
  double cap;                  // e^{-10000 a^2 (A+1)} or the demo threshold
  std::vector<double> betas;   // beta_0 .. beta_I
  std::size_t cap_index;       // I
  bool degenerate;             // no beta_i with i >= 1 lies below the cap

  double beta(std::size_t i) const { return betas.at(i); }
  /// beta_i^{-3/4}.
  double threshold(std::size_t i) const;
};

DyadicLadder dyadic_ladder(u64 q, const ShiftConfig& cfg, LadderMode mode = LadderMode::demo,
                           double threshold = kDemoThreshold);

/// G_{(i,j)}(chi): primes q^{beta_{i-1}} < p <= q^{beta_i} weighted at x = q^{beta_j}.
cplx segment_G(const DirichletCharacter& chi, std::size_t i, std::size_t j,
               const DyadicLadder& ladder, const ShiftConfig& cfg);

struct ClassLabel {
  enum class Kind { T, S };
  Kind kind;
  std::size_t j = 0;        // S(j)
  std::size_t witness = 0;  // smallest l with |Re G_{(j+1,l)}| above threshold
  std::vector<cplx> segments;  // G_{(i,l)} for 1 <= i <= l <= I, row-major by i

  std::string name() const;
};

ClassLabel classify_character(const DirichletCharacter& chi, const DyadicLadder& ladder,
                              const ShiftConfig& cfg);

/// phi(q) (log q)^{sum a_j^2 / 4} prod_{i<j} g(|t_i - t_j|)^{a_i a_j / 2}.
double predicted_bound_B(u64 q, const ShiftConfig& cfg);
double log_predicted_bound_B(u64 q, const ShiftConfig& cfg);
/// The same shape with log y and g* in place of log q and g.
double log_predicted_bound_g_star(u64 q, double y, const ShiftConfig& cfg);

struct FactorizationCounts {
  u64 brute_pairs;     // #{(q_1..q_m) : prod q_i = prod p_i}
  u64 brute_signed;    // #{(q_1..q_2m, delta) : prod q_i = prod p_i^2, prod q_i^delta_i = 1}
  u64 formula_pairs;   // m! / prod alpha_i!
  u64 formula_signed;  // (2m)! / prod (2 alpha_i)! * prod C(2 alpha_i, alpha_i)
};

/// Brute-force and closed-form counts for a multiset of at most 6 primes.
FactorizationCounts count_signed_factorizations(const std::vector<u64>& primes);

}  // namespace dml
