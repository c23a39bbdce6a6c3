#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dml/bounds.hpp"
#include "dml/characters.hpp"
#include "dml/parallel.hpp"

namespace dml {

struct ShiftedMoment {
  double value;
  u64 count;                          // primitive characters summed over
  std::vector<u64> near_zero_indices;  // characters with a factor |L| below the zero threshold
};

/// sum over primitive chi of prod_j |L(1/2 + offset + i t_j, chi)|^{a_j}.
/// Requires |t_j| <= q^A and offset >= 0. Candidate zeros contribute 0.
ShiftedMoment shifted_moment(u64 q, const ShiftConfig& cfg, double sigma_offset = 0.0, const Exec& exec = {});

enum class BoundSelector { eq5, g_star, thm2, thm3, thm3_dual, prop31 };

std::string to_string(BoundSelector selector);
BoundSelector parse_bound_selector(const std::string& text);

enum class YMode { sqrt_q, fixed };

struct ScanOptions {
  BoundSelector selector = BoundSelector::eq5;
  ShiftConfig cfg{{1.0, 1.0}, {0.0, 0.0}, 1.0};
  double k = 3.0;                  // thm2, thm3, thm3_dual, prop31
  Parity parity = Parity::even;    // thm2
  YMode y_mode = YMode::sqrt_q;    // g_star, thm3, thm3_dual, prop31
  double y_fixed = 2.0;
  double prop31_t = 0.0;           // shift for prop31
  double l0_exponent = 4.0;        // prop31: phi(q) L0^exponent
  double eps = 1e-12;              // thm2 theta truncation
};

struct MomentReport {
  u64 q;
  std::string config;
  double sigma_offset;
  double y;  // 0 when the selector has no y
  double empirical;
  double predicted;
  double ratio;
  u64 near_zero;
  double runtime_ms;
};

/// One report per q, in input order.
std::vector<MomentReport> moment_ratio_scan(const std::vector<u64>& qs, const ScanOptions& opt, const Exec& exec = {});

/// Primes in [lo, hi].
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace dml
