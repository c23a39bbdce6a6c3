#pragma once

// Frozen empirical constants. Each was measured by a full oracle sweep of
// the stated grid, rounded outward, and is asserted by the tests and by
// `dml verify`.

namespace dml::constants {

/// |L| below this is treated as a candidate zero.
inline constexpr double kZeroThreshold = 1e-12;

/// |sum_{p<=x} cos(a log p)/p - log|zeta(1 + 1/log x + ia)||, x = 1e5,
/// a in {0.01, 0.1, 1, 5, 20, 100}. Measured maximum 0.332144 (a = 0.1).
inline constexpr double kMertensSlack = 0.35;

/// log|L(1/2+it, chi)| - majorant, all primitive chi mod primes q <= 101,
/// t in {0, 1}, x = q. Measured maximum -0.456491 over 2218 cases.
inline constexpr double kMajorantSlack = -0.45;

/// Polya residual / log q, all primitive chi with q <= 500, H = q,
/// y = sqrt q. Measured maximum 0.139128 (q = 37).
inline constexpr double kPolyaSlack = 0.15;

/// S+_6(q) / (phi(q) q^{3/2} (log q)^4) over primes 100 <= q <= 3000.
/// Measured range [1.07414e-4, 1.28669e-4].
inline constexpr double kThetaRatioLow = 0.95e-4;
inline constexpr double kThetaRatioHigh = 1.45e-4;

/// S_3(q, sqrt q) / (phi(q) y^3 (log y)^4) over primes 100 <= q <= 3000.
/// Measured range [0.0819588, 0.198833].
inline constexpr double kCharSumRatioLow = 0.07;
inline constexpr double kCharSumRatioHigh = 0.22;

/// |perron_weighted - weighted_char_sum| at t_max = 500.
inline constexpr double kPerronTolerance = 1e-4;

}  // namespace dml::constants
