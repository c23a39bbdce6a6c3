#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dml/characters.hpp"
#include "dml/parallel.hpp"

namespace dml {

struct ThetaValue {
  cplx value;
  u64 truncation_n;   // last summed index
  double tail_bound;  // certified bound on the omitted terms
};

/// Gaussian tail bound for sum_{n > n_last} n^kappa e^{-pi n^2 / q}.
double theta_tail_bound(u64 q, int kappa, u64 n_last);

/// theta(1, chi) = sum_n chi(n) n^kappa e^{-pi n^2 / q}, truncated once the
/// certified tail is below eps.
ThetaValue theta_direct(const DirichletCharacter& chi, double eps = 1e-12);

struct MellinOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
};

struct MellinResult {
  cplx value;
  double quadrature_error;
  double t_reached;  // upper end of the last integrated panel
};

/// theta(1, chi) as (1/2 pi) int_{-t_max}^{t_max} L(2c + 2it, chi) (q/pi)^{c+it}
/// Gamma(c + it) dt on unit Gauss-Kronrod panels. chi must be even and
/// primitive, c > 1/2 or c = 1/4, t_max > 0.
MellinResult theta_mellin(const DirichletCharacter& chi, double c, double t_max,
                          const MellinOptions& opt = {});

/// Same contour for several even primitive characters of one modulus,
/// sharing the Hurwitz tables at every node.
std::vector<MellinResult> theta_mellin_batch(std::span<const DirichletCharacter> chars, double c,
                                             double t_max, const MellinOptions& opt = {});

struct ThetaMoment {
  u64 q;
  double k;
  Parity parity;
  double moment;       // sum of |theta(1, chi)|^{2k}
  u64 count;           // primitive characters of the parity
  u64 near_zero;       // characters with |theta| below the zero threshold
  bool empty_class;
};

/// S_{2k}^{+/-}(q) over primitive characters of the given parity. q >= 3.
ThetaMoment theta_moment(u64 q, double k, Parity parity, double eps = 1e-12, const Exec& exec = {});

/// phi(q) q^{k/2} (log q)^{(k-1)^2} for even, q^{3k/2} in place of q^{k/2} for odd.
double theta_moment_bound(u64 q, double k, Parity parity);

}  // namespace dml
