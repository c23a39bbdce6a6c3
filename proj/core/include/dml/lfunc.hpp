#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dml/characters.hpp"

namespace dml {

/// s = sigma + i t.
struct EvalPoint {
  double sigma = 0;
  double t = 0;

  cplx s() const { return {sigma, t}; }
  static EvalPoint from(cplx s) { return {s.real(), s.imag()}; }
  EvalPoint reflected() const { return {1.0 - sigma, -t}; }
  bool is_one() const { return sigma == 1.0 && t == 0.0; }
};

/// Euler-Maclaurin parameters: N = max(min_terms, ceil(t_factor |t|))
/// direct terms followed by `order` Bernoulli corrections.
struct HurwitzOptions {
  int min_terms = 30;
  double t_factor = 3.0;
  int order = 12;
};

struct HurwitzResult {
  cplx value;
  double error_estimate;  // magnitude of the first omitted correction
  int terms;
};

/// Accepts any a > 0.
HurwitzResult hurwitz_zeta_detailed(EvalPoint s, double a, const HurwitzOptions& opt = {});

/// zeta(s, a) for a in (0, 1], s != 1.
cplx hurwitz_zeta(EvalPoint s, double a);

/// Constant term of zeta(s, a) at s = 1, i.e. -psi(a).
double hurwitz_constant_at_one(double a);

cplx zeta_value(EvalPoint s);

/// Hurwitz values zeta(s, a/q), a = 1..q coprime to q, computed once and
/// shared by every character modulo q.
class LEvaluator {
 public:
  LEvaluator(u64 q, EvalPoint s, const HurwitzOptions& opt = {});

  u64 q() const { return q_; }
  EvalPoint point() const { return point_; }
  /// L(s, chi) for a character modulo q().
  cplx operator()(const DirichletCharacter& chi) const;

 private:
  u64 q_;
  EvalPoint point_;
  cplx scale_;               // q^{-s}
  std::vector<cplx> table_;  // index a, zero when gcd(a, q) > 1
};

/// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q). Requires sigma > -1.
cplx L_value(EvalPoint s, const DirichletCharacter& chi);

/// Largest |t| accepted by completed_L before the Gamma factor is refused.
inline constexpr double kGammaTCap = 500.0;

/// Lambda(s, chi) = (q/pi)^{(s+kappa)/2} Gamma((s+kappa)/2) L(s, chi),
/// chi primitive.
cplx completed_L(EvalPoint s, const DirichletCharacter& chi);
/// Same, reusing an L value already computed at s.
cplx completed_L(EvalPoint s, const DirichletCharacter& chi, cplx l_value);

/// Root number tau(chi) / (i^kappa sqrt q).
cplx root_number(const DirichletCharacter& chi);

/// |Lambda(s, chi) - eps(chi) Lambda(1 - s, conj chi)| / max(|Lambda(s, chi)|, 1e-300).
double functional_equation_residual(EvalPoint s, const DirichletCharacter& chi);

struct LogAbsL {
  std::optional<double> value;  // empty when |L| is below the zero threshold
  double abs_value;
  bool near_zero;
};

LogAbsL log_abs_L(EvalPoint s, const DirichletCharacter& chi);
LogAbsL log_abs_from_value(cplx l_value);

}  // namespace dml
