#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dml/characters.hpp"
#include "dml/parallel.hpp"

namespace dml {

/// f(x) = 1 on (0, y - T], linear down to 0 on [y - T, y], 0 beyond,
/// with T = y / (log y)^C.
class SmoothWeight {
 public:
  static SmoothWeight make(double y, double C);

  double y() const { return y_; }
  double C() const { return C_; }
  double T() const { return T_; }
  double y0() const { return y_ - T_; }
  double operator()(double x) const;

 private:
  SmoothWeight(double y, double C, double T) : y_(y), C_(C), T_(T) {}
  double y_;
  double C_;
  double T_;
};

/// sum_{1 <= n <= y} chi(n), using exact periodicity for y >= q.
cplx char_sum(const DirichletCharacter& chi, double y);

/// sum_n f(n) chi(n).
cplx weighted_char_sum(const DirichletCharacter& chi, const SmoothWeight& w);

/// int_0^inf f(x) x^{s-1} dx = (y^{s+1} - (y-T)^{s+1}) / (T s (s+1)).
cplx mellin_of_weight(const SmoothWeight& w, cplx s);

struct PerronResult {
  cplx value;
  double quadrature_error;
  bool incomplete;         // t_max = 0: nothing integrated
  bool principal_warning;  // principal character: the pole at s = 1 contributes
};

struct PerronOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
};

/// (1/2 pi) int_{-t_max}^{t_max} L(c + it, chi) mellin_of_weight(w, c + it) dt, c > 1.
PerronResult perron_weighted(const DirichletCharacter& chi, const SmoothWeight& w, double c, double t_max,
                             const PerronOptions& opt = {});

/// The same integral for every (character, weight) pair of one modulus,
/// sharing the Hurwitz tables at each node. Result [i * weights.size() + j].
std::vector<PerronResult> perron_weighted_batch(std::span<const DirichletCharacter> chars,
                                                std::span<const SmoothWeight> weights, double c, double t_max,
                                                const PerronOptions& opt = {});

struct PolyaResult {
  cplx approx;
  cplx exact;
  double residual;
};

/// tau(chi)/(2 pi i) sum_{1 <= |h| <= H} conj chi(h) (1 - e(-h/y)) / h against
/// sum_{n <= q/y} chi(n). chi primitive, H > 1 (default q), y >= 1.
PolyaResult polya_expansion(const DirichletCharacter& chi, double y, std::optional<double> H = std::nullopt);

/// S_k(q, y) = sum over primitive chi of |sum_{n <= y} chi(n)|^{2k}. q >= 3.
double char_sum_moment(u64 q, double k, double y, const Exec& exec = {});

/// phi(q) y^k (log y)^{(k-1)^2}.
double char_sum_bound(u64 q, double k, double y);
/// phi(q) y^k (log 2q/y)^{(k-1)^2}.
double char_sum_dual_bound(u64 q, double k, double y);

/// |sum_{n <= y} chi(n)| / ((y / sqrt q) |sum_{n <= q/y} conj chi(n)|); a
/// diagnostic, nothing is asserted about it.
double duality_ratio(const DirichletCharacter& chi, double y);

}  // namespace dml
