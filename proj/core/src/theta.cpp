#include "dml/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dml/constants.hpp"
#include "dml/error.hpp"
#include "dml/lfunc.hpp"
#include "dml/quadrature.hpp"
#include "dml/special.hpp"

namespace dml {

double theta_tail_bound(u64 q, int kappa, u64 n_last) {
  const double n = static_cast<double>(n_last);
  const double qd = static_cast<double>(q);
  const double lead = std::exp(-std::numbers::pi * n * n / qd);
  const double r = std::exp(-2.0 * std::numbers::pi * n / qd);
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double geometric = r / (1.0 - r);
  if (kappa == 0) return lead * geometric;
  return lead * (n * geometric + geometric / (1.0 - r));
}

ThetaValue theta_direct(const DirichletCharacter& chi, double eps) {
  if (!(eps > 0)) throw DomainError("theta_direct: eps must be positive");
  const u64 q = chi.q();
  const double qd = static_cast<double>(q);
  u64 n_last = static_cast<u64>(
      std::ceil(std::sqrt(qd * (std::log(1.0 / eps) + 5.0) / std::numbers::pi)));
  n_last = std::max<u64>(n_last, 1);
  while (theta_tail_bound(q, chi.kappa(), n_last) >= eps) ++n_last;

  cplx sum = 0;
  for (u64 n = 1; n <= n_last; ++n) {
    const auto k = chi.phase(static_cast<i64>(n));
    if (!k) continue;
    const double nd = static_cast<double>(n);
    double weight = std::exp(-std::numbers::pi * nd * nd / qd);
    if (chi.kappa() == 1) weight *= nd;
    sum += weight * chi.modulus().root_of_unity(*k);
  }
  return {sum, n_last, theta_tail_bound(q, chi.kappa(), n_last)};
}

namespace {

void check_mellin_input(const DirichletCharacter& chi, double c, double t_max) {
  if (!chi.is_primitive()) throw DomainError("theta_mellin: character must be primitive");
  if (!chi.is_even()) throw DomainError("theta_mellin: character must be even");
  if (chi.q() < 3) throw DomainError("theta_mellin: q must be at least 3");
  if (!(c > 0.5 || c == 0.25)) throw DomainError("theta_mellin: c must exceed 1/2 or equal 1/4");
  if (!(t_max > 0)) throw DomainError("theta_mellin: t_max must be positive");
}

}  // namespace

std::vector<MellinResult> theta_mellin_batch(std::span<const DirichletCharacter> chars, double c,
                                             double t_max, const MellinOptions& opt) {
  if (chars.empty()) return {};
  const u64 q = chars.front().q();
  for (const auto& chi : chars) {
    if (chi.q() != q) throw DomainError("theta_mellin: characters must share a modulus");
    check_mellin_input(chi, c, t_max);
  }
  const std::size_t dim = chars.size();
  const double log_ratio = std::log(static_cast<double>(q) / std::numbers::pi);
  double panel_max_l = 0;

  auto block = [&](const std::array<double, 15>& ts) {
    std::vector<cplx> out(15 * dim);
    for (std::size_t node = 0; node < 15; ++node) {
      const double t = ts[node];
      const LEvaluator evaluator(q, {2.0 * c, 2.0 * t});
      const cplx w{c, t};
      const cplx factor = std::exp(w * log_ratio + log_gamma(w)) / (2.0 * std::numbers::pi);
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx l = evaluator(chars[j]);
        panel_max_l = std::max(panel_max_l, std::abs(l));
        out[node * dim + j] = l * factor;
      }
    }
    return out;
  };

  const quad::PanelOptions popt{opt.abs_tol, opt.rel_tol, 12};
  std::vector<cplx> total(dim, cplx{0, 0});
  double error = 0;
  double reached = 0;
  const double envelope = std::exp(c * log_ratio) * std::exp(log_gamma(cplx{c, 0}).real()) /
                          (2.0 * std::numbers::pi);
  for (double lo = 0; lo < t_max; lo += 1.0) {
    const double hi = std::min(lo + 1.0, t_max);
    panel_max_l = 0;
    const auto upper = quad::integrate_panel<cplx>(block, dim, lo, hi, popt, &error);
    const auto lower = quad::integrate_panel<cplx>(block, dim, -hi, -lo, popt, &error);
    for (std::size_t j = 0; j < dim; ++j) total[j] += upper[j] + lower[j];
    reached = hi;
    const double tail = envelope * std::exp(-hi / 10.0) * panel_max_l;
    if (lo >= 1.0 && tail < opt.abs_tol) break;
  }

  std::vector<MellinResult> results;
  results.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) results.push_back({total[j], error, reached});
  return results;
}

MellinResult theta_mellin(const DirichletCharacter& chi, double c, double t_max,
                          const MellinOptions& opt) {
  return theta_mellin_batch(std::span<const DirichletCharacter>(&chi, 1), c, t_max, opt).front();
}

ThetaMoment theta_moment(u64 q, double k, Parity parity, double eps, const Exec& exec) {
  if (q < 3) throw DomainError("theta_moment: q must be at least 3");
  if (!(k >= 0)) throw DomainError("theta_moment: k must be nonnegative");
  const auto chars = primitive_characters(q, parity);
  const auto terms = parallel_map(chars.size(), exec, [&](std::size_t i) {
    return std::abs(theta_direct(chars[i], eps).value);
  });
  std::vector<double> powers(terms.size());
  u64 near_zero = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < constants::kZeroThreshold) {
      ++near_zero;
      powers[i] = 0;
    } else {
      powers[i] = std::pow(terms[i], 2.0 * k);
    }
  }
  return {q, k, parity, pairwise_sum(powers), chars.size(), near_zero, chars.empty()};
}

double theta_moment_bound(u64 q, double k, Parity parity) {
  const double qd = static_cast<double>(q);
  const double power = parity == Parity::even ? k / 2.0 : 1.5 * k;
  return static_cast<double>(euler_phi(q)) * std::pow(qd, power) *
         std::pow(std::log(qd), (k - 1.0) * (k - 1.0));
}

}  // namespace dml
