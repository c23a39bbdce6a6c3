#include "dml/sums.hpp"

#include <cmath>
#include <numbers>

#include "dml/error.hpp"
#include "dml/lfunc.hpp"
#include "dml/quadrature.hpp"

namespace dml {

SmoothWeight SmoothWeight::make(double y, double C) {
  if (!(y >= 2)) throw DomainError("smooth weight: y must be at least 2");
  if (!(C > 0)) throw DomainError("smooth weight: C must be positive");
  const double T = y / std::pow(std::log(y), C);
  if (!(T > 0 && T <= y)) throw DomainError("smooth weight: T = y/(log y)^C must lie in (0, y]");
  return SmoothWeight(y, C, T);
}

double SmoothWeight::operator()(double x) const {
  if (x <= 0 || x >= y_) return 0.0;
  if (x <= y0()) return 1.0;
  return (y_ - x) / T_;
}

cplx char_sum(const DirichletCharacter& chi, double y) {
  if (!(y >= 0)) throw DomainError("char_sum: y must be nonnegative");
  const u64 q = chi.q();
  const u64 last = static_cast<u64>(std::floor(y));
  const u64 periods = last / q;
  cplx sum = chi.is_principal() ? cplx{static_cast<double>(periods * chi.modulus().phi()), 0} : cplx{0, 0};
  for (u64 n = 1; n <= last % q; ++n) {
    const auto k = chi.phase(static_cast<i64>(n));
    if (k) sum += chi.modulus().root_of_unity(*k);
  }
  return sum;
}

cplx weighted_char_sum(const DirichletCharacter& chi, const SmoothWeight& w) {
  cplx sum = 0;
  const u64 last = static_cast<u64>(std::floor(w.y()));
  for (u64 n = 1; n <= last; ++n) {
    const double f = w(static_cast<double>(n));
    if (f == 0) continue;
    const auto k = chi.phase(static_cast<i64>(n));
    if (k) sum += f * chi.modulus().root_of_unity(*k);
  }
  return sum;
}

cplx mellin_of_weight(const SmoothWeight& w, cplx s) {
  if (s == cplx{0, 0} || s == cplx{-1, 0}) throw PoleError("mellin_of_weight: pole at s = 0 or s = -1");
  const cplx e = s + 1.0;
  const cplx top = std::exp(e * std::log(w.y()));
  const cplx bottom = w.y0() > 0 ? std::exp(e * std::log(w.y0())) : cplx{0, 0};
  return (top - bottom) / (w.T() * s * e);
}

std::vector<PerronResult> perron_weighted_batch(std::span<const DirichletCharacter> chars,
                                                std::span<const SmoothWeight> weights, double c, double t_max,
                                                const PerronOptions& opt) {
  if (!(c > 1)) throw DomainError("perron_weighted: c must exceed 1");
  if (!(t_max >= 0)) throw DomainError("perron_weighted: t_max must be nonnegative");
  if (chars.empty() || weights.empty()) return {};
  const u64 q = chars.front().q();
  for (const auto& chi : chars)
    if (chi.q() != q) throw DomainError("perron_weighted: characters must share a modulus");

  const std::size_t nw = weights.size();
  const std::size_t dim = chars.size() * nw;
  std::vector<PerronResult> results(dim);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < nw; ++j)
      results[i * nw + j] = {cplx{0, 0}, 0.0, t_max == 0, chars[i].is_principal()};
  if (t_max == 0) return results;

  std::vector<DirichletCharacter> conjugates;
  conjugates.reserve(chars.size());
  for (const auto& chi : chars) conjugates.push_back(chi.conjugate());

  // The integrand at -t for chi is the conjugate of the integrand at t for
  // conj chi, so only t >= 0 is sampled.
  auto block = [&](const std::array<double, 15>& ts) {
    std::vector<cplx> out(15 * dim);
    for (std::size_t node = 0; node < 15; ++node) {
      const EvalPoint s{c, ts[node]};
      const LEvaluator evaluator(q, s);
      std::vector<cplx> mellin(nw);
      for (std::size_t j = 0; j < nw; ++j) mellin[j] = mellin_of_weight(weights[j], s.s());
      for (std::size_t i = 0; i < chars.size(); ++i) {
        const cplx l = evaluator(chars[i]);
        const cplx l_conj = evaluator(conjugates[i]);
        for (std::size_t j = 0; j < nw; ++j)
          out[node * dim + i * nw + j] = (l * mellin[j] + std::conj(l_conj * mellin[j])) / (2.0 * std::numbers::pi);
      }
    }
    return out;
  };

  const quad::PanelOptions popt{opt.abs_tol, opt.rel_tol, 12};
  std::vector<cplx> total(dim, cplx{0, 0});
  double error = 0;
  for (double lo = 0; lo < t_max; lo += 1.0) {
    const auto panel = quad::integrate_panel<cplx>(block, dim, lo, std::min(lo + 1.0, t_max), popt, &error);
    for (std::size_t d = 0; d < dim; ++d) total[d] += panel[d];
  }
  for (std::size_t d = 0; d < dim; ++d) {
    results[d].value = total[d];
    results[d].quadrature_error = error;
  }
  return results;
}

PerronResult perron_weighted(const DirichletCharacter& chi, const SmoothWeight& w, double c, double t_max,
                             const PerronOptions& opt) {
  return perron_weighted_batch(std::span<const DirichletCharacter>(&chi, 1), std::span<const SmoothWeight>(&w, 1), c,
                               t_max, opt)
      .front();
}

PolyaResult polya_expansion(const DirichletCharacter& chi, double y, std::optional<double> H) {
  if (!chi.is_primitive()) throw DomainError("polya_expansion: character must be primitive");
  if (!(y >= 1)) throw DomainError("polya_expansion: y must be at least 1");
  const u64 q = chi.q();
  const double cutoff = H.value_or(static_cast<double>(q));
  if (!(cutoff > 1)) throw DomainError("polya_expansion: H must exceed 1");

  const u64 h_max = static_cast<u64>(std::floor(cutoff));
  std::vector<cplx> terms;
  terms.reserve(2 * h_max);
  for (u64 h = 1; h <= h_max; ++h) {
    for (const i64 signed_h : {static_cast<i64>(h), -static_cast<i64>(h)}) {
      const cplx value = chi(signed_h);
      if (value == cplx{0, 0}) continue;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(signed_h) / y;
      terms.push_back(std::conj(value) * (1.0 - std::polar(1.0, angle)) / static_cast<double>(signed_h));
    }
  }
  const cplx approx = gauss_sum(chi) / cplx{0, 2.0 * std::numbers::pi} * pairwise_sum(terms);
  const cplx exact = char_sum(chi, static_cast<double>(q) / y);
  return {approx, exact, std::abs(exact - approx)};
}

double char_sum_moment(u64 q, double k, double y, const Exec& exec) {
  if (q < 3) throw DomainError("char_sum_moment: q must be at least 3");
  if (!(k > 0)) throw DomainError("char_sum_moment: k must be positive");
  const auto chars = primitive_characters(q);
  const auto terms = parallel_map(chars.size(), exec, [&](std::size_t i) {
    return std::pow(std::abs(char_sum(chars[i], y)), 2.0 * k);
  });
  return pairwise_sum(terms);
}

double char_sum_bound(u64 q, double k, double y) {
  return static_cast<double>(euler_phi(q)) * std::pow(y, k) * std::pow(std::log(y), (k - 1.0) * (k - 1.0));
}

double char_sum_dual_bound(u64 q, double k, double y) {
  const double log_term = std::log(2.0 * static_cast<double>(q) / y);
  return static_cast<double>(euler_phi(q)) * std::pow(y, k) * std::pow(log_term, (k - 1.0) * (k - 1.0));
}

double duality_ratio(const DirichletCharacter& chi, double y) {
  const double q = static_cast<double>(chi.q());
  const double dual = std::abs(char_sum(chi.conjugate(), q / y)) * y / std::sqrt(q);
  return std::abs(char_sum(chi, y)) / dual;
}

}  // namespace dml
