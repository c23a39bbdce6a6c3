#include "dml/lfunc.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "dml/constants.hpp"
#include "dml/error.hpp"
#include "dml/parallel.hpp"
#include "dml/special.hpp"

namespace dml {

namespace {

int term_count(EvalPoint s, const HurwitzOptions& opt) {
  return std::max(opt.min_terms, static_cast<int>(std::ceil(opt.t_factor * std::abs(s.t))));
}

}  // namespace

HurwitzResult hurwitz_zeta_detailed(EvalPoint s, double a, const HurwitzOptions& opt) {
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
  if (s.is_one()) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (opt.order < 1 || opt.order + 1 > static_cast<int>(kBernoulliEven.size()))
    throw DomainError("hurwitz_zeta: unsupported correction order");

  const cplx z = s.s();
  const int n_terms = term_count(s, opt);
  cplx direct = 0;
  for (int n = 0; n < n_terms; ++n) direct += std::exp(-z * std::log(n + a));

  const double x = n_terms + a;
  const double log_x = std::log(x);
  const cplx x_pow = std::exp(-z * log_x);  // x^{-s}
  cplx value = direct + x * x_pow / (z - 1.0) + 0.5 * x_pow;

  // B_2k / (2k)! * s (s+1) ... (s+2k-2) * x^{-s-2k+1}
  cplx rising = z;
  cplx power = x_pow / x;
  double factorial = 2.0;
  double estimate = 0;
  for (int k = 1; k <= opt.order + 1; ++k) {
    const cplx term = kBernoulliEven[k - 1] / factorial * rising * power;
    if (k <= opt.order) {
      value += term;
    } else {
      estimate = std::abs(term);
    }
    rising *= (z + (2.0 * k - 1.0)) * (z + 2.0 * k);
    power /= x * x;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return {value, estimate, n_terms};
}

cplx hurwitz_zeta(EvalPoint s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  return hurwitz_zeta_detailed(s, a).value;
}

double hurwitz_constant_at_one(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  return -digamma(a);
}

cplx zeta_value(EvalPoint s) { return hurwitz_zeta(s, 1.0); }

LEvaluator::LEvaluator(u64 q, EvalPoint s, const HurwitzOptions& opt)
    : q_(q), point_(s), table_(q + 1, cplx{0, 0}) {
  if (q == 0) throw DomainError("LEvaluator: q must be positive");
  scale_ = std::exp(-s.s() * std::log(static_cast<double>(q)));
  for (u64 a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const double shift = static_cast<double>(a) / static_cast<double>(q);
    table_[a] = s.is_one() ? cplx{hurwitz_constant_at_one(shift), 0.0}
                           : hurwitz_zeta_detailed(s, shift, opt).value;
  }
}

cplx LEvaluator::operator()(const DirichletCharacter& chi) const {
  if (chi.q() != q_) throw DomainError("LEvaluator: character modulus mismatch");
  if (point_.is_one() && chi.is_principal()) throw PoleError("L_value: principal character at s = 1");
  std::vector<cplx> terms;
  terms.reserve(q_);
  for (u64 a = 1; a <= q_; ++a) {
    const auto k = chi.phase(static_cast<i64>(a));
    if (k) terms.push_back(chi.modulus().root_of_unity(*k) * table_[a]);
  }
  return scale_ * pairwise_sum(terms);
}

cplx L_value(EvalPoint s, const DirichletCharacter& chi) {
  if (!(s.sigma > -1.0)) throw DomainError("L_value: sigma must exceed -1");
  return LEvaluator(chi.q(), s)(chi);
}

cplx completed_L(EvalPoint s, const DirichletCharacter& chi, cplx l_value) {
  if (!chi.is_primitive()) throw DomainError("completed_L: character must be primitive");
  if (std::abs(s.t) > kGammaTCap) throw DomainError("completed_L: |t| exceeds Gamma cap");
  const cplx w = (s.s() + static_cast<double>(chi.kappa())) / 2.0;
  const double log_ratio = std::log(static_cast<double>(chi.q()) / std::numbers::pi);
  return std::exp(w * log_ratio + log_gamma(w)) * l_value;
}

cplx completed_L(EvalPoint s, const DirichletCharacter& chi) {
  return completed_L(s, chi, L_value(s, chi));
}

cplx root_number(const DirichletCharacter& chi) {
  const cplx i_kappa = chi.kappa() == 0 ? cplx{1, 0} : cplx{0, 1};
  return gauss_sum(chi) / (i_kappa * std::sqrt(static_cast<double>(chi.q())));
}

double functional_equation_residual(EvalPoint s, const DirichletCharacter& chi) {
  const cplx left = completed_L(s, chi);
  const cplx right = root_number(chi) * completed_L(s.reflected(), chi.conjugate());
  return std::abs(left - right) / std::max(std::abs(left), 1e-300);
}

LogAbsL log_abs_from_value(cplx l_value) {
  const double magnitude = std::abs(l_value);
  if (magnitude < constants::kZeroThreshold) return {std::nullopt, magnitude, true};
  return {std::log(magnitude), magnitude, false};
}

LogAbsL log_abs_L(EvalPoint s, const DirichletCharacter& chi) {
  return log_abs_from_value(L_value(s, chi));
}

}  // namespace dml
