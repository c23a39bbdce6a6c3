#include "dml/special.hpp"

#include <cmath>
#include <numbers>

#include "dml/error.hpp"

namespace dml {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

cplx log_gamma_right(cplx z) {
  // Re z >= 1/2.
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (z + static_cast<double>(k));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(pi z) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  const cplx w = std::numbers::pi * z;
  const cplx i{0.0, 1.0};
  if (std::abs(w.imag()) < 20) return std::log(std::sin(w));
  if (w.imag() > 0) return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw PoleError("gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double digamma(double x) {
  if (!(x > 0)) throw DomainError("digamma: x must be positive");
  double acc = 0;
  while (x < 10) {
    acc -= 1 / x;
    x += 1;
  }
  // Asymptotic series: log x - 1/(2x) - sum B_2k / (2k x^2k).
  const double inv2 = 1 / (x * x);
  double power = inv2;
  double tail = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    tail += kBernoulliEven[k] / (2.0 * static_cast<double>(k + 1)) * power;
    power *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - tail;
}

}  // namespace dml
