#pragma once

#include <array>
#include <complex>

namespace dml {

using cplx = std::complex<double>;

/// Even-index Bernoulli numbers B_2, B_4, ..., B_26.
inline constexpr std::array<double, 13> kBernoulliEven = {
    1.0 / 6.0,           -1.0 / 30.0,        1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,          -691.0 / 2730.0,    7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,     -174611.0 / 330.0,  854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

/// A logarithm of Gamma(z) (branch unspecified; exp() of it is Gamma).
/// 15-term Lanczos sum with g = 607/128, reflection for Re z < 1/2.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

/// Digamma psi(x) for real x > 0.
double digamma(double x);

}  // namespace dml
