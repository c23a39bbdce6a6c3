#pragma once

// Gauss-Kronrod (7, 15) panels over vector-valued integrands. Panels are
// refined by bisection until the Kronrod/Gauss difference of every
// component is within tolerance, so all components share one node set.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dml::quad {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

/// The 15 abscissae of a panel [a, b], in a fixed order.
inline std::array<double, 15> panel_nodes(double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> x{};
  for (std::size_t k = 0; k < 7; ++k) {
    x[2 * k] = mid - half * kKronrodNodes[k];
    x[2 * k + 1] = mid + half * kKronrodNodes[k];
  }
  x[14] = mid;
  return x;
}

struct PanelOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  int max_depth = 12;
};

/// Integrates f over [a, b] where f(xs) returns, for the 15 nodes xs,
/// a row-major block values[node * dim + component]. Returns the
/// component integrals and accumulates the estimated error in *err.
template <class Value, class Fn>
std::vector<Value> integrate_panel(Fn& f, std::size_t dim, double a, double b,
                                   const PanelOptions& opt, double* err, int depth = 0) {
  const auto x = panel_nodes(a, b);
  const std::vector<Value> v = f(x);
  const double half = 0.5 * (b - a);
  std::vector<Value> kronrod(dim), gauss(dim);
  double worst = 0;
  double scale = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    Value k = kKronrodWeights[7] * v[14 * dim + c];
    Value g = kGaussWeights[3] * v[14 * dim + c];
    for (std::size_t j = 0; j < 7; ++j) {
      const Value pair = v[(2 * j) * dim + c] + v[(2 * j + 1) * dim + c];
      k += kKronrodWeights[j] * pair;
      if (j % 2 == 1) g += kGaussWeights[j / 2] * pair;
    }
    kronrod[c] = half * k;
    gauss[c] = half * g;
    worst = std::max(worst, std::abs(kronrod[c] - gauss[c]));
    scale = std::max(scale, std::abs(kronrod[c]));
  }
  const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);
  if (worst <= tol || depth >= opt.max_depth) {
    *err += worst;
    return kronrod;
  }
  const double mid = 0.5 * (a + b);
  auto left = integrate_panel<Value>(f, dim, a, mid, opt, err, depth + 1);
  const auto right = integrate_panel<Value>(f, dim, mid, b, opt, err, depth + 1);
  for (std::size_t c = 0; c < dim; ++c) left[c] += right[c];
  return left;
}

/// Scalar convenience wrapper: adaptive G7K15 on [a, b].
template <class Value, class Fn>
Value integrate(Fn&& f, double a, double b, const PanelOptions& opt = {}, double* err_out = nullptr) {
  auto block = [&](const std::array<double, 15>& xs) {
    std::vector<Value> out(15);
    for (std::size_t i = 0; i < 15; ++i) out[i] = f(xs[i]);
    return out;
  };
  double err = 0;
  const auto r = integrate_panel<Value>(block, 1, a, b, opt, &err);
  if (err_out) *err_out = err;
  return r[0];
}

}  // namespace dml::quad
