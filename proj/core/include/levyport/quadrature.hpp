#pragma once

#include <functional>
#include <vector>

#include "levyport/errors.hpp"

namespace levyport {

/// Nodes and weights for int_0^inf f(u) e^{-u} du ~= sum w_i f(u_i).
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Laguerre rule of order n (weight e^{-u} on (0, inf)), computed by
/// Newton iteration on the Laguerre recurrence.
const GaussLaguerreRule& gauss_laguerre(int n);

struct AdaptiveOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  int max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Refines the worst interval until
/// the summed error estimate meets max(abs_tol, rel_tol * |result|); throws
/// QuadratureError carrying the last two global estimates when the interval
/// budget runs out first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const AdaptiveOptions& opt = {});

}  // namespace levyport
