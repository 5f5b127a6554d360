#ifndef EQSTOP_QUADRATURE_HPP
#define EQSTOP_QUADRATURE_HPP

#include <array>
#include <functional>

namespace eqstop {

/// Gauss-Kronrod 7-15 node pair on [-1, 1], nodes ascending. Gauss weights
/// are zero at the Kronrod-only nodes.
struct GaussKronrod15 {
  static const std::array<double, 15> nodes;
  static const std::array<double, 15> kronrod_weights;
  static const std::array<double, 15> gauss_weights;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod panel subdivision on [a, b] with an
/// absolute tolerance target. Throws ToleranceUnreachable when the panel
/// budget is exhausted before the estimate certifies.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_panels = 4000);

}  // namespace eqstop

#endif
