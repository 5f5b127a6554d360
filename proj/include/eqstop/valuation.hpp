#ifndef EQSTOP_VALUATION_HPP
#define EQSTOP_VALUATION_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "eqstop/chain.hpp"
#include "eqstop/discount.hpp"
#include "eqstop/region.hpp"

namespace eqstop {

enum class ValueMethod { Quadrature, MonteCarlo };

/// Per-state continuation values J(x, S) = E_x[delta(shift + tau_S) X_{tau_S}].
/// States that can never reach S contribute zero (delta(inf) := 0).
struct ValueVector {
  Eigen::VectorXd values;
  Eigen::VectorXd error_estimate;
  ValueMethod method = ValueMethod::Quadrature;
  bool empty_region = false;          // S was empty; values are all zero
  bool has_unreachable_mass = false;  // some continuation state never hits S
};

/// Quadrature evaluation of the hitting value, exact at stopped states
/// (delta(shift) * x). `tol` is an absolute bound on the per-state error.
ValueVector hitting_value(const Chain& chain, const DiscountFn& d,
                          const StoppingRegion& stopping, double shift = 0.0,
                          double tol = 1e-9);

/// E_x[delta(tau_S^eps) X_{tau_S^eps}] for the deviation "continue for eps,
/// then revert to stopping on S".
double delayed_value(const Chain& chain, const DiscountFn& d,
                     const StoppingRegion& stopping, int state, double eps,
                     double tol = 1e-9);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  /// delta(horizon) * C times the fraction of paths that outlived the
  /// horizon before reaching S; bounds the truncation bias.
  double bias_bound = 0.0;
  int n_paths = 0;
};

/// Monte Carlo estimate of the hitting value from one starting state.
McEstimate mc_hitting_value(const Chain& chain, const DiscountFn& d,
                            const StoppingRegion& stopping, int state,
                            int n_paths, double horizon, std::uint64_t seed);

}  // namespace eqstop

#endif
