#ifndef EQSTOP_DISCOUNT_HPP
#define EQSTOP_DISCOUNT_HPP

#include <functional>
#include <string>
#include <utility>

namespace eqstop {

enum class DiscountKind { Exponential, Hyperbolic, GeneralizedHyperbolic };

/// Immutable discount curve delta with delta(0) = 1, strictly decreasing and
/// vanishing at infinity. The three built-in families all satisfy
/// delta(s) * delta(t) <= delta(s + t) and have delta'(0) < 0.
class DiscountFn {
 public:
  static DiscountFn exponential(double rate);
  static DiscountFn hyperbolic(double beta);
  static DiscountFn generalized_hyperbolic(double beta, double gamma);

  DiscountKind kind() const { return kind_; }
  bool is_exponential() const { return kind_ == DiscountKind::Exponential; }
  /// rate for the exponential family, beta otherwise.
  double primary_parameter() const { return a_; }
  /// gamma for the generalized hyperbolic family, unused otherwise.
  double secondary_parameter() const { return g_; }
  std::string description() const;

  double eval(double t) const;  // throws NegativeTime for t < 0
  double dprime0() const;
  double dsecond0() const;

 private:
  DiscountFn(DiscountKind kind, double a, double g) : kind_(kind), a_(a), g_(g) {}
  DiscountKind kind_;
  double a_;
  double g_;
};

/// (delta'(0), delta''(0)) in closed form.
std::pair<double, double> derivatives_at_zero(const DiscountFn& d);

struct LogSubadditivityReport {
  bool holds = false;
  double worst_violation = 0.0;  // max over the grid of d(s)d(t) - d(s+t)
  bool analytic = false;         // certified by family structure
};

/// Built-in families carry an analytic certificate; the grid is evaluated
/// anyway so the report's worst_violation is informative.
LogSubadditivityReport check_log_subadditive(const DiscountFn& d,
                                             double grid_max,
                                             int grid_points);

/// Grid-only evaluation for arbitrary curves (exists so defective inputs can
/// be exercised in tests).
LogSubadditivityReport check_log_subadditive_grid(
    const std::function<double(double)>& delta, double grid_max,
    int grid_points);

/// E[delta(shift + T)] for T ~ Exponential(rate); adaptive quadrature with
/// the integration window cut where exp(-rate * t) < 1e-14.
double expected_discount_of_exponential(const DiscountFn& d, double rate,
                                        double shift = 0.0,
                                        double tol = 1e-10);

}  // namespace eqstop

#endif
