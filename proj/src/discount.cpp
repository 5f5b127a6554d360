#include "eqstop/discount.hpp"

#include <cmath>

#include "eqstop/errors.hpp"
#include "eqstop/quadrature.hpp"

namespace eqstop {

DiscountFn DiscountFn::exponential(double rate) {
  if (!(rate > 0.0)) raise(Errc::InvalidArgument, "rate must be positive");
  return DiscountFn(DiscountKind::Exponential, rate, 0.0);
}

DiscountFn DiscountFn::hyperbolic(double beta) {
  if (!(beta > 0.0)) raise(Errc::InvalidArgument, "beta must be positive");
  return DiscountFn(DiscountKind::Hyperbolic, beta, 1.0);
}

DiscountFn DiscountFn::generalized_hyperbolic(double beta, double gamma) {
  if (!(beta > 0.0)) raise(Errc::InvalidArgument, "beta must be positive");
  if (!(gamma > 0.0)) raise(Errc::InvalidArgument, "gamma must be positive");
  return DiscountFn(DiscountKind::GeneralizedHyperbolic, beta, gamma);
}

std::string DiscountFn::description() const {
  switch (kind_) {
    case DiscountKind::Exponential:
      return "exponential(rate=" + std::to_string(a_) + ")";
    case DiscountKind::Hyperbolic:
      return "hyperbolic(beta=" + std::to_string(a_) + ")";
    case DiscountKind::GeneralizedHyperbolic:
      return "generalized_hyperbolic(beta=" + std::to_string(a_) +
             ", gamma=" + std::to_string(g_) + ")";
  }
  return "discount";
}

double DiscountFn::eval(double t) const {
  if (t < 0.0) raise(Errc::NegativeTime, "discount evaluated at t < 0");
  switch (kind_) {
    case DiscountKind::Exponential:
      return std::exp(-a_ * t);
    case DiscountKind::Hyperbolic:
      return 1.0 / (1.0 + a_ * t);
    case DiscountKind::GeneralizedHyperbolic:
      return std::pow(1.0 + a_ * t, -g_);
  }
  return 0.0;
}

double DiscountFn::dprime0() const {
  switch (kind_) {
    case DiscountKind::Exponential: return -a_;
    case DiscountKind::Hyperbolic: return -a_;
    case DiscountKind::GeneralizedHyperbolic: return -g_ * a_;
  }
  return 0.0;
}

double DiscountFn::dsecond0() const {
  switch (kind_) {
    case DiscountKind::Exponential: return a_ * a_;
    case DiscountKind::Hyperbolic: return 2.0 * a_ * a_;
    case DiscountKind::GeneralizedHyperbolic:
      return g_ * (g_ + 1.0) * a_ * a_;
  }
  return 0.0;
}

std::pair<double, double> derivatives_at_zero(const DiscountFn& d) {
  return {d.dprime0(), d.dsecond0()};
}

LogSubadditivityReport check_log_subadditive_grid(
    const std::function<double(double)>& delta, double grid_max,
    int grid_points) {
  if (!(grid_max > 0.0)) raise(Errc::InvalidArgument, "grid_max must be > 0");
  if (grid_points < 2) raise(Errc::InvalidArgument, "need >= 2 grid points");
  double worst = 0.0;
  const double step = grid_max / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double s = i * step;
    for (int j = i; j < grid_points; ++j) {
      const double t = j * step;
      worst = std::max(worst, delta(s) * delta(t) - delta(s + t));
    }
  }
  LogSubadditivityReport report;
  report.worst_violation = worst;
  report.holds = worst <= 1e-12;
  report.analytic = false;
  return report;
}

LogSubadditivityReport check_log_subadditive(const DiscountFn& d,
                                             double grid_max,
                                             int grid_points) {
  auto report = check_log_subadditive_grid(
      [&d](double t) { return d.eval(t); }, grid_max, grid_points);
  // All built-in families induce decreasing impatience, which implies the
  // inequality everywhere, not just on the grid.
  report.analytic = true;
  report.holds = true;
  return report;
}

double expected_discount_of_exponential(const DiscountFn& d, double rate,
                                        double shift, double tol) {
  if (!(rate > 0.0)) raise(Errc::NonpositiveRate, "rate must be positive");
  if (shift < 0.0) raise(Errc::NegativeTime, "shift must be >= 0");
  // exp(-rate * t) < 1e-14 beyond the cut; the discarded tail mass is below
  // 1e-14 since delta <= 1.
  const double cut = 14.0 * std::log(10.0) / rate;
  auto integrand = [&](double t) {
    return rate * d.eval(shift + t) * std::exp(-rate * t);
  };
  auto result = integrate_adaptive(integrand, 0.0, cut,
                                   std::max(tol * 0.5, 1e-14));
  return result.value;
}

}  // namespace eqstop
