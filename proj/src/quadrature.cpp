#include "eqstop/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "eqstop/errors.hpp"

namespace eqstop {

// Standard 15-point Kronrod extension of 7-point Gauss-Legendre.
const std::array<double, 15> GaussKronrod15::nodes = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

const std::array<double, 15> GaussKronrod15::kronrod_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

const std::array<double, 15> GaussKronrod15::gauss_weights = {
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.129484966168869693270611432679082};

namespace {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(mid + half * GaussKronrod15::nodes[i]);
    kronrod += GaussKronrod15::kronrod_weights[i] * fx;
    gauss += GaussKronrod15::gauss_weights[i] * fx;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_panels) {
  if (!(abs_tol > 0.0)) raise(Errc::InvalidArgument, "abs_tol must be > 0");
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int panels = 1;
  while (total_error > abs_tol) {
    if (panels >= max_panels)
      raise(Errc::ToleranceUnreachable,
            "adaptive quadrature exhausted its panel budget");
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  return {total_value, total_error, panels};
}

}  // namespace eqstop
