#include "eqstop/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eqstop/detail/rng.hpp"
#include "eqstop/errors.hpp"

namespace eqstop {

Chain::Chain(Eigen::VectorXd state_values, Eigen::MatrixXd generator,
             std::vector<std::string> labels)
    : values_(std::move(state_values)),
      q_(std::move(generator)),
      labels_(std::move(labels)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) raise(Errc::InvalidArgument, "chain needs at least one state");
  if (q_.rows() != n || q_.cols() != n)
    raise(Errc::InvalidArgument,
          "generator must be square and match the state count");
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(values_(i)) || values_(i) < 0.0)
      raise(Errc::NegativeStateValue,
            "state value at index " + std::to_string(i) +
                " must be finite and nonnegative");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(q_(i, j)))
        raise(Errc::InvalidArgument, "generator entries must be finite");
      if (i != j && q_(i, j) < 0.0)
        raise(Errc::NegativeRate, "rate q(" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is negative");
    }

  const bool diagonal_given = q_.diagonal().cwiseAbs().maxCoeff() > 0.0;
  if (!diagonal_given) {
    for (int i = 0; i < n; ++i) q_(i, i) = -(q_.row(i).sum() - q_(i, i));
  } else {
    const double scale = q_.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * scale;
    for (int i = 0; i < n; ++i) {
      const double row_sum = q_.row(i).sum();
      if (std::abs(row_sum) > tol)
        raise(Errc::RowSumViolation,
              "row " + std::to_string(i) + " sums to " +
                  std::to_string(row_sum));
    }
  }

  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back("x" + std::to_string(i + 1));
  } else if (static_cast<int>(labels_.size()) != n) {
    raise(Errc::InvalidArgument, "label count must match state count");
  }

  max_rate_ = 0.0;
  for (int i = 0; i < n; ++i) max_rate_ = std::max(max_rate_, rate_out(i));
  max_value_ = values_.maxCoeff();

  birth_death_ = true;
  for (int i = 0; i < n && birth_death_; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) > 1 && q_(i, j) != 0.0) {
        birth_death_ = false;
        break;
      }
}

int Chain::index_of_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Chain build_chain(const Eigen::VectorXd& state_values,
                  const Eigen::MatrixXd& rates,
                  std::vector<std::string> labels) {
  return Chain(state_values, rates, std::move(labels));
}

bool is_irreducible(const Chain& chain) {
  const int n = chain.size();
  const auto& q = chain.generator();
  auto reachable = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == v || seen[w]) continue;
        double rate = transpose ? q(w, v) : q(v, w);
        if (rate > 0.0) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  };
  return reachable(false) && reachable(true);
}

Eigen::MatrixXd sub_generator(const Chain& chain,
                              const StoppingRegion& stopping) {
  if (stopping.n_states() != chain.size())
    raise(Errc::InvalidArgument, "region does not match chain");
  std::vector<int> cont = stopping.complement();
  if (cont.empty())
    raise(Errc::EmptyContinuation,
          "stopping region covers every state; continuation set is empty");
  const int m = static_cast<int>(cont.size());
  Eigen::MatrixXd sub(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub(a, b) = chain.generator()(cont[a], cont[b]);
  return sub;
}

namespace {

// One uniformized series pass; requires lambda * t small enough that
// exp(-lambda*t) does not underflow.
Eigen::MatrixXd expm_series(const Eigen::MatrixXd& p, double lt, double tol,
                            int n) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  double weight = std::exp(-lt);
  double cumulative = weight;
  acc += weight * term;
  const int k_max =
      static_cast<int>(lt + 60.0 * std::sqrt(lt + 1.0) + 200.0);
  for (int k = 1; cumulative < 1.0 - tol; ++k) {
    if (k > k_max)
      raise(Errc::ToleranceUnreachable,
            "uniformization series did not reach the requested tolerance");
    term = term * p;
    weight *= lt / k;
    cumulative += weight;
    acc += weight * term;
  }
  return acc;
}

}  // namespace

Eigen::MatrixXd transition_matrix(const Chain& chain, double t, double tol) {
  if (t < 0.0) raise(Errc::NegativeTime, "transition time must be >= 0");
  if (tol <= 0.0) raise(Errc::InvalidArgument, "tol must be positive");
  const int n = chain.size();
  const double lambda = chain.max_rate();
  if (t == 0.0 || lambda == 0.0) return Eigen::MatrixXd::Identity(n, n);

  // Split t so each series pass stays short, then square back up.
  int squarings = 0;
  double lt = lambda * t;
  while (lt > 64.0 && squarings < 60) {
    lt /= 2.0;
    ++squarings;
  }
  const Eigen::MatrixXd p =
      Eigen::MatrixXd::Identity(n, n) + chain.generator() / lambda;
  const double step_tol = tol / std::ldexp(1.0, squarings + 1);
  Eigen::MatrixXd result = expm_series(p, lt, step_tol, n);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Path simulate_path(const Chain& chain, int start, double horizon,
                   std::uint64_t seed) {
  if (start < 0 || start >= chain.size())
    raise(Errc::InvalidArgument, "start state out of range");
  if (horizon <= 0.0) raise(Errc::InvalidArgument, "horizon must be positive");
  detail::Rng rng(seed);
  Path path;
  path.horizon = horizon;
  path.states.push_back(start);
  double t = 0.0;
  int state = start;
  while (true) {
    const double rate = chain.rate_out(state);
    if (rate <= 0.0) break;  // absorbing: holds until horizon
    t += rng.exponential(rate);
    if (t > horizon) break;
    const double u = rng.uniform() * rate;
    double acc = 0.0;
    int next = -1;
    for (int j = 0; j < chain.size(); ++j) {
      if (j == state) continue;
      acc += chain.generator()(state, j);
      if (u < acc) {
        next = j;
        break;
      }
    }
    if (next < 0) {  // guard against rounding at the top of the cdf
      for (int j = chain.size() - 1; j >= 0; --j)
        if (j != state && chain.generator()(state, j) > 0.0) {
          next = j;
          break;
        }
    }
    path.jump_times.push_back(t);
    path.states.push_back(next);
    state = next;
  }
  return path;
}

}  // namespace eqstop
