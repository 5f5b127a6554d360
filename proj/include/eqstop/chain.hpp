#ifndef EQSTOP_CHAIN_HPP
#define EQSTOP_CHAIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "eqstop/region.hpp"

namespace eqstop {

/// Finite continuous-time Markov chain whose states carry nonnegative payoff
/// values. Immutable after construction; all member queries are pure.
class Chain {
 public:
  /// `generator` is an n x n rate matrix with off-diagonal entries q_xy >= 0.
  /// If every diagonal entry is zero the diagonal is derived as minus the row
  /// sum of the off-diagonal rates; otherwise each row must sum to zero
  /// within 1e-12 * max|q|.
  Chain(Eigen::VectorXd state_values, Eigen::MatrixXd generator,
        std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(values_.size()); }
  const Eigen::VectorXd& values() const { return values_; }
  double value(int i) const { return values_(i); }
  const Eigen::MatrixXd& generator() const { return q_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of_label(const std::string& label) const;  // -1 when absent

  /// Exit rate lambda_x = -Q_xx.
  double rate_out(int i) const { return -q_(i, i); }
  double max_rate() const { return max_rate_; }
  /// Largest state value C.
  double max_value() const { return max_value_; }
  /// True when the generator is tridiagonal in index order, i.e. the chain
  /// only jumps between neighbouring states.
  bool is_birth_death() const { return birth_death_; }

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd q_;
  std::vector<std::string> labels_;
  double max_rate_ = 0.0;
  double max_value_ = 0.0;
  bool birth_death_ = false;
};

/// Validating constructor wrapper; `rates` may carry either a full generator
/// or just the off-diagonal rates (zero diagonal).
Chain build_chain(const Eigen::VectorXd& state_values,
                  const Eigen::MatrixXd& rates,
                  std::vector<std::string> labels = {});

/// True iff the directed graph of strictly positive off-diagonal rates is
/// strongly connected.
bool is_irreducible(const Chain& chain);

/// Generator restricted to the continuation set C = complement of `stopping`.
/// Throws EmptyContinuation when the region covers every state.
Eigen::MatrixXd sub_generator(const Chain& chain,
                              const StoppingRegion& stopping);

/// e^{Qt} by uniformization with entrywise truncation error <= tol.
Eigen::MatrixXd transition_matrix(const Chain& chain, double t,
                                  double tol = 1e-12);

/// Right-continuous piecewise-constant realization of the chain.
struct Path {
  std::vector<double> jump_times;  // strictly increasing
  std::vector<int> states;         // jump_times.size() + 1 entries
  double horizon = 0.0;
};

/// Exact (Gillespie) simulation up to `horizon`; deterministic given `seed`.
Path simulate_path(const Chain& chain, int start, double horizon,
                   std::uint64_t seed);

}  // namespace eqstop

#endif
