#pragma once

#include <numeric>
#include <vector>

#include "ccsgd/core/types.hpp"

namespace ccsgd {

/// Finite scenario sample {xi_1, ..., xi_S}, each scenario a flat vector of
/// problem-specific meaning.
///
/// Scenarios are addressed by *label* (0-based). Labels can be renamed by a
/// permutation without touching the underlying rows, which is how the solver
/// turns contiguous minibatch ranges into uniformly random minibatches:
/// relabel(theta) makes label i refer to what label theta[i] referred to
/// before. Rows themselves are immutable after construction.
class ScenarioSet {
 public:
  explicit ScenarioSet(ScenarioMatrix data) : data_(std::move(data)) {
    if (data_.rows() < 1) throw ContractError("ScenarioSet: need at least one scenario");
    labels_.resize(static_cast<std::size_t>(data_.rows()));
    std::iota(labels_.begin(), labels_.end(), 0);
  }

  int count() const { return static_cast<int>(data_.rows()); }
  int dim() const { return static_cast<int>(data_.cols()); }

  /// Row currently bound to `label`.
  auto row(int label) const { return data_.row(labels_.at(static_cast<std::size_t>(label))); }

  /// Stable identity of the scenario behind `label` (survives relabeling).
  int underlying_index(int label) const { return labels_.at(static_cast<std::size_t>(label)); }

  /// Rename labels by theta: new label i -> old label theta[i].
  void relabel(const std::vector<int>& theta) {
    check_permutation(theta, count());
    std::vector<int> next(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      next[i] = labels_[static_cast<std::size_t>(theta[i])];
    labels_ = std::move(next);
  }

  static void check_permutation(const std::vector<int>& theta, int n) {
    if (static_cast<int>(theta.size()) != n)
      throw ContractError("permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : theta) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw ContractError("not a permutation of {0..S-1}");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

 private:
  ScenarioMatrix data_;
  std::vector<int> labels_;
};

}  // namespace ccsgd
