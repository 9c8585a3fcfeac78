#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "ccsgd/core/scenario_set.hpp"
#include "ccsgd/core/types.hpp"

namespace ccsgd {

/// 1-based rank of the empirical (1-eps)-quantile in a sorted array of
/// `count` values: ceil(count * (1 - eps)). eps = 0 maps to the maximum.
/// The small nudge absorbs binary representation error so that exact-integer
/// products (e.g. 10 * 0.8) never round up to the next rank.
inline int quantile_rank(int count, double epsilon) {
  if (count < 1) throw ContractError("quantile_rank: empty sample");
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw ContractError("quantile_rank: epsilon must lie in [0,1)");
  const double raw = static_cast<double>(count) * (1.0 - epsilon);
  int rank = static_cast<int>(std::ceil(raw - 1e-9));
  if (rank < 1 || rank > count)
    throw ContractError("quantile_rank: rank out of range");
  return rank;
}

struct QuantileResult {
  double value = 0.0;
  int scenario = 0;  // 0-based label realizing the value (smallest on ties)
};

/// Empirical (1-eps)-quantile of `values`:
/// inf{ t : #{ i : values[i] <= t } / S >= 1 - eps }, together with the
/// smallest label attaining it. O(S log S); pure.
inline QuantileResult naive_quantile(const std::vector<double>& values, double epsilon) {
  const int s = static_cast<int>(values.size());
  const int rank = quantile_rank(s, epsilon);
  for (double v : values)
    if (std::isnan(v)) throw DomainError("naive_quantile: NaN value");
  std::vector<double> sorted(values);
  std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end());
  const double q = sorted[static_cast<std::size_t>(rank - 1)];
  for (int i = 0; i < s; ++i)
    if (values[static_cast<std::size_t>(i)] == q) return {q, i};
  throw InvariantError("naive_quantile: quantile value not found");
}

/// One minibatch of freshly evaluated constraint values on the contiguous
/// label range [lo, hi], stored together with the permutation that sorts
/// them. Labels are 0-based.
class MinibatchBlock {
 public:
  MinibatchBlock(int lo, std::vector<double> values) : lo_(lo), values_(std::move(values)) {
    if (values_.empty()) throw ContractError("MinibatchBlock: empty block");
    if (lo_ < 0) throw ContractError("MinibatchBlock: negative start label");
    for (double v : values_)
      if (std::isnan(v)) throw DomainError("MinibatchBlock: NaN constraint value");
    order_.resize(values_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return values_[static_cast<std::size_t>(a)] < values_[static_cast<std::size_t>(b)];
    });
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + size() - 1; }
  int size() const { return static_cast<int>(values_.size()); }

  /// j-th smallest value in the block and the label carrying it.
  double sorted_value(int j) const { return values_[static_cast<std::size_t>(order_[static_cast<std::size_t>(j)])]; }
  int sorted_label(int j) const { return lo_ + order_[static_cast<std::size_t>(j)]; }

  /// Raw value for label `lo + offset`.
  double value_at_offset(int offset) const { return values_[static_cast<std::size_t>(offset)]; }

 private:
  int lo_;
  std::vector<double> values_;
  std::vector<int> order_;  // sorted position -> offset within block
};

struct MergeOutcome {
  double quantile = 0.0;
  int quantile_scenario = 0;  // label at the quantile rank after the merge
  int pass_count = 0;         // loop iterations consumed; <= S + block size
};

/// Sorted view of the delayed constraint values z with the permutation
/// mapping sorted positions back to scenario labels.
///
/// merge_update implements the single-pass block replacement: old entries
/// whose label falls inside the replaced range are skipped ("value was
/// replaced"), the pre-sorted new block is merged in, and the quantile is
/// read at the fixed rank. No unsorted copy of z is kept anywhere.
///
/// Single-writer: merge_update / shuffle_relabel must be serialized by the
/// caller.
class SortedQuantileState {
 public:
  SortedQuantileState() = default;

  /// Build from raw values z_i (index = label), as produced by a full fresh
  /// evaluation of the constraint.
  static SortedQuantileState init_from_values(const std::vector<double>& values,
                                              double epsilon) {
    if (values.empty()) throw ContractError("SortedQuantileState: empty input");
    for (double v : values)
      if (std::isnan(v)) throw DomainError("SortedQuantileState: NaN value");
    SortedQuantileState st;
    st.epsilon_ = epsilon;
    st.rank_ = quantile_rank(static_cast<int>(values.size()), epsilon);
    const int s = static_cast<int>(values.size());
    st.perm_.resize(static_cast<std::size_t>(s));
    std::iota(st.perm_.begin(), st.perm_.end(), 0);
    // stable: tied values keep ascending label order
    std::stable_sort(st.perm_.begin(), st.perm_.end(), [&](int a, int b) {
      return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });
    st.sorted_.resize(static_cast<std::size_t>(s));
    for (int l = 0; l < s; ++l)
      st.sorted_[static_cast<std::size_t>(l)] = values[static_cast<std::size_t>(st.perm_[static_cast<std::size_t>(l)])];
    return st;
  }

  int size() const { return static_cast<int>(sorted_.size()); }
  double epsilon() const { return epsilon_; }
  int rank() const { return rank_; }  // 1-based quantile rank

  double quantile() const { return sorted_[static_cast<std::size_t>(rank_ - 1)]; }
  int quantile_scenario() const { return perm_[static_cast<std::size_t>(rank_ - 1)]; }

  const std::vector<double>& sorted_values() const { return sorted_; }
  const std::vector<int>& sort_permutation() const { return perm_; }

  /// Labels tied with the quantile value (contiguous run in the sorted array).
  std::pair<int, int> quantile_tie_range() const {
    const double q = quantile();
    int first = rank_ - 1;
    while (first > 0 && sorted_[static_cast<std::size_t>(first - 1)] == q) --first;
    int last = rank_ - 1;
    while (last + 1 < size() && sorted_[static_cast<std::size_t>(last + 1)] == q) ++last;
    return {first, last};
  }

  /// Reconstruct z by label (testing / export helper).
  std::vector<double> reconstruct_values() const {
    std::vector<double> z(sorted_.size());
    for (int l = 0; l < size(); ++l)
      z[static_cast<std::size_t>(perm_[static_cast<std::size_t>(l)])] = sorted_[static_cast<std::size_t>(l)];
    return z;
  }

  /// Replace the delayed values on block.[lo,hi] with the block's fresh
  /// values in a single pass over both sorted arrays.
  MergeOutcome merge_update(const MinibatchBlock& block) {
    const int s = size();
    const int m = block.size();
    if (block.lo() < 0 || block.hi() >= s)
      throw ContractError("merge_update: block outside {0..S-1}");

    std::vector<double> out_vals(static_cast<std::size_t>(s));
    std::vector<int> out_perm(static_cast<std::size_t>(s));

    int i = 0;       // runs over the old sorted array
    int j = 0;       // runs over the sorted block
    int l = 0;       // fills the merged array
    int skipped = 0; // old entries dropped because their label was replaced
    int passes = 0;

    while (l < s) {
      ++passes;
      if (i < s) {
        const int label = perm_[static_cast<std::size_t>(i)];
        if (label >= block.lo() && label <= block.hi()) {
          // value was replaced, ignore it
          ++i;
          ++skipped;
          continue;
        }
      }
      bool take_old;
      if (i >= s) {
        take_old = false;
      } else if (j >= m) {
        take_old = true;
      } else {
        // ties keep the survivor first
        take_old = sorted_[static_cast<std::size_t>(i)] <= block.sorted_value(j);
      }
      if (take_old) {
        out_vals[static_cast<std::size_t>(l)] = sorted_[static_cast<std::size_t>(i)];
        out_perm[static_cast<std::size_t>(l)] = perm_[static_cast<std::size_t>(i)];
        ++i;
      } else {
        if (j >= m) throw InvariantError("merge_update: block exhausted early");
        out_vals[static_cast<std::size_t>(l)] = block.sorted_value(j);
        out_perm[static_cast<std::size_t>(l)] = block.sorted_label(j);
        ++j;
      }
      ++l;
    }
    // every replaced label must have appeared exactly once in the old
    // permutation and the whole block must have been inserted
    if (skipped + (s - i) != m - (m - j) + (s - l) + skipped || j != m || skipped != m)
      throw InvariantError("merge_update: permutation inconsistent with block range");

    sorted_ = std::move(out_vals);
    perm_ = std::move(out_perm);
    return {quantile(), quantile_scenario(), passes};
  }

  /// Rename scenario labels by theta (new label i -> old label theta[i]).
  /// Sorted values are untouched; only the permutation is rewritten, by
  /// composing with theta^{-1}. The caller must apply the same theta to its
  /// ScenarioSet so labels keep meaning the same scenarios.
  void shuffle_relabel(const std::vector<int>& theta) {
    const int s = size();
    ScenarioSet::check_permutation(theta, s);
    std::vector<int> inv(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) inv[static_cast<std::size_t>(theta[static_cast<std::size_t>(i)])] = i;
    for (int l = 0; l < s; ++l)
      perm_[static_cast<std::size_t>(l)] = inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(l)])];
  }

  /// Debug dump: one row per scenario label with its delayed value and the
  /// position it occupies in the sorted array.
  void dump_csv(std::ostream& out) const {
    out << "scenario_index,delayed_value,sorted_position\n";
    std::vector<int> pos(static_cast<std::size_t>(size()));
    for (int l = 0; l < size(); ++l) pos[static_cast<std::size_t>(perm_[static_cast<std::size_t>(l)])] = l;
    const std::vector<double> z = reconstruct_values();
    char buf[64];
    for (int idx = 0; idx < size(); ++idx) {
      std::snprintf(buf, sizeof(buf), "%.17g", z[static_cast<std::size_t>(idx)]);
      out << idx << ',' << buf << ',' << pos[static_cast<std::size_t>(idx)] << '\n';
    }
  }

 private:
  std::vector<double> sorted_;  // s, ascending
  std::vector<int> perm_;       // sorted position -> scenario label
  double epsilon_ = 0.0;
  int rank_ = 1;
};

}  // namespace ccsgd
