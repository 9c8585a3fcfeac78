#pragma once

#include <algorithm>
#include <limits>

#include "ccsgd/core/types.hpp"

namespace ccsgd {

/// Axis-aligned box { y : lower <= y <= upper }, coordinate-wise.
/// Unbounded coordinates use +-infinity; projection then leaves that side
/// unconstrained.
class BoxSet {
 public:
  BoxSet() = default;

  BoxSet(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size())
      throw ContractError("BoxSet: bound dimensions differ");
    for (Eigen::Index j = 0; j < lower_.size(); ++j) {
      if (!(lower_[j] <= upper_[j]))
        throw ContractError("BoxSet: lower > upper at coordinate " + std::to_string(j));
    }
  }

  /// Box [-inf, inf]^dim.
  static BoxSet unbounded(Eigen::Index dim) {
    const double inf = std::numeric_limits<double>::infinity();
    return BoxSet(Vector::Constant(dim, -inf), Vector::Constant(dim, inf));
  }

  Eigen::Index dim() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  bool contains(const Vector& y) const {
    if (y.size() != dim()) throw ContractError("BoxSet::contains: dimension mismatch");
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (y[j] < lower_[j] || y[j] > upper_[j]) return false;
    return true;
  }

 private:
  Vector lower_;
  Vector upper_;
};

/// Euclidean projection onto a box: coordinate-wise clamp.
inline Vector project_box(const Vector& y, const BoxSet& box) {
  if (y.size() != box.dim()) throw ContractError("project_box: dimension mismatch");
  Vector out(y.size());
  for (Eigen::Index j = 0; j < y.size(); ++j)
    out[j] = std::min(box.upper()[j], std::max(box.lower()[j], y[j]));
  return out;
}

}  // namespace ccsgd
