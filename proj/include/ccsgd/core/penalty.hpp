#pragma once

#include <cmath>

#include "ccsgd/core/types.hpp"

namespace ccsgd {

/// Quadratic-hinge penalty: value(z) = 0.5 * max(z,0)^2.
///
/// This is the only shipped penalty kind. It is convex, nonnegative and
/// vanishes on (-inf, 0], so penalizing value(quantile) leaves feasible
/// points untouched. The derivative at the kink z = 0 is taken to be 0
/// (the subgradient element that makes the update a no-op exactly on the
/// constraint boundary).
struct QuadraticHingePenalty {
  static double value(double z) {
    if (!std::isfinite(z)) throw DomainError("penalty value: non-finite input");
    const double h = z > 0.0 ? z : 0.0;
    return 0.5 * h * h;
  }

  static double derivative(double z) {
    if (!std::isfinite(z)) throw DomainError("penalty derivative: non-finite input");
    return z > 0.0 ? z : 0.0;
  }
};

inline double penalty_value(double z) { return QuadraticHingePenalty::value(z); }
inline double penalty_derivative(double z) { return QuadraticHingePenalty::derivative(z); }

}  // namespace ccsgd
