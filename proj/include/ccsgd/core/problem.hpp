#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "ccsgd/core/box.hpp"
#include "ccsgd/core/scenario_set.hpp"
#include "ccsgd/core/types.hpp"

namespace ccsgd {

/// A chance-constrained problem over a finite scenario set:
///
///   minimize   (1/S) sum_i f(x, xi_i)
///   subject to #{ i : g(x, xi_i) <= 0 } / S >= 1 - epsilon,   x in box.
///
/// Evaluators must be pure functions of (x, scenario label): no interior
/// mutability, so different labels may be evaluated concurrently. Gradients
/// are supplied by the problem builder (analytic or adjoint); where g is
/// nondifferentiable the builder returns one fixed, deterministically chosen
/// subgradient.
struct ProblemInstance {
  using ScalarEval = std::function<double(const Vector& x, int scenario)>;
  using GradEval = std::function<Vector(const Vector& x, int scenario)>;

  ScalarEval objective_eval;   // f(x, xi_i)
  GradEval objective_grad;     // grad_x f(x, xi_i)
  ScalarEval constraint_eval;  // g(x, xi_i)
  GradEval constraint_grad;    // grad_x g(x, xi_i), subgradient at kinks
  BoxSet feasible_set;
  double epsilon = 0.0;  // failure tolerance, in (0, 1)
  std::shared_ptr<ScenarioSet> scenario_set;

  int dim() const { return static_cast<int>(feasible_set.dim()); }
  int scenario_count() const { return scenario_set->count(); }

  void validate() const {
    if (!objective_eval || !objective_grad || !constraint_eval || !constraint_grad)
      throw ContractError("ProblemInstance: missing evaluator");
    if (!scenario_set) throw ContractError("ProblemInstance: missing scenario set");
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw ContractError("ProblemInstance: epsilon must lie in (0,1)");
  }
};

/// Fraction of scenarios with g(x, xi_i) > 0 (strict inequality counts as a
/// violation). x is not required to be feasible; the level is reported as-is.
inline double empirical_failure_level(const Vector& x, const ProblemInstance& problem) {
  const int s = problem.scenario_count();
  long violated = 0;
  for (int i = 0; i < s; ++i)
    if (problem.constraint_eval(x, i) > 0.0) ++violated;
  return static_cast<double>(violated) / static_cast<double>(s);
}

/// Arithmetic mean of f(x, xi_i) over all scenarios.
inline double mean_objective(const Vector& x, const ProblemInstance& problem) {
  const int s = problem.scenario_count();
  double sum = 0.0;
  for (int i = 0; i < s; ++i) sum += problem.objective_eval(x, i);
  return sum / static_cast<double>(s);
}

}  // namespace ccsgd
