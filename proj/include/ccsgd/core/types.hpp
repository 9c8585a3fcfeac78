#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ccsgd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// scenario rows are accessed through a label indirection; row-major keeps
// per-scenario reads contiguous
using ScenarioMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Violated precondition of a public operation (bad argument, mismatched
/// dimensions, invalid configuration).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the mathematical domain of an operation (non-finite value
/// where a finite one is required, NaN fed into an ordering).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Broken internal invariant; indicates a bug, not a user error.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// A trajectory simulation failed (non-finite state, step cap exceeded).
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, long step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"),
        step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

}  // namespace ccsgd
