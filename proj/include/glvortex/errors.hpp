#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glv {

// Invalid run configuration (mesh size, empty lists, bad CLI values).
// The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad operand for an otherwise valid configuration: domain violations,
// mesh mismatches, unsupported perturbation families.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite samples or a violated numerical postcondition.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iteration failure in the Newton or eigenvalue solvers. Carries the last
// iterate and the residual history; continuation also records the ladder
// position at which the failure occurred.
struct SolveError : std::runtime_error {
  SolveError(const std::string& msg, std::vector<double> last,
             std::vector<double> history, double eps_at = 0.0)
      : std::runtime_error(msg),
        last_iterate(std::move(last)),
        residual_history(std::move(history)),
        ladder_eps(eps_at) {}

  std::vector<double> last_iterate;
  std::vector<double> residual_history;
  double ladder_eps;
};

}  // namespace glv
