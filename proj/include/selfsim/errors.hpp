#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace selfsim {

// Newton failed to reach the requested residual. Carries the residual
// history and the final iterate norm so reports can record the failure.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> residual_history,
              int iterations)
      : std::runtime_error(what),
        residual_history_(std::move(residual_history)),
        iterations_(iterations) {}

  const std::vector<double>& residual_history() const {
    return residual_history_;
  }
  int iterations() const { return iterations_; }

  // Flattened last iterate (row-major node x component), when available.
  std::vector<double> last_iterate;

 private:
  std::vector<double> residual_history_;
  int iterations_ = 0;
};

}  // namespace selfsim
