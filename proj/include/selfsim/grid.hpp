#pragma once

#include <Eigen/Core>
#include <limits>

namespace selfsim {

// Uniform similarity-variable grid on [-L, L]. The node count is odd so that
// y = 0 is a node.
struct Grid {
  double half_width = 0.0;  // L
  int node_count = 0;       // n
  double spacing = 0.0;     // h = 2L/(n-1)

  // Throws std::domain_error for nonpositive L or even/too-small n.
  static Grid make(double half_width, int node_count);

  double node(int i) const { return -half_width + i * spacing; }
  int mid_index() const { return (node_count - 1) / 2; }
  Eigen::VectorXd nodes() const;
};

// Similarity profile: per-node vector values with prescribed limits at +-L.
struct Profile {
  Grid grid;
  Eigen::MatrixXd values;       // node_count x components
  Eigen::VectorXd left_limit;   // U-
  Eigen::VectorXd right_limit;  // U+
  double residual_norm = std::numeric_limits<double>::quiet_NaN();
  int newton_iterations = 0;
  int projection_count = 0;     // iterate clamps during the solve
  bool clamp_unreliable = false;

  int components() const { return static_cast<int>(values.cols()); }
};

// First derivative of a sampled curve: centered stencil at interior nodes,
// three-point one-sided stencils at the ends. Second order throughout.
Eigen::VectorXd derivative(const Grid& grid, const Eigen::VectorXd& v);

// Second derivative: centered stencil at interior nodes, endpoint values copy
// the nearest interior node.
Eigen::VectorXd second_derivative(const Grid& grid, const Eigen::VectorXd& v);

// Cumulative trapezoidal integral anchored at the left end.
Eigen::VectorXd cumulative_integral(const Grid& grid, const Eigen::VectorXd& v);

double trapezoid(const Grid& grid, const Eigen::VectorXd& v);

}  // namespace selfsim
