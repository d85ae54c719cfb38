#include "selfsim/grid.hpp"

#include <stdexcept>
#include <string>

namespace selfsim {

Grid Grid::make(double half_width, int node_count) {
  if (!(half_width > 0.0)) {
    throw std::domain_error("grid half-width must be positive, got " +
                            std::to_string(half_width));
  }
  if (node_count < 3) {
    throw std::domain_error("grid needs at least 3 nodes, got " +
                            std::to_string(node_count));
  }
  if (node_count % 2 == 0) {
    throw std::domain_error("grid node count must be odd so y = 0 is a node, "
                            "got " + std::to_string(node_count));
  }
  Grid g;
  g.half_width = half_width;
  g.node_count = node_count;
  g.spacing = 2.0 * half_width / (node_count - 1);
  return g;
}

Eigen::VectorXd Grid::nodes() const {
  Eigen::VectorXd y(node_count);
  for (int i = 0; i < node_count; ++i) y[i] = node(i);
  return y;
}

Eigen::VectorXd derivative(const Grid& grid, const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  const double h = grid.spacing;
  Eigen::VectorXd d(n);
  for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  return d;
}

Eigen::VectorXd second_derivative(const Grid& grid, const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  const double h2 = grid.spacing * grid.spacing;
  Eigen::VectorXd d(n);
  for (int i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
  d[0] = d[1];
  d[n - 1] = d[n - 2];
  return d;
}

Eigen::VectorXd cumulative_integral(const Grid& grid,
                                    const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  Eigen::VectorXd acc(n);
  acc[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    acc[i] = acc[i - 1] + 0.5 * grid.spacing * (v[i] + v[i - 1]);
  }
  return acc;
}

double trapezoid(const Grid& grid, const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  double sum = 0.5 * (v[0] + v[n - 1]);
  for (int i = 1; i + 1 < n; ++i) sum += v[i];
  return sum * grid.spacing;
}

}  // namespace selfsim
