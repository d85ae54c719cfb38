#include "selfsim/flux_map.hpp"

#include <cmath>
#include <stdexcept>

namespace selfsim {

LinearFlux::LinearFlux(Eigen::MatrixXd coefficient)
    : coefficient_(std::move(coefficient)) {
  if (coefficient_.rows() != coefficient_.cols() || coefficient_.rows() == 0) {
    throw std::invalid_argument("linear flux coefficient must be square");
  }
}

LinearFlux::LinearFlux(double coefficient)
    : coefficient_(Eigen::MatrixXd::Constant(1, 1, coefficient)) {}

PowerLawFlux::PowerLawFlux(double exponent) : exponent_(exponent) {
  if (!(exponent >= 1.0)) {
    throw std::domain_error("porous-medium exponent must satisfy m >= 1");
  }
}

Eigen::VectorXd PowerLawFlux::value(const Eigen::VectorXd& u) const {
  Eigen::VectorXd a(1);
  a[0] = std::pow(std::max(u[0], 0.0), exponent_);
  return a;
}

Eigen::MatrixXd PowerLawFlux::jacobian(const Eigen::VectorXd& u) const {
  Eigen::MatrixXd j(1, 1);
  const double v = std::max(u[0], 0.0);
  j(0, 0) = exponent_ == 1.0 ? 1.0 : exponent_ * std::pow(v, exponent_ - 1.0);
  return j;
}

bool PowerLawFlux::clamp_to_domain(Eigen::VectorXd& u) const {
  if (u[0] >= 0.0) return false;
  u[0] = 0.0;
  return true;
}

PhaseDiffusionFlux::PhaseDiffusionFlux(double clamp_margin)
    : clamp_bound_(1.0 / std::sqrt(3.0) - clamp_margin) {
  if (!(clamp_margin > 0.0) || !(clamp_bound_ > 0.0)) {
    throw std::domain_error("phase-diffusion clamp margin out of range");
  }
}

Eigen::VectorXd PhaseDiffusionFlux::value(const Eigen::VectorXd& u) const {
  Eigen::VectorXd a(1);
  a[0] = gl_phi(u[0]);
  return a;
}

Eigen::MatrixXd PhaseDiffusionFlux::jacobian(const Eigen::VectorXd& u) const {
  Eigen::MatrixXd j(1, 1);
  j(0, 0) = gl_phi_prime(u[0]);
  return j;
}

bool PhaseDiffusionFlux::clamp_to_domain(Eigen::VectorXd& u) const {
  if (u[0] > clamp_bound_) {
    u[0] = clamp_bound_;
    return true;
  }
  if (u[0] < -clamp_bound_) {
    u[0] = -clamp_bound_;
    return true;
  }
  return false;
}

double gl_phi(double eta) { return 3.0 * eta - 2.0 * std::atanh(eta); }

double gl_phi_prime(double eta) {
  return (1.0 - 3.0 * eta * eta) / (1.0 - eta * eta);
}

}  // namespace selfsim
