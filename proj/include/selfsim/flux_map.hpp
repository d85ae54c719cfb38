#pragma once

#include <Eigen/Core>

namespace selfsim {

// Monotone nonlinear flux u -> A(u) driving the profile equation
// 0 = (A(U))'' + (y/2) U'.
class FluxMap {
 public:
  virtual ~FluxMap() = default;

  virtual int dim() const = 0;
  virtual Eigen::VectorXd value(const Eigen::VectorXd& u) const = 0;
  virtual Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const = 0;

  // Project a trial state back into the admissible set of A. Returns true if
  // the state was changed.
  virtual bool clamp_to_domain(Eigen::VectorXd& /*u*/) const { return false; }
};

// A(u) = M u.
class LinearFlux final : public FluxMap {
 public:
  explicit LinearFlux(Eigen::MatrixXd coefficient);
  explicit LinearFlux(double coefficient);

  int dim() const override { return static_cast<int>(coefficient_.rows()); }
  Eigen::VectorXd value(const Eigen::VectorXd& u) const override {
    return coefficient_ * u;
  }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd&) const override {
    return coefficient_;
  }

 private:
  Eigen::MatrixXd coefficient_;
};

// Scalar porous-medium flux A(u) = u^m on u >= 0. The derivative at u = 0 is
// the one-sided limit, which vanishes for m > 1 (degenerate front).
class PowerLawFlux final : public FluxMap {
 public:
  explicit PowerLawFlux(double exponent);

  int dim() const override { return 1; }
  Eigen::VectorXd value(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const override;
  bool clamp_to_domain(Eigen::VectorXd& u) const override;

  double exponent() const { return exponent_; }

 private:
  double exponent_;
};

// Phase-diffusion flux Phi with Phi'(eta) = (1 - 3 eta^2)/(1 - eta^2).
// Iterates are clamped to |eta| <= 1/sqrt(3) - margin, where Phi' degenerates.
class PhaseDiffusionFlux final : public FluxMap {
 public:
  explicit PhaseDiffusionFlux(double clamp_margin = 1e-6);

  int dim() const override { return 1; }
  Eigen::VectorXd value(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const override;
  bool clamp_to_domain(Eigen::VectorXd& u) const override;

  double clamp_bound() const { return clamp_bound_; }

 private:
  double clamp_bound_;
};

double gl_phi(double eta);        // 3 eta - 2 atanh(eta)
double gl_phi_prime(double eta);  // (1 - 3 eta^2)/(1 - eta^2)

}  // namespace selfsim
