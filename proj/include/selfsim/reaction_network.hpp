#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <vector>

#include "selfsim/flux_map.hpp"

namespace selfsim {

// One reversible mass-action reaction in detailed balance. The species
// production rate is
//     net_rate(c) * direction()  with
//     net_rate(c) = kappa * (prod_i c_i^backward_i - prod_i c_i^forward_i)
// and direction() = forward - backward, so the forward reaction (left to
// right as written) consumes the species on the left.
struct Reaction {
  Eigen::VectorXd forward;   // forward exponents, componentwise >= 0
  Eigen::VectorXd backward;  // backward exponents, componentwise >= 0
  double rate_constant = 1.0;

  Eigen::VectorXd direction() const { return forward - backward; }
  double net_rate(const Eigen::VectorXd& c) const;
  // Gradient of net_rate; valid in the open orthant, one-sided on its boundary.
  Eigen::VectorXd net_rate_gradient(const Eigen::VectorXd& c) const;
};

enum class NetworkKind {
  TwoSpecies,          // gamma X1 <-> beta X2
  ThreeSpeciesBinary,  // X1 + X2 <-> X3
  TwoReactionChain,    // 2 X1 <-> X2, X2 <-> X3
  Generic,
};

// Mass-action network with a surjective stoichiometric map Q (conserved
// quantities u = Q c) and the equilibrium parametrization Psi with
// Q Psi(u) = u and R(Psi(u)) = 0.
class ReactionNetwork {
 public:
  ReactionNetwork(int species_count, std::vector<Reaction> reactions,
                  Eigen::MatrixXd stoichiometric_map,
                  NetworkKind kind = NetworkKind::Generic);

  static ReactionNetwork two_species(double beta, double gamma,
                                     double kappa = 1.0);
  static ReactionNetwork three_species_binary(double kappa = 1.0);
  static ReactionNetwork two_reaction_chain(double k1 = 1.0, double k2 = 1.0);

  int species_count() const { return species_count_; }
  int conserved_count() const { return static_cast<int>(stoich_.rows()); }
  int reaction_count() const { return static_cast<int>(reactions_.size()); }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const Eigen::MatrixXd& stoichiometric_map() const { return stoich_; }
  NetworkKind kind() const { return kind_; }
  double two_species_beta() const { return beta_; }
  double two_species_gamma() const { return gamma_; }

  // R(c). Throws std::domain_error on negative concentrations.
  Eigen::VectorXd rate(const Eigen::VectorXd& c) const;
  // dR/dc, valid in the open orthant.
  Eigen::MatrixXd rate_jacobian(const Eigen::VectorXd& c) const;

  // Psi(u): closed forms for the built-in networks, damped Newton on
  // {Qc = u, log-equilibrium residuals = 0} otherwise.
  // Throws std::domain_error for negative u, SolverError on non-convergence.
  Eigen::VectorXd reduce(const Eigen::VectorXd& u) const;
  // DPsi(u); uses the globally extended root s for the three-species network.
  Eigen::MatrixXd reduce_jacobian(const Eigen::VectorXd& u) const;

  // Reaction direction vectors, one column per reaction. They span ker Q.
  Eigen::MatrixXd direction_matrix() const;

 private:
  Eigen::VectorXd reduce_two_species(double u) const;
  Eigen::VectorXd reduce_generic(const Eigen::VectorXd& u) const;
  Eigen::MatrixXd reduce_jacobian_generic(const Eigen::VectorXd& u) const;

  int species_count_;
  std::vector<Reaction> reactions_;
  Eigen::MatrixXd stoich_;  // Q, j* x i*
  NetworkKind kind_;
  double beta_ = 0.0, gamma_ = 0.0;  // two-species exponents
};

// Diagonal diffusion matrix with strictly positive entries.
class DiffusionMatrix {
 public:
  explicit DiffusionMatrix(Eigen::VectorXd diagonal);
  DiffusionMatrix(std::initializer_list<double> diagonal);

  const Eigen::VectorXd& diagonal() const { return diagonal_; }
  int size() const { return static_cast<int>(diagonal_.size()); }
  double mean() const { return diagonal_.mean(); }
  double min() const { return diagonal_.minCoeff(); }
  double max() const { return diagonal_.maxCoeff(); }

 private:
  Eigen::VectorXd diagonal_;
};

// Effective diffusion A(u) = Q D Psi(u) of the reduced system, exposed as the
// flux map of the profile equation. Iterates are clamped to u >= 0.
class EffectiveDiffusion final : public FluxMap {
 public:
  EffectiveDiffusion(ReactionNetwork network, DiffusionMatrix diffusion);

  int dim() const override { return network_.conserved_count(); }
  Eigen::VectorXd value(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const override;
  bool clamp_to_domain(Eigen::VectorXd& u) const override;

  const ReactionNetwork& network() const { return network_; }
  const DiffusionMatrix& diffusion() const { return diffusion_; }

 private:
  ReactionNetwork network_;
  DiffusionMatrix diffusion_;
};

struct MonotonicityCertificate {
  double a_lo = 0.0;          // smallest sampled eigenvalue of sym DA
  Eigen::VectorXd witness;    // minimizing sample point
  Eigen::VectorXd box_lo, box_hi;
  int samples_per_axis = 0;
};

// Samples the smallest eigenvalue of (DA + DA^T)/2 on a uniform lattice in
// the box. a_lo > 0 certifies monotonicity on the sample set.
MonotonicityCertificate monotonicity_certificate(
    const ReactionNetwork& network, const DiffusionMatrix& diffusion,
    const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi,
    int samples_per_axis);

}  // namespace selfsim
