#pragma once

#include <Eigen/Core>

#include "selfsim/grid.hpp"
#include "selfsim/profile_bvp.hpp"
#include "selfsim/reaction_network.hpp"

namespace selfsim {

// Fluxes sustaining a reaction-diffusion similarity profile: per-species
// diffusive fluxes and the reaction fluxes recovered from the raw multiplier
// lambda(y) = -(D C'' + (y/2) C'), which lies in ker Q.
struct FluxSet {
  Grid grid;
  Eigen::MatrixXd diffusive;       // n x i*: Q_j^diff = -d_j C_j'
  Eigen::MatrixXd multipliers;     // n x reactions: Lambda_r(y)
  Eigen::MatrixXd raw_multiplier;  // n x i*: lambda(y)
  double stoich_residual = 0.0;        // max_y ||Q lambda||_inf
  double decomposition_residual = 0.0; // max_y dist(lambda, span directions)
  double constraint_violation = 0.0;   // max_y ||R(C(y))||_inf
  bool constraint_warning = false;
};

// Per-species diffusive flux curves -d_j C_j'(y) (centered differences).
Eigen::MatrixXd diffusive_fluxes(const Profile& concentration,
                                 const DiffusionMatrix& diffusion);

// Recovers lambda(y) and the per-reaction multipliers Lambda_r(y) by
// least-squares projection onto the reaction directions. Throws
// std::invalid_argument when the directions are linearly dependent; a large
// constraint violation max ||R(C)|| only sets the warning flag.
FluxSet lagrange_multiplier(const Profile& concentration,
                            const DiffusionMatrix& diffusion,
                            const ReactionNetwork& network);

struct TurbulenceFluxSet {
  Eigen::VectorXd momentum_flux;  // -K V'
  Eigen::VectorXd energy_flux;    // -K K'
  Eigen::VectorXd energy_source;  // K (V')^2 >= 0
};

// Fluxes from a sampled two-component (V, K) profile.
TurbulenceFluxSet turbulence_fluxes(const Profile& vk_profile);
// Fluxes from the closed-form solution, evaluated with exact derivatives.
TurbulenceFluxSet turbulence_fluxes(const TurbulenceExact& exact,
                                    const Grid& grid);

// Amplitude multiplier Lambda(y) = -(rho'' + (y/2) rho') for
// rho = sqrt(1 - eta^2). Throws std::domain_error if |eta| >= 1 at a node.
Eigen::VectorXd gl_amplitude_multiplier(const Profile& eta_profile);

// Zero-speed profile V(y) = y/2 - psi(y)/(2 psi'(y)), with psi' taken from
// the stored wavenumber curve. Throws std::domain_error naming the node when
// |eta| falls below eps_zero.
Eigen::VectorXd zero_speed_profile(const PhaseProfilePair& pair,
                                   double eps_zero = 1e-8);

// Monotone piecewise-linear inverse of a sampled strictly monotone curve.
class MonotoneInverse {
 public:
  MonotoneInverse(Eigen::VectorXd x, Eigen::VectorXd fx);
  double operator()(double value) const;

 private:
  Eigen::VectorXd x_, fx_;
  bool increasing_ = true;
};

// Infiltration summary for a profile with U+ = 0: flux at the origin and the
// predicted mass growth M(t) = M0 sqrt(1+t).
struct InfiltrationReport {
  double flux_at_origin = 0.0;  // Q0
  double initial_mass = 0.0;    // M0
  double mass_law(double t) const;
};
InfiltrationReport infiltration_report(const Profile& profile, double m,
                                       double initial_mass);

}  // namespace selfsim
