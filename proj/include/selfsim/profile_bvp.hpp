#pragma once

#include <Eigen/Core>

#include "selfsim/flux_map.hpp"
#include "selfsim/grid.hpp"
#include "selfsim/reaction_network.hpp"

namespace selfsim {

struct SolveOptions {
  double tol = 1e-10;          // residual max-norm
  int max_iter = 50;
  double damping_factor = 0.5;
  int max_backtracks = 30;
  int continuation_steps = 1;      // boundary-gap continuation stages
  int max_continuation_steps = 8;  // escalated automatically on failure
  double init_scale = 0.0;     // diffusion scale of the initial guess; 0 = auto
  int projection_cap = 0;      // max iterate clamps; 0 = 100 * node count
  bool monotone_repair = true; // scalar solves: break ulp-level ties in tails
};

// Solves 0 = (A(U))'' + (y/2) U' with U(-L) = U-, U(L) = U+ by damped Newton
// on second-order centered differences. Boundary rows are identities. The
// caller is responsible for A being monotone on the relevant box (see
// monotonicity_certificate); the solver does not verify it.
Profile solve_profile(const FluxMap& flux, const Eigen::VectorXd& u_minus,
                      const Eigen::VectorXd& u_plus, const Grid& grid,
                      const SolveOptions& opts = {});

// Recomputes the discrete residual of a profile, one row per node. Boundary
// rows hold U - U_limit.
Eigen::MatrixXd residual(const Profile& profile, const FluxMap& flux);

// E(z) = (1 + erf(z/sqrt(2)))/2, the increasing solution of E'' + z E' = 0
// with limits 0 and 1.
double erf_profile_E(double z);

// Source-type porous-medium profile W(y) = max{0, N - c_m y^2}^{1/(m-1)}
// (m > 1) or W(y) = N exp(-y^2/4) (m = 1), with c_m fixed so that the steady
// flux (W^m)' + y W/(m+1) vanishes on the support.
struct BarenblattProfile {
  double exponent_m = 2.0;
  double mass_parameter = 0.0;  // N
  double coefficient = 0.0;     // c_m
  double total_mass = 0.0;      // integral of W over the line
  double support_radius = 0.0;  // sqrt(N/c_m); inf for m = 1

  double value(double y) const;       // W(y)
  double derivative(double y) const;  // W'(y), one-sided at the support edge
  double flux(double y) const;        // Q(y) = -(W^m)'(y) = y W/(m+1)
};
BarenblattProfile barenblatt(double m, double N);

// d-dimensional source-type profile K(y) = max{0, N - c |y|^2}^{1/beta} of the
// two-field model's energy equation, with c = gamma beta / (2 kappa) and
// gamma = 1/(2 + beta d).
struct RadialBarenblatt {
  double beta_exp = 1.0;
  double kappa = 1.0;
  int dimension = 1;
  double scaling_gamma = 0.0;   // 1/(2 + beta d)
  double coefficient = 0.0;     // c
  double mass_parameter = 0.0;  // N

  double value(double r) const;
};
RadialBarenblatt turbulence_barenblatt(double N, double beta_exp, double kappa,
                                       int dimension);

// Prefactor v~ with P = v~ * integral of K^{kappa/eta} (radial quadrature).
double turbulence_velocity_prefactor(const RadialBarenblatt& K,
                                     double momentum, double kappa,
                                     double eta);

// Exact piecewise similarity solution of the two-field model at
// alpha = beta = kappa = eta = 1:
//   V = y/sqrt(2) inside |y| <= A, +-A/sqrt(2) outside;
//   K = (A^2 - y^2)/4 inside, 0 outside.
struct TurbulenceExact {
  double half_width = 1.0;  // A

  double velocity(double y) const;
  double velocity_derivative(double y) const;
  double energy_k(double y) const;
  double energy_k_derivative(double y) const;
  double energy_density(double y) const;  // v^2/2 + k, constant A^2/4
};
TurbulenceExact turbulence_exact(double a_half);

// Wavenumber profile: solves (Phi(eta))'' + (y/2) eta' = 0 with Dirichlet
// limits. Throws std::domain_error when |eta(+-inf)| >= 1/sqrt(3) (Eckhaus
// instability).
Profile gl_eta_profile(double eta_minus, double eta_plus, const Grid& grid,
                       const SolveOptions& opts = {});

// Steady phase profile reconstructed from a solved wavenumber profile.
struct PhaseProfilePair {
  Profile eta;   // scalar wavenumber profile
  Profile psi;   // scalar phase profile (left-anchored integral)
  double anchor_discrepancy = 0.0;  // max |left form - right form|
};
PhaseProfilePair gl_psi_reconstruct(const Profile& eta_profile);

// Max-norm residual of 0 = (Phi(psi_y))_y + (y/2) psi_y - psi/2 on interior
// nodes, with psi_y taken from the stored wavenumber curve.
double gl_psi_steady_residual(const PhaseProfilePair& pair);

// C(y) = Psi(U(y)) nodewise. Throws std::domain_error listing offending nodes
// when some U(y) leaves the nonnegative cone.
Profile composed_concentration_profile(const Profile& u_profile,
                                       const ReactionNetwork& network);

// Empirical constant of the uniform estimate: sup_y |U(y) - step(y)| divided
// by |U+ - U-|, where step jumps between the limits at y = 0.
double uniform_estimate_ratio(const Profile& profile);

}  // namespace selfsim
