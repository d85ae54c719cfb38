#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "selfsim/grid.hpp"
#include "selfsim/reaction_network.hpp"

namespace selfsim {

enum class BoundaryKind { Dirichlet, NeumannZero };

// Time-dependent field on a uniform spatial grid over [-X, X].
struct Field1D {
  double half_width = 0.0;  // X
  int node_count = 0;       // n_x
  Eigen::MatrixXd values;   // n_x x components
  double time = 0.0;
  BoundaryKind bc = BoundaryKind::Dirichlet;
  Eigen::VectorXd bc_left, bc_right;  // Dirichlet reservoir values

  static Field1D make(double half_width, int node_count, int components,
                      BoundaryKind bc = BoundaryKind::Dirichlet);

  double spacing() const { return 2.0 * half_width / (node_count - 1); }
  double node(int i) const { return -half_width + i * spacing(); }
  Eigen::VectorXd nodes() const;
};

// One tracked zero of Re A across snapshots. A track terminates (flagged)
// when its zero collides or leaves the matching radius.
struct ZeroTrack {
  std::vector<double> times;
  std::vector<double> positions;
  bool terminated = false;
};

// Least-squares slope of the track positions over [t - window, t + window].
double track_speed(const ZeroTrack& track, double t, double window);

enum class SystemKind { PME, RDS, Turbulence, GinzburgLandau };

struct Trajectory {
  SystemKind kind = SystemKind::PME;
  Field1D geometry;  // grid/bc descriptor; values hold the final state
  std::vector<double> times;
  std::vector<Eigen::MatrixXd> snapshots;
  double clamped_mass = 0.0;  // total negativity removed by clamping
  Eigen::MatrixXd stoich;     // Q for RDS ledgers
  double pme_exponent = 0.0;
  // Ginzburg-Landau extras
  std::vector<ZeroTrack> zero_tracks;
  std::vector<double> times_constraint;
  std::vector<double> constraint_sup;  // sup |rho^2 + (arg A)_x^2 - 1|
};

struct TimeStepPolicy {
  double dt = 0.0;          // 0 = CFL-limited (explicit schemes)
  double safety = 0.9;      // CFL safety factor
  double dt_floor = 1e-12;  // forcing dt below this is an error
  int snapshots = 21;       // snapshot count including t = 0 and t = T
  double clamp_budget = 1e-6;  // relative clamped-mass budget (RDS)
};

// Explicit conservative update u <- u + (dt/h^2) (F_{i+1/2} - F_{i-1/2}) with
// F_{i+1/2} = u_{i+1}^m - u_i^m and dt <= h^2 / (2 m max(u)^{m-1}) recomputed
// each step.
Trajectory run_pme(double exponent_m, const Field1D& initial, double t_final,
                   const TimeStepPolicy& policy = {});

// IMEX stepping: implicit diffusion (one tridiagonal solve per species per
// step), explicit reaction with automatic sub-stepping. Requires policy.dt.
Trajectory run_rds(const ReactionNetwork& network,
                   const DiffusionMatrix& diffusion, const Field1D& initial,
                   double t_final, const TimeStepPolicy& policy = {});

struct TurbulenceModelParams {
  double eta_visc = 1.0;   // momentum viscosity coefficient
  double kappa_diff = 1.0; // energy diffusion coefficient
  double alpha_exp = 1.0;  // source mobility exponent
  double beta_exp = 1.0;   // diffusion mobility exponent
};

// Explicit conservative stepping for the coupled (v, k) system with mobility
// k^beta averaged at faces and the source eta k^alpha |v_x|^2 in the k
// equation. Initial field components are (v, k).
Trajectory run_turbulence(const TurbulenceModelParams& params,
                          const Field1D& initial, double t_final,
                          const TimeStepPolicy& policy = {});

struct GLRunOptions {
  TimeStepPolicy step{};     // step.dt required
  double zero_cadence = 0.5; // tracking interval; 0 disables tracking
  double max_jump_cells = 2.0;
};

// Semi-implicit stepping for the complex amplitude equation (linear part
// implicit, cubic explicit); field components are (Re A, Im A). Zeros of
// Re A are located by sign changes with parabolic refinement and matched
// greedily between tracking snapshots.
Trajectory run_gl(const Field1D& initial, double t_final,
                  const GLRunOptions& opts = {});

// Roll steady state sqrt(1 - eta^2) exp(i (eta x + phi)), sampled on the grid.
void fill_roll(Field1D& field, double eta, double phi = 0.0);
// Wavenumber ramp eta(x) from eta_minus to eta_plus over a tanh transition.
void fill_wavenumber_ramp(Field1D& field, double eta_minus, double eta_plus,
                          double transition_width = 5.0);

struct ScalingExponents {
  double alpha = 0.0;       // amplitude exponent
  double beta_scale = 0.5;  // spatial exponent
};

// For each snapshot evaluates (1+t)^alpha u(t, y (1+t)^beta) on the reference
// grid by linear interpolation and returns the max-norm distance to the
// reference values. Throws std::domain_error naming the maximal usable time
// when the scaled window leaves the simulation domain.
Eigen::VectorXd scaled_convergence(const Trajectory& trajectory,
                                   const Profile& reference,
                                   const ScalingExponents& scaling);

struct ConservedLedger {
  std::vector<std::string> names;
  Eigen::MatrixXd series;  // snapshots x quantities
};

// Trapezoidal conserved-quantity series: total mass per component, plus
// u = Qc for RDS runs and momentum/energy splits for the two-field model.
ConservedLedger conserved_quantities(const Trajectory& trajectory);

}  // namespace selfsim
