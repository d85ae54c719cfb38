#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "selfsim/reaction_network.hpp"

namespace selfsim {

struct Curve {
  std::string name;
  Eigen::VectorXd values;
};

// CSV with a header row, LF endings, and 17 significant digits so re-reading
// reproduces the doubles bit for bit.
void write_csv(const std::filesystem::path& path,
               const std::vector<Curve>& curves);
std::vector<Curve> read_csv(const std::filesystem::path& path);

struct SvgStyle {
  int width = 880;
  int height = 540;
  std::string title;
};

// Line plot of the curves against the first one, with axes and a legend.
void write_svg(const std::filesystem::path& path,
               const std::vector<Curve>& curves, const SvgStyle& style = {});

// Declarative problem description parsed from JSON. validate() throws
// std::invalid_argument naming the offending parameter.
struct RunConfig {
  std::string problem;  // pme_barenblatt, pme_mixing, rds_profile,
                        // rds_simulate, turbulence_exact,
                        // turbulence_simulate, gl_profile, gl_simulate
  std::optional<nlohmann::json> network_spec;
  std::vector<double> diffusion;
  std::vector<double> c_minus, c_plus;  // concentration limits (equilibria)
  std::vector<double> u_minus, u_plus;  // conserved-variable limits
  std::vector<double> m_values;         // porous-medium exponents
  double mass_parameter = 1.0;          // N
  double pme_u_minus = 1.0, pme_u_plus = 0.0;
  double eta_minus = 0.0, eta_plus = 0.0;
  double phi_minus = 0.0, phi_plus = 0.0;
  double a_half = 1.0;
  double half_width = 10.0;  // L
  int nodes = 4001;          // n
  double sim_half_width = 16.0;  // X
  int sim_nodes = 3201;          // n_x
  double t_final = 10.0;
  double dt = 0.0;
  int snapshots = 21;
  double tol = 1e-10;
  int max_iter = 50;
  int continuation_steps = 1;
  std::string output_dir = ".";
  std::string format = "all";  // csv|json|svg|all

  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_file(const std::filesystem::path& path);
  void validate() const;

  ReactionNetwork make_network() const;
  DiffusionMatrix make_diffusion() const;
};

// Machine-readable result record; emitted even when the solver fails.
struct RunReport {
  nlohmann::json body = nlohmann::json::object();

  void add_artifact(const std::filesystem::path& path);
  void write(const std::filesystem::path& path) const;
};

// Runs the configured problem and writes its artifacts. Returns the process
// exit code: 0 success, 1 validation error, 2 solver error.
int run_problem(const RunConfig& config, bool simulate, std::ostream& log);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Bundled invariant suite behind the `check` subcommand.
std::vector<CheckResult> run_invariant_checks(std::ostream& log);

}  // namespace selfsim
