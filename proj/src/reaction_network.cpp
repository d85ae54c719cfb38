#include "selfsim/reaction_network.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

double power_product(const Eigen::VectorXd& c, const Eigen::VectorXd& e) {
  double p = 1.0;
  for (int i = 0; i < c.size(); ++i) {
    if (e[i] != 0.0) p *= std::pow(c[i], e[i]);
  }
  return p;
}

void require_nonnegative(const Eigen::VectorXd& v, const char* what) {
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) {
      std::ostringstream msg;
      msg << what << " has negative component " << i << " = " << v[i];
      throw std::domain_error(msg.str());
    }
  }
}

}  // namespace

double Reaction::net_rate(const Eigen::VectorXd& c) const {
  return rate_constant * (power_product(c, backward) - power_product(c, forward));
}

Eigen::VectorXd Reaction::net_rate_gradient(const Eigen::VectorXd& c) const {
  const int n = static_cast<int>(c.size());
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double ci = std::max(c[i], 1e-300);
    double term = 0.0;
    if (backward[i] != 0.0) {
      term += backward[i] * power_product(c, backward) / ci;
    }
    if (forward[i] != 0.0) {
      term -= forward[i] * power_product(c, forward) / ci;
    }
    g[i] = rate_constant * term;
  }
  return g;
}

ReactionNetwork::ReactionNetwork(int species_count,
                                 std::vector<Reaction> reactions,
                                 Eigen::MatrixXd stoichiometric_map,
                                 NetworkKind kind)
    : species_count_(species_count),
      reactions_(std::move(reactions)),
      stoich_(std::move(stoichiometric_map)),
      kind_(kind) {
  if (species_count_ <= 0) {
    throw std::invalid_argument("species count must be positive");
  }
  if (stoich_.cols() != species_count_) {
    throw std::invalid_argument("stoichiometric map has wrong column count");
  }
  for (const auto& r : reactions_) {
    if (r.forward.size() != species_count_ ||
        r.backward.size() != species_count_) {
      throw std::invalid_argument("reaction exponent size mismatch");
    }
    require_nonnegative(r.forward, "forward exponents");
    require_nonnegative(r.backward, "backward exponents");
    if (!(r.rate_constant > 0.0)) {
      throw std::invalid_argument("rate constant must be positive");
    }
  }
}

ReactionNetwork ReactionNetwork::two_species(double beta, double gamma,
                                             double kappa) {
  if (!(beta > 0.0) || !(gamma > 0.0)) {
    throw std::invalid_argument("two-species exponents must be positive");
  }
  Reaction r;
  r.forward = Eigen::Vector2d(gamma, 0.0);
  r.backward = Eigen::Vector2d(0.0, beta);
  r.rate_constant = kappa;
  Eigen::MatrixXd q(1, 2);
  q << beta, gamma;
  ReactionNetwork net(2, {r}, q, NetworkKind::TwoSpecies);
  net.beta_ = beta;
  net.gamma_ = gamma;
  return net;
}

ReactionNetwork ReactionNetwork::three_species_binary(double kappa) {
  Reaction r;
  r.forward = Eigen::Vector3d(1.0, 1.0, 0.0);
  r.backward = Eigen::Vector3d(0.0, 0.0, 1.0);
  r.rate_constant = kappa;
  Eigen::MatrixXd q(2, 3);
  q << 1, 0, 1,
       0, 1, 1;
  return ReactionNetwork(3, {r}, q, NetworkKind::ThreeSpeciesBinary);
}

ReactionNetwork ReactionNetwork::two_reaction_chain(double k1, double k2) {
  Reaction r1;
  r1.forward = Eigen::Vector3d(2.0, 0.0, 0.0);
  r1.backward = Eigen::Vector3d(0.0, 1.0, 0.0);
  r1.rate_constant = k1;
  Reaction r2;
  r2.forward = Eigen::Vector3d(0.0, 1.0, 0.0);
  r2.backward = Eigen::Vector3d(0.0, 0.0, 1.0);
  r2.rate_constant = k2;
  Eigen::MatrixXd q(1, 3);
  q << 1, 2, 2;
  return ReactionNetwork(3, {r1, r2}, q, NetworkKind::TwoReactionChain);
}

Eigen::VectorXd ReactionNetwork::rate(const Eigen::VectorXd& c) const {
  require_nonnegative(c, "concentration");
  Eigen::VectorXd r = Eigen::VectorXd::Zero(species_count_);
  for (const auto& reaction : reactions_) {
    r += reaction.net_rate(c) * reaction.direction();
  }
  return r;
}

Eigen::MatrixXd ReactionNetwork::rate_jacobian(const Eigen::VectorXd& c) const {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(species_count_, species_count_);
  for (const auto& reaction : reactions_) {
    j += reaction.direction() * reaction.net_rate_gradient(c).transpose();
  }
  return j;
}

Eigen::MatrixXd ReactionNetwork::direction_matrix() const {
  Eigen::MatrixXd d(species_count_, reaction_count());
  for (int r = 0; r < reaction_count(); ++r) {
    d.col(r) = reactions_[r].direction();
  }
  return d;
}

// Scalar equilibrium equation for the two-species pair: with c2 = c1^{g/b}
// the conserved quantity reads u = b c1 + g c1^{g/b}. Monotone in c1, solved
// by safeguarded Newton/bisection on [0, u/b].
Eigen::VectorXd ReactionNetwork::reduce_two_species(double u) const {
  const double b = beta_, g = gamma_;
  Eigen::VectorXd c(2);
  if (u == 0.0) {
    c.setZero();
    return c;
  }
  if (b == g) {
    c[0] = c[1] = u / (b + g);
    return c;
  }
  if (b == 1.0 && g == 2.0) {
    const double root = std::sqrt(1.0 + 8.0 * u);
    c[0] = 0.25 * (root - 1.0);
    c[1] = 0.125 * (1.0 + 4.0 * u - root);
    return c;
  }
  const double p = g / b;
  double lo = 0.0, hi = u / b;
  double x = 0.5 * hi;
  for (int it = 0; it < 200; ++it) {
    const double f = b * x + g * std::pow(x, p) - u;
    if (std::abs(f) <= 1e-15 * (1.0 + std::abs(u))) break;
    if (f > 0.0) hi = x; else lo = x;
    const double df = b + (g * p) * std::pow(x, p - 1.0);
    double step = x - f / df;
    x = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
  }
  c[0] = x;
  c[1] = std::pow(x, p);
  return c;
}

Eigen::VectorXd ReactionNetwork::reduce(const Eigen::VectorXd& u) const {
  if (u.size() != conserved_count()) {
    throw std::invalid_argument("conserved vector has wrong size");
  }
  require_nonnegative(u, "conserved quantity");
  switch (kind_) {
    case NetworkKind::TwoSpecies:
      return reduce_two_species(u[0]);
    case NetworkKind::ThreeSpeciesBinary: {
      const double u1 = u[0], u2 = u[1];
      const double s = std::sqrt((1.0 + u1 + u2) * (1.0 + u1 + u2) -
                                 4.0 * u1 * u2);
      Eigen::VectorXd c(3);
      c[0] = 0.5 * (u1 - u2 - 1.0 + s);
      c[1] = 0.5 * (u2 - u1 - 1.0 + s);
      c[2] = 0.5 * (u1 + u2 + 1.0 - s);
      // cancellation guard at the boundary of the cone
      for (int i = 0; i < 3; ++i) c[i] = std::max(c[i], 0.0);
      return c;
    }
    case NetworkKind::TwoReactionChain: {
      const double sigma = (std::sqrt(1.0 + 16.0 * u[0]) - 1.0) / 8.0;
      Eigen::VectorXd c(3);
      c[0] = sigma;
      c[1] = c[2] = 0.25 * (u[0] - sigma);
      return c;
    }
    case NetworkKind::Generic:
      return reduce_generic(u);
  }
  throw std::logic_error("unreachable network kind");
}

Eigen::MatrixXd ReactionNetwork::reduce_jacobian(
    const Eigen::VectorXd& u) const {
  if (u.size() != conserved_count()) {
    throw std::invalid_argument("conserved vector has wrong size");
  }
  switch (kind_) {
    case NetworkKind::TwoSpecies: {
      const double b = beta_, g = gamma_;
      Eigen::MatrixXd j(2, 1);
      if (b == g) {
        j(0, 0) = j(1, 0) = 1.0 / (b + g);
        return j;
      }
      if (b == 1.0 && g == 2.0) {
        const double root = std::sqrt(1.0 + 8.0 * std::max(u[0], 0.0));
        j(0, 0) = 1.0 / root;
        j(1, 0) = 0.5 - 0.5 / root;
        return j;
      }
      const double p = g / b;
      const double c1 = reduce_two_species(std::max(u[0], 0.0))[0];
      if (c1 == 0.0) {
        // one-sided limits at the cone tip
        if (p > 1.0) {
          j(0, 0) = 1.0 / b;
          j(1, 0) = 0.0;
        } else {
          j(0, 0) = 0.0;
          j(1, 0) = 1.0 / g;
        }
        return j;
      }
      const double dpsi1 = 1.0 / (b + g * p * std::pow(c1, p - 1.0));
      j(0, 0) = dpsi1;
      j(1, 0) = p * std::pow(c1, p - 1.0) * dpsi1;
      return j;
    }
    case NetworkKind::ThreeSpeciesBinary: {
      const double u1 = u[0], u2 = u[1];
      double s, s1, s2;
      if (u1 <= 0.0 || u2 <= 0.0) {
        // globally Lipschitz extension of the root
        s = 1.0 + u1 + u2;
        s1 = 1.0;
        s2 = 1.0;
      } else {
        s = std::sqrt((1.0 + u1 + u2) * (1.0 + u1 + u2) - 4.0 * u1 * u2);
        s1 = (1.0 + u1 - u2) / s;
        s2 = (1.0 + u2 - u1) / s;
      }
      Eigen::MatrixXd j(3, 2);
      j << 0.5 * (1.0 + s1), 0.5 * (-1.0 + s2),
           0.5 * (-1.0 + s1), 0.5 * (1.0 + s2),
           0.5 * (1.0 - s1), 0.5 * (1.0 - s2);
      return j;
    }
    case NetworkKind::TwoReactionChain: {
      const double sp = 1.0 / std::sqrt(1.0 + 16.0 * std::max(u[0], 0.0));
      Eigen::MatrixXd j(3, 1);
      j << sp, 0.25 * (1.0 - sp), 0.25 * (1.0 - sp);
      return j;
    }
    case NetworkKind::Generic:
      return reduce_jacobian_generic(u);
  }
  throw std::logic_error("unreachable network kind");
}

namespace {

// Indices of a maximal linearly independent set of direction vectors.
std::vector<int> independent_directions(const Eigen::MatrixXd& dirs) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(dirs);
  const int rank = static_cast<int>(qr.rank());
  std::vector<int> idx(rank);
  for (int k = 0; k < rank; ++k) idx[k] = static_cast<int>(qr.colsPermutation().indices()[k]);
  return idx;
}

}  // namespace

// Damped Newton on the square system {Qc - u = 0, log-equilibrium residuals}
// from the minimum-norm distribution of u over the species.
Eigen::VectorXd ReactionNetwork::reduce_generic(const Eigen::VectorXd& u) const {
  const int n = species_count_;
  const int jn = conserved_count();
  if (u.lpNorm<Eigen::Infinity>() == 0.0) return Eigen::VectorXd::Zero(n);

  const auto idx = independent_directions(direction_matrix());
  if (jn + static_cast<int>(idx.size()) != n) {
    throw std::invalid_argument(
        "generic reduction needs directions spanning ker Q");
  }
  const double floor = 1e-12 * (1.0 + u.lpNorm<Eigen::Infinity>());

  Eigen::VectorXd c =
      (stoich_.transpose() *
       (stoich_ * stoich_.transpose()).ldlt().solve(u))
          .cwiseMax(floor);

  auto residual = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(n);
    r.head(jn) = stoich_ * x - u;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& rx = reactions_[idx[k]];
      double lr = 0.0;
      for (int i = 0; i < n; ++i) {
        const double e = rx.forward[i] - rx.backward[i];
        if (e != 0.0) lr += e * std::log(x[i]);
      }
      r[jn + static_cast<int>(k)] = lr;
    }
    return r;
  };

  std::vector<double> history;
  Eigen::VectorXd r = residual(c);
  double rn = r.lpNorm<Eigen::Infinity>();
  history.push_back(rn);
  const double tol = 1e-13 * (1.0 + u.lpNorm<Eigen::Infinity>());
  for (int it = 0; it < 80; ++it) {
    if (rn < tol) return c;
    Eigen::MatrixXd jac(n, n);
    jac.topRows(jn) = stoich_;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& rx = reactions_[idx[k]];
      for (int i = 0; i < n; ++i) {
        const double e = rx.forward[i] - rx.backward[i];
        jac(jn + static_cast<int>(k), i) = e == 0.0 ? 0.0 : e / c[i];
      }
    }
    const Eigen::VectorXd step = jac.partialPivLu().solve(-r);
    double scale = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      Eigen::VectorXd trial = (c + scale * step).cwiseMax(floor);
      Eigen::VectorXd rt = residual(trial);
      const double rtn = rt.lpNorm<Eigen::Infinity>();
      if (rtn < rn) {
        c = trial;
        r = rt;
        rn = rtn;
        history.push_back(rn);
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) break;
  }
  if (rn < 1e-9 * (1.0 + u.lpNorm<Eigen::Infinity>())) return c;
  std::ostringstream msg;
  msg << "equilibrium reduction did not converge, residual " << rn;
  throw SolverError(msg.str(), history, static_cast<int>(history.size()) - 1);
}

Eigen::MatrixXd ReactionNetwork::reduce_jacobian_generic(
    const Eigen::VectorXd& u) const {
  const int n = species_count_;
  const int jn = conserved_count();
  const Eigen::VectorXd c = reduce(u).cwiseMax(1e-300);
  const auto idx = independent_directions(direction_matrix());
  Eigen::MatrixXd jac(n, n);
  jac.topRows(jn) = stoich_;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& rx = reactions_[idx[k]];
    for (int i = 0; i < n; ++i) {
      const double e = rx.forward[i] - rx.backward[i];
      jac(jn + static_cast<int>(k), i) = e == 0.0 ? 0.0 : e / c[i];
    }
  }
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, jn);
  rhs.topRows(jn) = Eigen::MatrixXd::Identity(jn, jn);
  return jac.partialPivLu().solve(rhs);
}

DiffusionMatrix::DiffusionMatrix(Eigen::VectorXd diagonal)
    : diagonal_(std::move(diagonal)) {
  for (int i = 0; i < diagonal_.size(); ++i) {
    if (!(diagonal_[i] > 0.0)) {
      throw std::domain_error("diffusion constants must be strictly positive");
    }
  }
}

DiffusionMatrix::DiffusionMatrix(std::initializer_list<double> diagonal)
    : DiffusionMatrix(Eigen::Map<const Eigen::VectorXd>(
          diagonal.begin(), static_cast<Eigen::Index>(diagonal.size()))) {}

EffectiveDiffusion::EffectiveDiffusion(ReactionNetwork network,
                                       DiffusionMatrix diffusion)
    : network_(std::move(network)), diffusion_(std::move(diffusion)) {
  if (diffusion_.size() != network_.species_count()) {
    throw std::invalid_argument("diffusion matrix size mismatch");
  }
}

Eigen::VectorXd EffectiveDiffusion::value(const Eigen::VectorXd& u) const {
  return network_.stoichiometric_map() *
         (diffusion_.diagonal().asDiagonal() * network_.reduce(u));
}

Eigen::MatrixXd EffectiveDiffusion::jacobian(const Eigen::VectorXd& u) const {
  return network_.stoichiometric_map() *
         (diffusion_.diagonal().asDiagonal() * network_.reduce_jacobian(u));
}

bool EffectiveDiffusion::clamp_to_domain(Eigen::VectorXd& u) const {
  bool changed = false;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] < 0.0) {
      u[i] = 0.0;
      changed = true;
    }
  }
  return changed;
}

MonotonicityCertificate monotonicity_certificate(
    const ReactionNetwork& network, const DiffusionMatrix& diffusion,
    const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi,
    int samples_per_axis) {
  const int dim = network.conserved_count();
  if (box_lo.size() != dim || box_hi.size() != dim) {
    throw std::domain_error("certificate box has wrong dimension");
  }
  for (int k = 0; k < dim; ++k) {
    if (!(box_lo[k] <= box_hi[k])) {
      throw std::domain_error("certificate box is empty");
    }
  }
  if (samples_per_axis < 1) {
    throw std::domain_error("certificate needs at least one sample per axis");
  }

  EffectiveDiffusion flux(network, diffusion);
  MonotonicityCertificate cert;
  cert.box_lo = box_lo;
  cert.box_hi = box_hi;
  cert.samples_per_axis = samples_per_axis;
  cert.a_lo = std::numeric_limits<double>::infinity();

  std::vector<int> odo(dim, 0);
  Eigen::VectorXd u(dim);
  while (true) {
    for (int k = 0; k < dim; ++k) {
      const double t = samples_per_axis == 1
                           ? 0.5
                           : static_cast<double>(odo[k]) / (samples_per_axis - 1);
      u[k] = box_lo[k] + t * (box_hi[k] - box_lo[k]);
    }
    const Eigen::MatrixXd da = flux.jacobian(u);
    const Eigen::MatrixXd sym = 0.5 * (da + da.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    const double lo = eig.eigenvalues().minCoeff();
    if (lo < cert.a_lo) {
      cert.a_lo = lo;
      cert.witness = u;
    }
    int k = 0;
    while (k < dim && ++odo[k] == samples_per_axis) odo[k++] = 0;
    if (k == dim) break;
  }
  return cert;
}

}  // namespace selfsim
