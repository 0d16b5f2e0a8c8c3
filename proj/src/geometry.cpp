#include "lieframe/geometry.hpp"

#include <cmath>
#include <random>

#include "lieframe/exact_linalg.hpp"

namespace lieframe {

namespace {

Eigen::VectorXd bracket_num(const StructureConstants& c,
                            const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b) {
  const int n = c.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (a(k) == 0 || b(l) == 0) continue;
      for (int m = 0; m < n; ++m) {
        const Rat& cv = c.c(m, k, l);
        if (cv != 0) out(m) += to_double(cv) * a(k) * b(l);
      }
    }
  return out;
}

}  // namespace

Eigen::VectorXd bch_compose(const StructureConstants& c,
                            const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b) {
  const Eigen::VectorXd ab = bracket_num(c, a, b);
  return a + b + 0.5 * ab +
         (bracket_num(c, a, ab) - bracket_num(c, b, ab)) / 12.0;
}

GroupGeometry::GroupGeometry(const Representation& rep, GeometryConfig cfg)
    : rep_(&rep), cfg_(cfg), omega_(rep.numeric_matrices()) {
  const int n = rep.dim();
  RatMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat dot = 0;
      const RatMatrix& a = rep.matrices[i];
      const RatMatrix& b = rep.matrices[j];
      for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index col = 0; col < a.cols(); ++col)
          dot += a(r, col) * b(r, col);
      gram(i, j) = dot;
    }
  gram_inverse_ = to_double_matrix(exact_inverse(gram));
}

GroupElement GroupGeometry::element(const Eigen::VectorXd& alpha) const {
  if (alpha.norm() > cfg_.neighborhood_radius)
    throw CoordinatesError("coordinates leave the identity neighborhood");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep_->rep_dim, rep_->rep_dim);
  for (int k = 0; k < rep_->dim(); ++k) m += alpha(k) * omega_[k];
  return GroupElement{alpha, exp_scaling_squaring(m)};
}

Eigen::VectorXd GroupGeometry::project_onto_span(const Eigen::MatrixXd& l,
                                                 double* residual) const {
  const int n = rep_->dim();
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) v(k) = (omega_[k].array() * l.array()).sum();
  const Eigen::VectorXd coords = gram_inverse_ * v;
  if (residual != nullptr) {
    Eigen::MatrixXd back = Eigen::MatrixXd::Zero(l.rows(), l.cols());
    for (int k = 0; k < n; ++k) back += coords(k) * omega_[k];
    *residual = frobenius(l - back);
  }
  return coords;
}

ComposeResult GroupGeometry::compose(const Eigen::VectorXd& a,
                                     const Eigen::VectorXd& b) const {
  const GroupElement ga = element(a);
  const GroupElement gb = element(b);
  const Eigen::MatrixXd log_product = log_principal(ga.matrix * gb.matrix);
  ComposeResult out;
  out.phi = project_onto_span(log_product, &out.residual);
  if (out.residual > cfg_.tol_projection)
    throw CoordinatesError(
        "projection residual above threshold; coordinates too large for the "
        "identity chart");
  return out;
}

Eigen::VectorXd GroupGeometry::inverse_coordinates(
    const Eigen::VectorXd& a) const {
  const GroupElement ga = element(a);
  const Eigen::MatrixXd inv = ga.matrix.partialPivLu().inverse();
  double residual = 0;
  const Eigen::VectorXd coords =
      project_onto_span(log_principal(inv), &residual);
  if (residual > cfg_.tol_projection)
    throw CoordinatesError("inverse projection residual above threshold");
  return coords;
}

namespace {

// Central difference with one Richardson extrapolation level.
Eigen::VectorXd richardson_dir(
    const std::function<Eigen::VectorXd(double)>& f, double h) {
  const Eigen::VectorXd d1 = (f(h) - f(-h)) / (2 * h);
  const Eigen::VectorXd d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4 * d2 - d1) / 3;
}

Eigen::MatrixXd richardson_dir_mat(
    const std::function<Eigen::MatrixXd(double)>& f, double h) {
  const Eigen::MatrixXd d1 = (f(h) - f(-h)) / (2 * h);
  const Eigen::MatrixXd d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4 * d2 - d1) / 3;
}

}  // namespace

Eigen::MatrixXd GroupGeometry::killing_frame(const Eigen::VectorXd& x) const {
  const int n = rep_->dim();
  Eigen::MatrixXd frame(n, n);
  for (int lambda = 0; lambda < n; ++lambda) {
    frame.col(lambda) = richardson_dir(
        [&](double t) {
          Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
          beta(lambda) = t;
          return compose(x, beta).phi;
        },
        cfg_.inner_step);
  }
  return frame;
}

Eigen::MatrixXd GroupGeometry::invariant_frame(const Eigen::VectorXd& x) const {
  const int n = rep_->dim();
  Eigen::MatrixXd frame(n, n);
  for (int lambda = 0; lambda < n; ++lambda) {
    frame.col(lambda) = richardson_dir(
        [&](double t) {
          Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
          beta(lambda) = t;
          return compose(beta, x).phi;
        },
        cfg_.inner_step);
  }
  return frame;
}

Eigen::MatrixXd GroupGeometry::coframe(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd eta = invariant_frame(x);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(eta);
  const Eigen::MatrixXd sigma = lu.inverse();
  if (!sigma.allFinite() ||
      frobenius(sigma * eta - Eigen::MatrixXd::Identity(eta.rows(),
                                                        eta.cols())) >
          cfg_.tol_duality)
    throw ChartBoundaryError("invariant frame is singular at this point");
  return sigma;
}

Eigen::MatrixXd GroupGeometry::connecting_matrix(
    const Eigen::VectorXd& x) const {
  // eta_lambda = c_lambda^tau xi_tau, so c^T = xi^{-1} eta.
  const Eigen::MatrixXd xi = killing_frame(x);
  const Eigen::MatrixXd eta = invariant_frame(x);
  return (xi.partialPivLu().solve(eta)).transpose();
}

FrameSample GroupGeometry::frame_sample(const Eigen::VectorXd& x) const {
  FrameSample s;
  s.point = x;
  s.xi = killing_frame(x);
  s.eta = invariant_frame(x);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(s.eta);
  s.sigma = lu.inverse();
  s.cmat = (s.xi.partialPivLu().solve(s.eta)).transpose();
  return s;
}

std::vector<Eigen::VectorXd> GroupGeometry::sample_points() const {
  const int n = rep_->dim();
  std::mt19937_64 rng(cfg_.seed);
  std::uniform_real_distribution<double> dist(-cfg_.sample_radius,
                                              cfg_.sample_radius);
  std::vector<Eigen::VectorXd> points;
  while (static_cast<int>(points.size()) < cfg_.sample_count) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = dist(rng);
    if (x.norm() <= cfg_.sample_radius) points.push_back(x);
  }
  return points;
}

GroupGeometry::Recovery GroupGeometry::recover_structure_constants(
    bool from_eta) const {
  const int n = rep_->dim();
  Recovery out;
  out.constants.assign(n, Eigen::MatrixXd::Zero(n, n));
  int used_points = 0;

  for (const auto& x : sample_points()) {
    const auto frame_at = [&](const Eigen::VectorXd& p) {
      return from_eta ? invariant_frame(p) : killing_frame(p);
    };
    const Eigen::MatrixXd frame = frame_at(x);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(frame);
    const double rcond = 1.0 / (frame.norm() * lu.inverse().norm());
    if (rcond < 1e-6) continue;  // reject ill-conditioned sample

    std::vector<Eigen::MatrixXd> dframe(n);
    for (int sigma = 0; sigma < n; ++sigma) {
      dframe[sigma] = richardson_dir_mat(
          [&](double t) {
            Eigen::VectorXd shifted = x;
            shifted(sigma) += t;
            return frame_at(shifted);
          },
          cfg_.outer_step);
    }

    ++used_points;
    for (int kappa = 0; kappa < n; ++kappa)
      for (int lambda = kappa + 1; lambda < n; ++lambda) {
        Eigen::VectorXd bracket = Eigen::VectorXd::Zero(n);
        for (int tau = 0; tau < n; ++tau)
          for (int sigma = 0; sigma < n; ++sigma)
            bracket(tau) += frame(sigma, kappa) * dframe[sigma](tau, lambda) -
                            frame(sigma, lambda) * dframe[sigma](tau, kappa);
        const Eigen::VectorXd coeffs = lu.solve(bracket);
        for (int mu = 0; mu < n; ++mu) {
          const double expected =
              (from_eta ? -1.0 : 1.0) *
              to_double(rep_->algebra.constants.c(mu, kappa, lambda));
          out.max_deviation =
              std::max(out.max_deviation, std::abs(coeffs(mu) - expected));
          out.constants[mu](kappa, lambda) += coeffs(mu);
          out.constants[mu](lambda, kappa) -= coeffs(mu);
        }
      }
  }
  if (used_points == 0)
    throw ChartBoundaryError(
        "no well-conditioned sample points for structure recovery");
  for (auto& m : out.constants) m /= used_points;
  return out;
}

namespace {

struct MaxTracker {
  double value = 0;
  void feed(double v) { value = std::max(value, std::abs(v)); }
  void feed_norm(const Eigen::MatrixXd& m) { value = std::max(value, m.cwiseAbs().maxCoeff()); }
};

}  // namespace

IdentityReport GroupGeometry::verify_identities() const {
  const int n = rep_->dim();
  IdentityReport report;
  const auto points = sample_points();
  report.sample_count = static_cast<int>(points.size());
  report.fd_step = cfg_.outer_step;

  auto add_check = [&](const std::string& name, double residual,
                       double threshold) {
    report.checks.push_back(
        CheckResult{name, residual, threshold, residual <= threshold});
  };

  // Identity element and inverse round trip.
  {
    MaxTracker right, left, inv, proj;
    for (const auto& x : points) {
      const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
      const auto r = compose(x, zero);
      const auto l = compose(zero, x);
      proj.feed(r.residual);
      proj.feed(l.residual);
      right.feed((r.phi - x).norm());
      left.feed((l.phi - x).norm());
      const Eigen::VectorXd xinv = inverse_coordinates(x);
      const Eigen::MatrixXd prod = element(x).matrix * element(xinv).matrix;
      inv.feed(frobenius(prod - Eigen::MatrixXd::Identity(rep_->rep_dim,
                                                          rep_->rep_dim)));
    }
    add_check("right_identity", right.value, cfg_.tol_identity);
    add_check("left_identity", left.value, cfg_.tol_identity);
    add_check("inverse_roundtrip", inv.value, cfg_.tol_inverse);

    // Associativity at ten seeded triples, drawn tighter so the triple
    // products stay well inside the chart.
    MaxTracker assoc;
    std::mt19937_64 rng(cfg_.seed + 1);
    std::uniform_real_distribution<double> dist(-0.3 * cfg_.sample_radius,
                                                0.3 * cfg_.sample_radius);
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::VectorXd a(n), b(n), c(n);
      for (int i = 0; i < n; ++i) {
        a(i) = dist(rng);
        b(i) = dist(rng);
        c(i) = dist(rng);
      }
      const auto ab = compose(a, b);
      const auto bc = compose(b, c);
      proj.feed(ab.residual);
      proj.feed(bc.residual);
      assoc.feed((compose(ab.phi, c).phi - compose(a, bc.phi).phi).norm());
    }
    add_check("associativity", assoc.value, cfg_.tol_assoc);
    add_check("log_projection", proj.value, cfg_.tol_projection);
  }

  // Frame boundary values at the identity.
  {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    MaxTracker boundary;
    boundary.feed_norm(killing_frame(zero) - id);
    boundary.feed_norm(invariant_frame(zero) - id);
    boundary.feed_norm(connecting_matrix(zero) - id);
    add_check("frame_boundary", boundary.value, cfg_.tol_boundary);
  }

  // Pointwise identities.
  MaxTracker commute, duality, lie_xi, lie_eta, mc_h, mc_h2;
  for (const auto& x : points) {
    const Eigen::MatrixXd xi = killing_frame(x);
    const Eigen::MatrixXd eta = invariant_frame(x);
    const Eigen::MatrixXd sigma = coframe(x);
    duality.feed_norm(sigma * eta - Eigen::MatrixXd::Identity(n, n));

    std::vector<Eigen::MatrixXd> dxi(n), deta(n), dsigma(n);
    for (int s = 0; s < n; ++s) {
      auto shift = [&](double t) {
        Eigen::VectorXd p = x;
        p(s) += t;
        return p;
      };
      dxi[s] = richardson_dir_mat(
          [&](double t) { return killing_frame(shift(t)); }, cfg_.outer_step);
      deta[s] = richardson_dir_mat(
          [&](double t) { return invariant_frame(shift(t)); },
          cfg_.outer_step);
      dsigma[s] = richardson_dir_mat(
          [&](double t) { return coframe(shift(t)); }, cfg_.outer_step);
    }

    // (i) [xi_kappa, eta_lambda] = 0.
    for (int kappa = 0; kappa < n; ++kappa)
      for (int lambda = 0; lambda < n; ++lambda)
        for (int tau = 0; tau < n; ++tau) {
          double acc = 0;
          for (int s = 0; s < n; ++s)
            acc += xi(s, kappa) * deta[s](tau, lambda) -
                   eta(s, lambda) * dxi[s](tau, kappa);
          commute.feed(acc);
        }

    // (iv) Lie drags of the coframe along xi and eta.
    for (int kappa = 0; kappa < n; ++kappa)
      for (int rho = 0; rho < n; ++rho)
        for (int mu = 0; mu < n; ++mu) {
          double along_xi = 0, along_eta = 0;
          for (int s = 0; s < n; ++s) {
            along_xi += xi(s, kappa) * dsigma[s](rho, mu) +
                        sigma(rho, s) * dxi[mu](s, kappa);
            along_eta += eta(s, kappa) * dsigma[s](rho, mu) +
                         sigma(rho, s) * deta[mu](s, kappa);
          }
          lie_xi.feed(along_xi);
          double expected = 0;
          for (int tau = 0; tau < n; ++tau)
            expected +=
                to_double(rep_->algebra.constants.c(rho, kappa, tau)) *
                sigma(tau, mu);
          lie_eta.feed(along_eta - expected);
        }

    // (v) Maurer-Cartan with plain central differences at two steps, the
    // second-order convergence instrument.
    auto mc_residual = [&](double h) {
      MaxTracker local;
      std::vector<Eigen::MatrixXd> ds(n);
      for (int s = 0; s < n; ++s) {
        Eigen::VectorXd plus = x, minus = x;
        plus(s) += h;
        minus(s) -= h;
        ds[s] = (coframe(plus) - coframe(minus)) / (2 * h);
      }
      for (int lambda = 0; lambda < n; ++lambda)
        for (int mu = 0; mu < n; ++mu)
          for (int nu = mu + 1; nu < n; ++nu) {
            const double lhs = ds[mu](lambda, nu) - ds[nu](lambda, mu);
            double rhs = 0;
            for (int r = 0; r < n; ++r)
              for (int t = 0; t < n; ++t) {
                const double c =
                    to_double(rep_->algebra.constants.c(lambda, r, t));
                if (c != 0) rhs += 0.5 * c * (sigma(r, mu) * sigma(t, nu) -
                                              sigma(r, nu) * sigma(t, mu));
              }
            local.feed(lhs - rhs);
          }
      return local.value;
    };
    mc_h.feed(mc_residual(cfg_.outer_step));
    mc_h2.feed(mc_residual(cfg_.outer_step / 2));
  }

  add_check("xi_eta_commute", commute.value, cfg_.tol_commute);
  add_check("duality", duality.value, cfg_.tol_duality);
  add_check("lie_drag_xi_sigma", lie_xi.value, cfg_.tol_lie_drag);
  add_check("lie_drag_eta_sigma", lie_eta.value, cfg_.tol_lie_drag);
  add_check("maurer_cartan", mc_h.value, cfg_.tol_maurer_cartan);

  // Second-order convergence: halving the step divides the residual by ~4,
  // unless both residuals are already at the noise floor.
  const double floor = 1e-6;
  report.maurer_cartan_ratio =
      mc_h2.value > 0 ? mc_h.value / mc_h2.value : 4.0;
  report.maurer_cartan_second_order =
      report.maurer_cartan_ratio >= 3.0 || mc_h2.value <= floor;

  // Structure-constant recovery from both frame families.
  add_check("structure_constants_xi",
            recover_structure_constants(false).max_deviation, cfg_.tol_recover);
  add_check("structure_constants_eta",
            recover_structure_constants(true).max_deviation, cfg_.tol_recover);

  return report;
}

double GroupGeometry::invariant_metric_residual(
    const Eigen::MatrixXd& gamma) const {
  return invariant_metric_residual(
      [&](const Eigen::VectorXd&) { return gamma; });
}

double GroupGeometry::invariant_metric_residual(
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& gamma)
    const {
  const int n = rep_->dim();
  auto metric = [&](const Eigen::VectorXd& p) -> Eigen::MatrixXd {
    const Eigen::MatrixXd s = coframe(p);
    return s.transpose() * gamma(p) * s;
  };
  MaxTracker tracker;
  for (const auto& x : sample_points()) {
    const Eigen::MatrixXd xi = killing_frame(x);
    const Eigen::MatrixXd g = metric(x);
    std::vector<Eigen::MatrixXd> dg(n), dxi(n);
    for (int s = 0; s < n; ++s) {
      auto shift = [&](double t) {
        Eigen::VectorXd p = x;
        p(s) += t;
        return p;
      };
      dg[s] = richardson_dir_mat([&](double t) { return metric(shift(t)); },
                                 cfg_.outer_step);
      dxi[s] = richardson_dir_mat(
          [&](double t) { return killing_frame(shift(t)); }, cfg_.outer_step);
    }
    for (int kappa = 0; kappa < n; ++kappa)
      for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu) {
          double acc = 0;
          for (int s = 0; s < n; ++s)
            acc += xi(s, kappa) * dg[s](mu, nu) +
                   g(s, nu) * dxi[mu](s, kappa) + g(mu, s) * dxi[nu](s, kappa);
          tracker.feed(acc);
        }
  }
  return tracker.value;
}

}  // namespace lieframe
