#include "lieframe/golden.hpp"

#include <cmath>
#include <random>

#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {

std::map<std::string, Expression> param_bindings(const ParamMap& params) {
  std::map<std::string, Expression> out;
  for (const auto& [k, v] : params) {
    if (k == "alpha")
      out["al"] = Expression::constant(v);
    else if (k == "beta")
      out["be"] = Expression::constant(v);
    else
      out[k] = Expression::constant(v);
  }
  return out;
}

std::vector<VectorField> parse_fields(
    const std::vector<std::vector<std::string>>& rows,
    const std::map<std::string, Expression>& params) {
  std::vector<VectorField> out;
  for (const auto& row : rows) {
    VectorField field;
    for (const auto& s : row) field.push_back(parse_expression(s, params));
    out.push_back(std::move(field));
  }
  return out;
}

const FrameTable& table_for(const std::string& canonical_key) {
  for (const auto& t : golden_tables())
    if (t.key == canonical_key) return t;
  throw CatalogError("no frame table for catalog key '" + canonical_key + "'");
}

}  // namespace

SymbolicFrame golden_frame(const std::string& name, const ParamMap& params) {
  const AlgebraDescriptor d = catalog_lookup(name, params);
  const FrameTable& t = table_for(d.name);
  const auto bindings = param_bindings(d.params);
  SymbolicFrame frame;
  frame.algebra = d;
  frame.xi = parse_fields(t.xi, bindings);
  frame.eta = parse_fields(t.eta, bindings);
  frame.sigma = parse_fields(t.sigma, bindings);
  for (int i = 0; i < d.constants.dim(); ++i)
    frame.box.ranges.emplace_back(-t.box_halfwidth, t.box_halfwidth);
  return frame;
}

std::optional<Representation> golden_representation(const std::string& name,
                                                    const ParamMap& params) {
  const AlgebraDescriptor d = catalog_lookup(name, params);
  const FrameTable& t = table_for(d.name);
  if (t.rep_dim == 0) return std::nullopt;
  const auto bindings = param_bindings(d.params);
  Representation rep;
  rep.algebra = d;
  rep.rep_dim = t.rep_dim;
  for (const auto& gen : t.rep) {
    RatMatrix m = RatMatrix::Zero(t.rep_dim, t.rep_dim);
    for (const auto& entry : gen)
      m(entry.i - 1, entry.j - 1) +=
          parse_expression(entry.coeff, bindings).eval_rational();
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

namespace {

struct SuiteRunner {
  const SymbolicFrame& frame;
  int trials;
  double tol;
  std::uint64_t seed;
  std::uint64_t counter = 0;
  CatalogVerifyReport report;

  void check(SuiteOutcome& outcome, const Expression& lhs,
             const Expression& rhs) {
    const auto r = expr_equal(lhs, rhs, frame.box, trials, tol, seed + ++counter);
    outcome.max_deviation = std::max(outcome.max_deviation, r.max_deviation);
    if (!r.equal && outcome.pass) {
      outcome.pass = false;
      outcome.witness = r.witness;
    }
  }

  Expression constant_combo(const std::vector<VectorField>& fields, int tau,
                            int kappa, int lambda, const Rat& sign) {
    std::vector<Expression> parts;
    const auto& c = frame.algebra.constants;
    for (int mu = 0; mu < c.dim(); ++mu) {
      const Rat& v = c.c(mu, kappa, lambda);
      if (v != 0)
        parts.push_back(Expression::constant(sign * v) * fields[mu][tau]);
    }
    return Expression::sum(std::move(parts));
  }

  void run() {
    const int n = frame.algebra.constants.dim();

    SuiteOutcome xi_suite{"xi_bracket"};
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        const VectorField br = field_bracket(frame.xi[k], frame.xi[l]);
        for (int t = 0; t < n; ++t)
          check(xi_suite, br[t], constant_combo(frame.xi, t, k, l, Rat(1)));
      }
    report.suites.push_back(std::move(xi_suite));

    SuiteOutcome eta_suite{"eta_bracket"};
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        const VectorField br = field_bracket(frame.eta[k], frame.eta[l]);
        for (int t = 0; t < n; ++t)
          check(eta_suite, br[t], constant_combo(frame.eta, t, k, l, Rat(-1)));
      }
    report.suites.push_back(std::move(eta_suite));

    SuiteOutcome mixed{"xi_eta_commute"};
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const VectorField br = field_bracket(frame.xi[k], frame.eta[l]);
        for (int t = 0; t < n; ++t)
          check(mixed, br[t], Expression::constant(0));
      }
    report.suites.push_back(std::move(mixed));

    SuiteOutcome duality{"duality"};
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        std::vector<Expression> parts;
        for (int t = 0; t < n; ++t)
          parts.push_back(frame.eta[k][t] * frame.sigma[l][t]);
        check(duality, Expression::sum(std::move(parts)),
              Expression::constant(k == l ? 1 : 0));
      }
    report.suites.push_back(std::move(duality));

    SuiteOutcome mc{"maurer_cartan"};
    const auto& c = frame.algebra.constants;
    for (int l = 0; l < n; ++l)
      for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
          const Expression lhs =
              differentiate(frame.sigma[l][nu], mu) -
              differentiate(frame.sigma[l][mu], nu);
          std::vector<Expression> parts;
          for (int r = 0; r < n; ++r)
            for (int t = 0; t < n; ++t) {
              const Rat& v = c.c(l, r, t);
              if (v == 0) continue;
              parts.push_back(Expression::constant(v / 2) *
                              (frame.sigma[r][mu] * frame.sigma[t][nu] -
                               frame.sigma[r][nu] * frame.sigma[t][mu]));
            }
          check(mc, lhs, Expression::sum(std::move(parts)));
        }
    report.suites.push_back(std::move(mc));
  }
};

}  // namespace

CatalogVerifyReport verify_frame(const SymbolicFrame& frame, int trials,
                                 double tol, std::uint64_t seed) {
  SuiteRunner runner{frame, trials, tol, seed};
  runner.report.key = frame.algebra.name;
  runner.run();
  return runner.report;
}

CatalogVerifyReport verify_catalog_entry(const std::string& name,
                                         const ParamMap& params, int trials,
                                         double tol, std::uint64_t seed) {
  return verify_frame(golden_frame(name, params), trials, tol, seed);
}

namespace {

// Composition rule of the stored chart; the fourth coordinate is additive.
Eigen::Vector4d a410_phi(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  Eigen::Vector4d phi;
  const double cb = std::cos(b(3)), sb = std::sin(b(3));
  phi(0) = a(0) + b(0) + a(1) * b(2) * cb + a(2) * sb * (b(2) - a(1) * sb) +
           0.25 * (-a(1) * a(1) + a(2) * a(2)) * std::sin(2 * b(3));
  phi(1) = a(2) * sb + a(1) * cb + b(1);
  phi(2) = -a(1) * sb + a(2) * cb + b(2);
  phi(3) = a(3) + b(3);
  return phi;
}

Eigen::MatrixXd eval_matrix(const std::vector<std::vector<Expression>>& m,
                            const std::vector<double>& point) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j].eval(point);
  return out;
}

}  // namespace

A410Report verify_a410_closed_form(const Representation& rep, int samples,
                                   std::uint64_t seed) {
  if (rep.rep_dim != 6)
    throw std::invalid_argument(
        "verify_a410_closed_form needs the six-dimensional build");
  const auto& matrix = a410_group_matrix();
  const auto& theta = a410_theta_map();
  const Eigen::MatrixXd& p = a410_basis_map();
  const Eigen::MatrixXd p_inv = p.inverse();
  const auto omega = rep.numeric_matrices();

  A410Report report;
  report.samples = samples;
  report.basis_map_applied = true;
  report.convention_note =
      "stored matrix compared through the automorphism (x2,x3)->(x3,-x2) and "
      "its signed permutation of the functional basis";

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> small(-1.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.1, 2.0);

  auto draw = [&]() {
    std::vector<double> alpha(4);
    for (int i = 0; i < 3; ++i) alpha[i] = small(rng);
    alpha[3] = wdist(rng) * (small(rng) < 0 ? -1.0 : 1.0);
    return alpha;
  };

  for (int trial = 0; trial < samples; ++trial) {
    const auto alpha = draw();
    // Substitution components, pushed through the coordinate automorphism.
    const double t1 = theta[0].eval(alpha);
    const double t2 = theta[1].eval(alpha);
    const double t3 = theta[2].eval(alpha);
    const double t4 = theta[3].eval(alpha);
    const Eigen::MatrixXd combo =
        t1 * omega[0] + t3 * omega[1] - t2 * omega[2] + t4 * omega[3];
    const Eigen::MatrixXd computed = p_inv * exp_scaling_squaring(combo) * p;
    const Eigen::MatrixXd stored = eval_matrix(matrix, alpha);
    report.max_exp_deviation = std::max(
        report.max_exp_deviation, (computed - stored).cwiseAbs().maxCoeff());
  }

  // Composition rule against the matrix product, pure table consistency.
  std::uniform_real_distribution<double> half(-0.5, 0.5);
  for (int trial = 0; trial < samples; ++trial) {
    Eigen::Vector4d a, b;
    for (int i = 0; i < 4; ++i) {
      a(i) = half(rng);
      b(i) = half(rng);
    }
    const std::vector<double> pa{a(0), a(1), a(2), a(3)};
    const std::vector<double> pb{b(0), b(1), b(2), b(3)};
    const Eigen::Vector4d phi = a410_phi(a, b);
    const std::vector<double> pphi{phi(0), phi(1), phi(2), phi(3)};
    const Eigen::MatrixXd lhs = eval_matrix(matrix, pa) * eval_matrix(matrix, pb);
    const Eigen::MatrixXd rhs = eval_matrix(matrix, pphi);
    report.max_product_deviation = std::max(
        report.max_product_deviation, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return report;
}

}  // namespace lieframe
