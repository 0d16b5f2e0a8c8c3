#ifndef LIEFRAME_GEOMETRY_HPP
#define LIEFRAME_GEOMETRY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lieframe/numeric.hpp"
#include "lieframe/representation.hpp"

namespace lieframe {

class CoordinatesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ChartBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerances and discretization knobs of the floating-point pipeline, kept
/// in one place. The inner step differentiates the composition function, the
/// outer step differentiates frame entries.
struct GeometryConfig {
  double neighborhood_radius = 2.0;
  double inner_step = 1e-5;
  double outer_step = 2e-3;
  double sample_radius = 0.4;
  int sample_count = 6;
  std::uint64_t seed = 20240817;

  double tol_identity = 1e-10;
  double tol_boundary = 1e-7;
  double tol_assoc = 1e-7;
  double tol_projection = 1e-8;
  double tol_inverse = 1e-9;
  double tol_duality = 1e-9;
  double tol_commute = 1e-5;
  double tol_recover = 1e-5;
  double tol_lie_drag = 1e-4;
  double tol_maurer_cartan = 1e-4;
  double tol_metric = 1e-4;
  double tol_bch = 1e-10;
};

/// Group element in canonical coordinates of the first kind.
struct GroupElement {
  Eigen::VectorXd coordinates;
  Eigen::MatrixXd matrix;
};

struct ComposeResult {
  Eigen::VectorXd phi;
  double residual = 0;
};

/// Frame data at one point: columns of xi/eta are the field components,
/// rows of sigma are the coframe components, and eta = (cmat row lambda) . xi.
struct FrameSample {
  Eigen::VectorXd point;
  Eigen::MatrixXd xi;
  Eigen::MatrixXd eta;
  Eigen::MatrixXd sigma;
  Eigen::MatrixXd cmat;
};

struct CheckResult {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<CheckResult> checks;
  double maurer_cartan_ratio = 0;  // residual(h) / residual(h/2)
  bool maurer_cartan_second_order = false;
  int sample_count = 0;
  double fd_step = 0;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return maurer_cartan_second_order;
  }
};

/// Truncated BCH composition a*b = a + b + [a,b]/2 + ([a,[a,b]] -
/// [b,[a,b]])/12, exact for the nilpotent catalog entries; the independent
/// oracle for compose().
Eigen::VectorXd bch_compose(const StructureConstants& c,
                            const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Floating-point pipeline of one representation: exponentials, the group
/// composition function, frames, coframes and the identity battery.
class GroupGeometry {
 public:
  explicit GroupGeometry(const Representation& rep, GeometryConfig cfg = {});

  const Representation& rep() const { return *rep_; }
  const GeometryConfig& config() const { return cfg_; }

  GroupElement element(const Eigen::VectorXd& alpha) const;
  ComposeResult compose(const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b) const;
  /// Coordinates of the group inverse (log of the matrix inverse).
  Eigen::VectorXd inverse_coordinates(const Eigen::VectorXd& a) const;

  Eigen::MatrixXd killing_frame(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd invariant_frame(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd coframe(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd connecting_matrix(const Eigen::VectorXd& x) const;
  FrameSample frame_sample(const Eigen::VectorXd& x) const;

  struct Recovery {
    std::vector<Eigen::MatrixXd> constants;  // constants[mu](kappa, lambda)
    double max_deviation = 0;
  };
  /// Recovers C^mu_{kappa lambda} from frame brackets at the sample points;
  /// from eta frames the recovered constants are compared against -C.
  Recovery recover_structure_constants(bool from_eta) const;

  IdentityReport verify_identities() const;

  /// Max Killing-equation residual of gamma_{ab} sigma^a sigma^b over the
  /// sample points, gamma constant.
  double invariant_metric_residual(const Eigen::MatrixXd& gamma) const;
  /// Same with a position-dependent gamma; used to show that non-constant
  /// gamma breaks invariance.
  double invariant_metric_residual(
      const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& gamma)
      const;

  std::vector<Eigen::VectorXd> sample_points() const;

 private:
  Eigen::VectorXd project_onto_span(const Eigen::MatrixXd& l,
                                    double* residual) const;
  const Representation* rep_;
  GeometryConfig cfg_;
  std::vector<Eigen::MatrixXd> omega_;
  Eigen::MatrixXd gram_inverse_;  // exact Gram of vec(Omega), inverted once
};

}  // namespace lieframe

#endif
