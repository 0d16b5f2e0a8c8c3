#ifndef LIEFRAME_REPRESENTATION_HPP
#define LIEFRAME_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "lieframe/catalog.hpp"

#include <nlohmann/json_fwd.hpp>

namespace lieframe {

class NotFaithfulError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedAlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A faithful matrix representation: n exact rep_dim x rep_dim matrices
/// Omega_k with [Omega_k, Omega_l] = C^m_{kl} Omega_m and linearly
/// independent images.
struct Representation {
  AlgebraDescriptor algebra;
  int rep_dim = 0;
  std::vector<RatMatrix> matrices;
  std::vector<std::string> basis_labels;  // functional basis, when built

  int dim() const { return static_cast<int>(matrices.size()); }

  /// Omega_k Omega_l - Omega_l Omega_k - C^m_{kl} Omega_m, exact.
  RatMatrix bracket_residual(int k, int l) const;
  bool bracket_homomorphism_holds() const;
  /// Exact rank of {vec(Omega_1), ..., vec(Omega_n)}.
  int faithfulness_rank() const;
  bool is_faithful() const { return faithfulness_rank() == dim(); }

  /// Numeric copies of the matrices for the floating-point pipeline.
  std::vector<Eigen::MatrixXd> numeric_matrices() const;

  /// Combination a^k Omega_k.
  RatMatrix combine(const RatVector& coords) const;
};

nlohmann::json representation_to_json(const Representation& rep);

}  // namespace lieframe

#endif
