#ifndef LIEFRAME_STRUCTURE_CONSTANTS_HPP
#define LIEFRAME_STRUCTURE_CONSTANTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieframe/exact_linalg.hpp"
#include "lieframe/rational.hpp"

namespace lieframe {

/// Structure constants C^mu_{kappa lambda} of a real Lie algebra, stored
/// densely with the upper index first and both lower orderings materialized.
/// All indices are 0-based internally; the catalog and the JSON schema speak
/// 1-based like the tables they come from.
class StructureConstants {
 public:
  StructureConstants() : dim_(0) {}  // empty placeholder, no valid algebra
  explicit StructureConstants(int dim);

  struct Entry {
    int mu, kappa, lambda;  // 0-based
    Rat value;
  };

  /// Builds from kappa<lambda entries, materializing antisymmetry.
  static StructureConstants from_entries(int dim,
                                         const std::vector<Entry>& entries);

  /// Raw table without antisymmetric completion (for validation tests and
  /// JSON input that must be checked as-is).
  static StructureConstants from_raw_table(int dim,
                                           const std::vector<Rat>& table);

  int dim() const { return dim_; }
  const Rat& c(int mu, int kappa, int lambda) const {
    return table_[index(mu, kappa, lambda)];
  }
  /// Sets C^mu_{kappa lambda} = v and C^mu_{lambda kappa} = -v.
  void set(int mu, int kappa, int lambda, const Rat& v);

  /// [a, b]^mu = C^mu_{kappa lambda} a^kappa b^lambda.
  RatVector bracket(const RatVector& a, const RatVector& b) const;

  /// Adjoint matrix of basis vector kappa: (ad x_kappa)^mu_nu = C^mu_{kappa nu}.
  RatMatrix adjoint_matrix(int kappa) const;

  /// Constants restricted to a sub-basis given by 0-based index list
  /// (valid only when the sublist spans a subalgebra).
  StructureConstants restricted(const std::vector<int>& indices) const;

  /// Constants in a new basis y_j = sum_i basis(i,j) x_i (columns are the new
  /// basis vectors); exact change of basis.
  StructureConstants change_basis(const RatMatrix& basis) const;

  std::vector<Entry> nonzero_entries() const;  // kappa < lambda only

  bool operator==(const StructureConstants& o) const {
    return dim_ == o.dim_ && table_ == o.table_;
  }

 private:
  int index(int mu, int kappa, int lambda) const {
    return (mu * dim_ + kappa) * dim_ + lambda;
  }
  int dim_;
  std::vector<Rat> table_;
};

/// Validation report of jacobi_check. `violation` holds the first offending
/// index tuple, 1-based: (mu, kappa, lambda, -1) for antisymmetry and
/// (mu, kappa, lambda, rho) for the Jacobi sum.
struct JacobiReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  std::optional<std::array<int, 4>> violation;
  Rat residual = 0;
  bool pass() const { return antisymmetry_ok && jacobi_ok; }
};

JacobiReport jacobi_check(const StructureConstants& c);

/// Exact basis of the center: kernel of z |-> [z, x_kappa] for all kappa.
std::vector<RatVector> center(const StructureConstants& c);

/// Derived series g >= g' >= g'' >= ..., each term an exact echelon basis.
/// The first term is the whole algebra; the list ends with the first repeated
/// term (non-solvable) or with the zero term (solvable).
std::vector<std::vector<RatVector>> derived_series(const StructureConstants& c);

bool is_abelian(const StructureConstants& c);
bool is_solvable(const StructureConstants& c);

/// Finest partition of the given basis into mutually commuting ideal blocks;
/// a single block means indecomposable along this basis.
std::vector<std::vector<int>> split_direct_sum(const StructureConstants& c);

}  // namespace lieframe

#endif
