#ifndef LIEFRAME_ADO_HPP
#define LIEFRAME_ADO_HPP

#include "lieframe/functionals.hpp"
#include "lieframe/representation.hpp"

namespace lieframe {

enum class AbelianStyle { nilpotent, diagonal };

/// Adjoint representation (Omega_k)^m_n = C^m_{kn}; faithful only for a
/// trivial center, otherwise throws NotFaithfulError.
Representation adjoint_representation(const AlgebraDescriptor& a);

/// Representation of the n-dimensional abelian algebra: first-row nilpotent
/// matrices e^{n+1}_{1,i+1} or diagonal units e^n_{i,i}.
Representation abelian_representation(int n, AbelianStyle style);

/// Extends a faithful representation of the ideal to the semidirect sum with
/// one external generator, through the closure of the coefficient functionals
/// under the Sigma-action. The returned representation has the ideal
/// generators first and the external generator last.
Representation extend_representation(const Representation& rho0,
                                     const ExtensionContext& ctx);

/// Case dispatch: abelian -> diagonal; trivial center -> adjoint;
/// decomposable -> direct sum of recursive builds; solvable indecomposable ->
/// chain extension along a derived-series flag. Always returns a
/// representation passing the exact bracket and faithfulness checks.
Representation build_representation(const AlgebraDescriptor& a);

/// Direct sum with block-diagonal matrices, blocks in the given order;
/// generator k of the result is the k-th original basis vector.
Representation direct_sum(const AlgebraDescriptor& whole,
                          const std::vector<std::vector<int>>& blocks,
                          const std::vector<Representation>& parts);

/// The ordered flag basis used by the chain builder: columns are the flag
/// vectors, refining the derived series so every prefix is an ideal in the
/// next one.
RatMatrix derived_flag(const StructureConstants& c);

}  // namespace lieframe

#endif
