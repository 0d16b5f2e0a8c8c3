#ifndef LIEFRAME_FUNCTIONALS_HPP
#define LIEFRAME_FUNCTIONALS_HPP

#include <map>
#include <string>

#include "lieframe/pbw.hpp"

namespace lieframe {

/// Finitely supported linear functional on U(s), the building block of the
/// representation extension. Evaluation is the support-weighted sum of the
/// argument's coefficients.
struct CoefficientFunctional {
  std::map<PBWMonomial, Rat> support;
  std::string label;

  Rat evaluate(const UEAElement& a) const {
    Rat out = 0;
    for (const auto& [m, v] : support) out += v * a.coeff(m);
    return out;
  }
  bool is_zero() const { return support.empty(); }
  int max_degree() const {
    int d = 0;
    for (const auto& [m, v] : support) d = std::max(d, m.degree());
    return d;
  }
  void add(const PBWMonomial& m, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = support.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) support.erase(it);
    }
  }
  std::string str() const;
};

/// The semidirect datum s >| <h>: straightening for the ideal plus the
/// bracket action of the single external generator, [y_i, h] =
/// sum_k action(k, i) y_k.
class ExtensionContext {
 public:
  ExtensionContext(StructureConstants ideal, RatMatrix h_action,
                   int degree_cap = 12);

  int ideal_dim() const { return env_.nvars(); }
  const EnvelopingAlgebra& env() const { return env_; }
  const RatMatrix& h_action() const { return h_action_; }

  /// Structure constants of the extended algebra, ideal generators first and
  /// the external generator last.
  StructureConstants extended_constants() const;

  /// All monomials of degree <= cap in the ideal variables, graded and within
  /// a degree ordered x1-major (1, x1, x2, ..., x1^2, x1 x2, ...).
  std::vector<PBWMonomial> monomials_up_to(int cap) const;

  /// The Sigma-action on functionals: for an ideal generator (ideal_flag set,
  /// gen in 0..s-1) the right-multiplication rule a |-> f(a*y_g); for the
  /// external generator the commutator rule a |-> f([a, h]). Exact, with the
  /// support window certified by an empty guard band.
  CoefficientFunctional sigma_action(int gen, const CoefficientFunctional& f,
                                     bool ideal_flag) const;

 private:
  EnvelopingAlgebra env_;
  RatMatrix h_action_;
};

}  // namespace lieframe

#endif
