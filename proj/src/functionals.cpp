#include "lieframe/functionals.hpp"

#include <functional>
#include <sstream>

namespace lieframe {

std::string CoefficientFunctional::str() const {
  std::ostringstream out;
  out << (label.empty() ? "functional" : label) << ": {";
  bool first = true;
  for (const auto& [m, v] : support) {
    if (!first) out << ", ";
    out << m.str() << " -> " << rational_str(v);
    first = false;
  }
  out << "}";
  return out.str();
}

ExtensionContext::ExtensionContext(StructureConstants ideal, RatMatrix h_action,
                                   int degree_cap)
    : env_(std::move(ideal), degree_cap), h_action_(std::move(h_action)) {
  if (h_action_.rows() != env_.nvars() || h_action_.cols() != env_.nvars())
    throw std::invalid_argument("h_action must be ideal_dim x ideal_dim");
}

StructureConstants ExtensionContext::extended_constants() const {
  const int s = ideal_dim();
  StructureConstants out(s + 1);
  for (const auto& e : env_.ideal().nonzero_entries())
    out.set(e.mu, e.kappa, e.lambda, e.value);
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < s; ++k)
      if (h_action_(k, i) != 0) out.set(k, i, s, h_action_(k, i));
  return out;
}

std::vector<PBWMonomial> ExtensionContext::monomials_up_to(int cap) const {
  const int s = ideal_dim();
  std::vector<PBWMonomial> out;
  std::vector<PBWMonomial> degree_block;
  for (int d = 0; d <= cap; ++d) {
    degree_block.clear();
    PBWMonomial m(s);
    // Distribute degree d over s slots, x1-major within the degree.
    std::function<void(int, int)> fill = [&](int var, int left) {
      if (var == s - 1) {
        m.exp[var] = left;
        degree_block.push_back(m);
        return;
      }
      for (int take = left; take >= 0; --take) {
        m.exp[var] = take;
        fill(var + 1, left - take);
      }
      m.exp[var] = 0;
    };
    fill(0, d);
    out.insert(out.end(), degree_block.begin(), degree_block.end());
  }
  return out;
}

CoefficientFunctional ExtensionContext::sigma_action(
    int gen, const CoefficientFunctional& f, bool ideal_flag) const {
  const int s = ideal_dim();
  if (ideal_flag && (gen < 0 || gen >= s))
    throw std::invalid_argument("ideal generator index out of range");
  const int window = f.max_degree() + s;
  const int guard = window + 1;

  CoefficientFunctional out;
  for (const auto& m : monomials_up_to(guard)) {
    const UEAElement image =
        ideal_flag
            ? env_.right_multiply(UEAElement::monomial(m, 1), gen)
            : env_.external_commutator(UEAElement::monomial(m, 1), h_action_);
    const Rat v = f.evaluate(image);
    if (v == 0) continue;
    if (m.degree() > window)
      throw std::logic_error(
          "sigma_action: nonzero value in the guard band; support window "
          "assumptions violated");
    out.add(m, v);
  }
  return out;
}

}  // namespace lieframe
