#include "lieframe/ado.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace lieframe {

RatMatrix Representation::bracket_residual(int k, int l) const {
  RatMatrix res = matrices[k] * matrices[l] - matrices[l] * matrices[k];
  for (int m = 0; m < dim(); ++m) {
    const Rat& c = algebra.constants.c(m, k, l);
    if (c != 0) res -= c * matrices[m];
  }
  return res;
}

bool Representation::bracket_homomorphism_holds() const {
  for (int k = 0; k < dim(); ++k)
    for (int l = k + 1; l < dim(); ++l) {
      const RatMatrix res = bracket_residual(k, l);
      for (Eigen::Index i = 0; i < res.rows(); ++i)
        for (Eigen::Index j = 0; j < res.cols(); ++j)
          if (res(i, j) != 0) return false;
    }
  return true;
}

int Representation::faithfulness_rank() const {
  RatMatrix stacked(rep_dim * rep_dim, dim());
  for (int k = 0; k < dim(); ++k) stacked.col(k) = vec(matrices[k]);
  return exact_rank(stacked);
}

std::vector<Eigen::MatrixXd> Representation::numeric_matrices() const {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(to_double_matrix(m));
  return out;
}

RatMatrix Representation::combine(const RatVector& coords) const {
  RatMatrix out = RatMatrix::Zero(rep_dim, rep_dim);
  for (int k = 0; k < dim(); ++k)
    if (coords(k) != 0) out += coords(k) * matrices[k];
  return out;
}

nlohmann::json representation_to_json(const Representation& rep) {
  nlohmann::json j;
  j["algebra"] = descriptor_to_json(rep.algebra);
  j["rep_dim"] = rep.rep_dim;
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : rep.matrices) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index jx = 0; jx < m.cols(); ++jx)
        row.push_back(rational_str(m(i, jx)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  j["basis_labels"] = rep.basis_labels;
  return j;
}

namespace {

AlgebraDescriptor abelian_descriptor(int n) {
  return AlgebraDescriptor{"abelian", {}, StructureConstants(n)};
}

void validate_or_throw(const Representation& rep, const std::string& origin) {
  if (!rep.bracket_homomorphism_holds())
    throw InternalConsistencyError(origin +
                                   ": bracket homomorphism check failed");
  if (!rep.is_faithful())
    throw NotFaithfulError(origin + ": matrices are rationally dependent");
}

}  // namespace

Representation adjoint_representation(const AlgebraDescriptor& a) {
  if (!center(a.constants).empty())
    throw NotFaithfulError(
        "adjoint representation of an algebra with nonzero center is not "
        "faithful");
  Representation rep;
  rep.algebra = a;
  rep.rep_dim = a.constants.dim();
  for (int k = 0; k < rep.rep_dim; ++k)
    rep.matrices.push_back(a.constants.adjoint_matrix(k));
  validate_or_throw(rep, "adjoint_representation");
  return rep;
}

Representation abelian_representation(int n, AbelianStyle style) {
  Representation rep;
  rep.algebra = abelian_descriptor(n);
  if (style == AbelianStyle::nilpotent) {
    rep.rep_dim = n + 1;
    for (int i = 0; i < n; ++i) {
      RatMatrix m = RatMatrix::Zero(n + 1, n + 1);
      m(0, i + 1) = 1;
      rep.matrices.push_back(std::move(m));
    }
  } else {
    rep.rep_dim = n;
    for (int i = 0; i < n; ++i) {
      RatMatrix m = RatMatrix::Zero(n, n);
      m(i, i) = 1;
      rep.matrices.push_back(std::move(m));
    }
  }
  validate_or_throw(rep, "abelian_representation");
  return rep;
}

namespace {

// Monomial basis B: graded greedy selection of monomials whose images under
// the lifted representation are linearly independent, stopping at the
// dimension of the image algebra.
std::vector<PBWMonomial> choose_monomial_basis(const ExtensionContext& ctx,
                                               const Representation& rho0) {
  const int k = rho0.rep_dim;

  // Dimension of the unital matrix algebra generated by the rho(y_i).
  std::vector<RatMatrix> span_basis;
  RatMatrix stacked(k * k, 0);
  auto try_add = [&](const RatMatrix& m) {
    RatMatrix wider(k * k, stacked.cols() + 1);
    wider.leftCols(stacked.cols()) = stacked;
    wider.col(stacked.cols()) = vec(m);
    if (exact_rank(wider) == wider.cols()) {
      stacked = std::move(wider);
      span_basis.push_back(m);
      return true;
    }
    return false;
  };
  try_add(RatMatrix::Identity(k, k));
  for (const auto& m : rho0.matrices) try_add(m);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = span_basis;
    for (const auto& b : snapshot)
      for (const auto& g : rho0.matrices)
        if (try_add(b * g)) grew = true;
  }
  const int image_dim = static_cast<int>(span_basis.size());

  std::vector<PBWMonomial> basis;
  RatMatrix picked(k * k, 0);
  const int degree_limit = ctx.env().degree_cap();
  for (const auto& m : ctx.monomials_up_to(degree_limit)) {
    if (static_cast<int>(basis.size()) == image_dim) break;
    const RatMatrix image = EnvelopingAlgebra::evaluate(m, rho0.matrices);
    RatMatrix wider(k * k, picked.cols() + 1);
    wider.leftCols(picked.cols()) = picked;
    wider.col(picked.cols()) = vec(image);
    if (exact_rank(wider) == wider.cols()) {
      picked = std::move(wider);
      basis.push_back(m);
    }
  }
  if (static_cast<int>(basis.size()) != image_dim)
    throw InternalConsistencyError(
        "monomial basis selection did not reach the image dimension");
  return basis;
}

// Index of a monomial in a growing global list, shared by all functionals so
// they can be compared as exact coordinate vectors.
struct MonomialIndex {
  std::vector<PBWMonomial> order;
  std::map<PBWMonomial, int> lookup;
  int get(const PBWMonomial& m) {
    auto it = lookup.find(m);
    if (it != lookup.end()) return it->second;
    const int id = static_cast<int>(order.size());
    order.push_back(m);
    lookup.emplace(m, id);
    return id;
  }
};

RatMatrix functionals_as_columns(const std::vector<CoefficientFunctional>& fs,
                                 MonomialIndex& index) {
  for (const auto& f : fs)
    for (const auto& [m, v] : f.support) index.get(m);
  RatMatrix out = RatMatrix::Zero(index.order.size(), fs.size());
  for (size_t j = 0; j < fs.size(); ++j)
    for (const auto& [m, v] : fs[j].support) out(index.get(m), j) = v;
  return out;
}

// Lexicographically greatest support monomial; new functionals are scaled so
// its coefficient becomes 1, which keeps discovery output reproducible.
const PBWMonomial& leading_monomial(const CoefficientFunctional& f) {
  return std::prev(f.support.end())->first;
}

constexpr int kClosureCap = 64;

}  // namespace

Representation extend_representation(const Representation& rho0,
                                     const ExtensionContext& ctx) {
  const int s = ctx.ideal_dim();
  if (rho0.dim() != s)
    throw std::invalid_argument(
        "extend_representation: ideal representation has wrong generator "
        "count");
  if (!(rho0.algebra.constants == ctx.env().ideal()))
    throw std::invalid_argument(
        "extend_representation: representation does not match the ideal");

  const std::vector<PBWMonomial> B = choose_monomial_basis(ctx, rho0);
  const int k = rho0.rep_dim;

  // Coefficient functionals of rho0 over B, truncated to B and kept greedily
  // independent in entry order (1,1), (1,2), ...
  std::vector<CoefficientFunctional> basis;
  {
    std::vector<RatMatrix> images;
    for (const auto& m : B)
      images.push_back(EnvelopingAlgebra::evaluate(m, rho0.matrices));
    RatMatrix kept(B.size(), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        CoefficientFunctional f;
        f.label = "c_" + std::to_string(i + 1) + std::to_string(j + 1);
        RatVector col(B.size());
        for (size_t b = 0; b < B.size(); ++b) {
          col(b) = images[b](i, j);
          f.add(B[b], images[b](i, j));
        }
        if (f.is_zero()) continue;
        RatMatrix wider(B.size(), kept.cols() + 1);
        wider.leftCols(kept.cols()) = kept;
        wider.col(kept.cols()) = col;
        if (exact_rank(wider) != wider.cols()) continue;
        kept = std::move(wider);
        basis.push_back(std::move(f));
      }
    if (basis.size() != B.size())
      throw InternalConsistencyError(
          "coefficient functionals do not span the dual of the monomial "
          "basis");
  }

  // Close the functional basis under the Sigma-action of all generators.
  int discovered = 0;
  for (size_t j = 0; j < basis.size(); ++j) {
    for (int gen = 0; gen <= s; ++gen) {
      const bool ideal_flag = gen < s;
      const CoefficientFunctional g =
          ctx.sigma_action(ideal_flag ? gen : 0, basis[j], ideal_flag);
      if (g.is_zero()) continue;
      MonomialIndex index;
      RatMatrix cols = functionals_as_columns(basis, index);
      RatVector target = RatVector::Zero(index.order.size());
      bool inside_known_monomials = true;
      for (const auto& [m, v] : g.support) {
        auto it = index.lookup.find(m);
        if (it == index.lookup.end()) {
          inside_known_monomials = false;
          break;
        }
        target(it->second) = v;
      }
      if (inside_known_monomials && span_coordinates(cols, target)) continue;
      if (static_cast<int>(basis.size()) >= static_cast<int>(B.size()) + kClosureCap)
        throw InternalConsistencyError(
            "functional closure exceeded the iteration cap; the extension "
            "does not terminate");
      CoefficientFunctional fresh = g;
      const Rat lead = fresh.support.at(leading_monomial(fresh));
      for (auto& [m, v] : fresh.support) v /= lead;
      ++discovered;
      fresh.label = "f_" + std::to_string(discovered);
      basis.push_back(std::move(fresh));
    }
  }

  // Read off the matrices: column j of Omega_x lists the coordinates of
  // x . basis[j] in the closed basis.
  const int m_dim = static_cast<int>(basis.size());
  MonomialIndex index;
  const RatMatrix cols = functionals_as_columns(basis, index);
  std::vector<RatMatrix> omegas(s + 1, RatMatrix::Zero(m_dim, m_dim));
  for (int gen = 0; gen <= s; ++gen) {
    const bool ideal_flag = gen < s;
    for (int j = 0; j < m_dim; ++j) {
      const CoefficientFunctional g =
          ctx.sigma_action(ideal_flag ? gen : 0, basis[j], ideal_flag);
      RatVector target = RatVector::Zero(index.order.size());
      for (const auto& [m, v] : g.support) {
        auto it = index.lookup.find(m);
        if (it == index.lookup.end())
          throw InternalConsistencyError(
              "closure is not stable under the Sigma-action");
        target(it->second) = v;
      }
      const auto coords = span_coordinates(cols, target);
      if (!coords)
        throw InternalConsistencyError(
            "closure is not stable under the Sigma-action");
      for (int i = 0; i < m_dim; ++i) omegas[gen](i, j) = (*coords)(i);
    }
  }

  Representation rep;
  rep.algebra = AlgebraDescriptor{rho0.algebra.name + "+h", {},
                                  ctx.extended_constants()};
  rep.rep_dim = m_dim;
  rep.matrices = std::move(omegas);
  for (const auto& f : basis) rep.basis_labels.push_back(f.label);

  if (!rep.bracket_homomorphism_holds())
    throw InternalConsistencyError(
        "extend_representation: bracket homomorphism check failed");

  if (!rep.is_faithful()) {
    // A central external generator acts trivially on every functional; the
    // faithful completion is the direct sum with a fresh nilpotent block for
    // it. Any other deficiency is a real failure.
    bool h_central = true;
    for (int i = 0; i < s && h_central; ++i)
      for (int mu = 0; mu < s; ++mu) h_central = h_central && (ctx.h_action()(mu, i) == 0);
    bool h_trivial = true;
    for (Eigen::Index i = 0; i < rep.matrices[s].rows(); ++i)
      for (Eigen::Index j = 0; j < rep.matrices[s].cols(); ++j)
        h_trivial = h_trivial && (rep.matrices[s](i, j) == 0);
    if (!(h_central && h_trivial))
      throw NotFaithfulError(
          "extend_representation: extension lost faithfulness");
    const int wide = m_dim + 2;
    for (int gen = 0; gen <= s; ++gen) {
      RatMatrix padded = RatMatrix::Zero(wide, wide);
      padded.topLeftCorner(m_dim, m_dim) = rep.matrices[gen];
      if (gen == s) padded(m_dim, m_dim + 1) = 1;
      rep.matrices[gen] = std::move(padded);
    }
    rep.rep_dim = wide;
    rep.basis_labels.push_back("pad_1");
    rep.basis_labels.push_back("pad_2");
    validate_or_throw(rep, "extend_representation (central completion)");
  }
  return rep;
}

RatMatrix derived_flag(const StructureConstants& c) {
  const int n = c.dim();
  const auto series = derived_series(c);

  std::vector<RatVector> flag;
  RatMatrix chosen(n, 0);
  auto try_add = [&](const RatVector& v) {
    RatMatrix wider(n, chosen.cols() + 1);
    wider.leftCols(chosen.cols()) = chosen;
    wider.col(chosen.cols()) = v;
    if (exact_rank(wider) == wider.cols()) {
      chosen = std::move(wider);
      flag.push_back(v);
      return true;
    }
    return false;
  };

  // Deepest nonzero derived term first, then widen term by term; within a
  // term prefer its echelon basis order, finishing with coordinate vectors.
  for (auto it = series.rbegin(); it != series.rend(); ++it)
    for (const auto& v : *it) try_add(v);
  for (int i = 0; i < n; ++i) {
    RatVector e = RatVector::Zero(n);
    e(i) = 1;
    try_add(e);
  }
  return chosen;
}

Representation direct_sum(const AlgebraDescriptor& whole,
                          const std::vector<std::vector<int>>& blocks,
                          const std::vector<Representation>& parts) {
  const int n = whole.constants.dim();
  int total = 0;
  for (const auto& p : parts) total += p.rep_dim;

  Representation rep;
  rep.algebra = whole;
  rep.rep_dim = total;
  rep.matrices.assign(n, RatMatrix::Zero(total, total));

  int offset = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& part = parts[b];
    for (size_t local = 0; local < blocks[b].size(); ++local) {
      rep.matrices[blocks[b][local]].block(offset, offset, part.rep_dim,
                                           part.rep_dim) =
          part.matrices[local];
    }
    for (const auto& label : part.basis_labels)
      rep.basis_labels.push_back("b" + std::to_string(b + 1) + ":" + label);
    offset += part.rep_dim;
  }
  return rep;
}

Representation build_representation(const AlgebraDescriptor& a) {
  const StructureConstants& c = a.constants;
  const int n = c.dim();

  if (is_abelian(c)) {
    Representation rep = abelian_representation(n, AbelianStyle::diagonal);
    rep.algebra = a;
    return rep;
  }

  if (center(c).empty()) {
    return adjoint_representation(a);
  }

  const auto blocks = split_direct_sum(c);
  if (blocks.size() > 1) {
    std::vector<Representation> parts;
    for (const auto& block : blocks) {
      AlgebraDescriptor sub{a.name + "|block", {}, c.restricted(block)};
      parts.push_back(build_representation(sub));
    }
    Representation rep = direct_sum(a, blocks, parts);
    validate_or_throw(rep, "build_representation (direct sum)");
    return rep;
  }

  if (!is_solvable(c))
    throw UnsupportedAlgebraError(
        "indecomposable non-solvable algebra with nonzero center: no "
        "construction path");

  // Solvable indecomposable: climb a derived-series flag, starting from the
  // longest abelian prefix with the first-row nilpotent representation.
  const RatMatrix flag = derived_flag(c);
  const StructureConstants in_flag = c.change_basis(flag);

  int abelian_prefix = 1;
  for (int kk = 2; kk <= n - 1; ++kk) {
    std::vector<int> prefix(kk);
    for (int i = 0; i < kk; ++i) prefix[i] = i;
    bool ok = true;
    try {
      ok = is_abelian(in_flag.restricted(prefix));
    } catch (const std::invalid_argument&) {
      ok = false;  // prefix fails to close, cannot extend it anyway
    }
    if (ok)
      abelian_prefix = kk;
    else
      break;
  }

  Representation rho =
      abelian_representation(abelian_prefix, AbelianStyle::nilpotent);
  for (int j = abelian_prefix; j < n; ++j) {
    std::vector<int> prefix(j);
    for (int i = 0; i < j; ++i) prefix[i] = i;
    const StructureConstants ideal = in_flag.restricted(prefix);
    RatMatrix action = RatMatrix::Zero(j, j);
    for (int i = 0; i < j; ++i) {
      for (int mu = 0; mu < n; ++mu) {
        const Rat& v = in_flag.c(mu, i, j);
        if (v == 0) continue;
        if (mu >= j)
          throw UnsupportedAlgebraError(
              "flag prefix is not an ideal of the next step");
        action(mu, i) = v;
      }
    }
    rho = extend_representation(rho, ExtensionContext(ideal, action));
  }

  // Back to the original basis: x_k = sum_i (flag^-1)(i,k) y_i.
  const RatMatrix flag_inv = exact_inverse(flag);
  Representation rep;
  rep.algebra = a;
  rep.rep_dim = rho.rep_dim;
  rep.basis_labels = rho.basis_labels;
  for (int kk = 0; kk < n; ++kk) {
    RatMatrix omega = RatMatrix::Zero(rho.rep_dim, rho.rep_dim);
    for (int i = 0; i < n; ++i)
      if (flag_inv(i, kk) != 0) omega += flag_inv(i, kk) * rho.matrices[i];
    rep.matrices.push_back(std::move(omega));
  }
  validate_or_throw(rep, "build_representation (chain extension)");
  return rep;
}

}  // namespace lieframe
