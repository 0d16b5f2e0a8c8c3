#include "lieframe/structure_constants.hpp"

#include <numeric>
#include <stdexcept>

namespace lieframe {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  table_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
}

StructureConstants StructureConstants::from_entries(
    int dim, const std::vector<Entry>& entries) {
  StructureConstants c(dim);
  for (const auto& e : entries) {
    if (e.mu < 0 || e.mu >= dim || e.kappa < 0 || e.kappa >= dim ||
        e.lambda < 0 || e.lambda >= dim)
      throw std::invalid_argument("structure constant index out of range");
    c.set(e.mu, e.kappa, e.lambda, e.value);
  }
  return c;
}

StructureConstants StructureConstants::from_raw_table(
    int dim, const std::vector<Rat>& table) {
  StructureConstants c(dim);
  if (table.size() != c.table_.size())
    throw std::invalid_argument("raw table has wrong shape");
  c.table_ = table;
  return c;
}

void StructureConstants::set(int mu, int kappa, int lambda, const Rat& v) {
  table_[index(mu, kappa, lambda)] = v;
  table_[index(mu, lambda, kappa)] = -v;
}

RatVector StructureConstants::bracket(const RatVector& a,
                                      const RatVector& b) const {
  RatVector out = RatVector::Zero(dim_);
  for (int k = 0; k < dim_; ++k) {
    if (a(k) == 0) continue;
    for (int l = 0; l < dim_; ++l) {
      if (b(l) == 0) continue;
      for (int m = 0; m < dim_; ++m) {
        const Rat& cv = c(m, k, l);
        if (cv != 0) out(m) += cv * a(k) * b(l);
      }
    }
  }
  return out;
}

RatMatrix StructureConstants::adjoint_matrix(int kappa) const {
  RatMatrix m = RatMatrix::Zero(dim_, dim_);
  for (int mu = 0; mu < dim_; ++mu)
    for (int nu = 0; nu < dim_; ++nu) m(mu, nu) = c(mu, kappa, nu);
  return m;
}

StructureConstants StructureConstants::restricted(
    const std::vector<int>& indices) const {
  const int s = static_cast<int>(indices.size());
  StructureConstants out(s);
  for (int k = 0; k < s; ++k)
    for (int l = 0; l < s; ++l)
      for (int m = 0; m < s; ++m) {
        const Rat& v = c(indices[m], indices[k], indices[l]);
        if (v != 0) out.table_[out.index(m, k, l)] = v;
      }
  // Closure check: brackets may not escape the sub-basis.
  for (int k = 0; k < s; ++k)
    for (int l = 0; l < s; ++l)
      for (int m = 0; m < dim_; ++m) {
        if (c(m, indices[k], indices[l]) == 0) continue;
        bool inside = false;
        for (int i : indices) inside = inside || (i == m);
        if (!inside)
          throw std::invalid_argument("restricted: basis does not close");
      }
  return out;
}

StructureConstants StructureConstants::change_basis(
    const RatMatrix& basis) const {
  if (basis.rows() != dim_ || basis.cols() != dim_)
    throw std::invalid_argument("change_basis: shape mismatch");
  const RatMatrix inv = exact_inverse(basis);
  StructureConstants out(dim_);
  for (int k = 0; k < dim_; ++k)
    for (int l = k + 1; l < dim_; ++l) {
      const RatVector br = bracket(basis.col(k), basis.col(l));
      const RatVector in_new = inv * br;
      for (int m = 0; m < dim_; ++m)
        if (in_new(m) != 0) out.set(m, k, l, in_new(m));
    }
  return out;
}

std::vector<StructureConstants::Entry> StructureConstants::nonzero_entries()
    const {
  std::vector<Entry> out;
  for (int m = 0; m < dim_; ++m)
    for (int k = 0; k < dim_; ++k)
      for (int l = k + 1; l < dim_; ++l)
        if (c(m, k, l) != 0) out.push_back({m, k, l, c(m, k, l)});
  return out;
}

JacobiReport jacobi_check(const StructureConstants& c) {
  JacobiReport report;
  const int n = c.dim();
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Rat sum = c.c(m, k, l) + c.c(m, l, k);
        if (sum != 0) {
          report.antisymmetry_ok = false;
          report.violation = {m + 1, k + 1, l + 1, -1};
          report.residual = sum;
          return report;
        }
      }
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r) {
          Rat sum = 0;
          for (int nu = 0; nu < n; ++nu)
            sum += c.c(nu, k, l) * c.c(m, nu, r) +
                   c.c(nu, l, r) * c.c(m, nu, k) +
                   c.c(nu, r, k) * c.c(m, nu, l);
          if (sum != 0) {
            report.jacobi_ok = false;
            report.violation = {m + 1, k + 1, l + 1, r + 1};
            report.residual = sum;
            return report;
          }
        }
  return report;
}

std::vector<RatVector> center(const StructureConstants& c) {
  const int n = c.dim();
  RatMatrix stacked(n * n, n);
  for (int kappa = 0; kappa < n; ++kappa)
    for (int mu = 0; mu < n; ++mu)
      for (int lambda = 0; lambda < n; ++lambda)
        stacked(kappa * n + mu, lambda) = c.c(mu, kappa, lambda);
  return exact_nullspace(stacked);
}

namespace {

// Echelon basis of the span of the given vectors.
std::vector<RatVector> echelon_span(const std::vector<RatVector>& vectors,
                                    int dim) {
  if (vectors.empty()) return {};
  RatMatrix m(vectors.size(), dim);
  for (size_t i = 0; i < vectors.size(); ++i) m.row(i) = vectors[i].transpose();
  const Echelon e = row_echelon(m);
  std::vector<RatVector> out;
  for (int r = 0; r < e.rank; ++r) {
    RatVector v = e.mat.row(r).transpose();
    // Normalize the pivot to 1 for stable, readable bases.
    v /= v(e.pivot_cols[r]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<RatVector>> derived_series(
    const StructureConstants& c) {
  const int n = c.dim();
  std::vector<std::vector<RatVector>> series;
  std::vector<RatVector> current;
  for (int i = 0; i < n; ++i) {
    RatVector e = RatVector::Zero(n);
    e(i) = 1;
    current.push_back(e);
  }
  series.push_back(current);
  while (true) {
    std::vector<RatVector> brackets;
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        RatVector b = c.bracket(current[i], current[j]);
        bool nonzero = false;
        for (int t = 0; t < n; ++t) nonzero = nonzero || (b(t) != 0);
        if (nonzero) brackets.push_back(std::move(b));
      }
    std::vector<RatVector> next = echelon_span(brackets, n);
    series.push_back(next);
    if (next.empty() || next.size() == current.size()) break;
    current = std::move(next);
  }
  return series;
}

bool is_abelian(const StructureConstants& c) {
  return c.nonzero_entries().empty();
}

bool is_solvable(const StructureConstants& c) {
  return derived_series(c).back().empty();
}

std::vector<std::vector<int>> split_direct_sum(const StructureConstants& c) {
  const int n = c.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& e : c.nonzero_entries()) {
    unite(e.kappa, e.lambda);
    unite(e.kappa, e.mu);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> root_block(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_block[r] < 0) {
      root_block[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[root_block[r]].push_back(i);
  }
  return blocks;
}

}  // namespace lieframe
