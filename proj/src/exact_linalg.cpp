#include "lieframe/exact_linalg.hpp"

#include <stdexcept>

namespace lieframe {

namespace {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Clears denominators row by row; row scaling does not change row space,
// rank or kernel.
IntMatrix integerize(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Int den = denominator(m(i, j));
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
  }
  return out;
}

}  // namespace

Echelon row_echelon(const RatMatrix& m) {
  IntMatrix a = integerize(m);
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Echelon result;
  Int prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    result.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  result.rank = static_cast<int>(r);
  result.mat = RatMatrix(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) result.mat(i, j) = Rat(a(i, j));
  return result;
}

int exact_rank(const RatMatrix& m) { return row_echelon(m).rank; }

std::vector<RatVector> exact_nullspace(const RatMatrix& m) {
  const Echelon e = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVector v = RatVector::Zero(cols);
    v(free_col) = 1;
    for (int row = e.rank - 1; row >= 0; --row) {
      const int pc = e.pivot_cols[row];
      Rat acc = 0;
      for (Eigen::Index j = pc + 1; j < cols; ++j) acc += e.mat(row, j) * v(j);
      v(pc) = -acc / e.mat(row, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVector exact_solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("exact_solve: shape mismatch");
  const Eigen::Index n = a.rows();
  RatMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const Echelon e = row_echelon(aug);
  if (e.rank != n || e.pivot_cols.back() == static_cast<int>(n))
    throw std::invalid_argument("exact_solve: singular system");
  RatVector x = RatVector::Zero(n);
  for (int row = static_cast<int>(n) - 1; row >= 0; --row) {
    const int pc = e.pivot_cols[row];
    Rat acc = e.mat(row, n);
    for (Eigen::Index j = pc + 1; j < n; ++j) acc -= e.mat(row, j) * x(j);
    x(pc) = acc / e.mat(row, pc);
  }
  return x;
}

RatMatrix exact_inverse(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  RatMatrix inv(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    RatVector e = RatVector::Zero(n);
    e(c) = 1;
    inv.col(c) = exact_solve(a, e);
  }
  return inv;
}

std::optional<RatVector> span_coordinates(const RatMatrix& basis,
                                          const RatVector& target) {
  const Eigen::Index n = basis.cols();
  RatMatrix aug(basis.rows(), n + 1);
  aug.leftCols(n) = basis;
  aug.col(n) = target;
  const Echelon e = row_echelon(aug);
  for (int c : e.pivot_cols)
    if (c == static_cast<int>(n)) return std::nullopt;  // inconsistent
  RatVector x = RatVector::Zero(n);
  for (int row = e.rank - 1; row >= 0; --row) {
    const int pc = e.pivot_cols[row];
    Rat acc = e.mat(row, n);
    for (Eigen::Index j = pc + 1; j < n; ++j) acc -= e.mat(row, j) * x(j);
    x(pc) = acc / e.mat(row, pc);
  }
  return x;
}

RatVector vec(const RatMatrix& m) {
  RatVector out(m.rows() * m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(k++) = m(i, j);
  return out;
}

}  // namespace lieframe
