#ifndef LIEFRAME_NUMERIC_HPP
#define LIEFRAME_NUMERIC_HPP

#include <complex>
#include <vector>

#include "lieframe/rational.hpp"

namespace lieframe {

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Thrown when the confluent interpolation system cannot be solved; the
/// caller should fall back to exp_scaling_squaring.
class LsSingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class LogDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues with multiplicities; multiplicities sum to the matrix order.
struct Spectrum {
  struct Line {
    std::complex<double> value;
    int multiplicity = 1;
  };
  std::vector<Line> lines;
  int order() const {
    int n = 0;
    for (const auto& l : lines) n += l.multiplicity;
    return n;
  }
};

// --- exact univariate polynomials, ascending coefficients ---

/// Monic characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier,
/// exact in rational arithmetic.
std::vector<Rat> charpoly_exact(const RatMatrix& m);

std::vector<Rat> poly_derivative(const std::vector<Rat>& p);
/// Monic gcd by the Euclidean algorithm.
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b);
/// Yun's square-free decomposition: list of (factor, multiplicity) with
/// p = prod factor_i^mult_i up to a constant.
std::vector<std::pair<std::vector<Rat>, int>> squarefree_decomposition(
    const std::vector<Rat>& p);

/// Simultaneous (Durand-Kerner) iteration for a monic complex polynomial;
/// residuals are driven below 1e-12 * scale or NumericFailure is thrown.
std::vector<std::complex<double>> durand_kerner(
    const std::vector<std::complex<double>>& monic);

/// Spectrum of a small matrix (order <= 8). When the exact rational lift is
/// given, the characteristic polynomial and the multiplicities come from
/// exact arithmetic and only the root values are numeric; otherwise the
/// double-precision polynomial is rooted and near-equal roots are clustered
/// at tolerance 1e-8 * (1 + max |lambda|).
Spectrum eigenvalues(const Eigen::MatrixXd& m,
                     const RatMatrix* exact_lift = nullptr);

// --- matrix functions ---

double frobenius(const Eigen::MatrixXd& m);

/// Scaling-and-squaring exponential: halve until the norm is below 1/2, sum
/// the Taylor series to term norm < 1e-18, square back.
Eigen::MatrixXd exp_scaling_squaring(const Eigen::MatrixXd& m);

/// Coefficients of the Hermite interpolation polynomial r with
/// r^(s)(lambda_i) = e^{lambda_i} for s = 0..m_i-1; degree = order - 1.
std::vector<std::complex<double>> hermite_exp_coefficients(const Spectrum& s);

/// Lagrange-Sylvester exponential r(M) on the given spectrum of M.
Eigen::MatrixXd exp_lagrange_sylvester(const Eigen::MatrixXd& m,
                                       const Spectrum& s);

/// Principal logarithm by inverse scaling and squaring with Denman-Beavers
/// square roots; requires the spectrum off the closed negative real axis.
Eigen::MatrixXd log_principal(const Eigen::MatrixXd& m);

/// Interpolation exponential with automatic downgrade: a singular confluent
/// system (mis-clustered spectrum) falls back to scaling and squaring.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m,
                                   const RatMatrix* exact_lift = nullptr);

}  // namespace lieframe

#endif
