#ifndef LIEFRAME_RATIONAL_HPP
#define LIEFRAME_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace lieframe {

/// Exact rational scalar used throughout the exact layer.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Parses "p", "-p/q" or a plain decimal integer into a canonical rational.
/// gmp does not canonicalize string-constructed mpq values, so we go through
/// an explicit numerator/denominator division.
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline std::string rational_str(const Rat& r) { return r.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat(long num, long den = 1) { return Rat(num) / Rat(den); }

inline Eigen::MatrixXd to_double_matrix(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

}  // namespace lieframe

#endif
