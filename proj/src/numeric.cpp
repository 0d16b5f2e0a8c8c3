#include "lieframe/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace lieframe {

namespace {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

int poly_degree(const std::vector<Rat>& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[d] != 0) return d;
  return -1;
}

std::vector<Rat> poly_trim(std::vector<Rat> p) {
  p.resize(poly_degree(p) + 1);
  return p;
}

std::vector<Rat> poly_monic(std::vector<Rat> p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Remainder of a by b (b nonzero), exact.
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  const int db = poly_degree(b);
  while (true) {
    const int da = poly_degree(a);
    if (da < db) break;
    const Rat factor = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
    a[da] = 0;  // force exact cancellation of the lead
  }
  return poly_trim(std::move(a));
}

// Exact quotient; the division must be exact (used on gcd cofactors).
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
  const int db = poly_degree(b);
  const int da = poly_degree(a);
  if (da < db) return {};
  std::vector<Rat> q(da - db + 1, Rat(0));
  while (true) {
    const int d = poly_degree(a);
    if (d < db) break;
    const Rat factor = a[d] / b[db];
    q[d - db] = factor;
    for (int i = 0; i <= db; ++i) a[d - db + i] -= factor * b[i];
    a[d] = 0;
  }
  if (poly_degree(a) >= 0)
    throw std::logic_error("poly_div_exact: division is not exact");
  return q;
}

Cplx poly_eval(const std::vector<Cplx>& p, Cplx z) {
  Cplx acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * z + p[i];
  return acc;
}

void check_finite(const Eigen::MatrixXd& m, const char* origin) {
  if (!m.allFinite()) throw NumericFailure(std::string(origin) + ": overflow");
}

Cplx ipow(Cplx base, int exponent) {
  Cplx out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<Rat> charpoly_exact(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[n] = 1;
  RatMatrix a = m;
  Rat c = 0;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) a = m * (a + c * RatMatrix::Identity(n, n));
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += a(i, i);
    c = -tr / k;
    coeff[n - k] = c;
  }
  return coeff;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(k));
  return poly_trim(std::move(d));
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (poly_degree(b) >= 0) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

std::vector<std::pair<std::vector<Rat>, int>> squarefree_decomposition(
    const std::vector<Rat>& p_in) {
  std::vector<std::pair<std::vector<Rat>, int>> out;
  std::vector<Rat> p = poly_monic(p_in);
  if (poly_degree(p) < 1) return out;
  // Yun's algorithm.
  auto dp = poly_derivative(p);
  auto g = poly_gcd(p, dp);
  auto w = poly_div_exact(p, g);
  auto y = poly_div_exact(dp, g);
  auto z = poly_trim([&] {
    auto wd = poly_derivative(w);
    std::vector<Rat> diff(std::max(y.size(), wd.size()), Rat(0));
    for (size_t i = 0; i < y.size(); ++i) diff[i] += y[i];
    for (size_t i = 0; i < wd.size(); ++i) diff[i] -= wd[i];
    return diff;
  }());
  int mult = 1;
  while (poly_degree(w) > 0) {
    auto gi = poly_gcd(w, z);
    if (poly_degree(gi) > 0) out.emplace_back(gi, mult);
    w = poly_div_exact(w, gi);
    auto yv = poly_div_exact(z, gi);
    auto wd = poly_derivative(w);
    std::vector<Rat> diff(std::max(yv.size(), wd.size()), Rat(0));
    for (size_t i = 0; i < yv.size(); ++i) diff[i] += yv[i];
    for (size_t i = 0; i < wd.size(); ++i) diff[i] -= wd[i];
    z = poly_trim(std::move(diff));
    ++mult;
  }
  return out;
}

std::vector<Cplx> durand_kerner(const std::vector<Cplx>& monic) {
  const int d = static_cast<int>(monic.size()) - 1;
  if (d <= 0) return {};
  double radius = 0;
  for (const auto& c : monic) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;

  std::vector<Cplx> z(d);
  const Cplx seed(0.4, 0.9);
  Cplx acc(1.0, 0.0);
  for (int k = 0; k < d; ++k) {
    acc *= seed;
    z[k] = acc * radius;
  }
  for (int iter = 0; iter < 800; ++iter) {
    double shift = 0;
    for (int k = 0; k < d; ++k) {
      Cplx denom = 1;
      for (int j = 0; j < d; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      const Cplx delta = poly_eval(monic, z[k]) / denom;
      z[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * (1.0 + radius)) break;
  }
  double residual = 0;
  for (int k = 0; k < d; ++k)
    residual = std::max(residual, std::abs(poly_eval(monic, z[k])));
  if (!(residual < 1e-12 * std::pow(1.0 + radius, d)))
    throw NumericFailure("durand_kerner: root iteration did not converge");
  return z;
}

namespace {

// Enforce exact conjugate symmetry and realness on roots of a real
// polynomial; keeps the interpolation nodes clean.
void symmetrize_roots(std::vector<Cplx>& roots) {
  const double tol = 1e-10;
  double scale = 1;
  for (auto& r : roots) scale = std::max(scale, std::abs(r));
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(roots[i].imag()) < tol * scale) {
      roots[i].imag(0.0);
      continue;
    }
    if (used[i]) continue;
    size_t best = i;
    double dist = 1e300;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      const double dd = std::abs(roots[j] - std::conj(roots[i]));
      if (dd < dist) {
        dist = dd;
        best = j;
      }
    }
    if (best != i && dist < 1e-6 * scale) {
      const Cplx mean = (roots[i] + std::conj(roots[best])) / 2.0;
      roots[i] = mean;
      roots[best] = std::conj(mean);
      used[i] = used[best] = true;
    }
  }
}

}  // namespace

Spectrum eigenvalues(const Eigen::MatrixXd& m, const RatMatrix* exact_lift) {
  const int n = static_cast<int>(m.rows());
  if (n > 8)
    throw NumericFailure("eigenvalues: order above the supported contract");
  Spectrum spec;

  if (exact_lift != nullptr) {
    const auto p = charpoly_exact(*exact_lift);
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
      std::vector<Cplx> fc;
      for (const auto& c : factor) fc.emplace_back(to_double(c), 0.0);
      auto roots = durand_kerner(fc);
      symmetrize_roots(roots);
      for (const auto& r : roots) spec.lines.push_back({r, mult});
    }
  } else {
    // Faddeev-LeVerrier in doubles, then cluster.
    std::vector<Cplx> coeff(n + 1);
    coeff[n] = 1;
    Eigen::MatrixXd a = m;
    double c = 0;
    for (int k = 1; k <= n; ++k) {
      if (k > 1)
        a = m * (a + c * Eigen::MatrixXd::Identity(n, n));
      c = -a.trace() / k;
      coeff[n - k] = c;
    }
    auto roots = durand_kerner(coeff);
    symmetrize_roots(roots);
    double scale = 0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));
    const double tol = 1e-8 * (1.0 + scale);
    std::vector<bool> taken(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
      if (taken[i]) continue;
      Cplx sum = roots[i];
      int count = 1;
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (!taken[j] && std::abs(roots[j] - roots[i]) < tol) {
          taken[j] = true;
          sum += roots[j];
          ++count;
        }
      }
      spec.lines.push_back({sum / static_cast<double>(count), count});
    }
  }
  if (spec.order() != n)
    throw NumericFailure("eigenvalues: multiplicities do not sum to the order");
  return spec;
}

double frobenius(const Eigen::MatrixXd& m) { return m.norm(); }

Eigen::MatrixXd exp_scaling_squaring(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  int s = 0;
  double norm = frobenius(m);
  while (norm > 0.5 && s < 64) {
    norm /= 2;
    ++s;
  }
  const Eigen::MatrixXd a = m / std::pow(2.0, s);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k < 200; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
    if (frobenius(term) < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  check_finite(sum, "exp_scaling_squaring");
  return sum;
}

std::vector<Cplx> hermite_exp_coefficients(const Spectrum& s) {
  const int n = s.order();
  CMatrix system = CMatrix::Zero(n, n);
  Eigen::VectorXcd rhs(n);
  int row = 0;
  for (const auto& line : s.lines) {
    for (int der = 0; der < line.multiplicity; ++der) {
      for (int k = der; k < n; ++k) {
        double falling = 1;
        for (int t = 0; t < der; ++t) falling *= (k - t);
        system(row, k) = falling * ipow(line.value, k - der);
      }
      rhs(row) = std::exp(line.value);
      ++row;
    }
  }
  Eigen::FullPivLU<CMatrix> lu(system);
  lu.setThreshold(1e-10);
  if (lu.rank() < n)
    throw LsSingularError(
        "confluent interpolation system is singular (mis-clustered "
        "spectrum?); use exp_scaling_squaring");
  Eigen::VectorXcd c = lu.solve(rhs);
  if ((system * c - rhs).norm() > 1e-8 * (1.0 + rhs.norm()))
    throw LsSingularError(
        "confluent interpolation solve is inaccurate; use "
        "exp_scaling_squaring");
  return std::vector<Cplx>(c.data(), c.data() + n);
}

Eigen::MatrixXd exp_lagrange_sylvester(const Eigen::MatrixXd& m,
                                       const Spectrum& s) {
  const int n = static_cast<int>(m.rows());
  if (s.order() != n)
    throw LsSingularError("spectrum order does not match the matrix");
  const auto coeff = hermite_exp_coefficients(s);
  CMatrix acc = CMatrix::Zero(n, n);
  const CMatrix mc = m.cast<Cplx>();
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * mc;
    acc += coeff[k] * CMatrix::Identity(n, n);
  }
  const double imag_norm = acc.imag().norm();
  if (imag_norm > 1e-10 * (1.0 + acc.real().norm()))
    throw NumericFailure(
        "exp_lagrange_sylvester: result has a non-negligible imaginary part");
  Eigen::MatrixXd out = acc.real();
  check_finite(out, "exp_lagrange_sylvester");
  return out;
}

namespace {

// One principal square root by the Denman-Beavers iteration.
Eigen::MatrixXd sqrt_denman_beavers(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd y = a;
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  for (int iter = 0; iter < 100; ++iter) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> ylu(y), zlu(z);
    const Eigen::MatrixXd yinv = ylu.inverse();
    const Eigen::MatrixXd zinv = zlu.inverse();
    if (!yinv.allFinite() || !zinv.allFinite())
      throw LogDomainError(
          "log_principal: square-root iteration hit a singular iterate; use "
          "smaller coordinates");
    const Eigen::MatrixXd y_next = 0.5 * (y + zinv);
    const Eigen::MatrixXd z_next = 0.5 * (z + yinv);
    const double drift = frobenius(y_next - y);
    y = y_next;
    z = z_next;
    if (drift < 1e-15 * (1.0 + frobenius(y))) {
      if (frobenius(y * y - a) > 1e-10 * (1.0 + frobenius(a)))
        throw LogDomainError(
            "log_principal: square root did not converge; use smaller "
            "coordinates");
      return y;
    }
  }
  throw LogDomainError(
      "log_principal: square-root iteration exceeded its cap; use smaller "
      "coordinates");
}

}  // namespace

Eigen::MatrixXd log_principal(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  const Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd x = m;
  int s = 0;
  while (frobenius(x - ident) > 0.25) {
    if (++s > 40)
      throw LogDomainError(
          "log_principal: inverse scaling did not reach the identity; use "
          "smaller coordinates");
    x = sqrt_denman_beavers(x);
  }
  const Eigen::MatrixXd e = x - ident;
  Eigen::MatrixXd term = e;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < 200; ++k) {
    sum += term * (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
    term = term * e;
    if (frobenius(term) < 1e-18) break;
  }
  sum *= std::pow(2.0, s);
  check_finite(sum, "log_principal");
  return sum;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m,
                                   const RatMatrix* exact_lift) {
  try {
    return exp_lagrange_sylvester(m, eigenvalues(m, exact_lift));
  } catch (const LsSingularError&) {
    return exp_scaling_squaring(m);
  } catch (const NumericFailure&) {
    return exp_scaling_squaring(m);
  }
}

}  // namespace lieframe
