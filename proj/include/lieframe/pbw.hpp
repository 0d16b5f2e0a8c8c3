#ifndef LIEFRAME_PBW_HPP
#define LIEFRAME_PBW_HPP

#include <map>
#include <string>
#include <vector>

#include "lieframe/structure_constants.hpp"

namespace lieframe {

/// Normal-ordered monomial x1^k1 * x2^k2 * ... over an ordered ideal basis.
/// The all-zero exponent vector is the unit of U(s). Ordering is
/// lexicographic on the exponent vector.
struct PBWMonomial {
  std::vector<int> exp;

  explicit PBWMonomial(int nvars = 0) : exp(nvars, 0) {}
  static PBWMonomial unit(int nvars) { return PBWMonomial(nvars); }
  static PBWMonomial generator(int nvars, int i) {
    PBWMonomial m(nvars);
    m.exp[i] = 1;
    return m;
  }

  int degree() const {
    int d = 0;
    for (int k : exp) d += k;
    return d;
  }
  bool is_unit() const { return degree() == 0; }
  int nvars() const { return static_cast<int>(exp.size()); }

  auto operator<=>(const PBWMonomial&) const = default;

  std::string str() const;
};

/// Finite rational combination of PBW monomials; no zero coefficients stored.
class UEAElement {
 public:
  UEAElement() = default;
  static UEAElement zero() { return {}; }
  static UEAElement unit(int nvars) {
    return monomial(PBWMonomial::unit(nvars), 1);
  }
  static UEAElement monomial(const PBWMonomial& m, const Rat& coeff);

  void add_term(const PBWMonomial& m, const Rat& coeff);
  const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rat coeff(const PBWMonomial& m) const;

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rat& s);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) {
    return a += b;
  }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) {
    return a -= b;
  }
  friend UEAElement operator*(UEAElement a, const Rat& s) { return a *= s; }
  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<PBWMonomial, Rat> terms_;
};

class UnsupportedBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TerminationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Straightening engine for U(s) over an ordered solvable ideal basis.
/// Requires every bracket [y_i, y_j] to lie in the span of generators that
/// precede both factors; this holds for the ideals produced by the
/// derived-series flags used in the representation builder.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(StructureConstants ideal, int degree_cap = 12);

  int nvars() const { return ideal_.dim(); }
  int degree_cap() const { return degree_cap_; }
  const StructureConstants& ideal() const { return ideal_; }

  /// Normal-ordered form of a * y_g, exactly equal to the product in U(s).
  UEAElement right_multiply(const UEAElement& a, int g) const;

  /// Normal-ordered [a, h] where the action of the external generator h on
  /// the ideal is [y_i, h] = sum_k action(k, i) y_k.
  UEAElement external_commutator(const UEAElement& a,
                                 const RatMatrix& action) const;

  /// Image of a monomial under a matrix representation of the ideal,
  /// rho(y_1)^k1 * rho(y_2)^k2 * ...; the lift used by the extension builder
  /// and by the straightening oracle tests.
  static RatMatrix evaluate(const PBWMonomial& m,
                            const std::vector<RatMatrix>& rho);
  RatMatrix evaluate(const UEAElement& a,
                     const std::vector<RatMatrix>& rho) const;

 private:
  UEAElement monomial_times_generator(const PBWMonomial& m, int g) const;

  StructureConstants ideal_;
  int degree_cap_;
};

}  // namespace lieframe

#endif
