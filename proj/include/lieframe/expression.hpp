#ifndef LIEFRAME_EXPRESSION_HPP
#define LIEFRAME_EXPRESSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieframe/rational.hpp"

namespace lieframe {

/// Exact expression trees over rational constants, the coordinates x, y, z, w
/// and a fixed family of unary atoms. No canonical simplification beyond
/// light constant folding in the builders; identity testing is numeric.
class Expression {
 public:
  enum class Kind { constant, variable, sum, product, power, atom };
  enum class Atom { exp, sin, cos, tan, sec, csc, cot, sinh, cosh, tanh, sech };

  struct Node {
    Kind kind = Kind::constant;
    Rat value = Rat(0);              // constant
    int var = 0;                     // variable
    std::vector<Expression> kids;    // sum / product
    int exponent = 1;                // power
    Atom fn = Atom::exp;             // atom
  };

  Expression() : node_(zero_node()) {}

  static Expression constant(const Rat& v);
  static Expression variable(int index);
  static Expression sum(std::vector<Expression> terms);
  static Expression product(std::vector<Expression> factors);
  static Expression power(const Expression& base, int exponent);
  static Expression apply(Atom fn, const Expression& arg);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }

  bool is_constant() const { return node_->kind == Kind::constant; }
  bool is_zero() const { return is_constant() && node_->value == 0; }

  double eval(const std::vector<double>& point) const;
  /// Exact value of a constant (coordinate-free, atom-free) expression.
  Rat eval_rational() const;

  std::string prefix() const;

  friend Expression operator+(const Expression& a, const Expression& b) {
    return sum({a, b});
  }
  friend Expression operator-(const Expression& a, const Expression& b) {
    return sum({a, product({constant(-1), b})});
  }
  friend Expression operator*(const Expression& a, const Expression& b) {
    return product({a, b});
  }
  friend Expression operator-(const Expression& a) {
    return product({constant(-1), a});
  }

 private:
  static const std::shared_ptr<const Node>& zero_node();
  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expression make(Node n);
  std::shared_ptr<const Node> node_;
};

/// Exact recursive differentiation; total on every Expression.
Expression differentiate(const Expression& e, int var);

/// Parses the compact prefix text form, e.g. "(* z (cos w))", binding the
/// coordinates x y z w and any extra named parameters.
Expression parse_expression(const std::string& text,
                            const std::map<std::string, Expression>& params = {});

struct EqualityResult {
  bool equal = true;
  std::vector<double> witness;  // first failing point, when unequal
  double max_deviation = 0;
};

struct DomainBox {
  std::vector<std::pair<double, double>> ranges;  // one per coordinate
};

/// Randomized identity test: |e1 - e2| <= tol * (1 + |e1|) at `trials` seeded
/// sample points inside the box; sampled singularities are resampled a
/// bounded number of times.
EqualityResult expr_equal(const Expression& e1, const Expression& e2,
                          const DomainBox& box, int trials = 20,
                          double tol = 1e-9, std::uint64_t seed = 20240817);

// --- vector-field layer ---

using VectorField = std::vector<Expression>;  // components per coordinate

/// [X, Y]^tau = X^lambda d_lambda Y^tau - Y^lambda d_lambda X^tau, exact.
VectorField field_bracket(const VectorField& x, const VectorField& y);

// Convenience builders used by the golden tables and the tests.
inline Expression ex_const(long num, long den = 1) {
  return Expression::constant(rat(num, den));
}
inline Expression ex_var(int i) { return Expression::variable(i); }

}  // namespace lieframe

#endif
