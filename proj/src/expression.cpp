#include "lieframe/expression.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lieframe {

namespace {

const char* atom_name(Expression::Atom a) {
  switch (a) {
    case Expression::Atom::exp: return "exp";
    case Expression::Atom::sin: return "sin";
    case Expression::Atom::cos: return "cos";
    case Expression::Atom::tan: return "tan";
    case Expression::Atom::sec: return "sec";
    case Expression::Atom::csc: return "csc";
    case Expression::Atom::cot: return "cot";
    case Expression::Atom::sinh: return "sinh";
    case Expression::Atom::cosh: return "cosh";
    case Expression::Atom::tanh: return "tanh";
    case Expression::Atom::sech: return "sech";
  }
  return "?";
}

const char* kVarNames = "xyzw";

}  // namespace

const std::shared_ptr<const Expression::Node>& Expression::zero_node() {
  static const auto zero = std::make_shared<const Node>();
  return zero;
}

Expression Expression::make(Node n) {
  return Expression(std::make_shared<const Node>(std::move(n)));
}

Expression Expression::constant(const Rat& v) {
  Node n;
  n.kind = Kind::constant;
  n.value = v;
  return make(std::move(n));
}

Expression Expression::variable(int index) {
  if (index < 0 || index > 3)
    throw std::invalid_argument("variable index out of range");
  Node n;
  n.kind = Kind::variable;
  n.var = index;
  return make(std::move(n));
}

Expression Expression::sum(std::vector<Expression> terms) {
  std::vector<Expression> flat;
  Rat folded = 0;
  for (auto& t : terms) {
    if (t.kind() == Kind::sum) {
      for (const auto& k : t.node().kids) {
        if (k.is_constant())
          folded += k.node().value;
        else
          flat.push_back(k);
      }
    } else if (t.is_constant()) {
      folded += t.node().value;
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (folded != 0) flat.push_back(constant(folded));
  if (flat.empty()) return constant(0);
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::sum;
  n.kids = std::move(flat);
  return make(std::move(n));
}

Expression Expression::product(std::vector<Expression> factors) {
  std::vector<Expression> flat;
  Rat folded = 1;
  for (auto& f : factors) {
    if (f.kind() == Kind::product) {
      for (const auto& k : f.node().kids) {
        if (k.is_constant())
          folded *= k.node().value;
        else
          flat.push_back(k);
      }
    } else if (f.is_constant()) {
      folded *= f.node().value;
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (folded == 0) return constant(0);
  if (folded != 1) {
    // Constants lead, matching the written form of the tables.
    flat.insert(flat.begin(), constant(folded));
  }
  if (flat.empty()) return constant(1);
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::product;
  n.kids = std::move(flat);
  return make(std::move(n));
}

Expression Expression::power(const Expression& base, int exponent) {
  if (exponent == 0) return constant(1);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    Rat v = 1;
    const Rat& b = base.node().value;
    if (exponent < 0 && b == 0)
      throw std::invalid_argument("zero to a negative power");
    for (int i = 0; i < std::abs(exponent); ++i) v *= b;
    return constant(exponent > 0 ? v : Rat(1) / v);
  }
  Node n;
  n.kind = Kind::power;
  n.kids = {base};
  n.exponent = exponent;
  return make(std::move(n));
}

Expression Expression::apply(Atom fn, const Expression& arg) {
  Node n;
  n.kind = Kind::atom;
  n.fn = fn;
  n.kids = {arg};
  return make(std::move(n));
}

double Expression::eval(const std::vector<double>& point) const {
  switch (kind()) {
    case Kind::constant:
      return to_double(node_->value);
    case Kind::variable:
      return node_->var < static_cast<int>(point.size()) ? point[node_->var]
                                                         : 0.0;
    case Kind::sum: {
      double acc = 0;
      for (const auto& k : node_->kids) acc += k.eval(point);
      return acc;
    }
    case Kind::product: {
      double acc = 1;
      for (const auto& k : node_->kids) acc *= k.eval(point);
      return acc;
    }
    case Kind::power:
      return std::pow(node_->kids[0].eval(point), node_->exponent);
    case Kind::atom: {
      const double u = node_->kids[0].eval(point);
      switch (node_->fn) {
        case Atom::exp: return std::exp(u);
        case Atom::sin: return std::sin(u);
        case Atom::cos: return std::cos(u);
        case Atom::tan: return std::tan(u);
        case Atom::sec: return 1.0 / std::cos(u);
        case Atom::csc: return 1.0 / std::sin(u);
        case Atom::cot: return std::cos(u) / std::sin(u);
        case Atom::sinh: return std::sinh(u);
        case Atom::cosh: return std::cosh(u);
        case Atom::tanh: return std::tanh(u);
        case Atom::sech: return 1.0 / std::cosh(u);
      }
      return 0;
    }
  }
  return 0;
}

Rat Expression::eval_rational() const {
  switch (kind()) {
    case Kind::constant:
      return node_->value;
    case Kind::sum: {
      Rat acc = 0;
      for (const auto& k : node_->kids) acc += k.eval_rational();
      return acc;
    }
    case Kind::product: {
      Rat acc = 1;
      for (const auto& k : node_->kids) acc *= k.eval_rational();
      return acc;
    }
    case Kind::power: {
      Rat base = node_->kids[0].eval_rational();
      Rat v = 1;
      if (node_->exponent < 0 && base == 0)
        throw std::invalid_argument("zero to a negative power");
      for (int i = 0; i < std::abs(node_->exponent); ++i) v *= base;
      return node_->exponent > 0 ? v : Rat(1) / v;
    }
    default:
      throw std::invalid_argument(
          "eval_rational: expression is not a rational constant");
  }
}

std::string Expression::prefix() const {
  switch (kind()) {
    case Kind::constant:
      return rational_str(node_->value);
    case Kind::variable:
      return std::string(1, kVarNames[node_->var]);
    case Kind::sum:
    case Kind::product: {
      std::ostringstream out;
      out << "(" << (kind() == Kind::sum ? "+" : "*");
      for (const auto& k : node_->kids) out << " " << k.prefix();
      out << ")";
      return out.str();
    }
    case Kind::power: {
      std::ostringstream out;
      out << "(^ " << node_->kids[0].prefix() << " " << node_->exponent << ")";
      return out.str();
    }
    case Kind::atom: {
      std::ostringstream out;
      out << "(" << atom_name(node_->fn) << " " << node_->kids[0].prefix()
          << ")";
      return out.str();
    }
  }
  return "0";
}

Expression differentiate(const Expression& e, int var) {
  using Kind = Expression::Kind;
  using Atom = Expression::Atom;
  switch (e.kind()) {
    case Kind::constant:
      return Expression::constant(0);
    case Kind::variable:
      return Expression::constant(e.node().var == var ? 1 : 0);
    case Kind::sum: {
      std::vector<Expression> parts;
      for (const auto& k : e.node().kids) parts.push_back(differentiate(k, var));
      return Expression::sum(std::move(parts));
    }
    case Kind::product: {
      const auto& kids = e.node().kids;
      std::vector<Expression> parts;
      for (size_t i = 0; i < kids.size(); ++i) {
        std::vector<Expression> factors;
        for (size_t j = 0; j < kids.size(); ++j)
          factors.push_back(j == i ? differentiate(kids[j], var) : kids[j]);
        parts.push_back(Expression::product(std::move(factors)));
      }
      return Expression::sum(std::move(parts));
    }
    case Kind::power: {
      const Expression& base = e.node().kids[0];
      const int k = e.node().exponent;
      return Expression::product({Expression::constant(k),
                                  Expression::power(base, k - 1),
                                  differentiate(base, var)});
    }
    case Kind::atom: {
      const Expression& u = e.node().kids[0];
      const Expression du = differentiate(u, var);
      auto wrap = [&](Atom f) { return Expression::apply(f, u); };
      Expression outer = Expression::constant(0);
      switch (e.node().fn) {
        case Atom::exp: outer = wrap(Atom::exp); break;
        case Atom::sin: outer = wrap(Atom::cos); break;
        case Atom::cos: outer = -wrap(Atom::sin); break;
        case Atom::tan: outer = Expression::power(wrap(Atom::sec), 2); break;
        case Atom::sec:
          outer = wrap(Atom::sec) * wrap(Atom::tan);
          break;
        case Atom::csc:
          outer = -(wrap(Atom::csc) * wrap(Atom::cot));
          break;
        case Atom::cot:
          outer = -Expression::power(wrap(Atom::csc), 2);
          break;
        case Atom::sinh: outer = wrap(Atom::cosh); break;
        case Atom::cosh: outer = wrap(Atom::sinh); break;
        case Atom::tanh: outer = Expression::power(wrap(Atom::sech), 2); break;
        case Atom::sech:
          outer = -(wrap(Atom::sech) * wrap(Atom::tanh));
          break;
      }
      return outer * du;
    }
  }
  return Expression::constant(0);
}

namespace {

struct Tokenizer {
  std::string text;
  size_t pos = 0;
  std::optional<std::string> next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) return std::nullopt;
    if (text[pos] == '(' || text[pos] == ')') return std::string(1, text[pos++]);
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }
};

std::optional<Expression::Atom> atom_from_name(const std::string& s) {
  using Atom = Expression::Atom;
  static const std::map<std::string, Atom> names = {
      {"exp", Atom::exp},   {"sin", Atom::sin},   {"cos", Atom::cos},
      {"tan", Atom::tan},   {"sec", Atom::sec},   {"csc", Atom::csc},
      {"cot", Atom::cot},   {"sinh", Atom::sinh}, {"cosh", Atom::cosh},
      {"tanh", Atom::tanh}, {"sech", Atom::sech}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

Expression parse_tokens(Tokenizer& tok,
                        const std::map<std::string, Expression>& params) {
  auto t = tok.next();
  if (!t) throw std::invalid_argument("unexpected end of expression");
  if (*t == "(") {
    auto op = tok.next();
    if (!op) throw std::invalid_argument("missing operator");
    std::vector<Expression> args;
    if (*op == "^") {
      Expression base = parse_tokens(tok, params);
      auto expo = tok.next();
      if (!expo) throw std::invalid_argument("missing exponent");
      const int k = std::stoi(*expo);
      auto close = tok.next();
      if (!close || *close != ")")
        throw std::invalid_argument("expected ) after power");
      return Expression::power(base, k);
    }
    while (true) {
      Tokenizer peek = tok;
      auto nt = peek.next();
      if (!nt) throw std::invalid_argument("missing )");
      if (*nt == ")") {
        tok = peek;
        break;
      }
      args.push_back(parse_tokens(tok, params));
    }
    if (*op == "+") return Expression::sum(std::move(args));
    if (*op == "*") return Expression::product(std::move(args));
    if (auto atom = atom_from_name(*op)) {
      if (args.size() != 1)
        throw std::invalid_argument("atom takes one argument");
      return Expression::apply(*atom, args[0]);
    }
    throw std::invalid_argument("unknown operator: " + *op);
  }
  if (*t == ")") throw std::invalid_argument("unexpected )");
  if (t->size() == 1) {
    const char c = (*t)[0];
    for (int i = 0; i < 4; ++i)
      if (kVarNames[i] == c) return Expression::variable(i);
  }
  if (auto it = params.find(*t); it != params.end()) return it->second;
  // Otherwise a rational literal.
  return Expression::constant(parse_rational(*t));
}

bool usable(double v) { return std::isfinite(v) && std::abs(v) < 1e12; }

}  // namespace

Expression parse_expression(const std::string& text,
                            const std::map<std::string, Expression>& params) {
  Tokenizer tok{text};
  Expression e = parse_tokens(tok, params);
  if (tok.next()) throw std::invalid_argument("trailing tokens in expression");
  return e;
}

EqualityResult expr_equal(const Expression& e1, const Expression& e2,
                          const DomainBox& box, int trials, double tol,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EqualityResult result;
  int produced = 0;
  int attempts = 0;
  while (produced < trials && attempts < trials * 10) {
    ++attempts;
    std::vector<double> point;
    for (const auto& [lo, hi] : box.ranges) {
      std::uniform_real_distribution<double> dist(lo, hi);
      point.push_back(dist(rng));
    }
    const double v1 = e1.eval(point);
    const double v2 = e2.eval(point);
    if (!usable(v1) || !usable(v2)) continue;  // sampled a singularity
    ++produced;
    const double dev = std::abs(v1 - v2) / (1.0 + std::abs(v1));
    result.max_deviation = std::max(result.max_deviation, dev);
    if (dev > tol && result.equal) {
      result.equal = false;
      result.witness = point;
    }
  }
  if (produced < trials)
    throw std::runtime_error(
        "expr_equal: could not draw enough regular sample points");
  return result;
}

VectorField field_bracket(const VectorField& x, const VectorField& y) {
  const int n = static_cast<int>(x.size());
  VectorField out(n, Expression::constant(0));
  for (int tau = 0; tau < n; ++tau) {
    std::vector<Expression> parts;
    for (int lambda = 0; lambda < n; ++lambda) {
      parts.push_back(x[lambda] * differentiate(y[tau], lambda));
      parts.push_back(-(y[lambda] * differentiate(x[tau], lambda)));
    }
    out[tau] = Expression::sum(std::move(parts));
  }
  return out;
}

}  // namespace lieframe
