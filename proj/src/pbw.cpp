#include "lieframe/pbw.hpp"

#include <sstream>

namespace lieframe {

std::string PBWMonomial::str() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << (i + 1);
    if (exp[i] > 1) out << "^" << exp[i];
    first = false;
  }
  return out.str();
}

UEAElement UEAElement::monomial(const PBWMonomial& m, const Rat& coeff) {
  UEAElement e;
  e.add_term(m, coeff);
  return e;
}

void UEAElement::add_term(const PBWMonomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int UEAElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rat UEAElement::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string UEAElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    if (c != 1 || m.is_unit()) out << rational_str(c) << (m.is_unit() ? "" : "*");
    if (!m.is_unit()) out << m.str();
    first = false;
  }
  return out.str();
}

EnvelopingAlgebra::EnvelopingAlgebra(StructureConstants ideal, int degree_cap)
    : ideal_(std::move(ideal)), degree_cap_(degree_cap) {
  const int s = ideal_.dim();
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      for (int k = 0; k < s; ++k)
        if (ideal_.c(k, i, j) != 0 && k >= i)
          throw UnsupportedBasisError(
              "bracket [y" + std::to_string(i + 1) + ", y" +
              std::to_string(j + 1) + "] escapes to y" + std::to_string(k + 1) +
              "; basis is not ordered for straightening");
}

UEAElement EnvelopingAlgebra::monomial_times_generator(const PBWMonomial& m,
                                                       int g) const {
  if (m.degree() + 1 > degree_cap_)
    throw TerminationCapError("straightening exceeded the degree cap of " +
                              std::to_string(degree_cap_));
  const int s = nvars();
  int top = -1;
  for (int i = s - 1; i > g; --i)
    if (m.exp[i] > 0) {
      top = i;
      break;
    }
  if (top < 0) {
    PBWMonomial out = m;
    out.exp[g] += 1;
    return UEAElement::monomial(out, 1);
  }
  // m = u * y_top with top > g: u*(y_top y_g) = (u y_g) y_top + u*[y_top,y_g].
  PBWMonomial u = m;
  u.exp[top] -= 1;
  UEAElement result;
  const UEAElement u_times_g = monomial_times_generator(u, g);
  for (const auto& [mono, c] : u_times_g.terms()) {
    PBWMonomial shifted = mono;
    shifted.exp[top] += 1;  // all indices in mono are <= top
    result.add_term(shifted, c);
  }
  for (int k = 0; k < g; ++k) {
    const Rat& c_tk = ideal_.c(k, top, g);  // [y_top, y_g] = sum c y_k, k < g
    if (c_tk == 0) continue;
    UEAElement correction = monomial_times_generator(u, k);
    correction *= c_tk;
    result += correction;
  }
  return result;
}

UEAElement EnvelopingAlgebra::right_multiply(const UEAElement& a, int g) const {
  UEAElement out;
  for (const auto& [m, c] : a.terms()) {
    UEAElement part = monomial_times_generator(m, g);
    part *= c;
    out += part;
  }
  return out;
}

UEAElement EnvelopingAlgebra::external_commutator(const UEAElement& a,
                                                  const RatMatrix& action) const {
  const int s = nvars();
  UEAElement out;
  for (const auto& [m, coeff] : a.terms()) {
    // Expand the monomial into its letter sequence and apply the derivation
    // letter by letter: [w1...wd, h] = sum_p w1..[wp,h]..wd.
    std::vector<int> letters;
    for (int i = 0; i < s; ++i)
      for (int r = 0; r < m.exp[i]; ++r) letters.push_back(i);
    for (size_t p = 0; p < letters.size(); ++p) {
      for (int k = 0; k < s; ++k) {
        const Rat c_kp = action(k, letters[p]);
        if (c_kp == 0) continue;
        UEAElement word = UEAElement::unit(s);
        for (size_t q = 0; q < letters.size(); ++q)
          word = right_multiply(word, q == p ? k : letters[q]);
        word *= coeff * c_kp;
        out += word;
      }
    }
  }
  return out;
}

RatMatrix EnvelopingAlgebra::evaluate(const PBWMonomial& m,
                                      const std::vector<RatMatrix>& rho) {
  const Eigen::Index n = rho.empty() ? 0 : rho[0].rows();
  RatMatrix out = RatMatrix::Identity(n, n);
  for (size_t i = 0; i < m.exp.size(); ++i)
    for (int r = 0; r < m.exp[i]; ++r) out = out * rho[i];
  return out;
}

RatMatrix EnvelopingAlgebra::evaluate(const UEAElement& a,
                                      const std::vector<RatMatrix>& rho) const {
  const Eigen::Index n = rho.empty() ? 0 : rho[0].rows();
  RatMatrix out = RatMatrix::Zero(n, n);
  for (const auto& [m, c] : a.terms()) out += evaluate(m, rho) * c;
  return out;
}

}  // namespace lieframe
