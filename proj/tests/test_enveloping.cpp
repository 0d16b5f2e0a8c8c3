#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieframe/catalog.hpp"
#include "lieframe/pbw.hpp"

using namespace lieframe;

namespace {

PBWMonomial mono(std::vector<int> exp) {
  PBWMonomial m(static_cast<int>(exp.size()));
  m.exp = std::move(exp);
  return m;
}

// The Heisenberg-type ideal b = {x1, x2, x3} with [x2, x3] = x1, ordered so
// brackets land on strictly earlier generators.
EnvelopingAlgebra heisenberg_env() {
  return EnvelopingAlgebra(catalog_lookup("Bianchi_II").constants);
}

// Action of the fourth generator of A4,10 on b: x2 -> -x3, x3 -> x2.
RatMatrix a410_x4_action() {
  RatMatrix a = RatMatrix::Zero(3, 3);
  a(2, 1) = -1;
  a(1, 2) = 1;
  return a;
}

// Faithful matrices of b used as the substitution oracle.
std::vector<RatMatrix> heisenberg_matrices() {
  RatMatrix r1 = RatMatrix::Zero(3, 3), r2 = RatMatrix::Zero(3, 3),
            r3 = RatMatrix::Zero(3, 3);
  r1(0, 1) = 1;
  r2(0, 2) = 1;
  r3(2, 1) = 1;
  return {r1, r2, r3};
}

UEAElement random_element(std::mt19937_64& rng, int nvars, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-4, 4);
  UEAElement e;
  for (int t = 0; t < 4; ++t) {
    PBWMonomial m(nvars);
    for (int i = 0; i < nvars; ++i) m.exp[i] = deg(rng) / 2;
    e.add_term(m, rat(num(rng), 1 + deg(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("x2^l * x3 equals x3*x2^l + l*x1*x2^(l-1) in U(b)") {
  const auto env = heisenberg_env();
  for (int l = 1; l <= 5; ++l) {
    // Left side: x2^l * x3 is already normal-ordered.
    UEAElement lhs = UEAElement::monomial(mono({0, l, 0}), 1);
    lhs = env.right_multiply(lhs, 2);
    // Right side: normal-order x3 * x2^l, then add l*x1*x2^(l-1).
    UEAElement rhs = UEAElement::monomial(mono({0, 0, 1}), 1);
    for (int rep = 0; rep < l; ++rep) rhs = env.right_multiply(rhs, 1);
    rhs.add_term(mono({1, l - 1, 0}), l);
    CHECK(lhs == rhs);
    CHECK(lhs == UEAElement::monomial(mono({0, l, 1}), 1));
  }
}

TEST_CASE("right multiplication by a commuting generator only bumps exponents") {
  EnvelopingAlgebra abelian{StructureConstants(2)};
  for (int k = 0; k <= 4; ++k) {
    const auto result =
        abelian.right_multiply(UEAElement::monomial(mono({k, 0}), 1), 1);
    CHECK(result == UEAElement::monomial(mono({k, 1}), 1));
  }
}

TEST_CASE("x2*x3 times x2 normal-orders through x3*x2 = x2*x3 - x1") {
  const auto env = heisenberg_env();
  const auto result =
      env.right_multiply(UEAElement::monomial(mono({0, 1, 1}), 1), 1);
  UEAElement expected;
  expected.add_term(mono({0, 2, 1}), 1);
  expected.add_term(mono({1, 1, 0}), -1);
  CHECK(result == expected);
}

TEST_CASE("commutator with x3 acts as l*x1^(k+1)*x2^(l-1) on the 2d ideal") {
  EnvelopingAlgebra env{StructureConstants(2)};
  // [x1, x3] = 0, [x2, x3] = x1.
  RatMatrix action = RatMatrix::Zero(2, 2);
  action(0, 1) = 1;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const auto result = env.external_commutator(
          UEAElement::monomial(mono({k, l}), 1), action);
      UEAElement expected;
      if (l > 0) expected.add_term(mono({k + 1, l - 1}), l);
      CHECK(result == expected);
    }
}

TEST_CASE("commutator with x4 reproduces the quartic b_klm expansion") {
  const auto env = heisenberg_env();
  const auto action = a410_x4_action();
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 3; ++l)
      for (int m = 0; m <= 3; ++m) {
        const auto result = env.external_commutator(
            UEAElement::monomial(mono({k, l, m}), 1), action);
        UEAElement expected;
        if (l > 0) expected.add_term(mono({k, l - 1, m + 1}), -l);
        if (l > 1)
          expected.add_term(mono({k + 1, l - 2, m}), rat(l * (l - 1), 2));
        if (m > 0) expected.add_term(mono({k, l + 1, m - 1}), m);
        if (m > 1)
          expected.add_term(mono({k + 1, l, m - 2}), -rat(m * (m - 1), 2));
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(m);
        CHECK(result == expected);
      }
}

TEST_CASE("the unit commutes with every external generator") {
  const auto env = heisenberg_env();
  CHECK(env.external_commutator(UEAElement::unit(3), a410_x4_action())
            .is_zero());
}

TEST_CASE("straightening agrees with matrix substitution") {
  const auto env = heisenberg_env();
  const auto rho = heisenberg_matrices();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_element(rng, 3, 4);
    for (int g = 0; g < 3; ++g) {
      const RatMatrix lhs = env.evaluate(env.right_multiply(a, g), rho);
      const RatMatrix rhs = env.evaluate(a, rho) * rho[g];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("straightening is linear and raises degree by at most one") {
  const auto env = heisenberg_env();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_element(rng, 3, 4);
    const auto b = random_element(rng, 3, 4);
    const Rat s = rat(trial - 12, 5);
    for (int g = 0; g < 3; ++g) {
      const auto lhs = env.right_multiply(a * s + b, g);
      const auto rhs = env.right_multiply(a, g) * s + env.right_multiply(b, g);
      CHECK(lhs == rhs);
      if (!a.is_zero())
        CHECK(env.right_multiply(a, g).degree() <= a.degree() + 1);
    }
  }
}

TEST_CASE("a basis whose brackets escape the prefix is rejected") {
  // [x1, x2] = x2 escapes to a non-earlier generator.
  CHECK_THROWS_AS(EnvelopingAlgebra{catalog_lookup("A2").constants},
                  UnsupportedBasisError);
}

TEST_CASE("the degree cap converts runaway recursions into diagnostics") {
  EnvelopingAlgebra env{catalog_lookup("Bianchi_II").constants, 3};
  CHECK_THROWS_AS(env.right_multiply(UEAElement::monomial(mono({0, 3, 0}), 1), 2),
                  TerminationCapError);
}

TEST_CASE("monomials and elements render in the debug form") {
  CHECK(mono({0, 2, 1}).str() == "x2^2*x3");
  CHECK(PBWMonomial::unit(3).str() == "1");
  UEAElement e;
  e.add_term(mono({0, 2, 1}), 1);
  e.add_term(mono({1, 1, 0}), rat(-3, 2));
  CHECK(e.str() == "x2^2*x3 + -3/2*x1*x2");  // lexicographic term order
}
