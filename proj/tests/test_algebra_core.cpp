#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieframe/catalog.hpp"
#include "lieframe/structure_constants.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace lieframe;

namespace {

RatVector basis_vec(int n, int i) {
  RatVector v = RatVector::Zero(n);
  v(i) = 1;
  return v;
}

// Independent Jacobi oracle: checks [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on
// all basis triples, going through the bracket map rather than the raw table.
bool jacobi_brute_force(const StructureConstants& c) {
  const int n = c.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const RatVector ea = basis_vec(n, a), eb = basis_vec(n, b),
                        ed = basis_vec(n, d);
        RatVector sum = c.bracket(c.bracket(ea, eb), ed) +
                        c.bracket(c.bracket(eb, ed), ea) +
                        c.bracket(c.bracket(ed, ea), eb);
        for (int i = 0; i < n; ++i)
          if (sum(i) != 0) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("exact_nullspace on the frozen examples") {
  CHECK(exact_nullspace(RatMatrix::Zero(3, 3)).size() == 3);
  CHECK(exact_nullspace(RatMatrix::Identity(3, 3)).empty());

  // Stacked adjoint system of the Weyl algebra: kernel along x1.
  const auto weyl = catalog_lookup("Bianchi_II").constants;
  RatMatrix stacked(9, 3);
  for (int k = 0; k < 3; ++k)
    stacked.block(3 * k, 0, 3, 3) = weyl.adjoint_matrix(k);
  const auto z = exact_nullspace(stacked);
  CHECK(exact_rank(stacked) == 2);  // rank + nullity = columns
  REQUIRE(z.size() == 1);
  CHECK(z[0](0) != 0);
  CHECK(z[0](1) == 0);
  CHECK(z[0](2) == 0);
  for (int r = 0; r < 9; ++r) {
    Rat acc = 0;
    for (int c = 0; c < 3; ++c) acc += stacked(r, c) * z[0](c);
    CHECK(acc == 0);
  }
}

TEST_CASE("nullspace vectors annihilate random rectangular systems") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 15; ++trial) {
    const int rows = 2 + trial % 4, cols = 2 + (trial / 2) % 4;
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = rat(num(rng), 1 + (trial % 3));
    const auto kernel = exact_nullspace(m);
    CHECK(static_cast<int>(kernel.size()) + exact_rank(m) == cols);
    for (const auto& v : kernel) {
      const RatVector image = m * v;
      for (int i = 0; i < rows; ++i) CHECK(image(i) == 0);
    }
  }
}

TEST_CASE("jacobi_check accepts Bianchi IX and the abelian algebra") {
  const auto ix = catalog_lookup("Bianchi_IX").constants;
  CHECK(jacobi_check(ix).pass());
  CHECK(jacobi_brute_force(ix));

  const StructureConstants abelian(3);
  CHECK(jacobi_check(abelian).pass());
}

TEST_CASE("jacobi_check rejects an inconsistent table with a witness") {
  // C^3_{12} = 1 together with C^1_{13} = 1 breaks the Jacobi sum along x3.
  auto c = StructureConstants::from_entries(
      3, {{2, 0, 1, Rat(1)}, {0, 0, 2, Rat(1)}});
  const auto report = jacobi_check(c);
  CHECK_FALSE(report.pass());
  CHECK(report.antisymmetry_ok);
  CHECK_FALSE(report.jacobi_ok);
  REQUIRE(report.violation.has_value());
  CHECK((*report.violation)[0] == 3);  // residual along x3
  CHECK_FALSE(jacobi_brute_force(c));
}

TEST_CASE("jacobi_check detects antisymmetry violations in raw tables") {
  std::vector<Rat> table(27, Rat(0));
  table[(0 * 3 + 0) * 3 + 1] = 1;  // C^1_{12} without the mirrored entry
  auto c = StructureConstants::from_raw_table(3, table);
  const auto report = jacobi_check(c);
  CHECK_FALSE(report.antisymmetry_ok);
  REQUIRE(report.violation.has_value());
  CHECK((*report.violation)[3] == -1);
}

TEST_CASE("center of the Weyl algebra is spanned by x1") {
  const auto weyl = catalog_lookup("Bianchi_II").constants;
  const auto z = center(weyl);
  REQUIRE(z.size() == 1);
  CHECK(z[0](0) != 0);
  CHECK(z[0](1) == 0);
  CHECK(z[0](2) == 0);
}

TEST_CASE("center is trivial for Bianchi IX and full for abelian") {
  CHECK(center(catalog_lookup("Bianchi_IX").constants).empty());
  CHECK(center(StructureConstants(2)).size() == 2);
}

TEST_CASE("center vectors commute with every basis element") {
  for (const auto& d : catalog_sample_descriptors()) {
    const int n = d.constants.dim();
    for (const auto& z : center(d.constants))
      for (int k = 0; k < n; ++k) {
        const RatVector br = d.constants.bracket(z, basis_vec(n, k));
        for (int i = 0; i < n; ++i) CHECK(br(i) == 0);
      }
  }
}

TEST_CASE("derived series of A2, Bianchi IX and the abelian algebra") {
  const auto a2 = catalog_lookup("A2").constants;
  auto series = derived_series(a2);
  REQUIRE(series.size() == 3);
  CHECK(series[0].size() == 2);
  REQUIRE(series[1].size() == 1);
  CHECK(series[1][0](1) == 1);  // derived algebra is span{x2}
  CHECK(series[1][0](0) == 0);
  CHECK(series[2].empty());
  CHECK(is_solvable(a2));

  const auto ix = catalog_lookup("Bianchi_IX").constants;
  series = derived_series(ix);
  REQUIRE(series.size() == 2);
  CHECK(series[0].size() == 3);
  CHECK(series[1].size() == 3);  // stable, not solvable
  CHECK_FALSE(is_solvable(ix));

  series = derived_series(StructureConstants(3));
  REQUIRE(series.size() == 2);
  CHECK(series[1].empty());
}

TEST_CASE("derived series is strictly decreasing until stable") {
  for (const auto& d : catalog_sample_descriptors()) {
    const auto series = derived_series(d.constants);
    for (size_t i = 0; i + 2 < series.size(); ++i)
      CHECK(series[i + 1].size() < series[i].size());
  }
}

TEST_CASE("split_direct_sum finds the block structure") {
  const auto blocks_a38 = split_direct_sum(catalog_lookup("A3,8+A1").constants);
  REQUIRE(blocks_a38.size() == 2);
  CHECK(blocks_a38[0] == std::vector<int>{0, 1, 2});
  CHECK(blocks_a38[1] == std::vector<int>{3});

  CHECK(split_direct_sum(catalog_lookup("A4,10").constants).size() == 1);
  CHECK(split_direct_sum(catalog_lookup("4A1").constants).size() == 4);
}

TEST_CASE("split_direct_sum blocks individually satisfy the Jacobi identity") {
  for (const auto& d : catalog_sample_descriptors())
    for (const auto& block : split_direct_sum(d.constants))
      CHECK(jacobi_check(d.constants.restricted(block)).pass());
}

TEST_CASE("catalog_lookup substitutes parameters") {
  const auto vi = catalog_lookup("Bianchi_VI_h", {{"h", rat(-1)}});
  CHECK(vi.constants.c(0, 0, 2) == 1);
  CHECK(vi.constants.c(1, 1, 2) == -1);

  const auto a45 =
      catalog_lookup("A4,5", {{"alpha", rat(1)}, {"beta", rat(1)}});
  CHECK(a45.constants.c(0, 0, 3) == 1);
  CHECK(a45.constants.c(1, 1, 3) == 1);
  CHECK(a45.constants.c(2, 2, 3) == 1);
}

TEST_CASE("catalog_lookup rejects bad input") {
  CHECK_THROWS_AS(catalog_lookup("A3,5+A1", {{"alpha", rat(2)}}), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("no_such_algebra"), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("Bianchi_VI_h"), CatalogError);  // missing h
  CHECK_THROWS_AS(catalog_lookup("A4,5", {{"alpha", rat(1)}}), CatalogError);
  CHECK_THROWS_AS(catalog_lookup("A2", {{"alpha", rat(1)}}), CatalogError);
}

TEST_CASE("aliases resolve, with forced parameters where the family merges") {
  const auto a34 = catalog_lookup("A3,4");
  CHECK(a34.name == "Bianchi_VI_h");
  CHECK(a34.params.at("h") == -1);
  CHECK(catalog_lookup("Weyl").name == "Bianchi_II");
  CHECK(catalog_lookup("E(2)").params.at("h") == 0);
  CHECK(catalog_lookup("A3,5", {{"h", rat(1, 2)}}).name == "Bianchi_VI_h");
}

TEST_CASE("catalog covers the full table set") {
  int dim2 = 0, dim3 = 0, dim4 = 0;
  for (const auto& e : catalog_entries()) {
    if (e.dim == 2) ++dim2;
    if (e.dim == 3) ++dim3;
    if (e.dim == 4) ++dim4;
  }
  CHECK(dim2 == 2);
  CHECK(dim3 == 9);
  CHECK(dim4 == 24);
}

TEST_CASE("every catalog sample passes jacobi_check exactly") {
  for (const auto& d : catalog_sample_descriptors()) {
    CAPTURE(d.name);
    CHECK(jacobi_check(d.constants).pass());
  }
}

TEST_CASE("descriptor JSON round-trips byte-stably on exact fields") {
  const auto d = catalog_lookup("A4,6", {{"alpha", rat(-2)}, {"beta", rat(1, 2)}});
  const auto j = descriptor_to_json(d);
  const auto back = descriptor_from_json(j);
  CHECK(back.name == d.name);
  CHECK(back.params == d.params);
  CHECK(back.constants == d.constants);
  CHECK(descriptor_to_json(back).dump() == j.dump());
}

TEST_CASE("change_basis preserves the Jacobi identity and bracket relations") {
  const auto c = catalog_lookup("A4,10").constants;
  RatMatrix basis = RatMatrix::Identity(4, 4);
  basis(0, 1) = rat(1, 2);  // shear x2 -> x2 + x1/2
  basis(2, 3) = rat(-3);
  const auto cb = c.change_basis(basis);
  CHECK(jacobi_check(cb).pass());
  // [y2, y3] in the new basis must express [b2 + b1/2, b3] in new coordinates.
  const RatVector lhs = cb.bracket(basis_vec(4, 1), basis_vec(4, 2));
  const RatVector rhs =
      exact_inverse(basis) * c.bracket(basis.col(1), basis.col(2));
  for (int i = 0; i < 4; ++i) CHECK(lhs(i) == rhs(i));
}
