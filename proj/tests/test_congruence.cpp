#include <doctest.h>

#include <algorithm>

#include "common/oracles.hpp"
#include "pbzl/catalog.hpp"
#include "pbzl/congruence.hpp"
#include "pbzl/enumerate.hpp"

using namespace pbzl;

TEST_CASE("principal congruences collapse by operation closure") {
  const FiniteAlgebra d3 = build_catalog_algebra("D3");
  CHECK(principal_congruence(d3, 1, 2).is_all());   // a = 1 forces everything together
  CHECK(principal_congruence(d3, 1, 1).is_identity());

  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const Congruence cg = principal_congruence(d4, 1, 2);
  CHECK(cg.blocks() == std::vector<std::vector<Element>>{{0}, {1, 2}, {3}});
  CHECK(cg.is_pseudo_identical());
}

TEST_CASE("congruence lattices of the small chains") {
  const ConLattice d3 = all_congruences(build_catalog_algebra("D3"));
  CHECK(d3.congruences.size() == 2);

  const ConLattice d4 = all_congruences(build_catalog_algebra("D4"));
  CHECK(d4.congruences.size() == 3);

  const ConLattice d2 = all_congruences(build_catalog_algebra("D2"));
  CHECK(d2.congruences.size() == 2);

  const ConLattice bool4 = all_congruences(build_catalog_algebra("BOOL4"));
  CHECK(bool4.congruences.size() == 4);
}

TEST_CASE("the full lattice agrees with the exhaustive partition oracle") {
  for (const char* name : {"D2", "D3", "D4", "D5", "BOOL4", "MO2", "O6", "M3B", "D3xD2"}) {
    const FiniteAlgebra a = build_catalog_algebra(name);
    auto expected = oracle::congruences_brute_force(a);
    auto got = all_congruences(a).congruences;
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}

TEST_CASE("the involution-reduct signature can differ from the full one") {
  // On D4 the ~-free reduct has the extra congruence joining 0 with a.
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const auto full = all_congruences(d4, Signature::Full).congruences;
  const auto reduct = all_congruences(d4, Signature::BoundedInvolution).congruences;
  CHECK(full.size() == 3);
  CHECK(reduct.size() == 4);
  auto expected = oracle::congruences_brute_force(d4, Signature::BoundedInvolution);
  std::sort(expected.begin(), expected.end());
  CHECK(reduct == expected);
}

TEST_CASE("quotients") {
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const Congruence theta = principal_congruence(d4, 1, 2);
  CHECK(isomorphic(quotient(d4, theta), build_catalog_algebra("D3")));

  const ConLattice con = all_congruences(d4);
  CHECK(isomorphic(quotient(d4, con.identity()), d4));
  CHECK(quotient(d4, con.all()).size() == 1);
}

TEST_CASE("quotient relabelling keeps the bounds in place") {
  // BOOL8 has congruences whose top block's least element is small; the
  // quotient must still put the top block at the last index.
  const FiniteAlgebra b8 = build_catalog_algebra("BOOL8");
  for (const auto& theta : all_congruences(b8).congruences) {
    const FiniteAlgebra q = quotient(b8, theta);
    CHECK(q.size() == theta.block_count());
  }
}

TEST_CASE("factor pairs and direct indecomposability") {
  const FiniteAlgebra d3 = build_catalog_algebra("D3");
  const ConLattice con3 = all_congruences(d3);
  const auto pairs3 = factor_pairs(d3, con3);
  CHECK(pairs3.size() == 2);  // (identity, all) and (all, identity)
  CHECK(structural_predicates(d3, con3).directly_indecomposable);

  const FiniteAlgebra prod = build_catalog_algebra("D3xD2");
  const ConLattice conp = all_congruences(prod);
  const auto pairsp = factor_pairs(prod, conp);
  CHECK(pairsp.size() >= 4);  // both trivial pairs plus the two projections
  CHECK_FALSE(structural_predicates(prod, conp).directly_indecomposable);

  // D4's middle congruence has no permuting complement.
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const ConLattice con4 = all_congruences(d4);
  for (auto [i, j] : factor_pairs(d4, con4)) {
    CHECK((con4.congruences[i].is_identity() || con4.congruences[i].is_all()));
  }
}

TEST_CASE("structural predicates of the chains") {
  const FiniteAlgebra d3 = build_catalog_algebra("D3");
  const StructuralPredicates p3 = structural_predicates(d3, all_congruences(d3));
  CHECK(p3.simple);
  CHECK(p3.reduced);
  CHECK(p3.subdirectly_irreducible);

  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const StructuralPredicates p4 = structural_predicates(d4, all_congruences(d4));
  CHECK_FALSE(p4.simple);
  CHECK(p4.subdirectly_irreducible);  // monolith = the middle collapse
  CHECK_FALSE(p4.reduced);            // that monolith has 0-class {0}

  const FiniteAlgebra bool4 = build_catalog_algebra("BOOL4");
  const StructuralPredicates pb = structural_predicates(bool4, all_congruences(bool4));
  CHECK(pb.reduced);
  CHECK_FALSE(pb.directly_indecomposable);
  CHECK_FALSE(pb.subdirectly_irreducible);
}

TEST_CASE("congruence canonical form sorts blocks by least element") {
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const Congruence theta = principal_congruence(d4, 1, 2);
  const auto blocks = theta.blocks();
  for (size_t i = 1; i < blocks.size(); ++i) CHECK(blocks[i - 1][0] < blocks[i][0]);
}

TEST_CASE("size cap raises") {
  CHECK_THROWS_AS(all_congruences(build_catalog_algebra("D3"), Signature::Full, 2), AlgebraError);
}
