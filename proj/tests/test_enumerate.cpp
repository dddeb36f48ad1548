#include <doctest.h>

#include "common/oracles.hpp"
#include "pbzl/catalog.hpp"
#include "pbzl/enumerate.hpp"

using namespace pbzl;

TEST_CASE("lattice counts up to isomorphism") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 1);
  CHECK(enumerate_lattices(3).size() == 1);
  CHECK(enumerate_lattices(4).size() == 2);
  CHECK(enumerate_lattices(5).size() == 5);
  CHECK(enumerate_lattices(6).size() == 15);
  CHECK(enumerate_lattices(7).size() == 53);
  CHECK_THROWS_AS(enumerate_lattices(9), AlgebraError);
}

TEST_CASE("lattice enumeration agrees with the labelled brute-force oracle") {
  for (int n = 2; n <= 6; ++n) {
    const auto classes = oracle::lattice_classes_brute_force(n);
    const auto found = enumerate_lattices(n);
    CHECK(found.size() == classes.size());
    for (const auto& lat : found) CHECK(classes.count(lattice_canonical_key(lat)) == 1);
  }
}

TEST_CASE("expansion streams contain one representative per class") {
  // The 3-chain carries exactly one PBZ* structure: the 3-element
  // antiortholattice chain.
  const Lattice chain3 = enumerate_lattices(3).front();
  const auto pbz3 = enumerate_expansions(chain3, ClassLabel::PBZSTAR);
  REQUIRE(pbz3.size() == 1);
  CHECK(isomorphic(pbz3.front(), build_catalog_algebra("D3")));

  // The diamond has a unique orthomodular structure: the Boolean one.
  const auto lat4 = enumerate_lattices(4);
  const Lattice& diamond = lat4.front().down[2] == 0b0101 ? lat4.front() : lat4.back();
  const auto omls = enumerate_expansions(diamond, ClassLabel::OML);
  REQUIRE(omls.size() == 1);
  CHECK(isomorphic(omls.front(), build_catalog_algebra("BOOL4")));

  // One bounded involution structure on the 2-chain.
  const Lattice chain2 = enumerate_lattices(2).front();
  CHECK(enumerate_expansions(chain2, ClassLabel::BI).size() == 1);
}

TEST_CASE("expansion enumeration agrees with the raw-table oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const Lattice& lat : enumerate_lattices(n))
      for (ClassLabel target : {ClassLabel::BI, ClassLabel::OML, ClassLabel::BZL,
                                ClassLabel::PBZSTAR, ClassLabel::AOL}) {
        const auto classes = oracle::expansion_classes_brute_force(lat, target);
        const auto found = enumerate_expansions(lat, target);
        CHECK(found.size() == classes.size());
        for (const auto& a : found) CHECK(classes.count(algebra_canonical_key(a)) == 1);
      }
}

TEST_CASE("expansion enumeration at size six matches the oracle counts") {
  int total_engine = 0;
  size_t total_oracle = 0;
  for (const Lattice& lat : enumerate_lattices(6)) {
    total_engine += static_cast<int>(enumerate_expansions(lat, ClassLabel::BZL).size());
    total_oracle += oracle::expansion_classes_brute_force(lat, ClassLabel::BZL).size();
  }
  CHECK(total_engine == static_cast<int>(total_oracle));
}

TEST_CASE("canonical keys identify isomorphic presentations") {
  const FiniteAlgebra left = build_catalog_algebra("D3xD2");
  const FiniteAlgebra right = build_catalog_algebra("D2xD3");
  CHECK(isomorphic(left, right));
  CHECK_FALSE(isomorphic(left, build_catalog_algebra("MO2")));
  CHECK_FALSE(isomorphic(build_catalog_algebra("D4"), build_catalog_algebra("BOOL4")));
}

TEST_CASE("enumerated streams are deterministic") {
  const auto first = enumerate_algebras(4, ClassLabel::PBZSTAR);
  const auto second = enumerate_algebras(4, ClassLabel::PBZSTAR);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i)
    CHECK(algebra_canonical_key(first[i]) == algebra_canonical_key(second[i]));
}
