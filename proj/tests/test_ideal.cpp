#include <doctest.h>

#include <set>

#include "pbzl/catalog.hpp"
#include "pbzl/ideal.hpp"

using namespace pbzl;

namespace {

Mask down_of(const FiniteAlgebra& a, Element x) { return a.downset(x); }

}  // namespace

TEST_CASE("lattice ideals are the principal downsets") {
  const FiniteAlgebra d5 = build_catalog_algebra("D5");
  CHECK(lattice_ideals(d5).size() == 5);

  const FiniteAlgebra bool4 = build_catalog_algebra("BOOL4");
  const auto ideals = lattice_ideals(bool4);
  CHECK(ideals.size() == 4);
  CHECK(std::set<Mask>(ideals.begin(), ideals.end()) ==
        std::set<Mask>{0b0001, 0b0011, 0b0101, 0b1111});

  const FiniteAlgebra m3 = build_catalog_algebra("M3B");
  CHECK(lattice_ideals(m3).size() == 5);

  // Brute-force cross-check: every downward-closed join-closed set
  // containing 0 shows up.
  for (const char* name : {"D4", "BOOL4", "M3B", "MO2", "COGOTTI7"}) {
    const FiniteAlgebra a = build_catalog_algebra(name);
    std::set<Mask> expected;
    for (Mask s = 1; s < (Mask{1} << a.size()); s += 2)
      if (is_lattice_ideal(a, s)) expected.insert(s);
    const auto got = lattice_ideals(a);
    CHECK(std::set<Mask>(got.begin(), got.end()) == expected);
  }
}

TEST_CASE("p-ideal recognition") {
  const FiniteAlgebra d5 = build_catalog_algebra("D5");
  // Only {0} and the whole chain survive: the trivial complement sends any
  // nonzero a to <>a = 1.
  CHECK(p_ideals(d5).size() == 2);
  const auto mid = is_p_ideal(d5, down_of(d5, 2));
  CHECK_FALSE(mid.holds);
  REQUIRE(mid.witness.has_value());

  CHECK(is_p_ideal(d5, Mask{1}).holds);

  const FiniteAlgebra mo2 = build_catalog_algebra("MO2");
  const auto atom = is_p_ideal(mo2, down_of(mo2, 1));
  CHECK_FALSE(atom.holds);
  // witness: a = 1 in the ideal, and the first quantified b that escapes
  REQUIRE(atom.witness.has_value());
  CHECK(atom.witness->first == 1);

  CHECK_THROWS_AS(is_p_ideal(d5, 0b01010), AlgebraError);
}

TEST_CASE("congruence kernels carry their delta and epsilon bounds") {
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const auto records = ursini_ideals(d4, all_congruences(d4));
  REQUIRE(records.size() == 2);
  CHECK(records[0].mask == Mask{1});
  CHECK(records[0].delta->is_identity());
  CHECK(records[0].epsilon->blocks() == std::vector<std::vector<Element>>{{0}, {1, 2}, {3}});
  CHECK(records[0].p_ideal);
  CHECK(records[1].mask == d4.universe_mask());
  CHECK(records[1].delta->is_all());

  const FiniteAlgebra d3 = build_catalog_algebra("D3");
  const auto simple = ursini_ideals(d3, all_congruences(d3));
  REQUIRE(simple.size() == 2);
  CHECK(simple[0].delta->is_identity());
  CHECK(simple[0].epsilon->is_identity());

  const FiniteAlgebra bool4 = build_catalog_algebra("BOOL4");
  const auto regular = ursini_ideals(bool4, all_congruences(bool4));
  CHECK(regular.size() == 4);
  for (const auto& rec : regular) CHECK(*rec.delta == *rec.epsilon);  // 0-regular case
}

TEST_CASE("the modal relation of the zero ideal") {
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  const ModalPairRelation rel = rho(d4, Mask{1});
  CHECK(rel.is_equivalence());
  CHECK(rel.related(1, 2));
  CHECK_FALSE(rel.related(0, 1));
  CHECK_FALSE(rel.related(2, 3));
  CHECK(rel.to_partition().blocks() == std::vector<std::vector<Element>>{{0}, {1, 2}, {3}});

  const FiniteAlgebra cog = build_catalog_algebra("COGOTTI7");
  const ModalPairRelation r0 = rho(cog, Mask{1});
  CHECK(r0.related(1, 3));  // the atom a and the fixpoint c are modally equivalent
  CHECK(r0.related(1, 1));
  // ... but the relation does not respect meets: <>(a^b)=0 vs <>(c^b)=1.
  const auto cc = relation_is_congruence(cog, r0);
  CHECK_FALSE(cc.holds);
  const auto wdm = is_weak_de_morgan(cog, Mask{1});
  CHECK_FALSE(wdm.holds);

  // On the whole algebra as ideal both checks are trivially true.
  CHECK(relation_is_congruence(cog, rho(cog, cog.universe_mask())).holds);
  CHECK(is_weak_de_morgan(cog, cog.universe_mask()).holds);

  // D4 satisfies the strong De Morgan law, so {0} is weak De Morgan.
  CHECK(is_weak_de_morgan(d4, Mask{1}).holds);
  CHECK(relation_is_congruence(d4, rho(d4, Mask{1})).holds);
}

TEST_CASE("p-ideals equal congruence kernels on strong De Morgan members") {
  for (const char* name : {"D4", "MO2", "BOOL4", "D3", "D5", "H16"}) {
    const FiniteAlgebra a = build_catalog_algebra(name);
    CHECK(p_ideals_equal_ursini(a, all_congruences(a)));
  }
  // Not applicable off the subvariety.
  const FiniteAlgebra m3 = build_catalog_algebra("M3B");
  CHECK_THROWS_AS(p_ideals_equal_ursini(m3, all_congruences(m3)), AlgebraError);
}

TEST_CASE("membership through the four modal terms") {
  const FiniteAlgebra d4 = build_catalog_algebra("D4");
  CHECK(d_term_membership(d4, Mask{1}, 1, 2));        // (a,b) in the monolith
  CHECK_FALSE(d_term_membership(d4, Mask{1}, 1, 3));  // (a,1) is not
  CHECK(d_term_membership(d4, Mask{1}, 2, 2));
  // Against epsilon on every kernel:
  for (const auto& rec : ursini_ideals(d4, all_congruences(d4)))
    for (Element x = 0; x < d4.size(); ++x)
      for (Element y = 0; y < d4.size(); ++y)
        CHECK(d_term_membership(d4, rec.mask, x, y) == rec.epsilon->related(x, y));
}

TEST_CASE("reducedness coincides with the SK identity on SDM members") {
  CHECK(reduced_iff_sk(build_catalog_algebra("D3"), all_congruences(build_catalog_algebra("D3"))));
  CHECK_FALSE(
      reduced_iff_sk(build_catalog_algebra("D4"), all_congruences(build_catalog_algebra("D4"))));
  CHECK(reduced_iff_sk(build_catalog_algebra("MO2"), all_congruences(build_catalog_algebra("MO2"))));
  CHECK_THROWS_AS(
      reduced_iff_sk(build_catalog_algebra("M3B"), all_congruences(build_catalog_algebra("M3B"))),
      AlgebraError);
}

TEST_CASE("the binary discriminator term works exactly on antiortholattices") {
  for (const char* name : {"D2", "D3", "D4", "D5", "COGOTTI7"})
    CHECK(binary_discriminator_check(build_catalog_algebra(name)).holds);

  const auto mo2 = binary_discriminator_check(build_catalog_algebra("MO2"));
  CHECK_FALSE(mo2.holds);
  REQUIRE(mo2.witness.has_value());
  CHECK(mo2.witness->first == 1);
  CHECK(mo2.witness->second == 2);  // b0(a, a') = a ^ a = a, nonzero

  // Products of antiortholattices leave the class, and the term notices.
  CHECK_FALSE(binary_discriminator_check(build_catalog_algebra("D3xD2")).holds);

  const FiniteAlgebra trivial = validate("1", {{true}}, {0}, {{0}});
  CHECK(binary_discriminator_check(trivial).holds);
}

TEST_CASE("the ternary ideal term characterizes kernels under AOL2") {
  const FiniteAlgebra d5 = build_catalog_algebra("D5");
  const ConLattice con = all_congruences(d5);
  CHECK(u_ideal_term_check(d5, Mask{1}, con));
  CHECK(u_ideal_term_check(d5, d5.universe_mask(), con));
  CHECK_FALSE(u_ideal_term_check(d5, d5.downset(2), con));

  const FiniteAlgebra m3 = build_catalog_algebra("M3B");
  CHECK_THROWS_AS(u_ideal_term_check(m3, Mask{1}, all_congruences(m3)), AlgebraError);
}

TEST_CASE("p-ideals absorb diamonds") {
  for (const char* name : {"D4", "MO2", "COGOTTI7", "M3B"}) {
    const FiniteAlgebra a = build_catalog_algebra(name);
    for (Mask ideal : p_ideals(a))
      for (Element x : mask_elements(ideal)) CHECK(((ideal >> a.diamond(x)) & 1u) == 1u);
  }
}
