// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria quantify over the named catalog and over every small
// algebra up to isomorphism; the independent brute-force oracles guard the
// enumeration and congruence machinery.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common/oracles.hpp"
#include "pbzl/catalog.hpp"
#include "pbzl/center.hpp"
#include "pbzl/congruence.hpp"
#include "pbzl/enumerate.hpp"
#include "pbzl/ideal.hpp"
#include "pbzl/term.hpp"
#include "pbzl/verify.hpp"

using namespace pbzl;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

const TheoremResult* row(const SuiteReport& suite, const std::string& name) {
  for (const auto& r : suite.results)
    if (r.name == name) return &r;
  return nullptr;
}

bool rows_pass(const SuiteReport& suite, const std::vector<std::string>& names,
               std::string& detail) {
  for (const auto& name : names) {
    const TheoremResult* r = row(suite, name);
    if (!r) {
      detail = "missing suite row " + name;
      return false;
    }
    if (r->checked == 0) {
      detail = name + " never applied";
      return false;
    }
    if (r->failures != 0) {
      detail = name + ": " + r->first_counterexample;
      return false;
    }
  }
  return true;
}

struct Claim {
  const char* algebra;
  const char* fact;
  bool expected;
};

// The published classification facts, frozen. Class labels use their
// display names; everything else is an identity.
const Claim kCatalogClaims[] = {
    {"D2", "OML", true},      {"D2", "AOL", true},       {"D2", "SK", true},
    {"D3", "AOL", true},      {"D3", "PBZ*", true},      {"D3", "SK", true},
    {"D3", "OL", false},      {"D4", "AOL", true},       {"D4", "SDM", true},
    {"D4", "AOL2", true},     {"D4", "J2", true},        {"D4", "SK", false},
    {"D5", "AOL", true},      {"D5", "DIST", true},      {"D5", "SDM", true},
    {"MO2", "OML", true},     {"MO2", "AOL", false},     {"MO2", "SK", true},
    {"MO2", "SDM", true},     {"MO2", "J2", true},       {"O6", "OL", true},
    {"O6", "OML", false},     {"O6", "PARA", false},     {"O6", "PBZ*", false},
    {"M3B", "PBZ*", true},    {"M3B", "SK", true},       {"M3B", "J2", true},
    {"M3B", "WSDM", false},   {"M3B", "SDM", false},     {"COGOTTI7", "AOL", true},
    {"COGOTTI7", "DIST", true}, {"COGOTTI7", "PBZ*", true}, {"H16", "SK", true},
    {"H16", "SDM", true},     {"H16", "J2", false},      {"H16", "PBZ*", true},
};

bool lookup_fact(const ClassificationReport& rep, const std::string& fact, bool& value) {
  for (int i = 0; i < kNumClassLabels; ++i)
    if (fact == to_string(static_cast<ClassLabel>(i))) {
      value = rep.classes[i];
      return true;
    }
  for (const auto& [name, holds] : rep.identities)
    if (name == fact) {
      value = holds;
      return true;
    }
  return false;
}

void criterion_1() {
  std::string detail;
  bool ok = true;
  for (const Claim& claim : kCatalogClaims) {
    const ClassificationReport rep = classify(build_catalog_algebra(claim.algebra));
    bool value = false;
    if (!lookup_fact(rep, claim.fact, value)) {
      ok = false;
      detail = std::string(claim.algebra) + ": unknown fact " + claim.fact;
      break;
    }
    if (value != claim.expected) {
      ok = false;
      detail = std::string(claim.algebra) + ": " + claim.fact + " = " + (value ? "true" : "false");
      break;
    }
  }
  report(1, "catalog conformance (boolean table equality)", ok, detail);
}

void criterion_2(const std::vector<FiniteAlgebra>& enumerated) {
  int checked = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : enumerated) {
    const ClassificationReport rep = classify(a);
    if (!rep.is(ClassLabel::BZSTAR)) continue;
    ++checked;
    if (rep.is(ClassLabel::PARA) != rep.identity("DIAMOND_OM")) {
      ok = false;
      detail = a.name();
      break;
    }
  }
  report(2, "paraorthomodularity equals the diamond orthomodularity identity on " +
                std::to_string(checked) + " BZ*-algebras",
         ok && checked > 0, detail);
}

void criterion_3(const std::vector<FiniteAlgebra>& enumerated) {
  int checked = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : enumerated) {
    const ClassificationReport rep = classify(a);
    if (!rep.is(ClassLabel::PBZSTAR)) continue;
    ++checked;
    if (rep.sharp.kleene != rep.sharp.diamond || rep.sharp.kleene != rep.sharp.brouwer) {
      ok = false;
      detail = a.name();
      break;
    }
  }
  report(3, "the three sharp sets collapse on " + std::to_string(checked) + " PBZ*-lattices",
         ok && checked > 0, detail);
}

void criterion_4(const std::vector<FiniteAlgebra>& pbz_universe) {
  int checked = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : pbz_universe) {
    ++checked;
    const CommutationReport r = commutation_report(a);
    if (r.c_pbz != r.c_c1c4 || r.c_pbz != r.c_factor) {
      ok = false;
      detail = a.name();
      break;
    }
  }
  report(4, "the three centrality descriptions coincide on " + std::to_string(checked) +
                " PBZ*-lattices",
         ok && checked > 0, detail);
}

void criterion_5(const std::vector<FiniteAlgebra>& aol2_pool) {
  int checked = 0, algebras = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : aol2_pool) {
    ++algebras;
    for (Element x = 0; x < a.size() && ok; ++x) {
      ++checked;
      try {
        if (!decompose(a, x).verified) {
          ok = false;
          detail = a.name() + " at element " + std::to_string(x);
        }
      } catch (const AlgebraError& e) {
        ok = false;
        detail = a.name() + ": " + e.what();
      }
    }
    if (!ok) break;
  }
  report(5, "interval decompositions verify for " + std::to_string(checked) + " splits over " +
                std::to_string(algebras) + " AOL2 members (up to 9 elements)",
         ok && checked > 0, detail);
}

void criterion_6(const std::vector<FiniteAlgebra>& enumerated) {
  std::string detail;
  bool ok = true;
  int checked = 0;
  for (const auto& a : enumerated) {
    const ClassificationReport rep = classify(a);
    if (!rep.is(ClassLabel::PBZSTAR) || !rep.identity("AOL2")) continue;
    ++checked;
    if (!rep.identity("AOL1") || !rep.identity("AOL3") || !rep.identity("WSDM")) {
      ok = false;
      detail = a.name();
      break;
    }
  }
  // Independence witnesses.
  const ClassificationReport d4 = classify(build_catalog_algebra("D4"));
  const ClassificationReport m3 = classify(build_catalog_algebra("M3B"));
  const ClassificationReport h = classify(build_catalog_algebra("H16"));
  if (ok) {
    if (!(d4.identity("AOL2") && d4.identity("SDM") && !d4.identity("SK"))) {
      ok = false;
      detail = "D4 independence row";
    } else if (!(m3.identity("SK") && m3.identity("J2") && !m3.identity("WSDM"))) {
      ok = false;
      detail = "M3B independence row";
    } else if (!(h.identity("SK") && h.identity("SDM") && !h.identity("J2"))) {
      ok = false;
      detail = "H16 independence row";
    }
  }
  report(6, "AOL2 alone axiomatizes the subvariety on " + std::to_string(checked) +
                " members, with the three independence witnesses",
         ok && checked > 0, detail);
}

void criterion_7(const std::vector<FiniteAlgebra>& sdm_pool) {
  int checked = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : sdm_pool) {
    ++checked;
    const ConLattice con = all_congruences(a);
    try {
      if (!p_ideals_equal_ursini(a, con)) {
        ok = false;
        detail = a.name() + ": p-ideals differ from kernels or rho != epsilon";
        break;
      }
      for (const IdealRecord& rec : ursini_ideals(a, con))
        for (Element x = 0; x < a.size() && ok; ++x)
          for (Element y = 0; y < a.size(); ++y)
            if (d_term_membership(a, rec.mask, x, y) != rec.epsilon->related(x, y)) {
              ok = false;
              detail = a.name() + ": d-terms vs epsilon at (" + std::to_string(x) + "," +
                       std::to_string(y) + ")";
              break;
            }
    } catch (const AlgebraError& e) {
      ok = false;
      detail = a.name() + ": " + e.what();
    }
    if (!ok) break;
  }
  report(7, "strong De Morgan ideal theory (kernels, modal relation, d-terms) on " +
                std::to_string(checked) + " members",
         ok && checked > 0, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;

  const FiniteAlgebra cog = build_catalog_algebra("COGOTTI7");
  const ModalPairRelation r0 = rho(cog, Mask{1});
  if (!r0.related(1, 3)) {  // the atom a and the fixpoint c
    ok = false;
    detail = "(a,c) missing from the modal relation";
  } else if (relation_is_congruence(cog, r0).holds) {
    ok = false;
    detail = "the modal relation unexpectedly respects meets";
  }

  if (ok) {
    const FiniteAlgebra d4 = build_catalog_algebra("D4");
    const ConLattice con = all_congruences(d4);
    const auto records = ursini_ideals(d4, con);
    const IdealRecord* zero = nullptr;
    for (const auto& rec : records)
      if (rec.mask == Mask{1}) zero = &rec;
    const ClassificationReport rep = classify(d4);
    const StructuralPredicates pred = structural_predicates(d4, con);
    if (!zero || zero->epsilon->is_identity() || !zero->epsilon->is_pseudo_identical()) {
      ok = false;
      detail = "the zero ideal of D4 lacks its nonzero pseudo-identical bound";
    } else if (pred.reduced || !rep.identity("SDM") || rep.identity("SK")) {
      ok = false;
      detail = "D4 reduced/SDM/SK pattern broken";
    } else if (reduced_iff_sk(d4, con)) {
      ok = false;
      detail = "D4 claims to be reduced";
    }
  }
  report(8, "negative witnesses: the 7-element ordinal sum and the 4-chain", ok, detail);
}

void criterion_9(const std::vector<FiniteAlgebra>& enumerated) {
  int split_checked = 0, aol_checked = 0;
  std::string detail;
  bool ok = true;
  for (const auto& a : enumerated) {
    if (a.size() < 2) continue;
    const ClassificationReport rep = classify(a);
    if (!rep.is(ClassLabel::PBZSTAR)) continue;
    const ConLattice con = all_congruences(a);
    const StructuralPredicates pred = structural_predicates(a, con);
    if (rep.identity("J2") && rep.identity("WSDM") && pred.directly_indecomposable) {
      ++split_checked;
      if (!rep.identity("TILDE_EQ_PRIME") && !rep.is(ClassLabel::AOL)) {
        ok = false;
        detail = a.name() + " is neither orthomodular nor an antiortholattice";
        break;
      }
    }
    if (rep.is(ClassLabel::AOL)) {
      ++aol_checked;
      if (!pred.directly_indecomposable) {
        ok = false;
        detail = a.name() + " decomposes";
        break;
      }
    }
  }
  report(9, "indecomposable J2+WSDM members split (" + std::to_string(split_checked) +
                ") and antiortholattices stay whole (" + std::to_string(aol_checked) + ")",
         ok && split_checked > 0 && aol_checked > 0, detail);
}

void criterion_10() {
  bool ok = true;
  std::string detail;
  // Congruence lattices against the exhaustive partition oracle.
  for (const char* name : {"D2", "D3", "D4", "D5", "BOOL4", "MO2", "O6", "M3B", "D3xD2"}) {
    const FiniteAlgebra a = build_catalog_algebra(name);
    auto expected = oracle::congruences_brute_force(a);
    std::sort(expected.begin(), expected.end());
    if (all_congruences(a).congruences != expected) {
      ok = false;
      detail = std::string("congruences of ") + name;
      break;
    }
  }
  // Lattice and expansion classes against the labelled brute-force oracle.
  if (ok)
    for (int n = 2; n <= 6 && ok; ++n) {
      const auto classes = oracle::lattice_classes_brute_force(n);
      const auto found = enumerate_lattices(n);
      if (found.size() != classes.size()) {
        ok = false;
        detail = "lattice count at size " + std::to_string(n);
        break;
      }
      for (const auto& lat : found)
        if (!classes.count(lattice_canonical_key(lat))) {
          ok = false;
          detail = "non-canonical lattice at size " + std::to_string(n);
          break;
        }
      for (const Lattice& lat : found) {
        for (ClassLabel target : {ClassLabel::BZL, ClassLabel::PBZSTAR}) {
          const auto oracle_classes = oracle::expansion_classes_brute_force(lat, target);
          const auto engine = enumerate_expansions(lat, target);
          if (engine.size() != oracle_classes.size()) {
            ok = false;
            detail = "expansion count at size " + std::to_string(n);
            break;
          }
        }
        if (!ok) break;
      }
    }
  report(10, "enumeration and congruence engines agree with the brute-force oracles (size <= 6)",
         ok, detail);
}

void criterion_11(const SuiteReport& suite) {
  std::string detail;
  const bool ok = rows_pass(suite,
                            {"bz-arithmetic-laws", "brouwer-image-distributivity",
                             "commuting-complement-laws", "sharp-commuting-element-forms",
                             "aol2-exchange-inequalities", "aol-binary-discriminator"},
                            detail);
  report(11, "arithmetic law suites (BZ laws, distributivity, commuting forms, discriminator)",
         ok, detail);
}

}  // namespace

int main() {
  std::cout << "acceptance suite: catalog + exhaustive enumeration to size 6\n";

  const std::vector<FiniteAlgebra> enumerated = enumerate_algebras(6, ClassLabel::BZL);

  std::vector<FiniteAlgebra> pbz_universe;         // catalog + enumerated PBZ*
  std::vector<FiniteAlgebra> sdm_pool;             // PBZ* satisfying SDM
  std::vector<FiniteAlgebra> aol2_pool;            // V(AOL) members up to 9 elements
  auto consider = [&](const FiniteAlgebra& a) {
    const ClassificationReport rep = classify(a);
    if (!rep.is(ClassLabel::PBZSTAR)) return;
    pbz_universe.push_back(a);
    if (a.size() <= 16 && rep.identity("SDM")) sdm_pool.push_back(a);
    if (a.size() <= 9 && rep.identity("AOL2")) aol2_pool.push_back(a);
  };
  for (const auto& entry : catalog_entries()) consider(build_catalog_algebra(entry.name));
  for (const char* product : {"D2xD2", "D3xD2", "D3xD3", "D4xD2", "D2xD2xD2"})
    consider(build_catalog_algebra(product));
  for (const auto& a : enumerated) consider(a);
  // The decomposition pool additionally takes every enumerated member of the
  // subvariety at sizes 7 and 8 (size 9 is reachable only through products).
  for (const auto& a : enumerate_algebras(8, ClassLabel::PBZSTAR)) {
    if (a.size() < 7) continue;
    const ClassificationReport rep = classify(a);
    if (rep.identity("AOL2")) aol2_pool.push_back(a);
  }

  criterion_1();
  criterion_2(enumerated);
  criterion_3(enumerated);
  criterion_4(pbz_universe);
  criterion_5(aol2_pool);
  criterion_6(enumerated);
  criterion_7(sdm_pool);
  criterion_8();
  criterion_9(enumerated);
  criterion_10();

  const SuiteReport suite = run_verification_suite({6, false});
  criterion_11(suite);

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
