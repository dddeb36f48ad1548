#ifndef PBZL_CENTER_HPP
#define PBZL_CENTER_HPP

#include <vector>

#include "pbzl/congruence.hpp"

namespace pbzl {

/// a commutes with b: (a ^ b) v (a' ^ b) = b.
bool commutes(const FiniteAlgebra& alg, Element a, Element b);

/// The strengthened commuting relation that additionally demands the two De
/// Morgan equalities (a^b)~ = a~ v b~ and (a'^b)~ = []a v b~.
bool commutes_sdm(const FiniteAlgebra& alg, Element a, Element b);

/// The four equational centrality conditions, quantified over all pairs.
bool is_central_c1c4(const FiniteAlgebra& alg, Element e);

/// e is factor-central when Cg(e,0) and Cg(e,1) are complementary
/// permuting factor congruences.
bool is_central_factor(const FiniteAlgebra& alg, Element e);

/// All centrality candidates computed independently of one another, plus
/// the sharp elements for containment checks.
struct CommutationReport {
  std::vector<std::pair<Element, Element>> commuting_pairs;      // C_L
  std::vector<std::pair<Element, Element>> commuting_sdm_pairs;  // C_SDM,L
  std::vector<Element> c_p;       // commute with everything
  std::vector<Element> c_pbz;     // sdm-commute with everything
  std::vector<Element> c_factor;  // factor-congruence central
  std::vector<Element> c_c1c4;    // the equational description
  std::vector<Element> sharp_kleene;
};

CommutationReport commutation_report(const FiniteAlgebra& alg);

/// Subalgebra on the factor-central elements under ^, v, '; validated and
/// checked distributive + complemented. Throws NotBoolean (an engine bug or
/// a genuine counterexample to the centre theorem).
FiniteAlgebra center_boolean_algebra(const FiniteAlgebra& alg);

/// The interval algebra on [0, e] with b -> b' ^ e and b -> b~ ^ e as
/// complements. `universe` lists the parent elements in the new order.
struct IntervalAlgebra {
  FiniteAlgebra algebra;
  std::vector<Element> universe;
};

/// The two interval algebras on [0, a~] and [0, <>a]. Requires AOL2
/// (PreconditionAOL2): outside that subvariety the factors have no uniform
/// interval description and the request is unsupported.
std::pair<IntervalAlgebra, IntervalAlgebra> interval_algebras(const FiniteAlgebra& alg, Element a);

struct Decomposition {
  Element element;
  IntervalAlgebra l1, l2;
  FiniteAlgebra product;
  std::vector<std::pair<Element, Element>> phi;  // parent b -> (index in l1, index in l2)
  bool verified = false;
};

/// Splits the algebra along a via phi(b) = (b ^ a~, b ^ <>a) and verifies
/// that phi is an isomorphism onto l1 x l2. Throws PreconditionAOL2 or
/// IsoCheckFailed.
Decomposition decompose(const FiniteAlgebra& alg, Element a);

/// Closes {a, b, c} under meet and join and checks both distributive laws
/// on the closure. Requires a, b, c Kleene-sharp and a commuting with b and
/// with c (PreconditionCommute).
bool foulis_holland_check(const FiniteAlgebra& alg, Element a, Element b, Element c);

}  // namespace pbzl

#endif
