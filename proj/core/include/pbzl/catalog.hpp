#ifndef PBZL_CATALOG_HPP
#define PBZL_CATALOG_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbzl/algebra.hpp"

namespace pbzl {

/// A named algebra together with the published facts about it: expected
/// class labels and identity verdicts, checked verbatim by the conformance
/// suite.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::map<std::string, bool> expected_classes;
  std::map<std::string, bool> expected_identities;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog algebra by name (case-insensitive). Product names like
/// "D3xD2" are assembled on demand from catalog factors. Throws UnknownName.
FiniteAlgebra build_catalog_algebra(std::string_view name);

/// The n-element Kleene chain 0 < d1 < ... < 1 with the order-reversing
/// involution, no Brouwer complement.
FiniteAlgebra kleene_chain(int n, const std::string& name);

/// Boolean algebra on k atoms with both complements equal.
FiniteAlgebra boolean_algebra(int atoms, const std::string& name);

/// Completes a partially specified Brouwer complement to the unique table
/// satisfying the BZ axioms over the given involution lattice: constraint
/// propagation first, then exhaustive search over whatever remains. Throws
/// AmbiguousCompletion when zero or multiple completions exist.
std::vector<Element> complete_tilde(const FiniteAlgebra& base,
                                    const std::map<Element, Element>& pinned);

}  // namespace pbzl

#endif
