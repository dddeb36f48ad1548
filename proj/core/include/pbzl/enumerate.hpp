#ifndef PBZL_ENUMERATE_HPP
#define PBZL_ENUMERATE_HPP

#include <vector>

#include "pbzl/algebra.hpp"

namespace pbzl {

/// A bare bounded lattice, the substrate expansions are built on.
struct Lattice {
  int size = 0;
  std::vector<Mask> down;  // down[b] = {a : a <= b}, includes b

  bool leq(Element a, Element b) const { return (down[b] >> a) & 1u; }
  std::vector<std::vector<bool>> leq_matrix() const;
};

/// Encoding of a structure minimized over all universe permutations that
/// fix bottom and top; equal keys = isomorphic structures.
std::vector<std::uint64_t> lattice_canonical_key(const Lattice& lat);
std::vector<std::uint64_t> algebra_canonical_key(const FiniteAlgebra& a);

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// All bounded lattices on exactly n elements, one representative per
/// isomorphism class, found by extending topologically labelled orders with
/// meet/join consistency pruning. Throws SizeLimit above the cap.
std::vector<Lattice> enumerate_lattices(int n, int cap = 8);

/// All (prime, tilde) expansions of the lattice that validate and classify
/// under the requested label, up to isomorphism. BI and PKA targets carry no
/// Brouwer complement; OL and OML targets identify ~ with ' (their relative
/// equational basis).
std::vector<FiniteAlgebra> enumerate_expansions(const Lattice& lat, ClassLabel target);

/// enumerate_lattices + enumerate_expansions over all sizes 1..max_n.
std::vector<FiniteAlgebra> enumerate_algebras(int max_n, ClassLabel target, int cap = 8);

}  // namespace pbzl

#endif
