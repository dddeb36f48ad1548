#ifndef PBZL_CONGRUENCE_HPP
#define PBZL_CONGRUENCE_HPP

#include <vector>

#include "pbzl/algebra.hpp"

namespace pbzl {

/// Which operations a congruence must respect. BoundedInvolution drops the
/// Brouwer complement and computes congruences of the (L, ^, v, ', 0, 1)
/// reduct; Full uses every operation the algebra carries.
enum class Signature { Full, BoundedInvolution };

/// A partition of 0..n-1 compatible with the chosen operations. Canonical
/// form maps each element to the least element of its block, so equality and
/// ordering are plain vector comparisons.
class Congruence {
 public:
  static Congruence identity(int n);
  static Congruence all(int n);
  static Congruence from_representatives(std::vector<Element> rep);

  int size() const { return static_cast<int>(rep_.size()); }
  bool related(Element a, Element b) const { return rep_[a] == rep_[b]; }
  Element representative(Element a) const { return rep_[a]; }
  int block_count() const;

  /// Blocks sorted by least element — the serialization order.
  std::vector<std::vector<Element>> blocks() const;
  std::vector<Element> block_of(Element a) const;
  Mask block_mask(Element a) const;

  bool is_identity() const;
  bool is_all() const;
  /// 0/theta = {0} and 1/theta = {1}.
  bool is_pseudo_identical() const;

  Congruence meet(const Congruence& other) const;  // partition intersection
  Congruence join(const Congruence& other) const;  // transitive closure of the union

  /// Relational composition check: this o other = everything.
  bool composes_to_all(const Congruence& other) const;

  bool compatible_with(const FiniteAlgebra& a, Signature sig = Signature::Full) const;

  auto operator<=>(const Congruence& other) const = default;

 private:
  explicit Congruence(std::vector<Element> rep) : rep_(std::move(rep)) {}
  std::vector<Element> rep_;
};

/// Least congruence identifying a and b: union-find closure under the
/// operation tables, one merged pair at a time.
Congruence principal_congruence(const FiniteAlgebra& alg, Element a, Element b,
                                Signature sig = Signature::Full);

struct ConLattice {
  std::vector<Congruence> congruences;  // sorted by canonical form
  int identity_index = -1;
  int all_index = -1;

  int index_of(const Congruence& c) const;
  const Congruence& identity() const { return congruences[identity_index]; }
  const Congruence& all() const { return congruences[all_index]; }
};

/// Every congruence, computed as the join-closure of the principal
/// congruences plus the identity. Throws SizeLimit above max_size.
ConLattice all_congruences(const FiniteAlgebra& alg, Signature sig = Signature::Full,
                           int max_size = 24);

/// Factor algebra on the blocks of theta. Blocks are relabelled so the block
/// of 0 gets index 0 and the block of the top comes last; the rest keep the
/// least-element order.
FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& theta);

/// All ordered pairs (theta, phi) with theta ^ phi = identity,
/// theta v phi = all, and theta o phi = phi o theta = all (permutability
/// checked explicitly). Indices refer to con.congruences.
std::vector<std::pair<int, int>> factor_pairs(const FiniteAlgebra& alg, const ConLattice& con);

struct StructuralPredicates {
  bool directly_indecomposable = false;
  bool subdirectly_irreducible = false;
  bool simple = false;
  bool reduced = false;  // the only congruence with 0-class {0} is the identity
};

StructuralPredicates structural_predicates(const FiniteAlgebra& alg, const ConLattice& con);

}  // namespace pbzl

#endif
