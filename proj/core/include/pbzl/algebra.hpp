#ifndef PBZL_ALGEBRA_HPP
#define PBZL_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbzl/errors.hpp"

namespace pbzl {

using Element = int;
using Mask = std::uint64_t;  // subset of a universe with at most 64 elements

/// Hard cap on the universe size of a single algebra: element subsets are
/// manipulated as one machine word throughout the engines.
inline constexpr int kMaxUniverse = 64;

std::vector<Element> mask_elements(Mask m);
Mask elements_mask(const std::vector<Element>& elements);

/// Classes of the hierarchy, ordered so that each label only depends on
/// earlier ones. BI..OML make sense without a Brouwer complement; BZL and
/// above require one.
enum class ClassLabel {
  BI,       // bounded involution lattice
  PKA,      // pseudo-Kleene algebra
  OL,       // ortholattice
  OML,      // orthomodular lattice
  PARA,     // paraorthomodular
  BZL,      // Brouwer-Zadeh lattice
  BZSTAR,   // BZ-lattice satisfying the (*) inequality
  PBZSTAR,  // paraorthomodular BZ*-lattice
  AOL,      // antiortholattice
};

inline constexpr int kNumClassLabels = 9;

const char* to_string(ClassLabel label);

/// A finite algebra of type (2,2,1,1,0,0): bounded lattice with a Kleene
/// complement ' and an optional Brouwer complement ~, stored as validated
/// operation tables over the universe 0..n-1 with bottom 0 and top n-1.
///
/// Values are immutable after validation and safe to share across threads.
class FiniteAlgebra {
 public:
  int size() const { return size_; }
  const std::string& name() const { return name_; }
  bool has_tilde() const { return !tilde_.empty(); }

  Element bottom() const { return 0; }
  Element top() const { return size_ - 1; }

  bool leq(Element a, Element b) const { return (down_[b] >> a) & 1u; }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }
  Element prime(Element a) const { return prime_[a]; }
  Element tilde(Element a) const { return tilde_[a]; }

  Element box(Element a) const { return tilde(prime(a)); }      // x'~
  Element diamond(Element a) const { return tilde(tilde(a)); }  // x~~

  /// Bitmask of the principal downset {x : x <= a} resp. upset {x : a <= x}.
  Mask downset(Element a) const { return down_[a]; }
  Mask upset(Element a) const { return up_[a]; }
  Mask universe_mask() const {
    return size_ == 64 ? ~Mask{0} : (Mask{1} << size_) - 1;
  }

  /// True when the pseudo-Kleene inequality x^x' <= y v y' held at
  /// validation time; algebras failing it are still usable as bounded
  /// involution lattices.
  bool pseudo_kleene_layer() const { return pseudo_kleene_; }

  const std::vector<Element>& prime_table() const { return prime_; }
  const std::vector<Element>& tilde_table() const { return tilde_; }

  FiniteAlgebra renamed(std::string new_name) const;

 private:
  friend FiniteAlgebra validate(const std::string&, const std::vector<std::vector<bool>>&,
                                const std::vector<Element>&,
                                const std::optional<std::vector<Element>>&);

  std::string name_;
  int size_ = 0;
  bool pseudo_kleene_ = false;
  std::vector<Mask> down_, up_;
  std::vector<Element> meet_, join_;
  std::vector<Element> prime_;
  std::vector<Element> tilde_;  // empty when absent
};

/// Checks the lattice, involution and (when tilde is given) Brouwer axioms
/// and builds the operation tables. The first witness per violated axiom, in
/// lexicographic element order, is reported in the error message.
///
/// Throws AlgebraError with code NotAPartialOrder, NotALattice,
/// InvolutionViolation, BZAxiomViolation or SizeLimit.
FiniteAlgebra validate(const std::string& name, const std::vector<std::vector<bool>>& leq,
                       const std::vector<Element>& prime,
                       const std::optional<std::vector<Element>>& tilde);

struct SharpSets {
  std::vector<Element> kleene;   // a ^ a' = 0
  std::vector<Element> diamond;  // a = a~~
  std::vector<Element> brouwer;  // a v a~ = 1
};

/// The three sharpness notions. The diamond-sharp set is cross-checked
/// against the image {a~ : a in L}; a mismatch would be an engine bug.
SharpSets sharp_sets(const FiniteAlgebra& a);

/// Per-algebra truth table of class memberships and named-identity
/// satisfaction. `identities` lists every catalog identity applicable to the
/// algebra's signature, in catalog order.
struct ClassificationReport {
  std::string algebra;
  bool classes[kNumClassLabels] = {};
  std::vector<std::pair<std::string, bool>> identities;
  SharpSets sharp;

  bool is(ClassLabel label) const { return classes[static_cast<int>(label)]; }
  bool identity(const std::string& name) const;
};

/// Decides every class label by direct quantifier elimination over the
/// universe and evaluates the identity catalog. Total on validated algebras.
ClassificationReport classify(const FiniteAlgebra& a);

/// Extends a pseudo-Kleene algebra with the trivial Brouwer complement
/// (0~ = 1, x~ = 0 otherwise). Throws PreconditionPKA when the input fails
/// the pseudo-Kleene layer.
FiniteAlgebra adjoin_trivial_brouwer(const FiniteAlgebra& a);

/// Componentwise direct product; pair (x, y) becomes index x*|B|+y. The
/// result carries a Brouwer complement iff both factors do.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Subalgebra on the given elements (must be closed under all operations and
/// contain the bounds); elements are relabelled in ascending order.
FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<Element>& elements,
                         const std::string& name);

/// Direct check of the paraorthomodular BZ* conditions, no term machinery.
/// The ideal/centre theory is only defined on these algebras and uses this
/// as a precondition.
bool is_pbzstar_algebra(const FiniteAlgebra& a);

}  // namespace pbzl

#endif
