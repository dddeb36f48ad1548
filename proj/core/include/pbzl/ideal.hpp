#ifndef PBZL_IDEAL_HPP
#define PBZL_IDEAL_HPP

#include <array>
#include <optional>
#include <vector>

#include "pbzl/congruence.hpp"

namespace pbzl {

/// The sharp form of the perspectivity product: s # t = s ^ (s~ v t), used
/// only where the first argument is a ~- or box/diamond-image (those are
/// always diamond-sharp).
inline Element sharp_cap(const FiniteAlgebra& a, Element s, Element t) {
  return a.meet(s, a.join(a.tilde(s), t));
}

/// The four binary terms whose simultaneous membership in an ideal defines
/// I-modal equivalence: (<>x)~ # <>y, (<>y)~ # <>x, ([]x)~ # []y,
/// ([]y)~ # []x.
std::array<Element, 4> modal_d_terms(const FiniteAlgebra& a, Element x, Element y);

bool is_lattice_ideal(const FiniteAlgebra& a, Mask ideal);

/// All downward-closed, join-closed subsets containing 0. In a finite
/// lattice these are exactly the principal downsets. Throws SizeLimit above
/// the cap.
std::vector<Mask> lattice_ideals(const FiniteAlgebra& a, int max_size = 20);

struct PIdealCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;  // (a in I, b in L)
};

/// True iff for every a in I and b in L, <>b ^ (b~ v <>a) stays in I.
/// Throws NotALatticeIdeal when the input set is not a lattice ideal.
PIdealCheck is_p_ideal(const FiniteAlgebra& a, Mask ideal);

std::vector<Mask> p_ideals(const FiniteAlgebra& a, int max_size = 20);

/// A subset tagged with the ideal notions it satisfies; delta/epsilon are
/// the least/greatest congruences with that 0-class when the set is a
/// congruence kernel.
struct IdealRecord {
  Mask mask = 0;
  std::vector<Element> elements;
  bool lattice_ideal = false;
  bool p_ideal = false;
  bool ursini = false;
  bool weak_de_morgan = false;
  std::optional<Congruence> delta, epsilon;
};

/// The distinct 0-classes of congruences, each with its delta/epsilon
/// bounds; sorted by element set.
std::vector<IdealRecord> ursini_ideals(const FiniteAlgebra& a, const ConLattice& con);

/// Reflexive symmetric relation of I-modal equivalence, generated by a
/// p-ideal. Stored as per-element neighbour masks.
class ModalPairRelation {
 public:
  ModalPairRelation(int n, Mask ideal) : ideal_(ideal), rows_(n, 0) {}

  int size() const { return static_cast<int>(rows_.size()); }
  Mask generating_ideal() const { return ideal_; }
  bool related(Element a, Element b) const { return (rows_[a] >> b) & 1u; }
  void relate(Element a, Element b) {
    rows_[a] |= Mask{1} << b;
    rows_[b] |= Mask{1} << a;
  }
  Mask row(Element a) const { return rows_[a]; }

  bool is_equivalence() const;
  bool is_identity_relation() const;
  std::vector<std::pair<Element, Element>> pairs() const;  // sorted, a <= b

  /// Partition view; only meaningful when the relation is an equivalence.
  Congruence to_partition() const;

 private:
  Mask ideal_;
  std::vector<Mask> rows_;
};

/// Builds the relation from the four-term membership definition and
/// cross-checks the two alternative characterizations (the meet form
/// (<>a v <>b) ^ (a~ v b~) in I, and the existential form <>a v s = <>b v s
/// for some s in I). A disagreement is an engine bug and throws
/// CharacterizationMismatch. Throws NotAPIdeal when I is not a p-ideal.
ModalPairRelation rho(const FiniteAlgebra& a, Mask ideal);

struct CongruenceCheck {
  bool holds = true;
  // (a, b, c): related pair broken by meeting (or joining) with c.
  std::optional<std::array<Element, 3>> witness;
};

/// Whether an equivalence compatible with ' and ~ also respects meet and
/// join, i.e. is a congruence.
CongruenceCheck relation_is_congruence(const FiniteAlgebra& a, const ModalPairRelation& rel);

/// Weak De Morgan ideal: for every (a,b) in rho(I) and every c,
/// (<>(a^c))~ # <>(b^c) lands in I.
CongruenceCheck is_weak_de_morgan(const FiniteAlgebra& a, Mask ideal);

/// On Strong De Morgan members: p-ideals coincide with congruence 0-classes
/// and rho(I) equals the greatest congruence with 0-class I, for every
/// ideal. Throws PreconditionSDM.
bool p_ideals_equal_ursini(const FiniteAlgebra& a, const ConLattice& con);

/// All four modal d-terms of (x, y) land in I. Throws PreconditionSDM.
bool d_term_membership(const FiniteAlgebra& a, Mask ideal, Element x, Element y);

/// Checks the equivalence of: the modal relation of {0} being the identity,
/// the modal order quasi-identity, the SK identity, and structural
/// reducedness; returns the common value. Throws PreconditionSDM, and
/// CharacterizationMismatch if the four routes ever disagree.
bool reduced_iff_sk(const FiniteAlgebra& a, const ConLattice& con);

struct DiscriminatorCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

/// Whether x ^ y~ realizes the 0-binary discriminator on the algebra:
/// b0(a,0) = a and b0(a,c) = 0 for c != 0.
DiscriminatorCheck binary_discriminator_check(const FiniteAlgebra& a);

/// For members satisfying the x = (x^y~) v (x^<>y) identity: a lattice ideal
/// is a congruence 0-class iff it is closed under u(x,y,z) = x ^ <>(y v z)
/// iff it swallows a whenever b and a ^ b~ are members. Returns the common
/// value of the three conditions. Throws PreconditionAOL2 /
/// NotALatticeIdeal / CharacterizationMismatch.
bool u_ideal_term_check(const FiniteAlgebra& a, Mask ideal, const ConLattice& con);

}  // namespace pbzl

#endif
