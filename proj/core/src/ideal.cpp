#include "pbzl/ideal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "pbzl/term.hpp"

namespace pbzl {

std::array<Element, 4> modal_d_terms(const FiniteAlgebra& a, Element x, Element y) {
  const Element dx = a.diamond(x), dy = a.diamond(y);
  const Element bx = a.box(x), by = a.box(y);
  return {sharp_cap(a, a.tilde(dx), dy), sharp_cap(a, a.tilde(dy), dx),
          sharp_cap(a, a.tilde(bx), by), sharp_cap(a, a.tilde(by), bx)};
}

bool is_lattice_ideal(const FiniteAlgebra& a, Mask ideal) {
  if (!(ideal & 1u)) return false;  // must contain 0
  for (Element x : mask_elements(ideal)) {
    if ((a.downset(x) & ~ideal) != 0) return false;
    for (Element y : mask_elements(ideal))
      if (!((ideal >> a.join(x, y)) & 1u)) return false;
  }
  return true;
}

std::vector<Mask> lattice_ideals(const FiniteAlgebra& a, int max_size) {
  if (a.size() > max_size)
    throw AlgebraError(ErrorCode::SizeLimit, "ideal enumeration capped at " + std::to_string(max_size) +
                                                 " elements (got " + std::to_string(a.size()) + ")");
  // A downward-closed, join-closed subset of a finite lattice contains the
  // join of all its members, so every lattice ideal is a principal downset.
  std::set<Mask> out;
  for (Element x = 0; x < a.size(); ++x) out.insert(a.downset(x));
  return std::vector<Mask>(out.begin(), out.end());
}

PIdealCheck is_p_ideal(const FiniteAlgebra& a, Mask ideal) {
  if (!is_pbzstar_algebra(a))
    throw AlgebraError(ErrorCode::PreconditionPBZStar,
                       "p-ideals are defined on paraorthomodular BZ*-lattices only");
  if (!is_lattice_ideal(a, ideal))
    throw AlgebraError(ErrorCode::NotALatticeIdeal, "p-ideal check on a non-ideal subset");
  for (Element x : mask_elements(ideal))
    for (Element b = 0; b < a.size(); ++b) {
      const Element v = sharp_cap(a, a.diamond(b), a.diamond(x));
      if (!((ideal >> v) & 1u)) return {false, std::make_pair(x, b)};
    }
  return {};
}

std::vector<Mask> p_ideals(const FiniteAlgebra& a, int max_size) {
  std::vector<Mask> out;
  for (Mask ideal : lattice_ideals(a, max_size))
    if (is_p_ideal(a, ideal).holds) out.push_back(ideal);
  return out;
}

std::vector<IdealRecord> ursini_ideals(const FiniteAlgebra& a, const ConLattice& con) {
  std::map<Mask, IdealRecord> records;
  for (const auto& theta : con.congruences) {
    const Mask zero_class = theta.block_mask(0);
    auto [it, fresh] = records.try_emplace(zero_class);
    IdealRecord& rec = it->second;
    if (fresh) {
      rec.mask = zero_class;
      rec.elements = mask_elements(zero_class);
      rec.ursini = true;
      rec.delta = theta;
      rec.epsilon = theta;
    } else {
      rec.delta = rec.delta->meet(theta);
      rec.epsilon = rec.epsilon->join(theta);
    }
  }
  std::vector<IdealRecord> out;
  for (auto& [mask, rec] : records) {
    if (rec.delta->block_mask(0) != mask || rec.epsilon->block_mask(0) != mask)
      throw AlgebraError(ErrorCode::CharacterizationMismatch,
                         "delta/epsilon bounds drift from their 0-class on " + a.name());
    rec.lattice_ideal = is_lattice_ideal(a, mask);
    if (rec.lattice_ideal && is_pbzstar_algebra(a)) {
      rec.p_ideal = is_p_ideal(a, mask).holds;
      if (rec.p_ideal) rec.weak_de_morgan = is_weak_de_morgan(a, mask).holds;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

bool ModalPairRelation::is_equivalence() const {
  const int n = size();
  for (Element x = 0; x < n; ++x) {
    if (!related(x, x)) return false;
    for (Element y = 0; y < n; ++y) {
      if (related(x, y) != related(y, x)) return false;
      if (related(x, y) && (rows_[y] & ~rows_[x]) != 0) return false;  // transitivity
    }
  }
  return true;
}

bool ModalPairRelation::is_identity_relation() const {
  for (Element x = 0; x < size(); ++x)
    if (rows_[x] != (Mask{1} << x)) return false;
  return true;
}

std::vector<std::pair<Element, Element>> ModalPairRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y = x; y < size(); ++y)
      if (related(x, y)) out.emplace_back(x, y);
  return out;
}

Congruence ModalPairRelation::to_partition() const {
  std::vector<Element> rep(size());
  for (Element x = 0; x < size(); ++x) rep[x] = static_cast<Element>(std::countr_zero(rows_[x]));
  return Congruence::from_representatives(std::move(rep));
}

ModalPairRelation rho(const FiniteAlgebra& a, Mask ideal) {
  auto pcheck = is_p_ideal(a, ideal);
  if (!pcheck.holds)
    throw AlgebraError(ErrorCode::NotAPIdeal, "modal relation needs a p-ideal of " + a.name());
  const int n = a.size();
  ModalPairRelation rel(n, ideal);
  auto in = [&](Element v) { return static_cast<bool>((ideal >> v) & 1u); };
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      const auto d = modal_d_terms(a, x, y);
      const bool by_definition = in(d[0]) && in(d[1]) && in(d[2]) && in(d[3]);

      const Element dx = a.diamond(x), dy = a.diamond(y);
      const Element bx = a.box(x), by = a.box(y);
      const bool by_meet_form =
          in(a.meet(a.join(dx, dy), a.join(a.tilde(x), a.tilde(y)))) &&
          in(a.meet(a.join(a.tilde(bx), a.tilde(by)), a.join(bx, by)));

      bool diamond_abs = false, box_abs = false;
      for (Element s : mask_elements(ideal)) {
        if (a.join(dx, s) == a.join(dy, s)) diamond_abs = true;
        if (a.join(bx, s) == a.join(by, s)) box_abs = true;
      }
      const bool by_absorption = diamond_abs && box_abs;

      if (by_definition != by_meet_form || by_definition != by_absorption)
        throw AlgebraError(ErrorCode::CharacterizationMismatch,
                           "modal-equivalence characterizations disagree at (" + std::to_string(x) +
                               "," + std::to_string(y) + ") on " + a.name());
      if (by_definition) rel.relate(x, y);
    }
  return rel;
}

CongruenceCheck relation_is_congruence(const FiniteAlgebra& a, const ModalPairRelation& rel) {
  const int n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!rel.related(x, y)) continue;
      if (!rel.related(a.prime(x), a.prime(y))) return {false, std::array<Element, 3>{x, y, x}};
      if (a.has_tilde() && !rel.related(a.tilde(x), a.tilde(y)))
        return {false, std::array<Element, 3>{x, y, x}};
      for (Element c = 0; c < n; ++c) {
        if (!rel.related(a.meet(x, c), a.meet(y, c))) return {false, std::array<Element, 3>{x, y, c}};
        if (!rel.related(a.join(x, c), a.join(y, c))) return {false, std::array<Element, 3>{x, y, c}};
      }
    }
  return {};
}

CongruenceCheck is_weak_de_morgan(const FiniteAlgebra& a, Mask ideal) {
  const ModalPairRelation rel = rho(a, ideal);
  const int n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!rel.related(x, y)) continue;
      for (Element c = 0; c < n; ++c) {
        const Element lhs = a.tilde(a.diamond(a.meet(x, c)));
        const Element v = sharp_cap(a, lhs, a.diamond(a.meet(y, c)));
        if (!((ideal >> v) & 1u)) return {false, std::array<Element, 3>{x, y, c}};
      }
    }
  return {};
}

namespace {

void require_sdm(const FiniteAlgebra& a) {
  if (!is_pbzstar_algebra(a) || !check_identity(a, find_identity("SDM")).holds)
    throw AlgebraError(ErrorCode::PreconditionSDM,
                       a.name() + " is not a strong De Morgan PBZ*-lattice");
}

}  // namespace

bool p_ideals_equal_ursini(const FiniteAlgebra& a, const ConLattice& con) {
  require_sdm(a);
  const auto pideals = p_ideals(a, a.size());
  const auto records = ursini_ideals(a, con);
  std::set<Mask> pset(pideals.begin(), pideals.end());
  std::set<Mask> uset;
  for (const auto& rec : records) uset.insert(rec.mask);
  if (pset != uset) return false;
  for (const auto& rec : records) {
    const ModalPairRelation rel = rho(a, rec.mask);
    if (!rel.is_equivalence()) return false;
    if (!(rel.to_partition() == *rec.epsilon)) return false;
  }
  return true;
}

bool d_term_membership(const FiniteAlgebra& a, Mask ideal, Element x, Element y) {
  require_sdm(a);
  const auto d = modal_d_terms(a, x, y);
  for (Element v : d)
    if (!((ideal >> v) & 1u)) return false;
  return true;
}

bool reduced_iff_sk(const FiniteAlgebra& a, const ConLattice& con) {
  require_sdm(a);
  const bool via_relation = rho(a, Mask{1}).is_identity_relation();

  const Term x = Term::var(0), y = Term::var(1);
  auto le = [](const Term& s, const Term& t) { return std::make_pair(s, Term::meet(s, t)); };
  const std::vector<std::pair<Term, Term>> premises = {le(Term::box(x), Term::box(y)),
                                                       le(Term::diamond(x), Term::diamond(y))};
  const bool via_quasi = check_quasi_identity(a, premises, le(x, y)).holds;

  const bool via_sk = check_identity(a, find_identity("SK")).holds;
  const bool via_structure = structural_predicates(a, con).reduced;

  if (via_relation != via_quasi || via_relation != via_sk || via_relation != via_structure)
    throw AlgebraError(ErrorCode::CharacterizationMismatch,
                       "reducedness characterizations disagree on " + a.name());
  return via_relation;
}

DiscriminatorCheck binary_discriminator_check(const FiniteAlgebra& a) {
  if (!a.has_tilde()) throw AlgebraError(ErrorCode::MissingTilde, "the discriminator term needs ~");
  for (Element x = 0; x < a.size(); ++x)
    for (Element c = 0; c < a.size(); ++c) {
      const Element v = a.meet(x, a.tilde(c));
      if (c == 0 ? v != x : v != 0) return {false, std::make_pair(x, c)};
    }
  return {};
}

bool u_ideal_term_check(const FiniteAlgebra& a, Mask ideal, const ConLattice& con) {
  if (!is_pbzstar_algebra(a) || !check_identity(a, find_identity("AOL2")).holds)
    throw AlgebraError(ErrorCode::PreconditionAOL2, a.name() + " does not satisfy AOL2");
  if (!is_lattice_ideal(a, ideal))
    throw AlgebraError(ErrorCode::NotALatticeIdeal, "u-term check on a non-ideal subset");
  auto in = [&](Element v) { return static_cast<bool>((ideal >> v) & 1u); };

  bool closed_under_u = true;
  const auto members = mask_elements(ideal);
  for (Element y : members)
    for (Element z : members) {
      for (Element x = 0; x < a.size() && closed_under_u; ++x)
        if (!in(a.meet(x, a.diamond(a.join(y, z))))) closed_under_u = false;
      if (!closed_under_u) break;
    }

  bool swallowing = true;
  for (Element b : members) {
    for (Element x = 0; x < a.size() && swallowing; ++x)
      if (in(a.meet(x, a.tilde(b))) && !in(x)) swallowing = false;
    if (!swallowing) break;
  }

  bool is_zero_class = false;
  for (const auto& theta : con.congruences)
    if (theta.block_mask(0) == ideal) is_zero_class = true;

  if (closed_under_u != swallowing || closed_under_u != is_zero_class)
    throw AlgebraError(ErrorCode::CharacterizationMismatch,
                       "ideal-term characterizations disagree on " + a.name());
  return closed_under_u;
}

}  // namespace pbzl
