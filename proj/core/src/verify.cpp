#include "pbzl/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "pbzl/catalog.hpp"
#include "pbzl/center.hpp"
#include "pbzl/congruence.hpp"
#include "pbzl/enumerate.hpp"
#include "pbzl/ideal.hpp"
#include "pbzl/term.hpp"

namespace pbzl {

namespace {

struct Ctx {
  FiniteAlgebra alg;
  ClassificationReport rep;
  std::optional<ConLattice> con_cache;

  const ConLattice& con() {
    if (!con_cache) con_cache = all_congruences(alg);
    return *con_cache;
  }
  bool id(const char* name) const { return rep.identity(name); }
};

// A property returns an empty string when it holds and a short witness
// description otherwise; nullopt means not applicable to this algebra.
using Property = std::function<std::optional<std::string>(Ctx&)>;

std::string elt(Element x) { return std::to_string(x); }

std::optional<std::string> pass() { return std::string(); }
std::optional<std::string> fail(std::string msg) { return msg; }

std::optional<std::string> bz_arithmetic(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZL)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  for (Element x = 0; x < a.size(); ++x) {
    if (a.tilde(a.diamond(x)) != a.tilde(x)) return fail("a~~~ != a~ at " + elt(x));
    if (!a.leq(a.tilde(x), a.prime(x))) return fail("a~ <= a' fails at " + elt(x));
    if (a.prime(a.box(a.prime(x))) != a.diamond(x)) return fail("([](a'))' != <>a at " + elt(x));
    if (a.leq(a.prime(x), x) && a.tilde(x) != 0) return fail("a' <= a but a~ != 0 at " + elt(x));
    for (Element y = 0; y < a.size(); ++y) {
      if (a.tilde(a.join(x, y)) != a.meet(a.tilde(x), a.tilde(y)))
        return fail("(a v b)~ != a~ ^ b~ at (" + elt(x) + "," + elt(y) + ")");
      if (!a.leq(a.join(a.tilde(x), a.tilde(y)), a.tilde(a.meet(x, y))))
        return fail("a~ v b~ <= (a ^ b)~ fails at (" + elt(x) + "," + elt(y) + ")");
      if (a.box(a.meet(x, y)) != a.meet(a.box(x), a.box(y)))
        return fail("[](a ^ b) != []a ^ []b at (" + elt(x) + "," + elt(y) + ")");
      if (a.diamond(a.join(x, y)) != a.join(a.diamond(x), a.diamond(y)))
        return fail("<>(a v b) != <>a v <>b at (" + elt(x) + "," + elt(y) + ")");
      if (!a.leq(a.diamond(a.meet(x, y)), a.meet(a.diamond(x), a.diamond(y))))
        return fail("<>(a ^ b) <= <>a ^ <>b fails at (" + elt(x) + "," + elt(y) + ")");
    }
  }
  return pass();
}

std::optional<std::string> para_iff_diamond_om(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZSTAR)) return std::nullopt;
  const bool para = c.rep.is(ClassLabel::PARA);
  const bool dom = c.id("DIAMOND_OM");
  if (para != dom)
    return fail(std::string("paraorthomodular=") + (para ? "yes" : "no") + " but identity=" +
                (dom ? "yes" : "no"));
  return pass();
}

std::optional<std::string> sharp_sets_collapse(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const SharpSets& s = c.rep.sharp;
  if (s.kleene != s.diamond || s.kleene != s.brouwer) return fail("sharp sets differ");
  return pass();
}

std::optional<std::string> sharp_subalgebra_oml(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  try {
    FiniteAlgebra sk = subalgebra(c.alg, c.rep.sharp.kleene, "S_K");
    if (!classify(sk).is(ClassLabel::OML)) return fail("sharp subalgebra is not orthomodular");
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

std::optional<std::string> aol_iff_two_sharp(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const bool two_sharp = c.rep.sharp.kleene == std::vector<Element>{0, c.alg.top()} ||
                         (c.alg.size() == 1 && c.rep.sharp.kleene == std::vector<Element>{0});
  if (two_sharp != c.rep.is(ClassLabel::AOL))
    return fail("trivial-complement label disagrees with S_K = {0,1}");
  return pass();
}

std::optional<std::string> sdm_implies_wsdm(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZL) || !c.id("SDM")) return std::nullopt;
  if (!c.id("WSDM")) return fail("SDM holds but WSDM fails");
  return pass();
}

std::optional<std::string> oml_identities(Ctx& c) {
  if (!c.rep.is(ClassLabel::OML) || !c.alg.has_tilde() || !c.id("TILDE_EQ_PRIME"))
    return std::nullopt;
  for (const char* name : {"SDM", "J2", "SK"})
    if (!c.id(name)) return fail(std::string(name) + " fails on an orthomodular member");
  return pass();
}

std::optional<std::string> aol_identities(Ctx& c) {
  if (!c.rep.is(ClassLabel::AOL)) return std::nullopt;
  for (const char* name : {"WSDM", "J2", "AOL1", "AOL2", "AOL3"})
    if (!c.id(name)) return fail(std::string(name) + " fails on an antiortholattice");
  return pass();
}

std::optional<std::string> aol2_entails(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2")) return std::nullopt;
  for (const char* name : {"AOL1", "AOL3", "WSDM"})
    if (!c.id(name)) return fail(std::string(name) + " fails under AOL2");
  return pass();
}

std::optional<std::string> aol1_eq_wsdm(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2") || !c.id("AOL3")) return std::nullopt;
  if (c.id("AOL1") != c.id("WSDM")) return fail("AOL1 and WSDM diverge under AOL2+AOL3");
  return pass();
}

std::optional<std::string> brouwer_image_distributivity(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2") || !c.id("AOL3")) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z) {
        const Element tz = a.tilde(z), tx = a.tilde(x);
        if (a.meet(x, a.join(y, tz)) != a.join(a.meet(x, y), a.meet(x, tz)))
          return fail("meet over join with c~ fails at (" + elt(x) + "," + elt(y) + "," + elt(z) + ")");
        if (a.join(x, a.meet(y, tz)) != a.meet(a.join(x, y), a.join(x, tz)))
          return fail("join over meet with c~ fails at (" + elt(x) + "," + elt(y) + "," + elt(z) + ")");
        if (a.meet(tx, a.join(y, z)) != a.join(a.meet(tx, y), a.meet(tx, z)))
          return fail("a~ meet over join fails at (" + elt(x) + "," + elt(y) + "," + elt(z) + ")");
        if (a.join(tx, a.meet(y, z)) != a.meet(a.join(tx, y), a.join(tx, z)))
          return fail("a~ join over meet fails at (" + elt(x) + "," + elt(y) + "," + elt(z) + ")");
      }
  return pass();
}

std::optional<std::string> centrality_coincides(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const CommutationReport r = commutation_report(c.alg);
  if (r.c_pbz != r.c_c1c4) return fail("equational centre differs from the commuting centre");
  if (r.c_pbz != r.c_factor) return fail("factor centre differs from the commuting centre");
  // Containments C_pbz <= C_p <= S_K.
  for (Element e : r.c_pbz)
    if (std::find(r.c_p.begin(), r.c_p.end(), e) == r.c_p.end())
      return fail("C_pbz escapes C_p at " + elt(e));
  for (Element e : r.c_p)
    if (std::find(r.sharp_kleene.begin(), r.sharp_kleene.end(), e) == r.sharp_kleene.end())
      return fail("C_p escapes S_K at " + elt(e));
  return pass();
}

std::optional<std::string> wsdm_centre_collapse(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("WSDM")) return std::nullopt;
  const CommutationReport r = commutation_report(c.alg);
  if (r.c_pbz != r.c_p) return fail("C_pbz != C_p under WSDM");
  return pass();
}

std::optional<std::string> centre_brouwer_closed(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const CommutationReport r = commutation_report(c.alg);
  std::set<Element> pbz(r.c_pbz.begin(), r.c_pbz.end());
  std::set<Element> cp(r.c_p.begin(), r.c_p.end());
  // Quantified over the sharp elements (a = <>a is needed for the converse).
  for (Element e : r.sharp_kleene) {
    if (pbz.count(e) != pbz.count(c.alg.tilde(e)))
      return fail("sharp e in C_pbz iff e~ in C_pbz fails at " + elt(e));
    if (cp.count(e) != cp.count(c.alg.tilde(e)))
      return fail("sharp e in C_p iff e~ in C_p fails at " + elt(e));
  }
  return pass();
}

std::optional<std::string> goldrush_forms(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  const CommutationReport r = commutation_report(a);
  std::vector<Element> meet_form, join_form;
  for (Element e : r.sharp_kleene) {
    bool mf = true, jf = true;
    for (Element b = 0; b < a.size(); ++b) {
      if (a.join(a.meet(e, b), a.meet(a.tilde(e), b)) != b) mf = false;
      if (a.meet(a.join(e, b), a.join(a.tilde(e), b)) != b) jf = false;
    }
    if (mf) meet_form.push_back(e);
    if (jf) join_form.push_back(e);
  }
  if (r.c_p != meet_form) return fail("C_p differs from the sharp meet form");
  if (r.c_p != join_form) return fail("C_p differs from the sharp join form");
  return pass();
}

std::optional<std::string> sharp_commuting_laws(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  const CommutationReport r = commutation_report(a);
  std::set<Element> cp(r.c_p.begin(), r.c_p.end());
  for (Element x = 0; x < a.size(); ++x) {
    const Element tx = a.tilde(x), dx = a.diamond(x);
    if (!cp.count(tx)) continue;
    for (Element b = 0; b < a.size(); ++b) {
      if (a.join(tx, b) != a.join(tx, a.meet(dx, b))) return fail("absorption law 1 at " + elt(x));
      if (a.meet(tx, b) != a.meet(tx, a.join(dx, b))) return fail("absorption law 2 at " + elt(x));
      for (Element y = 0; y < a.size(); ++y) {
        if (a.join(b, a.meet(y, dx)) != a.meet(a.join(a.join(b, y), tx), a.join(b, dx)))
          return fail("median law 1 at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.meet(b, a.join(y, dx)) != a.join(a.meet(a.meet(b, y), tx), a.meet(b, dx)))
          return fail("median law 2 at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.meet(tx, a.join(b, y)) != a.meet(tx, a.join(b, a.meet(tx, y))))
          return fail("localized distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.join(tx, a.meet(b, y)) != a.join(tx, a.meet(b, a.join(tx, y))))
          return fail("dual localized distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.meet(tx, a.join(b, y)) != a.join(a.meet(tx, b), a.meet(tx, y)))
          return fail("full distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.join(tx, a.meet(b, y)) != a.meet(a.join(tx, b), a.join(tx, y)))
          return fail("dual full distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.join(b, a.meet(y, tx)) != a.meet(a.join(b, y), a.join(b, tx)))
          return fail("pinned distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
        if (a.meet(b, a.join(y, tx)) != a.join(a.meet(b, y), a.meet(b, tx)))
          return fail("dual pinned distributivity at (" + elt(x) + "," + elt(b) + "," + elt(y) + ")");
      }
    }
  }
  return pass();
}

std::optional<std::string> aol2_swap_laws(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2") || !c.id("AOL3")) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (a.join(a.tilde(a.meet(x, a.diamond(y))), a.diamond(y)) != a.top())
        return fail("(a ^ <>b)~ v <>b = 1 fails at (" + elt(x) + "," + elt(y) + ")");
      if (!a.leq(a.diamond(x), a.tilde(a.meet(y, a.tilde(x)))))
        return fail("<>a <= (b ^ a~)~ fails at (" + elt(x) + "," + elt(y) + ")");
      for (Element z = 0; z < a.size(); ++z)
        if (!a.leq(a.meet(x, y), a.join(a.meet(x, a.tilde(z)), a.meet(y, a.diamond(z)))))
          return fail("a ^ b <= (a ^ c~) v (b ^ <>c) fails at (" + elt(x) + "," + elt(y) + "," +
                      elt(z) + ")");
    }
  return pass();
}

std::optional<std::string> aol2_iff_central_sharps(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const CommutationReport r = commutation_report(c.alg);
  const bool aol2 = c.id("AOL2");
  if (aol2 != (r.c_p == r.sharp_kleene))
    return fail("AOL2 and C_p = S_K diverge");
  if (aol2 != (c.id("WSDM") && r.c_pbz == r.sharp_kleene))
    return fail("AOL2 and WSDM + C_pbz = S_K diverge");
  return pass();
}

std::optional<std::string> centre_boolean(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  try {
    const FiniteAlgebra centre = center_boolean_algebra(c.alg);
    // Order-isomorphism with the factor congruences via e -> Cg(e, 0).
    std::vector<Element> central;
    for (Element e = 0; e < c.alg.size(); ++e)
      if (is_central_factor(c.alg, e)) central.push_back(e);
    std::set<Congruence> factor_thetas;
    for (auto [i, j] : factor_pairs(c.alg, c.con()))
      factor_thetas.insert(c.con().congruences[i]);
    std::set<Congruence> images;
    for (Element e : central) images.insert(principal_congruence(c.alg, e, 0));
    if (images != factor_thetas) return fail("Cg(e,0) does not map the centre onto the factor congruences");
    if (images.size() != central.size()) return fail("Cg(e,0) is not injective on the centre");
    for (Element e : central)
      for (Element f : central) {
        const Congruence ce = principal_congruence(c.alg, e, 0);
        const Congruence cf = principal_congruence(c.alg, f, 0);
        if (c.alg.leq(e, f) != (ce.meet(cf) == ce))
          return fail("Cg(-,0) is not an order isomorphism at (" + elt(e) + "," + elt(f) + ")");
      }
    (void)centre;
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

std::optional<std::string> aol_directly_indecomposable(Ctx& c) {
  if (!c.rep.is(ClassLabel::AOL) || c.alg.size() < 2) return std::nullopt;
  if (!structural_predicates(c.alg, c.con()).directly_indecomposable)
    return fail("an antiortholattice decomposed");
  return pass();
}

std::optional<std::string> aol2_indecomposables_are_aol(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2") || c.alg.size() < 2) return std::nullopt;
  if (structural_predicates(c.alg, c.con()).directly_indecomposable && !c.rep.is(ClassLabel::AOL))
    return fail("directly indecomposable AOL2 member is not an antiortholattice");
  return pass();
}

std::optional<std::string> j2_wsdm_split(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("J2") || !c.id("WSDM") || c.alg.size() < 2)
    return std::nullopt;
  if (!structural_predicates(c.alg, c.con()).directly_indecomposable) return pass();
  if (!c.id("TILDE_EQ_PRIME") && !c.rep.is(ClassLabel::AOL))
    return fail("indecomposable J2+WSDM member is neither orthomodular nor an antiortholattice");
  return pass();
}

std::optional<std::string> interval_decomposition(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2")) return std::nullopt;
  for (Element x = 0; x < c.alg.size(); ++x) {
    try {
      Decomposition d = decompose(c.alg, x);
      for (const auto* ia : {&d.l1, &d.l2}) {
        const ClassificationReport r = classify(ia->algebra);
        if (!r.is(ClassLabel::PBZSTAR) || !r.identity("AOL2"))
          return fail("interval factor leaves the subvariety at element " + elt(x));
      }
    } catch (const AlgebraError& e) {
      return fail("element " + elt(x) + ": " + e.what());
    }
  }
  return pass();
}

std::optional<std::string> commuting_triples_distribute(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const auto& sharp = c.rep.sharp.kleene;
  for (Element a : sharp)
    for (Element b : sharp)
      for (Element z : sharp) {
        if (!commutes(c.alg, a, b) || !commutes(c.alg, a, z)) continue;
        if (!foulis_holland_check(c.alg, a, b, z))
          return fail("non-distributive closure at (" + elt(a) + "," + elt(b) + "," + elt(z) + ")");
      }
  return pass();
}

std::optional<std::string> p_ideal_diamond_closure(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  for (Mask ideal : p_ideals(a, a.size())) {
    for (Element x : mask_elements(ideal))
      if (!((ideal >> a.diamond(x)) & 1u)) return fail("<>a escapes the p-ideal at " + elt(x));
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        const bool xy = (ideal >> sharp_cap(a, a.diamond(x), a.diamond(y))) & 1u;
        const bool yx = (ideal >> sharp_cap(a, a.diamond(y), a.diamond(x))) & 1u;
        if (xy != yx) return fail("sharp-product membership is not symmetric at (" + elt(x) + "," + elt(y) + ")");
      }
  }
  return pass();
}

std::optional<std::string> modal_relation_equivalence(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  for (Mask ideal : p_ideals(a, a.size())) {
    const ModalPairRelation rel = rho(a, ideal);  // cross-checks its characterizations
    if (!rel.is_equivalence()) return fail("modal relation is not an equivalence");
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (rel.related(x, y)) {
          if (!rel.related(a.prime(x), a.prime(y))) return fail("' not preserved at (" + elt(x) + "," + elt(y) + ")");
          if (!rel.related(a.tilde(x), a.tilde(y))) return fail("~ not preserved at (" + elt(x) + "," + elt(y) + ")");
        }
  }
  return pass();
}

std::optional<std::string> modal_congruence_iff_wdm(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR)) return std::nullopt;
  for (Mask ideal : p_ideals(c.alg, c.alg.size())) {
    const bool cong = relation_is_congruence(c.alg, rho(c.alg, ideal)).holds;
    const bool wdm = is_weak_de_morgan(c.alg, ideal).holds;
    if (cong != wdm) return fail("congruence test and weak De Morgan test disagree");
  }
  return pass();
}

std::optional<std::string> sdm_ideals_wdm(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("SDM")) return std::nullopt;
  for (Mask ideal : p_ideals(c.alg, c.alg.size())) {
    if (!is_weak_de_morgan(c.alg, ideal).holds) return fail("p-ideal is not weak De Morgan");
    if (!relation_is_congruence(c.alg, rho(c.alg, ideal)).holds)
      return fail("modal relation of a p-ideal is not a congruence");
  }
  return pass();
}

std::optional<std::string> sdm_p_ideals_are_kernels(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("SDM")) return std::nullopt;
  if (!p_ideals_equal_ursini(c.alg, c.con()))
    return fail("p-ideals differ from congruence 0-classes (or rho(I) != epsilon)");
  return pass();
}

std::optional<std::string> sdm_d_terms_decide_epsilon(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("SDM")) return std::nullopt;
  for (const IdealRecord& rec : ursini_ideals(c.alg, c.con()))
    for (Element x = 0; x < c.alg.size(); ++x)
      for (Element y = 0; y < c.alg.size(); ++y) {
        const bool by_terms = d_term_membership(c.alg, rec.mask, x, y);
        const bool by_epsilon = rec.epsilon->related(x, y);
        if (by_terms != by_epsilon)
          return fail("d-term membership and epsilon disagree at (" + elt(x) + "," + elt(y) + ")");
      }
  return pass();
}

std::optional<std::string> sdm_reduced_iff_sk(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("SDM")) return std::nullopt;
  try {
    reduced_iff_sk(c.alg, c.con());
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

std::optional<std::string> aol_discriminator(Ctx& c) {
  if (!c.rep.is(ClassLabel::AOL)) return std::nullopt;
  const auto check = binary_discriminator_check(c.alg);
  if (!check.holds)
    return fail("x ^ y~ misses the discriminator at (" + elt(check.witness->first) + "," +
                elt(check.witness->second) + ")");
  return pass();
}

std::optional<std::string> aol2_ideal_term_routes(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("AOL2")) return std::nullopt;
  try {
    for (Mask ideal : lattice_ideals(c.alg, c.alg.size()))
      u_ideal_term_check(c.alg, ideal, c.con());
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

std::optional<std::string> congruences_permute_at_zero(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZL)) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  // The subtraction witness s(x,y) = x ^ y~.
  for (Element x = 0; x < a.size(); ++x) {
    if (a.meet(x, a.tilde(x)) != 0) return fail("s(x,x) != 0 at " + elt(x));
    if (a.meet(x, a.tilde(0)) != x) return fail("s(x,0) != x at " + elt(x));
  }
  const auto& cs = c.con().congruences;
  for (const auto& theta : cs)
    for (const auto& phi : cs) {
      Mask left = 0, right = 0;
      for (Element b = 0; b < a.size(); ++b) {
        if (theta.related(0, b)) left |= phi.block_mask(b);
        if (phi.related(0, b)) right |= theta.block_mask(b);
      }
      if (left != right) return fail("0-classes of the two compositions differ");
    }
  return pass();
}

std::optional<std::string> ideal_interval_map(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZL)) return std::nullopt;
  const auto records = ursini_ideals(c.alg, c.con());
  for (const auto& i : records)
    for (const auto& j : records) {
      const bool inc = (i.mask & ~j.mask) == 0;
      const bool delta_inc = i.delta->meet(*j.delta) == *i.delta;
      const bool eps_inc = i.epsilon->meet(*j.epsilon) == *i.epsilon;
      if (inc != delta_inc || inc != eps_inc)
        return fail("interval map is not an order isomorphism");
    }
  return pass();
}

std::optional<std::string> trivial_brouwer_bz(Ctx& c) {
  if (!c.alg.pseudo_kleene_layer()) return std::nullopt;
  try {
    // Forget ~, re-adjoin the trivial complement: always a BZ-lattice; an
    // antiortholattice whenever 0 is meet-irreducible.
    std::vector<std::vector<bool>> leq(c.alg.size(), std::vector<bool>(c.alg.size()));
    for (Element x = 0; x < c.alg.size(); ++x)
      for (Element y = 0; y < c.alg.size(); ++y) leq[x][y] = c.alg.leq(x, y);
    FiniteAlgebra pka = validate(c.alg.name(), leq, c.alg.prime_table(), std::nullopt);
    FiniteAlgebra bz = adjoin_trivial_brouwer(pka);
    const ClassificationReport r = classify(bz);
    if (!r.is(ClassLabel::BZL)) return fail("trivial complement did not produce a BZ-lattice");
    bool zero_meet_irreducible = true;
    for (Element x = 1; x < bz.size() && zero_meet_irreducible; ++x)
      for (Element y = 1; y < bz.size(); ++y)
        if (bz.meet(x, y) == 0) {
          zero_meet_irreducible = false;
          break;
        }
    if (zero_meet_irreducible && !r.is(ClassLabel::AOL))
      return fail("meet-irreducible 0 did not yield an antiortholattice");
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

std::optional<std::string> sharp_dense_comparability(Ctx& c) {
  if (!c.rep.is(ClassLabel::PBZSTAR) || !c.id("WSDM")) return std::nullopt;
  const FiniteAlgebra& a = c.alg;
  Mask sharp = elements_mask(c.rep.sharp.kleene);
  Mask dense = 1;  // T(L) = {x : x~ = 0} plus 0
  for (Element x = 0; x < a.size(); ++x)
    if (a.tilde(x) == 0) dense |= Mask{1} << x;
  if ((sharp | dense) != a.universe_mask()) return std::nullopt;
  for (Element b : c.rep.sharp.kleene) {
    if (b == a.top()) continue;
    for (Element x = 0; x < a.size(); ++x)
      if (!((sharp >> x) & 1u) && !a.leq(b, x))
        return fail("sharp " + elt(b) + " is not below non-sharp " + elt(x));
  }
  return pass();
}

std::optional<std::string> quotients_preserve_identities(Ctx& c) {
  if (!c.rep.is(ClassLabel::BZL)) return std::nullopt;
  for (const auto& theta : c.con().congruences) {
    const ClassificationReport qr = classify(quotient(c.alg, theta));
    for (const auto& [name, holds] : c.rep.identities)
      if (holds && !qr.identity(name))
        return fail(name + " lost in a quotient by " + std::to_string(theta.block_count()) + " blocks");
  }
  return pass();
}

std::optional<std::string> classification_iso_invariant(Ctx& c) {
  const FiniteAlgebra& a = c.alg;
  const int n = a.size();
  if (n < 3) return pass();
  // A fixed nontrivial relabelling of the middle elements.
  std::vector<Element> to_new(n);
  for (Element x = 0; x < n; ++x) to_new[x] = x;
  std::rotate(to_new.begin() + 1, to_new.begin() + 2, to_new.end() - 1);
  std::vector<Element> to_old(n);
  for (Element x = 0; x < n; ++x) to_old[to_new[x]] = x;

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<Element> prime(n), tilde(a.has_tilde() ? n : 0);
  for (Element x = 0; x < n; ++x) {
    prime[to_new[x]] = to_new[a.prime(x)];
    if (a.has_tilde()) tilde[to_new[x]] = to_new[a.tilde(x)];
    for (Element y = 0; y < n; ++y) leq[to_new[x]][to_new[y]] = a.leq(x, y);
  }
  try {
    const ClassificationReport rr = classify(
        validate(a.name(), leq, prime, a.has_tilde() ? std::optional(tilde) : std::nullopt));
    for (int i = 0; i < kNumClassLabels; ++i)
      if (rr.classes[i] != c.rep.classes[i]) return fail("class labels moved under relabelling");
    if (rr.identities != c.rep.identities) return fail("identity verdicts moved under relabelling");
    if (rr.sharp.kleene.size() != c.rep.sharp.kleene.size())
      return fail("sharp counts moved under relabelling");
  } catch (const AlgebraError& e) {
    return fail(e.what());
  }
  return pass();
}

struct NamedProperty {
  const char* name;
  Property run;
};

const std::vector<NamedProperty>& property_table() {
  static const std::vector<NamedProperty> table = {
      {"bz-arithmetic-laws", bz_arithmetic},
      {"paraorthomodularity-iff-diamond-orthomodularity", para_iff_diamond_om},
      {"sharp-sets-collapse", sharp_sets_collapse},
      {"sharp-subalgebra-orthomodular", sharp_subalgebra_oml},
      {"trivial-brouwer-iff-two-sharp-elements", aol_iff_two_sharp},
      {"sdm-implies-wsdm", sdm_implies_wsdm},
      {"orthomodular-members-satisfy-sdm-j2-sk", oml_identities},
      {"antiortholattice-identities", aol_identities},
      {"aol2-entails-aol1-aol3-wsdm", aol2_entails},
      {"aol1-equals-wsdm-under-aol2-aol3", aol1_eq_wsdm},
      {"brouwer-image-distributivity", brouwer_image_distributivity},
      {"centrality-descriptions-coincide", centrality_coincides},
      {"wsdm-collapses-centres", wsdm_centre_collapse},
      {"centre-closed-under-brouwer", centre_brouwer_closed},
      {"sharp-commuting-element-forms", goldrush_forms},
      {"commuting-complement-laws", sharp_commuting_laws},
      {"aol2-exchange-inequalities", aol2_swap_laws},
      {"aol2-iff-sharp-elements-central", aol2_iff_central_sharps},
      {"centre-is-boolean-and-matches-factor-congruences", centre_boolean},
      {"antiortholattices-directly-indecomposable", aol_directly_indecomposable},
      {"aol2-indecomposables-are-antiortholattices", aol2_indecomposables_are_aol},
      {"j2-wsdm-indecomposables-orthomodular-or-aol", j2_wsdm_split},
      {"interval-decomposition-verifies", interval_decomposition},
      {"sharp-commuting-triples-distribute", commuting_triples_distribute},
      {"p-ideals-absorb-diamonds", p_ideal_diamond_closure},
      {"modal-relation-is-equivalence", modal_relation_equivalence},
      {"modal-congruence-iff-weak-de-morgan", modal_congruence_iff_wdm},
      {"sdm-p-ideals-weak-de-morgan", sdm_ideals_wdm},
      {"sdm-p-ideals-are-congruence-kernels", sdm_p_ideals_are_kernels},
      {"sdm-modal-terms-decide-epsilon", sdm_d_terms_decide_epsilon},
      {"sdm-reduced-iff-sk", sdm_reduced_iff_sk},
      {"aol-binary-discriminator", aol_discriminator},
      {"aol2-ideal-term-routes-agree", aol2_ideal_term_routes},
      {"congruences-permute-at-zero", congruences_permute_at_zero},
      {"ideal-interval-map-order-iso", ideal_interval_map},
      {"trivial-brouwer-expansion-is-bz", trivial_brouwer_bz},
      {"wsdm-sharp-dense-comparability", sharp_dense_comparability},
      {"quotients-preserve-identities", quotients_preserve_identities},
      {"classification-isomorphism-invariant", classification_iso_invariant},
  };
  return table;
}

std::vector<FiniteAlgebra> algebra_universe(const SuiteOptions& options) {
  std::vector<FiniteAlgebra> universe;
  for (const auto& entry : catalog_entries()) universe.push_back(build_catalog_algebra(entry.name));
  for (const char* product : {"D2xD2", "D3xD2", "D3xD3", "D4xD2", "MO2xD2"})
    universe.push_back(build_catalog_algebra(product));
  if (!options.catalog_only)
    for (auto& a : enumerate_algebras(options.max_size, ClassLabel::BZL))
      universe.push_back(std::move(a));
  return universe;
}

}  // namespace

SuiteReport run_verification_suite(const SuiteOptions& options) {
  std::vector<Ctx> contexts;
  for (auto& a : algebra_universe(options)) {
    ClassificationReport rep = classify(a);
    contexts.push_back(Ctx{std::move(a), std::move(rep), std::nullopt});
  }

  SuiteReport report;
  report.algebras = static_cast<int>(contexts.size());

  // Catalog conformance first: the published facts, verbatim.
  {
    TheoremResult r{"catalog-claims-reproduce", 0, 0, ""};
    for (const auto& entry : catalog_entries()) {
      ++r.checked;
      const ClassificationReport rep = classify(build_catalog_algebra(entry.name));
      std::string bad;
      for (const auto& [label, expected] : entry.expected_classes) {
        bool actual = false;
        for (int i = 0; i < kNumClassLabels; ++i)
          if (to_string(static_cast<ClassLabel>(i)) == label) actual = rep.classes[i];
        if (actual != expected) bad = entry.name + ": class " + label;
      }
      for (const auto& [id, expected] : entry.expected_identities)
        if (rep.identity(id) != expected) bad = entry.name + ": identity " + id;
      if (!bad.empty()) {
        ++r.failures;
        if (r.first_counterexample.empty()) r.first_counterexample = bad;
      }
    }
    report.results.push_back(std::move(r));
  }

  for (const auto& prop : property_table()) {
    TheoremResult r{prop.name, 0, 0, ""};
    for (auto& ctx : contexts) {
      std::optional<std::string> outcome;
      try {
        outcome = prop.run(ctx);
      } catch (const AlgebraError& e) {
        outcome = std::string("unexpected error: ") + e.what();
      }
      if (!outcome) continue;
      ++r.checked;
      if (!outcome->empty()) {
        ++r.failures;
        if (r.first_counterexample.empty())
          r.first_counterexample = ctx.alg.name() + ": " + *outcome;
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace pbzl
