#include "pbzl/algebra.hpp"
#include "pbzl/term.hpp"

namespace pbzl {

bool ClassificationReport::identity(const std::string& name) const {
  for (const auto& [n, v] : identities)
    if (n == name) return v;
  throw AlgebraError(ErrorCode::UnknownIdentity, name + " (not applicable to " + algebra + ")");
}

namespace {

bool is_paraorthomodular(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && a.meet(a.prime(x), y) == 0 && x != y) return false;
  return true;
}

bool is_orthomodular(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && a.join(a.meet(y, a.prime(x)), x) != y) return false;
  return true;
}

}  // namespace

ClassificationReport classify(const FiniteAlgebra& a) {
  ClassificationReport r;
  r.algebra = a.name();
  auto set = [&](ClassLabel l, bool v) { r.classes[static_cast<int>(l)] = v; };

  set(ClassLabel::BI, true);  // enforced by validation
  const bool pka = a.pseudo_kleene_layer();
  set(ClassLabel::PKA, pka);

  bool ol = true;
  for (Element x = 0; x < a.size() && ol; ++x)
    if (a.meet(x, a.prime(x)) != 0) ol = false;
  set(ClassLabel::OL, ol);
  set(ClassLabel::OML, ol && is_orthomodular(a));
  const bool para = is_paraorthomodular(a);
  set(ClassLabel::PARA, para);

  if (a.has_tilde()) {
    const bool bzl = pka;  // the four ~ axioms already passed validation
    set(ClassLabel::BZL, bzl);

    // (*): (x ^ x')~ <= x~ v []x
    bool star = true;
    for (Element x = 0; x < a.size() && star; ++x)
      if (!a.leq(a.tilde(a.meet(x, a.prime(x))), a.join(a.tilde(x), a.box(x)))) star = false;
    set(ClassLabel::BZSTAR, bzl && star);
    set(ClassLabel::PBZSTAR, bzl && star && para);

    // Antiortholattice: trivial Brouwer complement, 0~ = 1 and x~ = 0 otherwise.
    bool trivial = a.tilde(0) == a.top();
    for (Element x = 1; x < a.size() && trivial; ++x)
      if (a.tilde(x) != 0) trivial = false;
    set(ClassLabel::AOL, bzl && star && para && trivial);
  }

  for (const auto& id : identity_catalog()) {
    if (!a.has_tilde() && (id.lhs.uses_tilde() || id.rhs.uses_tilde())) continue;
    r.identities.emplace_back(id.name, check_identity(a, id).holds);
  }

  if (a.has_tilde()) {
    r.sharp = sharp_sets(a);
  } else {
    for (Element x = 0; x < a.size(); ++x)
      if (a.meet(x, a.prime(x)) == 0) r.sharp.kleene.push_back(x);
  }
  return r;
}

}  // namespace pbzl
