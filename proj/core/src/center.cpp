#include "pbzl/center.hpp"

#include <algorithm>
#include <set>

#include "pbzl/term.hpp"

namespace pbzl {

bool commutes(const FiniteAlgebra& alg, Element a, Element b) {
  return alg.join(alg.meet(a, b), alg.meet(alg.prime(a), b)) == b;
}

bool commutes_sdm(const FiniteAlgebra& alg, Element a, Element b) {
  if (!commutes(alg, a, b)) return false;
  if (alg.tilde(alg.meet(a, b)) != alg.join(alg.tilde(a), alg.tilde(b))) return false;
  return alg.tilde(alg.meet(alg.prime(a), b)) == alg.join(alg.box(a), alg.tilde(b));
}

bool is_central_c1c4(const FiniteAlgebra& alg, Element e) {
  if (!alg.has_tilde())
    throw AlgebraError(ErrorCode::MissingTilde, "the centrality conditions use ~");
  const Element ep = alg.prime(e);
  const int n = alg.size();
  for (Element a = 0; a < n; ++a)
    if (alg.join(alg.meet(e, a), alg.meet(ep, a)) != a) return false;  // C1
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = alg.join(a, b);
      if (alg.meet(ab, e) != alg.join(alg.meet(a, e), alg.meet(b, e))) return false;   // C2
      if (alg.meet(ab, ep) != alg.join(alg.meet(a, ep), alg.meet(b, ep))) return false;  // C3
      const Element lhs = alg.tilde(alg.meet(alg.join(e, b), alg.join(ep, a)));
      const Element rhs = alg.meet(alg.join(e, alg.tilde(b)), alg.join(ep, alg.tilde(a)));
      if (lhs != rhs) return false;  // C4
    }
  return true;
}

bool is_central_factor(const FiniteAlgebra& alg, Element e) {
  const Congruence theta = principal_congruence(alg, e, alg.bottom());
  const Congruence phi = principal_congruence(alg, e, alg.top());
  return theta.meet(phi).is_identity() && theta.join(phi).is_all() &&
         theta.composes_to_all(phi) && phi.composes_to_all(theta);
}

CommutationReport commutation_report(const FiniteAlgebra& alg) {
  if (!alg.has_tilde())
    throw AlgebraError(ErrorCode::MissingTilde, "the commutation relations use ~");
  CommutationReport r;
  const int n = alg.size();
  for (Element a = 0; a < n; ++a) {
    bool all_c = true, all_sdm = true;
    for (Element b = 0; b < n; ++b) {
      if (commutes(alg, a, b)) r.commuting_pairs.emplace_back(a, b);
      else all_c = false;
      if (commutes_sdm(alg, a, b)) r.commuting_sdm_pairs.emplace_back(a, b);
      else all_sdm = false;
    }
    if (all_c) r.c_p.push_back(a);
    if (all_sdm) r.c_pbz.push_back(a);
    if (is_central_factor(alg, a)) r.c_factor.push_back(a);
    if (is_central_c1c4(alg, a)) r.c_c1c4.push_back(a);
    if (alg.meet(a, alg.prime(a)) == 0) r.sharp_kleene.push_back(a);
  }
  return r;
}

FiniteAlgebra center_boolean_algebra(const FiniteAlgebra& alg) {
  std::vector<Element> center;
  for (Element e = 0; e < alg.size(); ++e)
    if (is_central_factor(alg, e)) center.push_back(e);
  FiniteAlgebra c = [&] {
    try {
      return subalgebra(alg, center, "C(" + alg.name() + ")");
    } catch (const AlgebraError& e) {
      throw AlgebraError(ErrorCode::NotBoolean,
                         "centre of " + alg.name() + " is not a subalgebra: " + e.what());
    }
  }();
  if (!check_identity(c, find_identity("DIST")).holds)
    throw AlgebraError(ErrorCode::NotBoolean, "centre of " + alg.name() + " is not distributive");
  for (Element x = 0; x < c.size(); ++x)
    if (c.meet(x, c.prime(x)) != c.bottom() || c.join(x, c.prime(x)) != c.top())
      throw AlgebraError(ErrorCode::NotBoolean, "centre of " + alg.name() + " is not complemented");
  return c;
}

namespace {

void require_aol2(const FiniteAlgebra& alg) {
  if (!is_pbzstar_algebra(alg) || !check_identity(alg, find_identity("AOL2")).holds)
    throw AlgebraError(ErrorCode::PreconditionAOL2, alg.name() + " does not satisfy AOL2");
}

// Interval [0, e] with complements cut down by e; parent elements keep their
// relative order except that e is moved to the top slot.
IntervalAlgebra interval_algebra(const FiniteAlgebra& alg, Element e, const std::string& name) {
  std::vector<Element> universe;
  for (Element x = 0; x < alg.size(); ++x)
    if (alg.leq(x, e) && x != e) universe.push_back(x);
  universe.push_back(e);
  const int m = static_cast<int>(universe.size());
  std::vector<Element> local(alg.size(), -1);
  for (int i = 0; i < m; ++i) local[universe[i]] = i;

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<Element> prime(m), tilde(m);
  for (int i = 0; i < m; ++i) {
    prime[i] = local[alg.meet(alg.prime(universe[i]), e)];
    tilde[i] = local[alg.meet(alg.tilde(universe[i]), e)];
    for (int j = 0; j < m; ++j) leq[i][j] = alg.leq(universe[i], universe[j]);
  }
  return {validate(name, leq, prime, tilde), std::move(universe)};
}

}  // namespace

std::pair<IntervalAlgebra, IntervalAlgebra> interval_algebras(const FiniteAlgebra& alg, Element a) {
  require_aol2(alg);
  return {interval_algebra(alg, alg.tilde(a), alg.name() + "[0,a~]"),
          interval_algebra(alg, alg.diamond(a), alg.name() + "[0,<>a]")};
}

Decomposition decompose(const FiniteAlgebra& alg, Element a) {
  auto [l1, l2] = interval_algebras(alg, a);
  FiniteAlgebra product = direct_product(l1.algebra, l2.algebra);
  Decomposition d{a, std::move(l1), std::move(l2), std::move(product), {}, false};

  const Element at = alg.tilde(a), ad = alg.diamond(a);
  std::vector<Element> local1(alg.size(), -1), local2(alg.size(), -1);
  for (size_t i = 0; i < d.l1.universe.size(); ++i) local1[d.l1.universe[i]] = static_cast<Element>(i);
  for (size_t i = 0; i < d.l2.universe.size(); ++i) local2[d.l2.universe[i]] = static_cast<Element>(i);

  const int n = alg.size();
  const int n2 = d.l2.algebra.size();
  std::vector<Element> flat(n);
  std::vector<bool> hit(static_cast<size_t>(d.l1.algebra.size()) * n2, false);
  for (Element b = 0; b < n; ++b) {
    const Element c1 = local1[alg.meet(b, at)];
    const Element c2 = local2[alg.meet(b, ad)];
    d.phi.emplace_back(c1, c2);
    flat[b] = c1 * n2 + c2;
    if (hit[flat[b]])
      throw AlgebraError(ErrorCode::IsoCheckFailed, "phi is not injective on " + alg.name());
    hit[flat[b]] = true;
  }
  if (n != d.product.size())
    throw AlgebraError(ErrorCode::IsoCheckFailed, "interval sizes do not multiply to |" + alg.name() + "|");

  for (Element b = 0; b < n; ++b) {
    if (flat[alg.prime(b)] != d.product.prime(flat[b]) ||
        flat[alg.tilde(b)] != d.product.tilde(flat[b]))
      throw AlgebraError(ErrorCode::IsoCheckFailed, "phi breaks a unary operation on " + alg.name());
    for (Element c = 0; c < n; ++c)
      if (flat[alg.meet(b, c)] != d.product.meet(flat[b], flat[c]) ||
          flat[alg.join(b, c)] != d.product.join(flat[b], flat[c]))
        throw AlgebraError(ErrorCode::IsoCheckFailed, "phi breaks a lattice operation on " + alg.name());
  }
  if (flat[alg.bottom()] != d.product.bottom() || flat[alg.top()] != d.product.top())
    throw AlgebraError(ErrorCode::IsoCheckFailed, "phi moves a bound on " + alg.name());
  d.verified = true;
  return d;
}

bool foulis_holland_check(const FiniteAlgebra& alg, Element a, Element b, Element c) {
  for (Element x : {a, b, c})
    if (alg.meet(x, alg.prime(x)) != 0)
      throw AlgebraError(ErrorCode::PreconditionCommute,
                         "element " + std::to_string(x) + " is not Kleene-sharp");
  if (!commutes(alg, a, b))
    throw AlgebraError(ErrorCode::PreconditionCommute,
                       std::to_string(a) + " does not commute with " + std::to_string(b));
  if (!commutes(alg, a, c))
    throw AlgebraError(ErrorCode::PreconditionCommute,
                       std::to_string(a) + " does not commute with " + std::to_string(c));

  std::set<Element> closure = {a, b, c};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> now(closure.begin(), closure.end());
    for (Element x : now)
      for (Element y : now) {
        if (closure.insert(alg.meet(x, y)).second) grew = true;
        if (closure.insert(alg.join(x, y)).second) grew = true;
      }
  }
  for (Element x : closure)
    for (Element y : closure)
      for (Element z : closure) {
        if (alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z))) return false;
        if (alg.join(x, alg.meet(y, z)) != alg.meet(alg.join(x, y), alg.join(x, z))) return false;
      }
  return true;
}

}  // namespace pbzl
