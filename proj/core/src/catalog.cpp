#include "pbzl/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace pbzl {

namespace {

std::vector<std::vector<bool>> leq_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : covers) leq[lo][hi] = true;
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

std::vector<Element> trivial_tilde(int n) {
  std::vector<Element> t(n, 0);
  t[0] = n - 1;
  return t;
}

FiniteAlgebra build_chain(int n, const std::string& name) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<Element> prime(n);
  for (int i = 0; i < n; ++i) {
    prime[i] = n - 1 - i;
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return validate(name, leq, prime, trivial_tilde(n));
}

// 0, atoms a, a', b, b', 1; both complements coincide.
FiniteAlgebra build_mo2() {
  const int n = 6;
  auto leq = leq_from_covers(n, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  std::vector<Element> prime = {5, 2, 1, 4, 3, 0};
  return validate("MO2", leq, prime, prime);
}

// Benzene ring: two incomparable chains 0 < a < b < 1 and 0 < c < d < 1.
FiniteAlgebra build_o6() {
  const int n = 6;
  auto leq = leq_from_covers(n, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  std::vector<Element> prime = {5, 4, 3, 2, 1, 0};
  return validate("O6", leq, prime, prime);
}

// M3 with atoms a, a', b where b is a fixpoint of ' and b~ = 0.
FiniteAlgebra build_m3b() {
  const int n = 5;
  auto leq = leq_from_covers(n, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  std::vector<Element> prime = {4, 2, 1, 3, 0};
  std::vector<Element> tilde = {4, 2, 1, 0, 0};
  return validate("M3B", leq, prime, tilde);
}

// Ordinal sum of the Boolean diamond with itself: 0 < a,b < c < d,e < 1
// with c the fixpoint; the Brouwer complement is trivial.
FiniteAlgebra build_cogotti() {
  const int n = 7;
  auto leq = leq_from_covers(n, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  std::vector<Element> prime = {6, 4, 5, 3, 1, 2, 0};
  return validate("COGOTTI7", leq, prime, trivial_tilde(n));
}

// The 15-element witness separating SK+SDM from J2. Elements:
// 0 | d e f g | a b c b' a' | g' f' e' d' | 1, with c self-prime. The
// figure pins ~ on the lower paraorthomodular layer (g~=a, f~=b, e~=b',
// d~=a'); the remaining values are forced by the BZ axioms and recovered by
// complete_tilde, which fails loudly if the completion is not unique.
FiniteAlgebra build_h16() {
  const int n = 15;
  const int O = 0, d = 1, e = 2, f = 3, g = 4, a = 5, b = 6, c = 7, bp = 8, ap = 9, gp = 10,
            fp = 11, ep = 12, dp = 13, I = 14;
  auto leq = leq_from_covers(
      n, {{O, d}, {O, e}, {O, f}, {O, g},  //
          {d, a}, {d, c}, {e, b}, {e, c}, {f, bp}, {f, c}, {g, ap}, {g, c},
          {a, gp}, {b, fp}, {bp, ep}, {ap, dp}, {c, gp}, {c, fp}, {c, ep}, {c, dp},
          {gp, I}, {fp, I}, {ep, I}, {dp, I}});
  std::vector<Element> prime(n);
  prime[O] = I; prime[I] = O;
  prime[d] = dp; prime[dp] = d;
  prime[e] = ep; prime[ep] = e;
  prime[f] = fp; prime[fp] = f;
  prime[g] = gp; prime[gp] = g;
  prime[a] = ap; prime[ap] = a;
  prime[b] = bp; prime[bp] = b;
  prime[c] = c;
  FiniteAlgebra base = validate("H16", leq, prime, std::nullopt);
  const std::map<Element, Element> pinned = {{g, a}, {f, b}, {e, bp}, {d, ap}};
  return validate("H16", leq, prime, complete_tilde(base, pinned));
}

bool iequal(std::string_view lhs, std::string_view rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (size_t i = 0; i < lhs.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(lhs[i])) !=
        std::tolower(static_cast<unsigned char>(rhs[i])))
      return false;
  return true;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string desc, std::map<std::string, bool> classes,
                 std::map<std::string, bool> identities) {
    out.push_back({std::move(name), std::move(desc), std::move(classes), std::move(identities)});
  };
  add("D2", "two-element Boolean chain",
      {{"OML", true}, {"AOL", true}, {"PBZ*", true}},
      {{"SDM", true}, {"SK", true}, {"DIST", true}, {"J2", true}});
  add("D3", "three-element Kleene chain, trivial ~",
      {{"AOL", true}, {"PBZ*", true}, {"OL", false}},
      {{"SK", true}, {"SDM", true}, {"DIST", true}});
  add("D4", "four-element Kleene chain, trivial ~",
      {{"AOL", true}, {"PBZ*", true}},
      {{"SK", false}, {"SDM", true}, {"AOL2", true}, {"J2", true}, {"DIST", true}});
  add("D5", "five-element Kleene chain, trivial ~",
      {{"AOL", true}, {"PBZ*", true}},
      {{"DIST", true}, {"SDM", true}, {"SK", false}});
  add("BOOL4", "Boolean algebra on two atoms",
      {{"OML", true}, {"AOL", false}},
      {{"DIST", true}, {"SDM", true}, {"SK", true}, {"J2", true}});
  add("BOOL8", "Boolean algebra on three atoms",
      {{"OML", true}, {"AOL", false}},
      {{"DIST", true}, {"SDM", true}, {"SK", true}, {"J2", true}});
  add("MO2", "simple modular ortholattice with four atoms",
      {{"OML", true}, {"AOL", false}},
      {{"SDM", true}, {"J2", true}, {"SK", true}, {"DIST", false}});
  add("O6", "benzene ring, the non-orthomodular ortholattice",
      {{"OL", true}, {"OML", false}, {"PARA", false}, {"BZ*", true}, {"PBZ*", false}},
      {{"DIAMOND_OM", false}});
  add("M3B", "M3 with a self-prime atom of empty Brouwer support",
      {{"PBZ*", true}, {"OML", false}, {"AOL", false}},
      {{"SK", true}, {"J2", true}, {"WSDM", false}, {"SDM", false}, {"AOL2", false}});
  add("COGOTTI7", "ordinal sum of the Boolean diamond with itself, trivial ~",
      {{"AOL", true}, {"PBZ*", true}},
      {{"DIST", true}, {"SDM", false}, {"WSDM", true}, {"J2", true}});
  add("H16", "the SK+SDM witness that fails J2",
      {{"PBZ*", true}, {"AOL", false}, {"OML", false}},
      {{"SK", true}, {"SDM", true}, {"J2", false}});
  return out;
}

}  // namespace

FiniteAlgebra kleene_chain(int n, const std::string& name) {
  if (n < 1) throw AlgebraError(ErrorCode::BadInput, "chain needs at least one element");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<Element> prime(n);
  for (int i = 0; i < n; ++i) {
    prime[i] = n - 1 - i;
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return validate(name, leq, prime, std::nullopt);
}

FiniteAlgebra boolean_algebra(int atoms, const std::string& name) {
  if (atoms < 0 || atoms > 6) throw AlgebraError(ErrorCode::BadInput, "supported up to 6 atoms");
  const int n = 1 << atoms;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<Element> prime(n);
  for (int x = 0; x < n; ++x) {
    prime[x] = (n - 1) ^ x;
    for (int y = 0; y < n; ++y) leq[x][y] = (x & y) == x;
  }
  return validate(name, leq, prime, prime);
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

FiniteAlgebra build_catalog_algebra(std::string_view name) {
  // Product requests: factor names joined by 'x'. Entry names themselves
  // never contain one, so a bare split is unambiguous.
  if (auto cut = name.find_first_of("xX"); cut != std::string_view::npos && cut > 0) {
    FiniteAlgebra lhs = build_catalog_algebra(name.substr(0, cut));
    FiniteAlgebra rhs = build_catalog_algebra(name.substr(cut + 1));
    return direct_product(lhs, rhs);
  }
  if (iequal(name, "D2")) return build_chain(2, "D2");
  if (iequal(name, "D3")) return build_chain(3, "D3");
  if (iequal(name, "D4")) return build_chain(4, "D4");
  if (iequal(name, "D5")) return build_chain(5, "D5");
  if (iequal(name, "BOOL4")) return boolean_algebra(2, "BOOL4");
  if (iequal(name, "BOOL8")) return boolean_algebra(3, "BOOL8");
  if (iequal(name, "MO2")) return build_mo2();
  if (iequal(name, "O6")) return build_o6();
  if (iequal(name, "M3B")) return build_m3b();
  if (iequal(name, "COGOTTI7")) return build_cogotti();
  if (iequal(name, "H16")) return build_h16();
  throw AlgebraError(ErrorCode::UnknownName, std::string(name));
}

std::vector<Element> complete_tilde(const FiniteAlgebra& base,
                                    const std::map<Element, Element>& pinned) {
  const int n = base.size();
  std::vector<Mask> cand(n);
  for (Element x = 0; x < n; ++x) {
    cand[x] = 0;
    for (Element y = 0; y < n; ++y)
      if (base.meet(x, y) == 0) cand[x] |= Mask{1} << y;  // axiom (1)
  }
  for (auto [x, v] : pinned) {
    cand[x] &= Mask{1} << v;
    if (!cand[x])
      throw AlgebraError(ErrorCode::AmbiguousCompletion,
                         "pinned value breaks axiom (1) at element " + std::to_string(x));
  }

  // Propagate until fixpoint: antitonicity arc-consistency, plus the forced
  // values t(t(x)) = t(x)' and the bound x <= t(t(x)) on known images.
  auto singleton = [](Mask m) { return std::popcount(m) == 1; };
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (x == y || !base.leq(x, y)) continue;
        // t(y) must lie below some candidate of t(x), and dually.
        Mask ylim = 0, xlim = 0;
        for (Element t : mask_elements(cand[x])) ylim |= base.downset(t);
        for (Element t : mask_elements(cand[y])) xlim |= base.upset(t);
        Mask ny = cand[y] & ylim, nx = cand[x] & xlim;
        if (ny != cand[y] || nx != cand[x]) {
          cand[y] = ny;
          cand[x] = nx;
          changed = true;
        }
        if (!cand[x] || !cand[y])
          throw AlgebraError(ErrorCode::AmbiguousCompletion, "no completion satisfies antitonicity");
      }
    for (Element x = 0; x < n; ++x) {
      if (!singleton(cand[x])) continue;
      const Element v = std::countr_zero(cand[x]);
      const Mask forced = Mask{1} << base.prime(v);  // axiom (4)
      if ((cand[v] & forced) != cand[v]) {
        cand[v] &= forced;
        changed = true;
      }
      if (!cand[v])
        throw AlgebraError(ErrorCode::AmbiguousCompletion, "no completion satisfies a~' = a~~");
      Mask above = cand[v] & base.upset(x);  // axiom (2): x <= t(t(x))
      if (above != cand[v]) {
        cand[v] = above;
        changed = true;
      }
      if (!cand[v])
        throw AlgebraError(ErrorCode::AmbiguousCompletion, "no completion satisfies a <= a~~");
    }
  }

  // Exhaust whatever freedom is left and insist on a unique survivor.
  std::vector<Element> assignment(n, -1);
  std::vector<std::vector<Element>> solutions;
  auto search = [&](auto&& self, Element x) -> void {
    if (solutions.size() > 1) return;
    if (x == n) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
      for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) leq[i][j] = base.leq(i, j);
      try {
        validate(base.name(), leq, base.prime_table(), assignment);
        solutions.push_back(assignment);
      } catch (const AlgebraError&) {
      }
      return;
    }
    for (Element v : mask_elements(cand[x])) {
      bool ok = true;
      for (Element y = 0; y < x && ok; ++y) {
        if (base.leq(x, y) && !base.leq(assignment[y], v)) ok = false;
        if (base.leq(y, x) && !base.leq(v, assignment[y])) ok = false;
      }
      if (!ok) continue;
      assignment[x] = v;
      self(self, x + 1);
      assignment[x] = -1;
    }
  };
  search(search, 0);
  if (solutions.size() != 1)
    throw AlgebraError(ErrorCode::AmbiguousCompletion,
                       base.name() + ": " + std::to_string(solutions.size()) +
                           " Brouwer completions satisfy the axioms (need exactly 1)");
  return solutions.front();
}

}  // namespace pbzl
