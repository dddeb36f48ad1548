#include "pbzl/congruence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace pbzl {

namespace {

// Plain union-find; canonicalized to least-element representatives on exit.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  Element find(Element a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  // Returns true when the classes were distinct.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Element> representatives() {
    std::vector<Element> rep(parent_.size());
    for (size_t i = 0; i < parent_.size(); ++i) rep[i] = find(static_cast<Element>(i));
    return rep;
  }

 private:
  std::vector<Element> parent_;
};

std::vector<Element> canonical(std::vector<Element> rep) {
  // rep[a] must be the least element of a's class.
  std::vector<Element> least(rep.size(), -1);
  for (size_t a = 0; a < rep.size(); ++a) {
    Element r = rep[a];
    if (least[r] < 0) least[r] = static_cast<Element>(a);
  }
  for (auto& r : rep) r = least[r];
  return rep;
}

bool use_tilde(const FiniteAlgebra& a, Signature sig) {
  return sig == Signature::Full && a.has_tilde();
}

}  // namespace

Congruence Congruence::identity(int n) {
  std::vector<Element> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  return Congruence(std::move(rep));
}

Congruence Congruence::all(int n) { return Congruence(std::vector<Element>(n, 0)); }

Congruence Congruence::from_representatives(std::vector<Element> rep) {
  return Congruence(canonical(std::move(rep)));
}

int Congruence::block_count() const {
  int count = 0;
  for (size_t a = 0; a < rep_.size(); ++a)
    if (rep_[a] == static_cast<Element>(a)) ++count;
  return count;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out;
  std::map<Element, size_t> where;
  for (size_t a = 0; a < rep_.size(); ++a) {
    auto [it, fresh] = where.try_emplace(rep_[a], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(static_cast<Element>(a));
  }
  return out;  // map iteration is by least element already
}

std::vector<Element> Congruence::block_of(Element a) const {
  std::vector<Element> out;
  for (size_t x = 0; x < rep_.size(); ++x)
    if (rep_[x] == rep_[a]) out.push_back(static_cast<Element>(x));
  return out;
}

Mask Congruence::block_mask(Element a) const {
  Mask m = 0;
  for (size_t x = 0; x < rep_.size(); ++x)
    if (rep_[x] == rep_[a]) m |= Mask{1} << x;
  return m;
}

bool Congruence::is_identity() const {
  for (size_t a = 0; a < rep_.size(); ++a)
    if (rep_[a] != static_cast<Element>(a)) return false;
  return true;
}

bool Congruence::is_all() const { return block_count() <= 1; }

bool Congruence::is_pseudo_identical() const {
  const int n = size();
  for (Element x = 1; x < n; ++x)
    if (rep_[x] == rep_[0]) return false;
  for (Element x = 0; x < n - 1; ++x)
    if (rep_[x] == rep_[n - 1]) return false;
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  const int n = size();
  std::map<std::pair<Element, Element>, Element> blocks;
  std::vector<Element> rep(n);
  for (Element a = 0; a < n; ++a) {
    auto key = std::make_pair(rep_[a], other.rep_[a]);
    auto [it, fresh] = blocks.try_emplace(key, a);
    rep[a] = it->second;
  }
  return Congruence(std::move(rep));
}

Congruence Congruence::join(const Congruence& other) const {
  UnionFind uf(size());
  for (Element a = 0; a < size(); ++a) {
    uf.unite(a, rep_[a]);
    uf.unite(a, other.rep_[a]);
  }
  return Congruence(canonical(uf.representatives()));
}

bool Congruence::composes_to_all(const Congruence& other) const {
  // this o other relates a to c iff some b has a ~this~ b and b ~other~ c.
  const int n = size();
  for (Element a = 0; a < n; ++a) {
    Mask reach = 0;
    for (Element b = 0; b < n; ++b)
      if (rep_[b] == rep_[a]) reach |= other.block_mask(b);
    if (std::popcount(reach) != n) return false;
  }
  return true;
}

bool Congruence::compatible_with(const FiniteAlgebra& alg, Signature sig) const {
  const int n = size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (rep_[a] != rep_[b]) continue;
      if (rep_[alg.prime(a)] != rep_[alg.prime(b)]) return false;
      if (use_tilde(alg, sig) && rep_[alg.tilde(a)] != rep_[alg.tilde(b)]) return false;
      for (Element u = 0; u < n; ++u) {
        if (rep_[alg.meet(a, u)] != rep_[alg.meet(b, u)]) return false;
        if (rep_[alg.join(a, u)] != rep_[alg.join(b, u)]) return false;
      }
    }
  return true;
}

Congruence principal_congruence(const FiniteAlgebra& alg, Element a, Element b, Signature sig) {
  const int n = alg.size();
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  const bool tilde = use_tilde(alg, sig);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    auto push = [&](Element p, Element q) {
      if (uf.unite(p, q)) work.emplace_back(p, q);
    };
    push(alg.prime(x), alg.prime(y));
    if (tilde) push(alg.tilde(x), alg.tilde(y));
    for (Element u = 0; u < n; ++u) {
      push(alg.meet(x, u), alg.meet(y, u));
      push(alg.join(x, u), alg.join(y, u));
    }
  }
  return Congruence::from_representatives(uf.representatives());
}

int ConLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || !(*it == c)) return -1;
  return static_cast<int>(it - congruences.begin());
}

ConLattice all_congruences(const FiniteAlgebra& alg, Signature sig, int max_size) {
  const int n = alg.size();
  if (n > max_size)
    throw AlgebraError(ErrorCode::SizeLimit, "congruence lattice capped at " + std::to_string(max_size) +
                                                 " elements (got " + std::to_string(n) + ")");
  std::set<Congruence> found;
  found.insert(Congruence::identity(n));
  std::vector<Congruence> fresh;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      auto cg = principal_congruence(alg, a, b, sig);
      if (found.insert(cg).second) fresh.push_back(cg);
    }
  // Join-closure: every congruence is a join of principal ones.
  while (!fresh.empty()) {
    Congruence next = fresh.back();
    fresh.pop_back();
    std::vector<Congruence> additions;
    for (const auto& c : found) {
      Congruence j = next.join(c);
      if (!found.count(j)) additions.push_back(std::move(j));
    }
    for (auto& j : additions)
      if (found.insert(j).second) fresh.push_back(std::move(j));
  }

  ConLattice lat;
  lat.congruences.assign(found.begin(), found.end());
  for (size_t i = 0; i < lat.congruences.size(); ++i) {
    if (lat.congruences[i].is_identity()) lat.identity_index = static_cast<int>(i);
    if (lat.congruences[i].is_all()) lat.all_index = static_cast<int>(i);
  }
  return lat;
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& theta) {
  const int n = alg.size();
  // Bottom block first (it has least element 0 already), top block last, the
  // rest keep the least-element order.
  std::vector<std::vector<Element>> blocks;
  std::vector<Element> top_block;
  for (auto& blk : theta.blocks()) {
    if (theta.related(blk[0], alg.top()) && !theta.related(blk[0], 0))
      top_block = std::move(blk);
    else
      blocks.push_back(std::move(blk));
  }
  if (!top_block.empty()) blocks.push_back(std::move(top_block));
  const int m = static_cast<int>(blocks.size());

  std::vector<int> block_of(n);
  for (int i = 0; i < m; ++i)
    for (Element x : blocks[i]) block_of[x] = i;

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      // [a] <= [b] iff a ^ b ~ a; well-defined by compatibility.
      leq[i][j] = theta.related(alg.meet(blocks[i][0], blocks[j][0]), blocks[i][0]);

  std::vector<Element> prime(m);
  std::vector<Element> tilde(alg.has_tilde() ? m : 0);
  for (int i = 0; i < m; ++i) {
    prime[i] = block_of[alg.prime(blocks[i][0])];
    if (alg.has_tilde()) tilde[i] = block_of[alg.tilde(blocks[i][0])];
  }
  return validate(alg.name() + "/theta", leq, prime,
                  alg.has_tilde() ? std::optional(tilde) : std::nullopt);
}

std::vector<std::pair<int, int>> factor_pairs(const FiniteAlgebra& alg, const ConLattice& con) {
  if (con.congruences.empty() || con.congruences.front().size() != alg.size())
    throw AlgebraError(ErrorCode::BadInput, "congruence lattice does not belong to " + alg.name());
  std::vector<std::pair<int, int>> out;
  const int k = static_cast<int>(con.congruences.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Congruence& theta = con.congruences[i];
      const Congruence& phi = con.congruences[j];
      if (!theta.meet(phi).is_identity()) continue;
      if (!theta.join(phi).is_all()) continue;
      if (!theta.composes_to_all(phi) || !phi.composes_to_all(theta)) continue;
      out.emplace_back(i, j);
    }
  return out;
}

StructuralPredicates structural_predicates(const FiniteAlgebra& alg, const ConLattice& con) {
  StructuralPredicates p;
  const int n = alg.size();
  const auto pairs = factor_pairs(alg, con);
  p.directly_indecomposable = n >= 2;
  for (auto [i, j] : pairs)
    if (!con.congruences[i].is_identity() && !con.congruences[i].is_all())
      p.directly_indecomposable = false;

  p.simple = n >= 2 && con.congruences.size() == 2;

  // Monolith: Con(A) \ {identity} has a least element iff the meet of all
  // its members is itself non-identity.
  bool has_nontrivial = false;
  Congruence floor = Congruence::all(n);
  for (const auto& c : con.congruences) {
    if (c.is_identity()) continue;
    has_nontrivial = true;
    floor = floor.meet(c);
  }
  p.subdirectly_irreducible = has_nontrivial && !floor.is_identity();

  p.reduced = true;
  for (const auto& c : con.congruences)
    if (!c.is_identity() && c.block_of(0).size() == 1) p.reduced = false;
  return p;
}

}  // namespace pbzl
