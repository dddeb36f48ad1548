#include "pbzl/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace pbzl {

std::vector<std::vector<bool>> Lattice::leq_matrix() const {
  std::vector<std::vector<bool>> m(size, std::vector<bool>(size));
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b) m[a][b] = leq(a, b);
  return m;
}

namespace {

// Permutations of the middle elements; bottom and top stay put.
template <typename Fn>
void for_each_bound_fixing_permutation(int n, Fn&& fn) {
  std::vector<Element> mid(std::max(n - 2, 0));
  std::iota(mid.begin(), mid.end(), 1);
  std::vector<Element> inv(n);  // inv[new index] = old element
  inv[0] = 0;
  if (n > 1) inv[n - 1] = n - 1;
  do {
    for (int i = 0; i < static_cast<int>(mid.size()); ++i) inv[i + 1] = mid[i];
    fn(inv);
  } while (std::next_permutation(mid.begin(), mid.end()));
}

std::vector<std::uint64_t> key_for(const std::vector<Mask>& down, int n,
                                   const std::vector<Element>* prime,
                                   const std::vector<Element>* tilde) {
  std::vector<std::uint64_t> best;
  for_each_bound_fixing_permutation(n, [&](const std::vector<Element>& inv) {
    std::vector<Element> to_new(n);
    for (int i = 0; i < n; ++i) to_new[inv[i]] = i;
    std::vector<std::uint64_t> key;
    key.reserve(n + (prime ? n : 0) + (tilde ? n : 0));
    for (int i = 0; i < n; ++i) {
      Mask row = 0;
      for (int j = 0; j < n; ++j)
        if ((down[inv[j]] >> inv[i]) & 1u) row |= Mask{1} << j;  // i <= j in new labels
      key.push_back(row);
    }
    if (prime)
      for (int i = 0; i < n; ++i) key.push_back(to_new[(*prime)[inv[i]]]);
    if (tilde)
      for (int i = 0; i < n; ++i) key.push_back(to_new[(*tilde)[inv[i]]]);
    if (best.empty() || key < best) best = std::move(key);
  });
  return best;
}

}  // namespace

std::vector<std::uint64_t> lattice_canonical_key(const Lattice& lat) {
  return key_for(lat.down, lat.size, nullptr, nullptr);
}

std::vector<std::uint64_t> algebra_canonical_key(const FiniteAlgebra& a) {
  std::vector<Mask> down(a.size());
  for (Element x = 0; x < a.size(); ++x) down[x] = a.downset(x);
  return key_for(down, a.size(), &a.prime_table(), a.has_tilde() ? &a.tilde_table() : nullptr);
}

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || a.has_tilde() != b.has_tilde()) return false;
  return algebra_canonical_key(a) == algebra_canonical_key(b);
}

namespace {

// Greatest element of the mask under the order given by down[], or -1.
Element greatest_of(Mask set, const std::vector<Mask>& down) {
  for (Mask rest = set; rest;) {
    const Element x = std::countr_zero(rest);
    rest &= rest - 1;
    if ((set & ~down[x]) == 0) return x;
  }
  return -1;
}

struct LatticeSearch {
  int n;
  std::vector<Mask> down, up;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Lattice> out;

  // The labelling is a linear extension, so element k enters as a maximal
  // element whose strict downset D is drawn from 0..k-1.
  bool downset_admissible(int k, Mask d) const {
    if (!(d & 1u)) return false;
    for (Mask rest = d; rest;) {
      const Element x = std::countr_zero(rest);
      rest &= rest - 1;
      if ((down[x] & ~d) != 0) return false;  // down-closed
    }
    // Meets with elements outside D must already exist.
    for (Element y = 0; y < k; ++y) {
      if ((d >> y) & 1u) continue;
      if (greatest_of(d & down[y], down) < 0) return false;
    }
    // Any pair below the new element keeps a unique least upper bound: if it
    // already has upper bounds, their least one must exist and lie inside D.
    for (Mask xs = d; xs;) {
      const Element x = std::countr_zero(xs);
      xs &= xs - 1;
      for (Mask ys = xs; ys;) {
        const Element y = std::countr_zero(ys);
        ys &= ys - 1;
        if (((down[y] >> x) & 1u) || ((down[x] >> y) & 1u)) continue;
        const Mask uppers = up[x] & up[y];
        if (!uppers) continue;
        bool found = false;
        for (Mask us = uppers & d; us && !found;) {
          const Element u = std::countr_zero(us);
          us &= us - 1;
          if ((uppers & ~up[u]) == 0) found = true;
        }
        if (!found) return false;
      }
    }
    return true;
  }

  bool is_lattice() const {
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (greatest_of(down[a] & down[b], down) < 0) return false;
        if (greatest_of(up[a] & up[b], up) < 0) return false;
      }
    return true;
  }

  void extend(int k) {
    if (k == n) {
      if (!is_lattice()) return;
      Lattice lat{n, down};
      if (seen.insert(lattice_canonical_key(lat)).second) out.push_back(std::move(lat));
      return;
    }
    const Mask all = (Mask{1} << k) - 1;
    const Mask lo = k == n - 1 ? all : 1;  // the top element sits above everything
    for (Mask d = lo; d <= all; ++d) {
      if ((d & 1u) == 0) continue;
      if (k == n - 1 && d != all) continue;
      if (!downset_admissible(k, d)) continue;
      down.push_back(d | (Mask{1} << k));
      up.push_back(Mask{1} << k);
      for (Mask rest = d; rest;) {
        const Element x = std::countr_zero(rest);
        rest &= rest - 1;
        up[x] |= Mask{1} << k;
      }
      extend(k + 1);
      down.pop_back();
      up.pop_back();
      for (auto& u : up) u &= ~(Mask{1} << k);
    }
  }
};

}  // namespace

std::vector<Lattice> enumerate_lattices(int n, int cap) {
  if (n > cap)
    throw AlgebraError(ErrorCode::SizeLimit,
                       "lattice enumeration capped at " + std::to_string(cap) + " elements");
  if (n < 1) return {};
  if (n == 1) return {Lattice{1, {Mask{1}}}};
  LatticeSearch search{n, {Mask{1}}, {Mask{1}}, {}, {}};
  search.extend(1);
  std::sort(search.out.begin(), search.out.end(),
            [](const Lattice& a, const Lattice& b) { return a.down < b.down; });
  return search.out;
}

namespace {

struct Tables {
  int n;
  std::vector<Element> meet, join;
  Element m(Element a, Element b) const { return meet[a * n + b]; }
  Element j(Element a, Element b) const { return join[a * n + b]; }
};

Tables lattice_tables(const Lattice& lat) {
  std::vector<Mask> up(lat.size, 0);
  for (Element a = 0; a < lat.size; ++a)
    for (Element b = 0; b < lat.size; ++b)
      if (lat.leq(a, b)) up[a] |= Mask{1} << b;
  Tables t{lat.size, {}, {}};
  t.meet.assign(static_cast<size_t>(lat.size) * lat.size, 0);
  t.join.assign(static_cast<size_t>(lat.size) * lat.size, 0);
  for (Element a = 0; a < lat.size; ++a)
    for (Element b = 0; b < lat.size; ++b) {
      t.meet[a * lat.size + b] = greatest_of(lat.down[a] & lat.down[b], lat.down);
      const Mask uppers = up[a] & up[b];
      for (Element x = 0; x < lat.size; ++x)
        if (((uppers >> x) & 1u) && (uppers & ~up[x]) == 0) {
          t.join[a * lat.size + b] = x;
          break;
        }
    }
  return t;
}

void involutions(const Lattice& lat, std::vector<Element>& p, Element next,
                 std::vector<std::vector<Element>>& out) {
  const int n = lat.size;
  while (next < n && p[next] >= 0) ++next;
  if (next == n) {
    out.push_back(p);
    return;
  }
  for (Element y = 0; y < n; ++y) {
    if (p[y] >= 0) continue;
    // pair next <-> y (possibly y == next); antitonicity against fixed pairs
    bool ok = true;
    for (Element u = 0; u < n && ok; ++u) {
      if (p[u] < 0) continue;
      const Element pu = p[u];
      if (lat.leq(next, u) && !lat.leq(pu, y)) ok = false;
      if (lat.leq(u, next) && !lat.leq(y, pu)) ok = false;
      if (lat.leq(y, u) && !lat.leq(pu, next)) ok = false;
      if (lat.leq(u, y) && !lat.leq(next, pu)) ok = false;
    }
    if (!ok) continue;
    p[next] = y;
    p[y] = next;
    involutions(lat, p, next + 1, out);
    p[next] = -1;
    if (y != next) p[y] = -1;
  }
}

void tildes(const Lattice& lat, const Tables& t, const std::vector<Element>& prime,
            std::vector<Element>& assign, Element next, std::vector<std::vector<Element>>& out) {
  const int n = lat.size;
  if (next == n) {
    out.push_back(assign);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    if (t.m(next, v) != 0) continue;  // axiom (1)
    bool ok = true;
    for (Element y = 0; y < next && ok; ++y) {
      if (lat.leq(y, next) && !lat.leq(v, assign[y])) ok = false;  // antitone
      if (lat.leq(next, y) && !lat.leq(assign[y], v)) ok = false;
      if (assign[y] == next && v != prime[next]) ok = false;  // images satisfy a~ = a'
    }
    // v becomes an image, so axiom (4) pins its own value to v'.
    if (ok && v < next && assign[v] != prime[v]) ok = false;
    if (!ok) continue;
    assign[next] = v;
    tildes(lat, t, prime, assign, next + 1, out);
    assign[next] = -1;
  }
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_expansions(const Lattice& lat, ClassLabel target) {
  const int n = lat.size;
  const auto leq = lat.leq_matrix();
  const Tables tab = lattice_tables(lat);

  std::vector<std::vector<Element>> primes;
  std::vector<Element> p(n, -1);
  if (n >= 1) {
    p[0] = n - 1;
    p[n - 1] = 0;
    involutions(lat, p, 0, primes);
  }

  const bool tilde_is_prime = target == ClassLabel::OL || target == ClassLabel::OML;
  const bool free_tilde = static_cast<int>(target) >= static_cast<int>(ClassLabel::BZL);

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<FiniteAlgebra> out;
  auto admit = [&](FiniteAlgebra algebra) {
    if (!classify(algebra).is(target)) return;
    if (seen.insert(algebra_canonical_key(algebra)).second) out.push_back(std::move(algebra));
  };

  for (const auto& prime : primes) {
    if (free_tilde) {
      std::vector<std::vector<Element>> ts;
      std::vector<Element> assign(n, -1);
      tildes(lat, tab, prime, assign, 0, ts);
      for (const auto& tilde : ts) {
        try {
          admit(validate("enum", leq, prime, tilde));
        } catch (const AlgebraError&) {
        }
      }
    } else if (tilde_is_prime) {
      try {
        admit(validate("enum", leq, prime, prime));
      } catch (const AlgebraError&) {
      }
    } else {
      try {
        admit(validate("enum", leq, prime, std::nullopt));
      } catch (const AlgebraError&) {
      }
    }
  }
  return out;
}

std::vector<FiniteAlgebra> enumerate_algebras(int max_n, ClassLabel target, int cap) {
  std::vector<FiniteAlgebra> out;
  for (int n = 1; n <= max_n; ++n) {
    int counter = 0;
    for (const Lattice& lat : enumerate_lattices(n, cap))
      for (auto& a : enumerate_expansions(lat, target))
        out.push_back(
            a.renamed("enum" + std::to_string(n) + "." + std::to_string(counter++)));
  }
  return out;
}

}  // namespace pbzl
