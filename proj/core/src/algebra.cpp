#include "pbzl/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace pbzl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::InvolutionViolation: return "InvolutionViolation";
    case ErrorCode::BZAxiomViolation: return "BZAxiomViolation";
    case ErrorCode::MissingTilde: return "MissingTilde";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::NotALatticeIdeal: return "NotALatticeIdeal";
    case ErrorCode::NotAPIdeal: return "NotAPIdeal";
    case ErrorCode::PreconditionPKA: return "PreconditionPKA";
    case ErrorCode::PreconditionPBZStar: return "PreconditionPBZStar";
    case ErrorCode::PreconditionSDM: return "PreconditionSDM";
    case ErrorCode::PreconditionAOL2: return "PreconditionAOL2";
    case ErrorCode::PreconditionCommute: return "PreconditionCommute";
    case ErrorCode::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::IsoCheckFailed: return "IsoCheckFailed";
    case ErrorCode::AmbiguousCompletion: return "AmbiguousCompletion";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

const char* to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::BI: return "BI";
    case ClassLabel::PKA: return "PKA";
    case ClassLabel::OL: return "OL";
    case ClassLabel::OML: return "OML";
    case ClassLabel::PARA: return "PARA";
    case ClassLabel::BZL: return "BZL";
    case ClassLabel::BZSTAR: return "BZ*";
    case ClassLabel::PBZSTAR: return "PBZ*";
    case ClassLabel::AOL: return "AOL";
  }
  return "?";
}

std::vector<Element> mask_elements(Mask m) {
  std::vector<Element> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask elements_mask(const std::vector<Element>& elements) {
  Mask m = 0;
  for (Element x : elements) m |= Mask{1} << x;
  return m;
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw AlgebraError(code, msg); }

std::string pair_str(Element a, Element b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

FiniteAlgebra validate(const std::string& name, const std::vector<std::vector<bool>>& leq,
                       const std::vector<Element>& prime,
                       const std::optional<std::vector<Element>>& tilde) {
  const int n = static_cast<int>(leq.size());
  if (n < 1) fail(ErrorCode::BadInput, "empty universe");
  if (n > kMaxUniverse) fail(ErrorCode::SizeLimit, "universe exceeds " + std::to_string(kMaxUniverse) + " elements");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::BadInput, "leq is not an n x n matrix");
  if (static_cast<int>(prime.size()) != n) fail(ErrorCode::BadInput, "prime table has wrong length");
  if (tilde && static_cast<int>(tilde->size()) != n) fail(ErrorCode::BadInput, "tilde table has wrong length");
  for (Element a = 0; a < n; ++a) {
    if (prime[a] < 0 || prime[a] >= n) fail(ErrorCode::BadInput, "prime not closed over the universe");
    if (tilde && ((*tilde)[a] < 0 || (*tilde)[a] >= n)) fail(ErrorCode::BadInput, "tilde not closed over the universe");
  }

  auto le = [&](Element a, Element b) { return static_cast<bool>(leq[a][b]); };

  // Partial order axioms, first witness in lexicographic order.
  for (Element a = 0; a < n; ++a)
    if (!le(a, a)) fail(ErrorCode::NotAPartialOrder, "missing reflexive pair at " + std::to_string(a));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        fail(ErrorCode::NotAPartialOrder, "antisymmetry fails at " + pair_str(a, b));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          fail(ErrorCode::NotAPartialOrder, "transitivity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
  for (Element a = 0; a < n; ++a) {
    if (!le(0, a)) fail(ErrorCode::NotALattice, "element 0 is not the least element (0 <= " + std::to_string(a) + " fails)");
    if (!le(a, n - 1))
      fail(ErrorCode::NotALattice, "element " + std::to_string(n - 1) + " is not the greatest element (" +
                                       std::to_string(a) + " <= top fails)");
  }

  FiniteAlgebra alg;
  alg.name_ = name;
  alg.size_ = n;
  alg.down_.assign(n, 0);
  alg.up_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le(a, b)) {
        alg.down_[b] |= Mask{1} << a;
        alg.up_[a] |= Mask{1} << b;
      }

  // Meets and joins: the set of common lower (upper) bounds must have a
  // greatest (least) element for every pair.
  alg.meet_.assign(static_cast<size_t>(n) * n, 0);
  alg.join_.assign(static_cast<size_t>(n) * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Mask lower = alg.down_[a] & alg.down_[b];
      Element m = -1;
      for (Element x = 0; x < n; ++x)
        if ((lower >> x) & 1u) {
          if ((lower & ~alg.down_[x]) == 0) {
            m = x;
            break;
          }
        }
      if (m < 0) fail(ErrorCode::NotALattice, "no unique meet for " + pair_str(a, b));
      alg.meet_[static_cast<size_t>(a) * n + b] = m;

      const Mask upper = alg.up_[a] & alg.up_[b];
      Element j = -1;
      for (Element x = 0; x < n; ++x)
        if ((upper >> x) & 1u) {
          if ((upper & ~alg.up_[x]) == 0) {
            j = x;
            break;
          }
        }
      if (j < 0) fail(ErrorCode::NotALattice, "no unique join for " + pair_str(a, b));
      alg.join_[static_cast<size_t>(a) * n + b] = j;
    }

  // Involution layer: ' is an order-reversing involution.
  for (Element a = 0; a < n; ++a)
    if (prime[prime[a]] != a)
      fail(ErrorCode::InvolutionViolation, "a'' != a at element " + std::to_string(a));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le(a, b) && !le(prime[b], prime[a]))
        fail(ErrorCode::InvolutionViolation, "' is not order-reversing at " + pair_str(a, b));
  alg.prime_ = prime;

  alg.pseudo_kleene_ = true;
  for (Element a = 0; a < n && alg.pseudo_kleene_; ++a)
    for (Element b = 0; b < n; ++b)
      if (!le(alg.meet(a, prime[a]), alg.join(b, prime[b]))) {
        alg.pseudo_kleene_ = false;
        break;
      }

  // Brouwer layer, axioms (1) a^a~=0, (2) a <= a~~, (3) antitone,
  // (4) a~' = a~~. Element-major order so the least offending element is
  // reported whichever axiom it breaks.
  if (tilde) {
    const auto& t = *tilde;
    for (Element a = 0; a < n; ++a) {
      if (alg.meet(a, t[a]) != 0)
        fail(ErrorCode::BZAxiomViolation, "axiom (1): a ^ a~ != 0 at element " + std::to_string(a));
      if (!le(a, t[t[a]]))
        fail(ErrorCode::BZAxiomViolation, "axiom (2): a <= a~~ fails at element " + std::to_string(a));
      if (prime[t[a]] != t[t[a]])
        fail(ErrorCode::BZAxiomViolation, "axiom (4): a~' != a~~ at element " + std::to_string(a));
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (le(a, b) && !le(t[b], t[a]))
          fail(ErrorCode::BZAxiomViolation, "axiom (3): ~ is not antitone at " + pair_str(a, b));
    alg.tilde_ = t;
  }

  return alg;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string new_name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(new_name);
  return copy;
}

SharpSets sharp_sets(const FiniteAlgebra& a) {
  if (!a.has_tilde()) throw AlgebraError(ErrorCode::MissingTilde, "sharp sets need a Brouwer complement");
  SharpSets s;
  Mask image = 0;
  for (Element x = 0; x < a.size(); ++x) {
    image |= Mask{1} << a.tilde(x);
    if (a.meet(x, a.prime(x)) == 0) s.kleene.push_back(x);
    if (a.diamond(x) == x) s.diamond.push_back(x);
    if (a.join(x, a.tilde(x)) == a.top()) s.brouwer.push_back(x);
  }
  Mask diamond_mask = 0;
  for (Element x : s.diamond) diamond_mask |= Mask{1} << x;
  if (diamond_mask != image)
    throw AlgebraError(ErrorCode::CharacterizationMismatch,
                       "diamond-sharp set differs from the image of ~ on " + a.name());
  return s;
}

FiniteAlgebra adjoin_trivial_brouwer(const FiniteAlgebra& a) {
  if (!a.pseudo_kleene_layer())
    throw AlgebraError(ErrorCode::PreconditionPKA, a.name() + " is not a pseudo-Kleene algebra");
  const int n = a.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) leq[x][y] = a.leq(x, y);
  std::vector<Element> tilde(n, 0);
  tilde[0] = a.top();
  return validate(a.name(), leq, a.prime_table(), tilde);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int na = a.size(), nb = b.size();
  if (static_cast<long long>(na) * nb > kMaxUniverse)
    throw AlgebraError(ErrorCode::SizeLimit, "product exceeds " + std::to_string(kMaxUniverse) + " elements");
  const int n = na * nb;
  auto idx = [nb](Element x, Element y) { return x * nb + y; };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<Element> prime(n);
  const bool with_tilde = a.has_tilde() && b.has_tilde();
  std::vector<Element> tilde(with_tilde ? n : 0);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) {
      const Element e = idx(x, y);
      prime[e] = idx(a.prime(x), b.prime(y));
      if (with_tilde) tilde[e] = idx(a.tilde(x), b.tilde(y));
      for (Element u = 0; u < na; ++u)
        for (Element v = 0; v < nb; ++v) leq[e][idx(u, v)] = a.leq(x, u) && b.leq(y, v);
    }
  return validate(a.name() + " x " + b.name(), leq,
                  prime, with_tilde ? std::optional(tilde) : std::nullopt);
}

bool is_pbzstar_algebra(const FiniteAlgebra& a) {
  if (!a.has_tilde() || !a.pseudo_kleene_layer()) return false;
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(a.tilde(a.meet(x, a.prime(x))), a.join(a.tilde(x), a.box(x)))) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && a.meet(a.prime(x), y) == 0 && x != y) return false;
  return true;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<Element>& elements,
                         const std::string& name) {
  std::vector<Element> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int m = static_cast<int>(sorted.size());
  std::vector<Element> local(a.size(), -1);
  for (int i = 0; i < m; ++i) local[sorted[i]] = i;
  if (m == 0 || sorted.front() != a.bottom() || sorted.back() != a.top())
    throw AlgebraError(ErrorCode::BadInput, "subuniverse must contain the bounds");
  auto map = [&](Element x) {
    if (local[x] < 0) throw AlgebraError(ErrorCode::BadInput, name + ": subuniverse not closed under the operations");
    return local[x];
  };
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<Element> prime(m);
  std::vector<Element> tilde(a.has_tilde() ? m : 0);
  for (int i = 0; i < m; ++i) {
    prime[i] = map(a.prime(sorted[i]));
    if (a.has_tilde()) tilde[i] = map(a.tilde(sorted[i]));
    for (int j = 0; j < m; ++j) {
      leq[i][j] = a.leq(sorted[i], sorted[j]);
      map(a.meet(sorted[i], sorted[j]));
      map(a.join(sorted[i], sorted[j]));
    }
  }
  return validate(name, leq, prime, a.has_tilde() ? std::optional(tilde) : std::nullopt);
}

}  // namespace pbzl
