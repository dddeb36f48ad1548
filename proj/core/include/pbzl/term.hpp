#ifndef PBZL_TERM_HPP
#define PBZL_TERM_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbzl/algebra.hpp"

namespace pbzl {

/// Abstract syntax over the signature (^, v, ', ~, 0, 1). Box and diamond
/// are building shortcuts that expand to primitives immediately, so
/// evaluation only ever sees the six primitive node kinds.
class Term {
 public:
  enum class Kind { Var, Zero, One, Meet, Join, Prime, Tilde };

  static Term var(int index);
  static Term zero();
  static Term one();
  static Term meet(Term lhs, Term rhs);
  static Term join(Term lhs, Term rhs);
  static Term prime(Term t);
  static Term tilde(Term t);
  static Term box(Term t) { return tilde(prime(std::move(t))); }      // x'~
  static Term diamond(Term t) { return tilde(tilde(std::move(t))); }  // x~~

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  /// Number of variables: one past the largest index occurring in the term.
  int var_count() const { return node_->var_count; }

  /// Whether the Brouwer complement occurs anywhere in the term.
  bool uses_tilde() const { return node_->uses_tilde; }

  /// Structural recursion over the algebra's tables. The assignment must
  /// cover every variable (UnboundVariable otherwise); MissingTilde when the
  /// term uses ~ on an algebra without it.
  Element eval(const FiniteAlgebra& a, std::span<const Element> assignment) const;

  std::string render() const;

 private:
  struct Node {
    Kind kind;
    int var = -1;
    std::shared_ptr<const Term> left, right;
    int var_count = 0;
    bool uses_tilde = false;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: term := var | '0' | '1' | '(' term '^' term ')' |
/// '(' term 'v' term ')' | term "'" | term '~', variables x,y,z,w.
/// Throws SyntaxError with the byte position of the offence.
Term parse_term(std::string_view text);

inline std::string render_term(const Term& t) { return t.render(); }

/// An identity lhs ~~ rhs; inequalities s <= t are stored normalized as
/// s ~~ s^t, with the original shape remembered for display.
struct NamedIdentity {
  std::string name;
  Term lhs;
  Term rhs;
  bool from_inequality = false;

  std::string render() const { return lhs.render() + " \xe2\x89\x88 " + rhs.render(); }
};

/// The fixed catalog: SDM, WSDM, DIST, J2, SK, AOL1, AOL2, AOL3, STAR,
/// DIAMOND_OM, TILDE_EQ_PRIME.
const std::vector<NamedIdentity>& identity_catalog();

/// Case-insensitive lookup; throws UnknownIdentity.
const NamedIdentity& find_identity(std::string_view name);

struct Witness {
  std::vector<Element> assignment;
  Element lhs_value = 0;
  Element rhs_value = 0;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;  // lexicographically least failing assignment
};

CheckResult check_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs);
CheckResult check_identity(const FiniteAlgebra& a, const NamedIdentity& id);

/// Exhaustive quasi-identity check: every assignment satisfying all premise
/// equations must satisfy the conclusion. The witness reports the conclusion
/// values at the least assignment where the premises hold but it fails.
CheckResult check_quasi_identity(const FiniteAlgebra& a,
                                 std::span<const std::pair<Term, Term>> premises,
                                 const std::pair<Term, Term>& conclusion);

}  // namespace pbzl

#endif
