#include "pbzl/term.hpp"

#include <algorithm>
#include <cctype>

namespace pbzl {

namespace {

std::shared_ptr<const Term> box_up(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

Term Term::var(int index) {
  Node n;
  n.kind = Kind::Var;
  n.var = index;
  n.var_count = index + 1;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::zero() {
  Node n;
  n.kind = Kind::Zero;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::one() {
  Node n;
  n.kind = Kind::One;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::meet(Term lhs, Term rhs) {
  Node n;
  n.kind = Kind::Meet;
  n.var_count = std::max(lhs.var_count(), rhs.var_count());
  n.uses_tilde = lhs.uses_tilde() || rhs.uses_tilde();
  n.left = box_up(std::move(lhs));
  n.right = box_up(std::move(rhs));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::join(Term lhs, Term rhs) {
  Node n;
  n.kind = Kind::Join;
  n.var_count = std::max(lhs.var_count(), rhs.var_count());
  n.uses_tilde = lhs.uses_tilde() || rhs.uses_tilde();
  n.left = box_up(std::move(lhs));
  n.right = box_up(std::move(rhs));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::prime(Term t) {
  Node n;
  n.kind = Kind::Prime;
  n.var_count = t.var_count();
  n.uses_tilde = t.uses_tilde();
  n.left = box_up(std::move(t));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::tilde(Term t) {
  Node n;
  n.kind = Kind::Tilde;
  n.var_count = t.var_count();
  n.uses_tilde = true;
  n.left = box_up(std::move(t));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Element Term::eval(const FiniteAlgebra& a, std::span<const Element> assignment) const {
  switch (kind()) {
    case Kind::Var:
      if (var_index() >= static_cast<int>(assignment.size()))
        throw AlgebraError(ErrorCode::UnboundVariable,
                           "variable " + std::to_string(var_index()) + " not covered by the assignment");
      return assignment[var_index()];
    case Kind::Zero: return a.bottom();
    case Kind::One: return a.top();
    case Kind::Meet: return a.meet(left().eval(a, assignment), right().eval(a, assignment));
    case Kind::Join: return a.join(left().eval(a, assignment), right().eval(a, assignment));
    case Kind::Prime: return a.prime(left().eval(a, assignment));
    case Kind::Tilde:
      if (!a.has_tilde())
        throw AlgebraError(ErrorCode::MissingTilde, a.name() + " has no Brouwer complement");
      return a.tilde(left().eval(a, assignment));
  }
  throw AlgebraError(ErrorCode::BadInput, "corrupt term");
}

std::string Term::render() const {
  switch (kind()) {
    case Kind::Var: {
      static const char* names[] = {"x", "y", "z", "w"};
      if (var_index() < 4) return names[var_index()];
      return "x" + std::to_string(var_index());
    }
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Meet: return "(" + left().render() + " ^ " + right().render() + ")";
    case Kind::Join: return "(" + left().render() + " v " + right().render() + ")";
    case Kind::Prime: return left().render() + "'";
    case Kind::Tilde: return left().render() + "~";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    throw AlgebraError(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Term term() {
    Term t = primary();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        t = Term::prime(std::move(t));
      } else if (pos_ < text_.size() && text_[pos_] == '~') {
        ++pos_;
        t = Term::tilde(std::move(t));
      } else {
        break;
      }
    }
    return t;
  }

  Term primary() {
    switch (peek()) {
      case 'x': ++pos_; return Term::var(0);
      case 'y': ++pos_; return Term::var(1);
      case 'z': ++pos_; return Term::var(2);
      case 'w': ++pos_; return Term::var(3);
      case '0': ++pos_; return Term::zero();
      case '1': ++pos_; return Term::one();
      case '(': {
        ++pos_;
        Term lhs = term();
        char op = peek();
        if (op != '^' && op != 'v') error("expected '^' or 'v'");
        ++pos_;
        Term rhs = term();
        if (peek() != ')') error("expected ')'");
        ++pos_;
        return op == '^' ? Term::meet(std::move(lhs), std::move(rhs))
                         : Term::join(std::move(lhs), std::move(rhs));
      }
      case '\0': error("unexpected end of input");
      default: error(std::string("unexpected character '") + text_[pos_] + "'");
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

NamedIdentity equation(std::string name, Term lhs, Term rhs) {
  return NamedIdentity{std::move(name), std::move(lhs), std::move(rhs), false};
}

// s <= t normalized to s = s ^ t
NamedIdentity inequality(std::string name, Term lhs, Term rhs) {
  Term norm = Term::meet(lhs, std::move(rhs));
  return NamedIdentity{std::move(name), std::move(lhs), std::move(norm), true};
}

std::vector<NamedIdentity> build_catalog() {
  const Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
  auto T = [](const Term& t) { return Term::tilde(t); };
  auto P = [](const Term& t) { return Term::prime(t); };
  auto D = [](const Term& t) { return Term::diamond(t); };
  auto B = [](const Term& t) { return Term::box(t); };
  auto M = [](const Term& a, const Term& b) { return Term::meet(a, b); };
  auto J = [](const Term& a, const Term& b) { return Term::join(a, b); };

  std::vector<NamedIdentity> cat;
  // (x ^ y)~ = x~ v y~
  cat.push_back(equation("SDM", T(M(x, y)), J(T(x), T(y))));
  // (x ^ y~)~ = x~ v <>y
  cat.push_back(equation("WSDM", T(M(x, T(y))), J(T(x), D(y))));
  // x ^ (y v z) = (x ^ y) v (x ^ z)
  cat.push_back(equation("DIST", M(x, J(y, z)), J(M(x, y), M(x, z))));
  // x = (x ^ (y ^ y')~) v (x ^ <>(y ^ y'))
  cat.push_back(equation("J2", x, J(M(x, T(M(y, P(y)))), M(x, D(M(y, P(y)))))));
  // x ^ <>y <= []x v y
  cat.push_back(inequality("SK", M(x, D(y)), J(B(x), y)));
  // (x~ v y~) ^ (<>x v z~) = ((x~ v y) ^ (<>x v z))~
  cat.push_back(equation("AOL1", M(J(T(x), T(y)), J(D(x), T(z))), T(M(J(T(x), y), J(D(x), z)))));
  // x = (x ^ y~) v (x ^ <>y)
  cat.push_back(equation("AOL2", x, J(M(x, T(y)), M(x, D(y)))));
  // x = (x v y~) ^ (x v <>y)
  cat.push_back(equation("AOL3", x, M(J(x, T(y)), J(x, D(y)))));
  // (x ^ x')~ <= x~ v []x
  cat.push_back(inequality("STAR", T(M(x, P(x))), J(T(x), B(x))));
  // (x~ v (<>x ^ <>y)) ^ <>x <= <>y
  cat.push_back(inequality("DIAMOND_OM", M(J(T(x), M(D(x), D(y))), D(x)), D(y)));
  // x~ = x'
  cat.push_back(equation("TILDE_EQ_PRIME", T(x), P(x)));
  return cat;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

const std::vector<NamedIdentity>& identity_catalog() {
  static const std::vector<NamedIdentity> catalog = build_catalog();
  return catalog;
}

const NamedIdentity& find_identity(std::string_view name) {
  for (const auto& id : identity_catalog())
    if (iequals(id.name, name)) return id;
  throw AlgebraError(ErrorCode::UnknownIdentity, std::string(name));
}

namespace {

/// Runs fn on every assignment in lexicographic order (first variable most
/// significant) until it returns false.
template <typename Fn>
void for_each_assignment(int vars, int size, Fn&& fn) {
  std::vector<Element> sigma(std::max(vars, 0), 0);
  if (vars <= 0) {
    fn(sigma);
    return;
  }
  for (;;) {
    if (!fn(sigma)) return;
    int i = vars - 1;
    while (i >= 0 && sigma[i] == size - 1) sigma[i--] = 0;
    if (i < 0) return;
    ++sigma[i];
  }
}

}  // namespace

CheckResult check_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs) {
  const int vars = std::max(lhs.var_count(), rhs.var_count());
  CheckResult result;
  for_each_assignment(vars, a.size(), [&](const std::vector<Element>& sigma) {
    const Element l = lhs.eval(a, sigma);
    const Element r = rhs.eval(a, sigma);
    if (l != r) {
      result.holds = false;
      result.witness = Witness{sigma, l, r};
      return false;
    }
    return true;
  });
  return result;
}

CheckResult check_identity(const FiniteAlgebra& a, const NamedIdentity& id) {
  return check_identity(a, id.lhs, id.rhs);
}

CheckResult check_quasi_identity(const FiniteAlgebra& a,
                                 std::span<const std::pair<Term, Term>> premises,
                                 const std::pair<Term, Term>& conclusion) {
  int vars = std::max(conclusion.first.var_count(), conclusion.second.var_count());
  for (const auto& [l, r] : premises) vars = std::max({vars, l.var_count(), r.var_count()});
  CheckResult result;
  for_each_assignment(vars, a.size(), [&](const std::vector<Element>& sigma) {
    for (const auto& [l, r] : premises)
      if (l.eval(a, sigma) != r.eval(a, sigma)) return true;
    const Element l = conclusion.first.eval(a, sigma);
    const Element r = conclusion.second.eval(a, sigma);
    if (l != r) {
      result.holds = false;
      result.witness = Witness{sigma, l, r};
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace pbzl
