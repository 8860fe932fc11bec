#include "pbz/terms.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace pbz {

namespace {
std::shared_ptr<const Term> box_up(Term t) { return std::make_shared<const Term>(std::move(t)); }
}

Term Term::v(int i) {
  Term t;
  t.kind = Kind::Var;
  t.var = i;
  return t;
}
Term Term::zero() {
  Term t;
  t.kind = Kind::Zero;
  return t;
}
Term Term::one() {
  Term t;
  t.kind = Kind::One;
  return t;
}
Term Term::meet(Term x, Term y) {
  Term t;
  t.kind = Kind::Meet;
  t.a = box_up(std::move(x));
  t.b = box_up(std::move(y));
  return t;
}
Term Term::join(Term x, Term y) {
  Term t;
  t.kind = Kind::Join;
  t.a = box_up(std::move(x));
  t.b = box_up(std::move(y));
  return t;
}
Term Term::kle(Term x) {
  Term t;
  t.kind = Kind::Kleene;
  t.a = box_up(std::move(x));
  return t;
}
Term Term::bro(Term x) {
  Term t;
  t.kind = Kind::Brouwer;
  t.a = box_up(std::move(x));
  return t;
}

int Term::max_var() const {
  switch (kind) {
    case Kind::Var: return var;
    case Kind::Zero:
    case Kind::One: return -1;
    case Kind::Kleene:
    case Kind::Brouwer: return a->max_var();
    case Kind::Meet:
    case Kind::Join: return std::max(a->max_var(), b->max_var());
  }
  return -1;
}

std::string Term::to_string(const std::vector<std::string>& vn) const {
  auto name = [&](int i) {
    if (i < (int)vn.size()) return vn[i];
    static const char* base[] = {"x", "y", "z"};
    if (i < 3) return std::string(base[i]);
    return std::string(base[i % 3]) + std::to_string(i / 3);
  };
  switch (kind) {
    case Kind::Var: return name(var);
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Meet: return "(" + a->to_string(vn) + " ^ " + b->to_string(vn) + ")";
    case Kind::Join: return "(" + a->to_string(vn) + " v " + b->to_string(vn) + ")";
    case Kind::Kleene: return a->to_string(vn) + "'";
    case Kind::Brouwer: return a->to_string(vn) + "~";
  }
  return "?";
}

namespace {

void first_appearance(const Term& t, std::vector<int>& order, std::vector<bool>& seen) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.var >= (int)seen.size()) seen.resize(t.var + 1, false);
      if (!seen[t.var]) {
        seen[t.var] = true;
        order.push_back(t.var);
      }
      return;
    case Term::Kind::Zero:
    case Term::Kind::One: return;
    case Term::Kind::Kleene:
    case Term::Kind::Brouwer: first_appearance(*t.a, order, seen); return;
    case Term::Kind::Meet:
    case Term::Kind::Join:
      first_appearance(*t.a, order, seen);
      first_appearance(*t.b, order, seen);
      return;
  }
}

Term rename_vars(const Term& t, const std::vector<int>& remap) {
  switch (t.kind) {
    case Term::Kind::Var: return Term::v(remap[t.var]);
    case Term::Kind::Zero: return Term::zero();
    case Term::Kind::One: return Term::one();
    case Term::Kind::Kleene: return Term::kle(rename_vars(*t.a, remap));
    case Term::Kind::Brouwer: return Term::bro(rename_vars(*t.a, remap));
    case Term::Kind::Meet:
      return Term::meet(rename_vars(*t.a, remap), rename_vars(*t.b, remap));
    case Term::Kind::Join:
      return Term::join(rename_vars(*t.a, remap), rename_vars(*t.b, remap));
  }
  return Term::zero();
}

}  // namespace

Identity Identity::make(std::string name, Term lhs, Term rhs) {
  // renumber variables by order of first appearance, lhs then rhs
  std::vector<int> order;
  std::vector<bool> seen;
  first_appearance(lhs, order, seen);
  first_appearance(rhs, order, seen);
  std::vector<int> remap(seen.size(), -1);
  for (int i = 0; i < (int)order.size(); ++i) remap[order[i]] = i;
  Identity id;
  id.name = std::move(name);
  id.lhs = rename_vars(lhs, remap);
  id.rhs = rename_vars(rhs, remap);
  id.num_vars = (int)order.size();
  return id;
}

std::string Identity::to_string() const {
  return lhs.to_string() + " == " + rhs.to_string();
}

int eval(const Term& t, const BZAlgebra& A, const std::vector<int>& asg) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.var >= (int)asg.size())
        throw Error(ErrorKind::UnboundVariable, "unbound variable #" + std::to_string(t.var));
      return asg[t.var];
    case Term::Kind::Zero: return A.bot();
    case Term::Kind::One: return A.top();
    case Term::Kind::Meet: return A.meet(eval(*t.a, A, asg), eval(*t.b, A, asg));
    case Term::Kind::Join: return A.join(eval(*t.a, A, asg), eval(*t.b, A, asg));
    case Term::Kind::Kleene: return A.kle(eval(*t.a, A, asg));
    case Term::Kind::Brouwer: return A.bro(eval(*t.a, A, asg));
  }
  throw Error(ErrorKind::InvalidArgument, "malformed term");
}

long long eval_budget() {
  if (const char* s = std::getenv("PBZ_MAX_EVALS")) {
    long long v = std::atoll(s);
    if (v > 0) return v;
  }
  return 100000000LL;  // 1e8
}

SweepResult satisfies_restricted(const BZAlgebra& A, const Identity& id,
                                 const std::vector<std::vector<int>>& domains) {
  if ((int)domains.size() != id.num_vars)
    throw Error(ErrorKind::DomainArity, "expected " + std::to_string(id.num_vars) +
                                            " domains, got " + std::to_string(domains.size()));
  long long total = 1;
  for (const auto& d : domains) {
    total *= (long long)d.size();
    if (total > eval_budget())
      throw Error(ErrorKind::SizeLimit, "assignment sweep exceeds the evaluation budget");
    if (d.empty()) return {};  // vacuous
  }
  const int k = id.num_vars;
  std::vector<int> idx(k, 0), asg(k);
  while (true) {
    for (int i = 0; i < k; ++i) asg[i] = domains[i][idx[i]];
    if (eval(id.lhs, A, asg) != eval(id.rhs, A, asg)) {
      SweepResult r;
      r.holds = false;
      r.witness = asg;
      return r;
    }
    // odometer, leftmost variable most significant: yields the
    // lexicographically least witness
    int i = k - 1;
    while (i >= 0 && ++idx[i] == (int)domains[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return {};
}

SweepResult satisfies(const BZAlgebra& A, const Identity& id) {
  std::vector<int> full(A.n());
  for (int i = 0; i < A.n(); ++i) full[i] = i;
  return satisfies_restricted(A, id, std::vector<std::vector<int>>(id.num_vars, full));
}

namespace {

std::map<std::string, Identity> build_library() {
  using T = Term;
  auto x = [] { return T::v(0); };
  auto y = [] { return T::v(1); };

  std::map<std::string, Identity> lib;
  auto put = [&](const std::string& n, Term l, Term r) {
    lib.emplace(n, Identity::make(n, std::move(l), std::move(r)));
  };

  // SDM: (x^y)~ == x~ v y~
  put("SDM", T::bro(T::meet(x(), y())), T::join(T::bro(x()), T::bro(y())));
  // WSDM: (x^y~)~ == x~ v <>y
  put("WSDM", T::bro(T::meet(x(), T::bro(y()))), T::join(T::bro(x()), T::diamond(y())));
  // S1: (x^(x^y)~)~ == x~ v <>(x^y)
  put("S1", T::bro(T::meet(x(), T::bro(T::meet(x(), y())))),
      T::join(T::bro(x()), T::diamond(T::meet(x(), y()))));
  // S1': ((xvy)^y~)~ == (xvy)~ v <>y
  put("S1'", T::bro(T::meet(T::join(x(), y()), T::bro(y()))),
      T::join(T::bro(T::join(x(), y())), T::diamond(y())));
  // S2: (x^(y^y')~)~ == x~ v <>(y^y')
  put("S2", T::bro(T::meet(x(), T::bro(T::meet(y(), T::kle(y()))))),
      T::join(T::bro(x()), T::diamond(T::meet(y(), T::kle(y())))));
  // S3: (x^<>(y^y'))~ == x~ v (y^y')~
  put("S3", T::bro(T::meet(x(), T::diamond(T::meet(y(), T::kle(y()))))),
      T::join(T::bro(x()), T::bro(T::meet(y(), T::kle(y())))));
  // J0: x == (x^y~) v (x^<>y)
  put("J0", x(), T::join(T::meet(x(), T::bro(y())), T::meet(x(), T::diamond(y()))));
  // J1: x == (x^(x^y)~) v (x^<>(x^y))
  put("J1", x(), T::join(T::meet(x(), T::bro(T::meet(x(), y()))),
                         T::meet(x(), T::diamond(T::meet(x(), y())))));
  // J1': xvy == ((xvy)^y~) v ((xvy)^<>y)
  put("J1'", T::join(x(), y()),
      T::join(T::meet(T::join(x(), y()), T::bro(y())),
              T::meet(T::join(x(), y()), T::diamond(y()))));
  // J2: x == (x^(y^y')~) v (x^<>(y^y'))
  put("J2", x(), T::join(T::meet(x(), T::bro(T::meet(y(), T::kle(y())))),
                         T::meet(x(), T::diamond(T::meet(y(), T::kle(y()))))));
  // POM: (x~ v (<>x ^ <>y)) ^ <>x <= <>y
  {
    Term lhs = T::meet(T::join(T::bro(x()), T::meet(T::diamond(x()), T::diamond(y()))),
                       T::diamond(x()));
    Term rhs = T::diamond(y());
    put("POM", T::meet(lhs, rhs), lhs);  // t <= u encoded as t^u == t
  }
  return lib;
}

}  // namespace

const std::map<std::string, Identity>& identity_library() {
  static const std::map<std::string, Identity> lib = build_library();
  return lib;
}

const Identity& named_identity(const std::string& name) {
  const auto& lib = identity_library();
  auto it = lib.find(name);
  if (it == lib.end()) throw Error(ErrorKind::Parse, "unknown identity name: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (documented in the README):
//   identity := term ("==" | "<=") term
//   term     := factor ("v" factor)*
//   factor   := atom ("^" atom)*
//   atom     := primary postfix*       postfix := "'" | "~"
//   primary  := "0" | "1" | var | "(" term ")"
//   var      := [xyz][0-9]*
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  std::string s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::Parse, "term syntax error at column " + std::to_string(i + 1) + ": " + what);
  }
};

Term parse_expr(Lexer& lx);

Term parse_primary(Lexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    ++lx.i;
    Term t = parse_expr(lx);
    if (lx.peek() != ')') lx.fail("expected ')'");
    ++lx.i;
    return t;
  }
  if (c == '0') {
    ++lx.i;
    return Term::zero();
  }
  if (c == '1') {
    ++lx.i;
    return Term::one();
  }
  if (c == 'x' || c == 'y' || c == 'z') {
    int base = c == 'x' ? 0 : c == 'y' ? 1 : 2;
    ++lx.i;
    std::string digits;
    while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) digits += lx.s[lx.i++];
    int idx = digits.empty() ? base : base + 3 * std::atoi(digits.c_str());
    return Term::v(idx);
  }
  lx.fail("expected a variable, constant or '('");
}

Term parse_atom(Lexer& lx) {
  Term t = parse_primary(lx);
  while (true) {
    char c = lx.peek();
    if (c == '\'') {
      ++lx.i;
      t = Term::kle(std::move(t));
    } else if (c == '~') {
      ++lx.i;
      t = Term::bro(std::move(t));
    } else {
      break;
    }
  }
  return t;
}

Term parse_factor(Lexer& lx) {
  Term t = parse_atom(lx);
  while (lx.peek() == '^') {
    ++lx.i;
    t = Term::meet(std::move(t), parse_atom(lx));
  }
  return t;
}

Term parse_expr(Lexer& lx) {
  Term t = parse_factor(lx);
  while (lx.peek() == 'v') {
    ++lx.i;
    t = Term::join(std::move(t), parse_factor(lx));
  }
  return t;
}

}  // namespace

Term parse_term(const std::string& text) {
  Lexer lx{text};
  Term t = parse_expr(lx);
  if (!lx.eof()) lx.fail("trailing input");
  return t;
}

Identity parse_identity(const std::string& text) {
  Lexer lx{text};
  Term l = parse_expr(lx);
  char c = lx.peek();
  if (c == '=' && lx.i + 1 < lx.s.size() && lx.s[lx.i + 1] == '=') {
    lx.i += 2;
    Term r = parse_expr(lx);
    if (!lx.eof()) lx.fail("trailing input");
    return Identity::make(text, std::move(l), std::move(r));
  }
  if (c == '<' && lx.i + 1 < lx.s.size() && lx.s[lx.i + 1] == '=') {
    lx.i += 2;
    Term r = parse_expr(lx);
    if (!lx.eof()) lx.fail("trailing input");
    // t <= u encoded as t^u == t
    Term l2 = l;
    return Identity::make(text, Term::meet(std::move(l2), std::move(r)), std::move(l));
  }
  lx.fail("expected '==' or '<='");
}

}  // namespace pbz
