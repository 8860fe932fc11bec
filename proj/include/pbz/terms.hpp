#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

// Term over the signature {meet, join, kleene', brouwer~, 0, 1} plus variables.
struct Term {
  enum class Kind { Var, Zero, One, Meet, Join, Kleene, Brouwer };
  Kind kind = Kind::Zero;
  int var = -1;
  std::shared_ptr<const Term> a, b;

  static Term v(int i);
  static Term zero();
  static Term one();
  static Term meet(Term x, Term y);
  static Term join(Term x, Term y);
  static Term kle(Term x);
  static Term bro(Term x);
  static Term diamond(Term x) { return bro(bro(std::move(x))); }
  static Term box(Term x) { return bro(kle(std::move(x))); }

  int max_var() const;  // largest variable index, -1 if none
  std::string to_string(const std::vector<std::string>& var_names = {}) const;
};

struct Identity {
  Term lhs, rhs;
  std::string name;
  // number of variables, by the order-of-first-appearance convention
  // (lhs read left to right, then rhs)
  int num_vars = 0;

  static Identity make(std::string name, Term lhs, Term rhs);
  std::string to_string() const;
};

int eval(const Term& t, const BZAlgebra& A, const std::vector<int>& assignment);

struct SweepResult {
  bool holds = true;
  std::vector<int> witness;  // least failing assignment when !holds
};

// Exhaustive sweep over all |A|^k assignments; on failure returns the
// lexicographically least witness under the universe's index order.
// Throws SizeLimit when the sweep exceeds the evaluation budget
// (default 1e8, overridable via PBZ_MAX_EVALS).
SweepResult satisfies(const BZAlgebra& A, const Identity& id);

// Sweep restricted to the product of the given domains, one per variable in
// order of first appearance. Throws DomainArity on a count mismatch.
SweepResult satisfies_restricted(const BZAlgebra& A, const Identity& id,
                                 const std::vector<std::vector<int>>& domains);

// Named identities: SDM, WSDM, S1, S1', S2, S3, J0, J1, J1', J2, and POM (the
// equational paraorthomodularity inequality, encoded via t <= u  <=>  t/\u ~ t).
const std::map<std::string, Identity>& identity_library();
const Identity& named_identity(const std::string& name);

// Infix term syntax: ^ meet, v join, postfix ' and ~, constants 0 1,
// variables x,y,z (optionally digit-suffixed); == identity, <= inequality.
Term parse_term(const std::string& text);
Identity parse_identity(const std::string& text);

long long eval_budget();  // PBZ_MAX_EVALS override hook

}  // namespace pbz
