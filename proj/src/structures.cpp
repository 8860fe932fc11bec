#include "pbz/structures.hpp"

#include <algorithm>

namespace pbz {

std::vector<int> trivial_brouwer(const FinLattice& L) {
  std::vector<int> b(L.n, L.bot);
  b[L.bot] = L.top;
  return b;
}

std::string involution_defect(const BZAlgebra& A) {
  const int n = A.n();
  if ((int)A.inv.size() != n) return "involution map has wrong arity";
  for (int a = 0; a < n; ++a) {
    if (A.inv[a] < 0 || A.inv[a] >= n) return "involution image out of range";
    if (A.inv[A.inv[a]] != a)
      return "a'' != a at " + A.name_of(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (A.leq(a, b) && !A.leq(A.inv[b], A.inv[a]))
        return "involution not antitone at (" + A.name_of(a) + "," + A.name_of(b) + ")";
  return "";
}

namespace {

std::string bz_defect(const BZAlgebra& A) {
  const int n = A.n();
  if ((int)A.brouwer.size() != n) return "Brouwer map has wrong arity";
  for (int a = 0; a < n; ++a)
    if (A.brouwer[a] < 0 || A.brouwer[a] >= n) return "Brouwer image out of range";
  for (int a = 0; a < n; ++a) {
    if (A.meet(a, A.bro(a)) != A.bot()) return "axiom (1) a/\\a~=0 fails at " + A.name_of(a);
    if (!A.leq(a, A.diamond(a))) return "axiom (2) a<=a~~ fails at " + A.name_of(a);
    if (A.kle(A.bro(a)) != A.diamond(a)) return "axiom (4) a~'=a~~ fails at " + A.name_of(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (A.leq(a, b) && !A.leq(A.bro(b), A.bro(a)))
        return "axiom (3) antitonicity fails at (" + A.name_of(a) + "," + A.name_of(b) + ")";
  return "";
}

}  // namespace

bool satisfies_star(const BZAlgebra& A) {
  for (int a = 0; a < A.n(); ++a)
    if (A.bro(A.meet(a, A.kle(a))) != A.join(A.bro(a), A.bro(A.kle(a)))) return false;
  return true;
}

StructureClass classify(const BZAlgebra& A) {
  std::string defect = involution_defect(A);
  if (!defect.empty()) throw Error(ErrorKind::NotInvolution, defect);

  StructureClass c;
  const int n = A.n();
  c.bi = true;

  c.pseudo_kleene = true;
  for (int a = 0; a < n && c.pseudo_kleene; ++a)
    for (int b = 0; b < n; ++b)
      if (!A.leq(A.meet(a, A.kle(a)), A.join(b, A.kle(b)))) {
        c.pseudo_kleene = false;
        break;
      }

  c.paraorthomodular = true;
  for (int a = 0; a < n && c.paraorthomodular; ++a)
    for (int b = 0; b < n; ++b)
      if (A.leq(a, b) && A.meet(A.kle(a), b) == A.bot() && a != b) {
        c.paraorthomodular = false;
        break;
      }

  c.ortholattice = true;
  for (int a = 0; a < n; ++a)
    if (A.meet(a, A.kle(a)) != A.bot()) {
      c.ortholattice = false;
      break;
    }

  c.orthomodular = c.ortholattice;
  if (c.orthomodular)
    for (int a = 0; a < n && c.orthomodular; ++a)
      for (int b = 0; b < n; ++b)
        if (A.leq(a, b) && A.join(A.meet(b, A.kle(a)), a) != b) {
          c.orthomodular = false;
          break;
        }

  if (!c.pseudo_kleene) {
    c.bz_failure = "not pseudo-Kleene";
  } else {
    c.bz_failure = bz_defect(A);
  }
  c.bz = c.bz_failure.empty();
  c.star_bz = c.bz && satisfies_star(A);
  c.pbz_star = c.star_bz && c.paraorthomodular;

  if (c.pbz_star) {
    Mask sharp = 0;
    for (int a = 0; a < n; ++a)
      if (A.meet(a, A.kle(a)) == A.bot()) sharp |= bit(a);
    c.antiortholattice = sharp == (bit(A.bot()) | bit(A.top()));
  }
  return c;
}

bool paraorthomodular_equational(const BZAlgebra& A) {
  for (int a = 0; a < A.n(); ++a)
    for (int b = 0; b < A.n(); ++b) {
      int da = A.diamond(a), db = A.diamond(b);
      int lhs = A.meet(A.join(A.bro(a), A.meet(da, db)), da);
      if (!A.leq(lhs, db)) return false;
    }
  return true;
}

ElementSets element_sets(const BZAlgebra& A) {
  ElementSets s;
  const int n = A.n();
  for (int a = 0; a < n; ++a) {
    if (A.meet(a, A.kle(a)) == A.bot()) s.sharp |= bit(a);
    if (A.bro(a) == A.bot()) s.dense |= bit(a);
  }
  s.t_set = s.dense | bit(A.bot());
  for_each_bit(s.sharp, [&](int a) {
    int ap = A.kle(a);
    for (int b = 0; b < n; ++b) {
      if (A.bro(A.meet(a, b)) != A.join(A.bro(a), A.bro(b))) return;
      if (A.bro(A.meet(ap, b)) != A.join(A.bro(ap), A.bro(b))) return;
      if (A.join(A.meet(a, b), A.meet(ap, b)) != b) return;
    }
    s.central |= bit(a);
  });
  return s;
}

std::pair<int, int> box_diamond(const BZAlgebra& A, int a) {
  return {A.box(a), A.diamond(a)};
}

BZAlgebra product(const BZAlgebra& A, const BZAlgebra& B) {
  BZAlgebra P;
  P.lat = direct_product(A.lat, B.lat);
  P.inv.resize(P.n());
  P.brouwer.resize(P.n());
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < B.n(); ++j) {
      P.inv[i * B.n() + j] = A.inv[i] * B.n() + B.inv[j];
      P.brouwer[i * B.n() + j] = A.brouwer[i] * B.n() + B.brouwer[j];
    }
  return P;
}

bool oml_hsum_aol_member(const BZAlgebra& A) {
  const int n = A.n();
  if (n == 1) return true;
  const int b0 = A.bot(), t1 = A.top();

  Mask sharp = 0;
  for (int a = 0; a < n; ++a)
    if (A.meet(a, A.kle(a)) == b0) sharp |= bit(a);

  // Interior elements x,y are forced into the same summand unless they glue
  // only at the bounds. Union the resulting components.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int x = 0; x < n; ++x) {
    if (x == b0 || x == t1 || comp[x] >= 0) continue;
    std::vector<int> stack{x};
    comp[x] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == b0 || v == t1 || comp[v] >= 0 || v == u) continue;
        if (A.meet(u, v) != b0 || A.join(u, v) != t1) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ncomp++;
  }

  Mask part_a = bit(b0) | bit(t1), part_b = bit(b0) | bit(t1);
  std::vector<bool> all_sharp(ncomp, true);
  for (int x = 0; x < n; ++x)
    if (x != b0 && x != t1 && !has(sharp, x)) all_sharp[comp[x]] = false;
  for (int x = 0; x < n; ++x) {
    if (x == b0 || x == t1) continue;
    if (all_sharp[comp[x]]) part_a |= bit(x);
    else part_b |= bit(x);
  }
  // A sharp element inside the dense-side summand rules the decomposition out.
  if ((part_b & sharp & ~(bit(b0) | bit(t1))) != 0) return false;

  auto closed = [&](Mask m) {
    bool ok = true;
    for_each_bit(m, [&](int x) {
      if (!has(m, A.kle(x)) || !has(m, A.bro(x))) ok = false;
      for_each_bit(m, [&](int y) {
        if (!has(m, A.meet(x, y)) || !has(m, A.join(x, y))) ok = false;
      });
    });
    return ok;
  };
  if (!closed(part_a) || !closed(part_b)) return false;

  auto restrict_alg = [&](Mask m) {
    std::vector<int> keep, pos(n, -1);
    for_each_bit(m, [&](int i) {
      pos[i] = (int)keep.size();
      keep.push_back(i);
    });
    BZAlgebra S;
    S.lat = sublattice(A.lat, m);
    S.inv.resize(keep.size());
    S.brouwer.resize(keep.size());
    for (int i = 0; i < (int)keep.size(); ++i) {
      S.inv[i] = pos[A.kle(keep[i])];
      S.brouwer[i] = pos[A.bro(keep[i])];
    }
    return S;
  };
  try {
    StructureClass ca = classify(restrict_alg(part_a));
    StructureClass cb = classify(restrict_alg(part_b));
    return ca.orthomodular && ca.pbz_star && cb.antiortholattice;
  } catch (const Error&) {
    return false;
  }
}

std::vector<bool> charg_conditions(const BZAlgebra& A) {
  const int n = A.n();
  ElementSets es = element_sets(A);
  Mask S = es.sharp, T = es.t_set;
  Mask Tp = 0;
  for_each_bit(T, [&](int x) { Tp |= bit(A.kle(x)); });
  Mask bounds = bit(A.bot()) | bit(A.top());
  Mask all = A.lat.universe();

  auto closed_under = [&](Mask m, auto f) {
    bool ok = true;
    for_each_bit(m, [&](int x) {
      if (!has(m, f(x))) ok = false;
    });
    return ok;
  };
  auto subuniverse = [&](Mask m) {
    if (!has(m, A.bot()) || !has(m, A.top())) return false;
    bool ok = closed_under(m, [&](int x) { return A.kle(x); }) &&
              closed_under(m, [&](int x) { return A.bro(x); });
    if (!ok) return false;
    for_each_bit(m, [&](int x) {
      for_each_bit(m, [&](int y) {
        if (!has(m, A.meet(x, y)) || !has(m, A.join(x, y))) ok = false;
      });
    });
    return ok;
  };

  std::vector<bool> c(9, false);
  // (1) structural horizontal-sum decomposition
  c[0] = oml_hsum_aol_member(A);
  // (2) T subuniverse and L = S [+] T as a horizontal sum of the restrictions
  {
    bool ok = subuniverse(T) && subuniverse(S) && (S | T) == all && (S & T) == bounds;
    if (ok && n > 1) {
      for_each_bit(S & ~bounds, [&](int x) {
        for_each_bit(T & ~bounds, [&](int y) {
          if (A.leq(x, y) || A.leq(y, x)) ok = false;
        });
      });
    }
    c[1] = ok;
  }
  // (3) L = S(L) u T(L)
  c[2] = (S | T) == all;
  // (4) T is a subuniverse
  c[3] = subuniverse(T);
  // (5) T closed under Kleene complement
  c[4] = closed_under(T, [&](int x) { return A.kle(x); });
  // (6) T' closed under Kleene complement
  c[5] = closed_under(Tp, [&](int x) { return A.kle(x); });
  // (7) T = T'
  c[6] = T == Tp;
  // (8) T' closed under Brouwer complement
  c[7] = closed_under(Tp, [&](int x) { return A.bro(x); });
  // (9) T u T' closed under Brouwer complement
  c[8] = closed_under(T | Tp, [&](int x) { return A.bro(x); });
  return c;
}

}  // namespace pbz
