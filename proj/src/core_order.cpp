#include "pbz/core_order.hpp"

#include <algorithm>

namespace pbz {

namespace {

// Unique maximal element of `m` under dn-containment, or -1.
int max_of_mask(const std::vector<Mask>& dn, Mask m) {
  int best = -1;
  for_each_bit(m, [&](int i) {
    if ((m & ~dn[i]) == 0) best = i;  // every element of m lies below i
  });
  return best;
}

}  // namespace

FinLattice lattice_from_covers(const CoverList& c) {
  if (c.n < 1) throw Error(ErrorKind::InvalidArgument, "universe must be non-empty");
  if (c.n > kMaxUniverse)
    throw Error(ErrorKind::SizeLimit, "universe exceeds " + std::to_string(kMaxUniverse) + " elements");
  const int n = c.n;

  std::vector<Mask> upcov(n, 0);
  for (auto [a, b] : c.covers) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw Error(ErrorKind::InvalidArgument, "cover pair out of range");
    upcov[a] |= bit(b);
  }

  // Reflexive-transitive closure by fixpoint (covers need not be toposorted).
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = bit(i) | upcov[i];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask m = up[i];
      for_each_bit(up[i], [&](int j) { m |= up[j]; });
      if (m != up[i]) { up[i] = m; changed = true; }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && has(up[i], j) && has(up[j], i))
        throw Error(ErrorKind::InvalidArgument, "cover digraph has a cycle through " +
                                                    std::to_string(i) + " and " + std::to_string(j));

  std::vector<Mask> dn(n, 0);
  for (int i = 0; i < n; ++i)
    for_each_bit(up[i], [&](int j) { dn[j] |= bit(i); });

  Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
  int bot = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    if (up[i] == all) bot = bot == -1 ? i : -2;
    if (dn[i] == all) top = top == -1 ? i : -2;
  }
  if (bot < 0 || top < 0) throw Error(ErrorKind::NoBounds, "order lacks a unique minimum or maximum");
  if (c.bot >= 0 && c.bot != bot) throw Error(ErrorKind::NoBounds, "declared bottom is not the minimum");
  if (c.top >= 0 && c.top != top) throw Error(ErrorKind::NoBounds, "declared top is not the maximum");

  FinLattice L;
  L.n = n;
  L.bot = bot;
  L.top = top;
  L.dn = dn;
  L.up = up;
  L.labels = c.labels;
  L.meet_tab.assign((size_t)n * n, -1);
  L.join_tab.assign((size_t)n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = max_of_mask(dn, dn[a] & dn[b]);
      if (m < 0)
        throw Error(ErrorKind::NotALattice, "elements " + std::to_string(a) + " and " +
                                                std::to_string(b) + " have no meet");
      // join via up-sets: unique minimal common upper bound
      Mask ub = up[a] & up[b];
      int j = -1;
      for_each_bit(ub, [&](int i) {
        if ((ub & ~up[i]) == 0) j = i;
      });
      if (j < 0)
        throw Error(ErrorKind::NotALattice, "elements " + std::to_string(a) + " and " +
                                                std::to_string(b) + " have no join");
      L.meet_tab[a * n + b] = L.meet_tab[b * n + a] = m;
      L.join_tab[a * n + b] = L.join_tab[b * n + a] = j;
    }
  }
  return L;
}

FinLattice dual(const FinLattice& L) {
  FinLattice D = L;
  std::swap(D.dn, D.up);
  std::swap(D.meet_tab, D.join_tab);
  std::swap(D.bot, D.top);
  return D;
}

FinLattice direct_product(const FinLattice& L, const FinLattice& M) {
  long long nn = (long long)L.n * M.n;
  if (nn > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "product universe exceeds 64 elements");
  FinLattice P;
  P.n = (int)nn;
  auto id = [&](int i, int j) { return i * M.n + j; };
  P.dn.assign(P.n, 0);
  P.up.assign(P.n, 0);
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < M.n; ++j)
      for (int k = 0; k < L.n; ++k)
        for (int l = 0; l < M.n; ++l)
          if (L.leq(i, k) && M.leq(j, l)) {
            P.up[id(i, j)] |= bit(id(k, l));
            P.dn[id(k, l)] |= bit(id(i, j));
          }
  P.bot = id(L.bot, M.bot);
  P.top = id(L.top, M.top);
  P.meet_tab.assign((size_t)P.n * P.n, -1);
  P.join_tab.assign((size_t)P.n * P.n, -1);
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < M.n; ++j)
      for (int k = 0; k < L.n; ++k)
        for (int l = 0; l < M.n; ++l) {
          P.meet_tab[(size_t)id(i, j) * P.n + id(k, l)] = id(L.meet(i, k), M.meet(j, l));
          P.join_tab[(size_t)id(i, j) * P.n + id(k, l)] = id(L.join(i, k), M.join(j, l));
        }
  bool lab = !L.labels.empty() || !M.labels.empty();
  if (lab) {
    P.labels.resize(P.n);
    for (int i = 0; i < L.n; ++i)
      for (int j = 0; j < M.n; ++j)
        P.labels[id(i, j)] = "(" + L.name_of(i) + "," + M.name_of(j) + ")";
  }
  return P;
}

std::vector<std::pair<int, int>> covers_of(const FinLattice& L) {
  std::vector<std::pair<int, int>> cv;
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (a == b || !L.leq(a, b)) continue;
      Mask strictly_between = L.up[a] & L.dn[b] & ~bit(a) & ~bit(b);
      if (strictly_between == 0) cv.emplace_back(a, b);
    }
  return cv;
}

OrderProfile order_profile(const FinLattice& L) {
  OrderProfile p;
  auto cv = covers_of(L);
  std::vector<int> nlower(L.n, 0), nupper(L.n, 0);
  for (auto [a, b] : cv) {
    nupper[a]++;
    nlower[b]++;
  }
  for (int i = 0; i < L.n; ++i) {
    if (i != L.bot && L.leq(L.bot, i) && nlower[i] == 1 && has(L.dn[i], L.bot) &&
        popcount(L.dn[i]) == 2)
      p.atoms.push_back(i);
    if (i != L.top && nupper[i] == 1 && popcount(L.up[i]) == 2) p.coatoms.push_back(i);
    if (i != L.bot && nlower[i] == 1) p.join_irreducible.push_back(i);
    if (i != L.top && nupper[i] == 1) p.meet_irreducible.push_back(i);
  }
  p.is_chain = is_chain(L);
  // length = height of the top element
  std::vector<int> h(L.n, 0);
  // process in order of down-set size so lower elements come first
  std::vector<int> order(L.n);
  for (int i = 0; i < L.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcount(L.dn[a]) < popcount(L.dn[b]); });
  for (int x : order)
    for (auto [a, b] : cv)
      if (b == x) h[x] = std::max(h[x], h[a] + 1);
  p.length = h[L.top];
  return p;
}

bool is_chain(const FinLattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = a + 1; b < L.n; ++b)
      if (!L.leq(a, b) && !L.leq(b, a)) return false;
  return true;
}

bool is_modular(const FinLattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int z = 0; z < L.n; ++z) {
      if (!L.leq(x, z)) continue;
      for (int y = 0; y < L.n; ++y)
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return false;
    }
  return true;
}

bool is_distributive(const FinLattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      for (int z = 0; z < L.n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

FinLattice sublattice(const FinLattice& L, Mask elems) {
  std::vector<int> keep;
  for_each_bit(elems, [&](int i) { keep.push_back(i); });
  if (keep.empty()) throw Error(ErrorKind::InvalidArgument, "empty sublattice");
  std::vector<int> pos(L.n, -1);
  for (int i = 0; i < (int)keep.size(); ++i) pos[keep[i]] = i;
  for (int a : keep)
    for (int b : keep)
      if (pos[L.meet(a, b)] < 0 || pos[L.join(a, b)] < 0)
        throw Error(ErrorKind::InvalidArgument, "subset is not closed under meet/join");
  FinLattice S;
  S.n = (int)keep.size();
  S.dn.assign(S.n, 0);
  S.up.assign(S.n, 0);
  S.meet_tab.assign((size_t)S.n * S.n, -1);
  S.join_tab.assign((size_t)S.n * S.n, -1);
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j) {
      if (L.leq(keep[i], keep[j])) {
        S.up[i] |= bit(j);
        S.dn[j] |= bit(i);
      }
      S.meet_tab[i * S.n + j] = pos[L.meet(keep[i], keep[j])];
      S.join_tab[i * S.n + j] = pos[L.join(keep[i], keep[j])];
    }
  Mask all = S.n == 64 ? ~Mask{0} : (bit(S.n) - 1);
  for (int i = 0; i < S.n; ++i) {
    if (S.up[i] == all) S.bot = i;
    if (S.dn[i] == all) S.top = i;
  }
  if (!L.labels.empty()) {
    S.labels.resize(S.n);
    for (int i = 0; i < S.n; ++i) S.labels[i] = L.name_of(keep[i]);
  }
  return S;
}

}  // namespace pbz
