#include "pbz/subalg.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pbz/sums.hpp"

namespace pbz {

Mask generate_mask(const BZAlgebra& A, Mask seed, Signature sig) {
  Mask m = seed;
  if (sig != Signature::MeetJoin) m |= bit(A.bot()) | bit(A.top());
  if (m == 0) return 0;
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = m;
    for_each_bit(m, [&](int x) {
      if (sig == Signature::BI || sig == Signature::BZ) next |= bit(A.kle(x));
      if (sig == Signature::BZ) next |= bit(A.bro(x));
      for_each_bit(m, [&](int y) {
        next |= bit(A.meet(x, y));
        next |= bit(A.join(x, y));
      });
    });
    if (next != m) {
      m = next;
      grew = true;
    }
  }
  return m;
}

Subuniverse generate(const BZAlgebra& A, const std::vector<int>& seed, Signature sig) {
  Mask s = 0;
  for (int x : seed) {
    if (x < 0 || x >= A.n()) throw Error(ErrorKind::InvalidArgument, "seed element out of range");
    s |= bit(x);
  }
  return Subuniverse{generate_mask(A, s, sig), sig};
}

BZAlgebra subalgebra(const BZAlgebra& A, Mask elems) {
  std::vector<int> keep, pos(A.n(), -1);
  for_each_bit(elems, [&](int i) {
    pos[i] = (int)keep.size();
    keep.push_back(i);
  });
  for (int x : keep)
    if (pos[A.kle(x)] < 0 || pos[A.bro(x)] < 0)
      throw Error(ErrorKind::InvalidArgument, "subset not closed under the unary operations");
  BZAlgebra S;
  S.lat = sublattice(A.lat, elems);
  S.inv.resize(keep.size());
  S.brouwer.resize(keep.size());
  for (int i = 0; i < (int)keep.size(); ++i) {
    S.inv[i] = pos[A.kle(keep[i])];
    S.brouwer[i] = pos[A.bro(keep[i])];
  }
  return S;
}

BZAlgebra quotient(const BZAlgebra& A, const Partition& theta) {
  if (!is_congruence(A, theta, Level::BZ))
    throw Error(ErrorKind::NotACongruence, "partition is not a BZ-congruence");
  const int m = theta.blocks;
  auto blocks = theta.block_list();

  // induced order: [a] <= [b] iff some representatives compare
  CoverList c;
  c.n = m;
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // theta-compatibility makes this independent of representatives
      int a = blocks[i][0], b = blocks[j][0];
      le[i][j] = theta.same(A.meet(a, b), a);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
      if (cover) c.covers.emplace_back(i, j);
    }
  c.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "{";
    for (size_t k = 0; k < blocks[i].size(); ++k) {
      if (k) s += ",";
      s += A.name_of(blocks[i][k]);
    }
    c.labels[i] = s + "}";
  }
  BZAlgebra Q;
  Q.lat = lattice_from_covers(c);
  Q.inv.resize(m);
  Q.brouwer.resize(m);
  for (int i = 0; i < m; ++i) {
    Q.inv[i] = theta.block[A.kle(blocks[i][0])];
    Q.brouwer[i] = theta.block[A.bro(blocks[i][0])];
  }
  return Q;
}

std::vector<Mask> all_subuniverses(const BZAlgebra& A) {
  if (A.n() > 16) throw Error(ErrorKind::SizeLimit, "subuniverse scan capped at 16 elements");
  std::vector<Mask> out;
  Mask full = A.lat.universe();
  for (Mask s = 0; s <= full; ++s) {
    Mask g = generate_mask(A, s, Signature::BZ);
    if (g == s) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

std::vector<std::vector<int>> antitone_involutions(const FinLattice& L) {
  std::vector<std::vector<int>> out;
  std::vector<int> inv(L.n, -1);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == L.n) {
      out.push_back(inv);
      return;
    }
    if (inv[x] >= 0) {
      self(self, x + 1);
      return;
    }
    for (int y = 0; y < L.n; ++y) {
      if (y != x && inv[y] >= 0) continue;
      bool ok = true;
      for (int a = 0; a < L.n && ok; ++a) {
        if (inv[a] < 0 || a == x) continue;
        if (L.leq(a, x) != L.leq(y, inv[a])) ok = false;
        if (L.leq(x, a) != L.leq(inv[a], y)) ok = false;
      }
      if (ok) {
        inv[x] = y;
        inv[y] = x;
        self(self, x + 1);
        inv[x] = -1;
        if (y != x) inv[y] = -1;
      }
    }
  };
  rec(rec, 0);
  std::vector<std::vector<int>> checked;
  for (auto& f : out) {
    bool ok = true;
    for (int a = 0; a < L.n && ok; ++a)
      for (int b = 0; b < L.n; ++b)
        if (L.leq(a, b) && !L.leq(f[b], f[a])) {
          ok = false;
          break;
        }
    if (ok) checked.push_back(std::move(f));
  }
  return checked;
}

std::vector<FinLattice> small_lattices(int n) {
  if (n < 1 || n > 7) throw Error(ErrorKind::SizeLimit, "lattice scan supports 1..7 elements");
  std::vector<FinLattice> out;
  if (n == 1) {
    out.push_back(chain(1).lat);
    return out;
  }
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pr;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pr.emplace_back(i, j);
  for (long long m = 0; m < (1LL << pairs); ++m) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (int p = 0; p < pairs; ++p)
      if ((m >> p) & 1) up[pr[p].first] |= bit(pr[p].second);
    // bounds first (cheap rejection)
    bool ok = true;
    for (int j = 1; j < n && ok; ++j)
      if (!has(up[0], j)) ok = false;
    for (int i = 0; i < n - 1 && ok; ++i)
      if (!has(up[i], n - 1)) ok = false;
    if (!ok) continue;
    // transitivity
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        if (!has(up[i], j)) continue;
        if ((up[j] & ~up[i]) != 0) ok = false;
      }
    if (!ok) continue;
    std::vector<Mask> dn(n, 0);
    for (int i = 0; i < n; ++i)
      for_each_bit(up[i], [&](int j) { dn[j] |= bit(i); });
    // meets and joins must exist
    FinLattice L;
    L.n = n;
    L.bot = 0;
    L.top = n - 1;
    L.up = up;
    L.dn = dn;
    L.meet_tab.assign((size_t)n * n, -1);
    L.join_tab.assign((size_t)n * n, -1);
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) {
        Mask lb = dn[i] & dn[j], ub = up[i] & up[j];
        int mm = -1, jj = -1;
        for_each_bit(lb, [&](int x) {
          if ((lb & ~dn[x]) == 0) mm = x;
        });
        for_each_bit(ub, [&](int x) {
          if ((ub & ~up[x]) == 0) jj = x;
        });
        if (mm < 0 || jj < 0) {
          ok = false;
          break;
        }
        L.meet_tab[i * n + j] = L.meet_tab[j * n + i] = mm;
        L.join_tab[i * n + j] = L.join_tab[j * n + i] = jj;
      }
    if (ok) out.push_back(std::move(L));
  }
  return out;
}


namespace {

// Per-element invariant fingerprints, refined to a fixpoint. Two elements may
// correspond under an isomorphism only if their fingerprints agree.
std::vector<long long> fingerprints(const BZAlgebra& A) {
  const int n = A.n();
  std::vector<long long> f(n);
  for (int i = 0; i < n; ++i) {
    long long v = 0;
    v = v * 97 + popcount(A.lat.dn[i]);
    v = v * 97 + popcount(A.lat.up[i]);
    v = v * 97 + (i == A.bot() ? 1 : 2);
    v = v * 97 + (i == A.top() ? 1 : 2);
    v = v * 97 + (A.kle(i) == i ? 3 : 4);
    v = v * 97 + (A.bro(i) == i ? 3 : 4);
    v = v * 97 + (A.meet(i, A.kle(i)) == A.bot() ? 5 : 6);  // sharp
    v = v * 97 + (A.bro(i) == A.bot() ? 5 : 6);             // dense
    f[i] = v;
  }
  // refine by multiset of neighbour fingerprints under the unary maps and
  // cover relation
  auto cv = covers_of(A.lat);
  for (int round = 0; round < n; ++round) {
    std::vector<long long> g = f;
    for (int i = 0; i < n; ++i) {
      long long v = f[i];
      v = v * 131 + f[A.kle(i)];
      v = v * 131 + f[A.bro(i)];
      long long up_sum = 0, dn_sum = 0;
      for (auto [a, b] : cv) {
        if (a == i) up_sum += f[b] * 31;
        if (b == i) dn_sum += f[a] * 37;
      }
      v = v * 131 + up_sum;
      v = v * 131 + dn_sum;
      g[i] = v;
    }
    if (g == f) break;
    f = std::move(g);
  }
  return f;
}

bool extend(const BZAlgebra& A, const BZAlgebra& B, std::vector<int>& img,
            std::vector<bool>& used, int next,
            const std::vector<std::vector<int>>& candidates) {
  const int n = A.n();
  if (next == n) return true;
  for (int b : candidates[next]) {
    if (used[b]) continue;
    // check compatibility with everything already mapped
    img[next] = b;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a) {
      if (img[a] < 0) continue;
      if (A.leq(a, next) != B.leq(img[a], b)) ok = false;
      if (A.leq(next, a) != B.leq(b, img[a])) ok = false;
      if (img[A.meet(a, next)] >= 0 && img[A.meet(a, next)] != B.meet(img[a], b)) ok = false;
      if (img[A.join(a, next)] >= 0 && img[A.join(a, next)] != B.join(img[a], b)) ok = false;
    }
    if (ok && img[A.kle(next)] >= 0 && img[A.kle(next)] != B.kle(b)) ok = false;
    if (ok && img[A.bro(next)] >= 0 && img[A.bro(next)] != B.bro(b)) ok = false;
    if (ok) {
      used[b] = true;
      if (extend(A, B, img, used, next + 1, candidates)) return true;
      used[b] = false;
    }
    img[next] = -1;
  }
  return false;
}

std::optional<std::vector<int>> iso_search(const BZAlgebra& A, const BZAlgebra& B) {
  const int n = A.n();
  if (n != B.n()) return std::nullopt;
  if (n > 40) throw Error(ErrorKind::SizeLimit, "isomorphism search capped at 40 elements");

  auto fa = fingerprints(A), fb = fingerprints(B);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (fa[a] == fb[b]) candidates[a].push_back(b);

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  if (extend(A, B, img, used, 0, candidates)) return img;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const BZAlgebra& A, const BZAlgebra& B) {
  auto w = iso_search(A, B);
  if (!w) return std::nullopt;
  // verify the witness end to end
  const auto& img = *w;
  for (int a = 0; a < A.n(); ++a) {
    if (B.kle(img[a]) != img[A.kle(a)] || B.bro(img[a]) != img[A.bro(a)])
      throw Error(ErrorKind::InvalidArgument, "isomorphism witness failed verification");
    for (int b = 0; b < A.n(); ++b)
      if (B.meet(img[a], img[b]) != img[A.meet(a, b)] ||
          B.join(img[a], img[b]) != img[A.join(a, b)])
        throw Error(ErrorKind::InvalidArgument, "isomorphism witness failed verification");
  }
  return w;
}

bool isomorphic(const BZAlgebra& A, const BZAlgebra& B) { return isomorphism(A, B).has_value(); }

std::optional<std::vector<int>> lattice_isomorphism(const FinLattice& A, const FinLattice& B) {
  // identity maps make the unary structure vacuous
  BZAlgebra a, b;
  a.lat = A;
  b.lat = B;
  a.inv.resize(A.n);
  a.brouwer.resize(A.n);
  b.inv.resize(B.n);
  b.brouwer.resize(B.n);
  for (int i = 0; i < A.n; ++i) a.inv[i] = a.brouwer[i] = i;
  for (int i = 0; i < B.n; ++i) b.inv[i] = b.brouwer[i] = i;
  return isomorphism(a, b);
}

bool lattice_isomorphic(const FinLattice& A, const FinLattice& B) {
  return lattice_isomorphism(A, B).has_value();
}

const char* singleton_class_name(SingletonClass c) {
  switch (c) {
    case SingletonClass::D1: return "D1";
    case SingletonClass::D2: return "D2";
    case SingletonClass::D2SQ: return "D2^2";
    case SingletonClass::D4: return "D4";
    case SingletonClass::HEX: return "D2+D2^2+D2";
  }
  return "?";
}

SingletonClass singleton_class(const BZAlgebra& A, int a) {
  Mask m = generate_mask(A, bit(a), Signature::BZ);
  BZAlgebra S = subalgebra(A, m);

  struct Proto {
    SingletonClass cls;
    BZAlgebra alg;
  };
  static const std::vector<Proto> protos = [] {
    std::vector<Proto> v;
    v.push_back({SingletonClass::D1, chain(1)});
    v.push_back({SingletonClass::D2, chain(2)});
    v.push_back({SingletonClass::D2SQ, mo(1)});
    v.push_back({SingletonClass::D4, chain(4)});
    v.push_back({SingletonClass::HEX, canonical_aol(chain(2).lat, mo(1))});
    return v;
  }();
  for (const auto& p : protos)
    if (isomorphic(S, p.alg)) return p.cls;

  std::string shape = "generated subalgebra of size " + std::to_string(S.n());
  if (isomorphic(S, chain(3)))
    shape += " (isomorphic to the 3-chain D3, an involution fixpoint case)";
  throw Error(ErrorKind::UnexpectedType,
              "<" + A.name_of(a) + "> matches none of the five catalogued types: " + shape);
}

}  // namespace pbz
