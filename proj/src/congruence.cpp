#include "pbz/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace pbz {

namespace {

// Normalize block ids to first-occurrence order.
void normalize(std::vector<int>& b, int& count) {
  std::vector<int> remap(b.size(), -1);
  int next = 0;
  for (int& x : b) {
    if (remap[x] < 0) remap[x] = next++;
    x = remap[x];
  }
  count = next;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  Partition to_partition() {
    Partition p;
    p.block.resize(parent.size());
    for (int i = 0; i < (int)parent.size(); ++i) p.block[i] = find(i);
    normalize(p.block, p.blocks);
    return p;
  }
};

std::vector<const std::vector<int>*> unary_ops(const BZAlgebra& A, Level lv) {
  std::vector<const std::vector<int>*> ops;
  if (lv == Level::BI || lv == Level::BZ) ops.push_back(&A.inv);
  if (lv == Level::BZ) ops.push_back(&A.brouwer);
  return ops;
}

}  // namespace

Partition Partition::identity(int n) {
  Partition p;
  p.block.resize(n);
  std::iota(p.block.begin(), p.block.end(), 0);
  p.blocks = n;
  return p;
}

Partition Partition::all(int n) {
  Partition p;
  p.block.assign(n, 0);
  p.blocks = n ? 1 : 0;
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blks) {
  Partition p;
  p.block.assign(n, -1);
  for (int i = 0; i < (int)blks.size(); ++i)
    for (int x : blks[i]) {
      if (x < 0 || x >= n || p.block[x] >= 0)
        throw Error(ErrorKind::InvalidArgument, "blocks do not partition the universe");
      p.block[x] = i;
    }
  for (int x : p.block)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "blocks do not cover the universe");
  normalize(p.block, p.blocks);
  return p;
}

bool Partition::refines(const Partition& o) const {
  // same block in *this must imply same block in o; compare via representatives
  std::vector<int> rep(blocks, -1);
  for (int i = 0; i < n(); ++i) {
    int b = block[i];
    if (rep[b] < 0) rep[b] = o.block[i];
    else if (rep[b] != o.block[i]) return false;
  }
  return true;
}

std::vector<std::vector<int>> Partition::block_list() const {
  std::vector<std::vector<int>> out(blocks);
  for (int i = 0; i < n(); ++i) out[block[i]].push_back(i);
  return out;
}

std::string Partition::to_string(const FinLattice* names) const {
  std::string s;
  for (const auto& blk : block_list()) {
    if (!s.empty()) s += "|";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) s += ",";
      s += names ? names->name_of(blk[i]) : std::to_string(blk[i]);
    }
  }
  return s;
}

Partition partition_meet(const Partition& a, const Partition& b) {
  Partition p;
  p.block.resize(a.n());
  std::map<std::pair<int, int>, int> ids;
  for (int i = 0; i < a.n(); ++i) {
    auto key = std::make_pair(a.block[i], b.block[i]);
    auto [it, fresh] = ids.emplace(key, (int)ids.size());
    p.block[i] = it->second;
  }
  normalize(p.block, p.blocks);
  return p;
}

Partition partition_join(const Partition& a, const Partition& b) {
  UnionFind uf(a.n());
  std::vector<int> seen_a(a.blocks, -1), seen_b(b.blocks, -1);
  for (int i = 0; i < a.n(); ++i) {
    if (seen_a[a.block[i]] < 0) seen_a[a.block[i]] = i;
    else uf.unite(seen_a[a.block[i]], i);
    if (seen_b[b.block[i]] < 0) seen_b[b.block[i]] = i;
    else uf.unite(seen_b[b.block[i]], i);
  }
  return uf.to_partition();
}

Partition product_partition(const Partition& a, const Partition& b) {
  Partition p;
  p.block.resize((size_t)a.n() * b.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      p.block[i * b.n() + j] = a.block[i] * b.blocks + b.block[j];
  normalize(p.block, p.blocks);
  return p;
}

bool compose_is_all(const Partition& a, const Partition& b) {
  // a o b covers every pair iff every a-block meets every b-block
  std::vector<std::vector<bool>> hit(a.blocks, std::vector<bool>(b.blocks, false));
  for (int i = 0; i < a.n(); ++i) hit[a.block[i]][b.block[i]] = true;
  for (const auto& row : hit)
    for (bool h : row)
      if (!h) return false;
  return true;
}

bool is_congruence(const BZAlgebra& A, const Partition& p, Level lv) {
  const int n = A.n();
  if (p.n() != n) throw Error(ErrorKind::InvalidArgument, "partition has wrong universe size");
  auto ops = unary_ops(A, lv);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (const auto* f : ops)
        if (!p.same((*f)[a], (*f)[b])) return false;
      for (int c = 0; c < n; ++c) {
        if (!p.same(A.meet(a, c), A.meet(b, c))) return false;
        if (!p.same(A.join(a, c), A.join(b, c))) return false;
      }
    }
  return true;
}

bool is_congruence(const FinLattice& L, const Partition& p) {
  BZAlgebra A;
  A.lat = L;
  return is_congruence(A, p, Level::Lattice);
}

Partition principal_congruence(const BZAlgebra& A, int a, int b, Level lv) {
  const int n = A.n();
  auto ops = unary_ops(A, lv);
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  merge(a, b);
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    for (const auto* f : ops) merge((*f)[u], (*f)[v]);
    for (int c = 0; c < n; ++c) {
      merge(A.meet(u, c), A.meet(v, c));
      merge(A.join(u, c), A.join(v, c));
    }
  }
  return uf.to_partition();
}

int CongruenceLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(cons.begin(), cons.end(), p);
  if (it == cons.end() || !(*it == p)) return -1;
  return (int)(it - cons.begin());
}

int CongruenceLattice::meet(int i, int j) const {
  int k = index_of(partition_meet(cons[i], cons[j]));
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "meet escaped the congruence set");
  return k;
}

int CongruenceLattice::join(int i, int j) const {
  int k = index_of(partition_join(cons[i], cons[j]));
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "join escaped the congruence set");
  return k;
}

FinLattice CongruenceLattice::order_lattice() const {
  std::vector<int> all(size());
  std::iota(all.begin(), all.end(), 0);
  return order_lattice_of(all);
}

FinLattice CongruenceLattice::order_lattice_of(const std::vector<int>& subset) const {
  const int m = (int)subset.size();
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "empty congruence subset");
  if (m > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "congruence order exceeds 64 elements");
  std::vector<int> pos(size(), -1);
  for (int i = 0; i < m; ++i) pos[subset[i]] = i;
  FinLattice L;
  L.n = m;
  L.dn.assign(m, 0);
  L.up.assign(m, 0);
  L.meet_tab.assign((size_t)m * m, -1);
  L.join_tab.assign((size_t)m * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (cons[subset[i]].refines(cons[subset[j]])) {
        L.up[i] |= bit(j);
        L.dn[j] |= bit(i);
      }
      int wm = index_of(partition_meet(cons[subset[i]], cons[subset[j]]));
      int wj = index_of(partition_join(cons[subset[i]], cons[subset[j]]));
      if (wm < 0 || pos[wm] < 0 || wj < 0 || pos[wj] < 0)
        throw Error(ErrorKind::InvalidArgument, "subset is not closed under congruence meet/join");
      L.meet_tab[(size_t)i * m + j] = pos[wm];
      L.join_tab[(size_t)i * m + j] = pos[wj];
    }
  Mask full = m == 64 ? ~Mask{0} : (bit(m) - 1);
  for (int i = 0; i < m; ++i) {
    if (L.up[i] == full) L.bot = i;
    if (L.dn[i] == full) L.top = i;
  }
  return L;
}

namespace {

CongruenceLattice enumerate_congruences(const BZAlgebra& A, Level lv, EnumLimits lim) {
  const int n = A.n();
  if (n > lim.max_universe)
    throw Error(ErrorKind::SizeLimit, "universe of " + std::to_string(n) +
                                          " exceeds enumeration limit " +
                                          std::to_string(lim.max_universe));
  std::vector<Partition> gens;
  gens.push_back(Partition::identity(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) gens.push_back(principal_congruence(A, a, b, lv));

  std::map<std::vector<int>, int> seen;
  std::vector<Partition> found;
  std::deque<int> fresh;
  auto add = [&](const Partition& p) {
    auto [it, is_new] = seen.emplace(p.block, (int)found.size());
    if (is_new) {
      found.push_back(p);
      fresh.push_back(it->second);
      if ((int)found.size() > lim.max_congruences)
        throw Error(ErrorKind::SizeLimit, "congruence count exceeds limit");
    }
  };
  for (const auto& g : gens) add(g);
  while (!fresh.empty()) {
    int i = fresh.front();
    fresh.pop_front();
    for (int j = 0; j < (int)found.size(); ++j) {
      Partition p = partition_join(found[i], found[j]);
      add(p);
    }
  }

  CongruenceLattice cl;
  cl.level = lv;
  cl.cons = std::move(found);
  std::sort(cl.cons.begin(), cl.cons.end());
  for (int i = 0; i < cl.size(); ++i) {
    const Partition& p = cl.cons[i];
    if (p.is_identity()) cl.delta = i;
    if (p.is_all() && n > 1) cl.nabla = i;
    bool b0 = true, b1 = true;
    for (int x = 0; x < n; ++x) {
      if (x != A.bot() && p.same(x, A.bot())) b0 = false;
      if (x != A.top() && p.same(x, A.top())) b1 = false;
    }
    if (b0) cl.con0.push_back(i);
    if (b0 && b1) cl.con01.push_back(i);
  }
  if (n == 1) cl.nabla = cl.delta;
  return cl;
}

}  // namespace

CongruenceLattice congruence_lattice(const BZAlgebra& A, Level lv, EnumLimits lim) {
  return enumerate_congruences(A, lv, lim);
}

CongruenceLattice congruence_lattice(const FinLattice& L, EnumLimits lim) {
  BZAlgebra A;
  A.lat = L;
  return enumerate_congruences(A, Level::Lattice, lim);
}

std::vector<Partition> congruences_bruteforce(const BZAlgebra& A, Level lv) {
  const int n = A.n();
  if (n > 8) throw Error(ErrorKind::SizeLimit, "brute-force scan capped at 8 elements");
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // restricted growth strings enumerate every set partition once
  auto emit = [&]() {
    Partition p;
    p.block = rgs;
    normalize(p.block, p.blocks);
    if (is_congruence(A, p, lv)) out.push_back(p);
  };
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Partition sum_congruence_ordinal(const FinLattice& L, const Partition& alpha,
                                 const FinLattice& M, const Partition& beta) {
  if (alpha.n() != L.n || beta.n() != M.n)
    throw Error(ErrorKind::InvalidArgument, "summand congruence sizes do not match");
  const int n = L.n + M.n - 1;
  std::vector<int> embL(L.n), embM(M.n);
  for (int i = 0; i < L.n; ++i) embL[i] = i;
  int next = L.n;
  for (int j = 0; j < M.n; ++j) embM[j] = (j == M.bot) ? L.top : next++;

  UnionFind uf(n);
  for (int i = 0; i < L.n; ++i)
    for (int j = i + 1; j < L.n; ++j)
      if (alpha.same(i, j)) uf.unite(embL[i], embL[j]);
  for (int i = 0; i < M.n; ++i)
    for (int j = i + 1; j < M.n; ++j)
      if (beta.same(i, j)) uf.unite(embM[i], embM[j]);
  return uf.to_partition();
}

Partition sum_congruence_horizontal(const std::vector<Partition>& parts,
                                    const std::vector<const BZAlgebra*>& summands) {
  if (parts.size() != summands.size() || parts.empty())
    throw Error(ErrorKind::InvalidArgument, "mismatched horizontal sum data");
  for (const auto& p : parts)
    if (p.is_all() && p.n() > 1)
      throw Error(ErrorKind::ImproperInput, "horizontal sum congruence needs proper summand parts");
  int n = 2;
  for (const auto* s : summands) n += s->n() - 2;
  UnionFind uf(n);
  int next = 1;
  for (size_t s = 0; s < summands.size(); ++s) {
    const BZAlgebra& A = *summands[s];
    std::vector<int> emb(A.n());
    for (int i = 0; i < A.n(); ++i) {
      if (i == A.bot()) emb[i] = 0;
      else if (i == A.top()) emb[i] = n - 1;
      else emb[i] = next++;
    }
    for (int i = 0; i < A.n(); ++i)
      for (int j = i + 1; j < A.n(); ++j)
        if (parts[s].same(i, j)) uf.unite(emb[i], emb[j]);
  }
  return uf.to_partition();
}

namespace {

IrreducibilityReport analyze(const CongruenceLattice& cl, int n) {
  IrreducibilityReport r;
  r.simple = (n == 1) || cl.size() == 2;
  if (n == 1 || cl.size() == 1) {
    r.subdirectly_irreducible = true;
    r.directly_irreducible = true;
    return r;
  }
  // monolith: minimum of Con minus the identity
  int mono = -1;
  for (int i = 0; i < cl.size(); ++i) {
    if (i == cl.delta) continue;
    if (mono < 0 || cl.cons[i].refines(cl.cons[mono])) mono = i;
  }
  bool si = true;
  for (int i = 0; i < cl.size() && si; ++i)
    if (i != cl.delta && !cl.cons[mono].refines(cl.cons[i])) si = false;
  r.subdirectly_irreducible = si;
  if (si) r.monolith = cl.cons[mono];

  r.directly_irreducible = true;
  for (int i = 0; i < cl.size() && r.directly_irreducible; ++i) {
    if (i == cl.delta || i == cl.nabla) continue;
    for (int j = i + 1; j < cl.size(); ++j) {
      if (j == cl.delta || j == cl.nabla) continue;
      const Partition& t = cl.cons[i];
      const Partition& z = cl.cons[j];
      if (!partition_meet(t, z).is_identity()) continue;
      if (!partition_join(t, z).is_all()) continue;
      if (!compose_is_all(t, z) || !compose_is_all(z, t)) continue;
      r.directly_irreducible = false;
      r.factor_pair = std::make_pair(t, z);
      break;
    }
  }
  return r;
}

}  // namespace

IrreducibilityReport irreducibility(const BZAlgebra& A, Level lv, EnumLimits lim) {
  return analyze(congruence_lattice(A, lv, lim), A.n());
}

IrreducibilityReport irreducibility(const FinLattice& L, EnumLimits lim) {
  return analyze(congruence_lattice(L, lim), L.n);
}

}  // namespace pbz
