#include "pbz/sums.hpp"

#include <algorithm>

namespace pbz {

std::pair<FinLattice, SumIndexMap> ordinal_sum(const FinLattice& L, const FinLattice& M) {
  const int n = L.n + M.n - 1;
  if (n > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "ordinal sum exceeds 64 elements");

  SumIndexMap im;
  im.embed.resize(2);
  im.embed[0].resize(L.n);
  im.embed[1].resize(M.n);
  for (int i = 0; i < L.n; ++i) im.embed[0][i] = i;
  {
    int next = L.n;
    for (int j = 0; j < M.n; ++j)
      im.embed[1][j] = (j == M.bot) ? L.top : next++;
  }
  im.provenance.resize(n);
  for (int i = 0; i < L.n; ++i) im.provenance[im.embed[0][i]].push_back({0, i});
  for (int j = 0; j < M.n; ++j) im.provenance[im.embed[1][j]].push_back({1, j});

  CoverList c;
  c.n = n;
  for (auto [a, b] : covers_of(L)) c.covers.emplace_back(im.embed[0][a], im.embed[0][b]);
  for (auto [a, b] : covers_of(M)) c.covers.emplace_back(im.embed[1][a], im.embed[1][b]);
  c.bot = im.embed[0][L.bot];
  c.top = im.embed[1][M.top];
  if (!L.labels.empty() || !M.labels.empty()) {
    c.labels.resize(n);
    for (int i = 0; i < L.n; ++i) c.labels[im.embed[0][i]] = L.name_of(i);
    for (int j = 0; j < M.n; ++j)
      if (j != M.bot) c.labels[im.embed[1][j]] = M.name_of(j);
  }
  return {lattice_from_covers(c), im};
}

std::pair<FinLattice, SumIndexMap> horizontal_sum_lattice(const std::vector<FinLattice>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "horizontal sum of nothing");
  for (const auto& p : parts)
    if (p.n < 2) throw Error(ErrorKind::TrivialSummand, "horizontal sum requires nontrivial summands");
  int n = 2;
  for (const auto& p : parts) n += p.n - 2;
  if (n > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "horizontal sum exceeds 64 elements");

  SumIndexMap im;
  im.embed.resize(parts.size());
  im.provenance.resize(n);
  int next = 1;
  for (int s = 0; s < (int)parts.size(); ++s) {
    const auto& p = parts[s];
    im.embed[s].resize(p.n);
    for (int i = 0; i < p.n; ++i) {
      int t;
      if (i == p.bot) t = 0;
      else if (i == p.top) t = n - 1;
      else t = next++;
      im.embed[s][i] = t;
      im.provenance[t].push_back({s, i});
    }
  }

  CoverList c;
  c.n = n;
  c.bot = 0;
  c.top = n - 1;
  for (int s = 0; s < (int)parts.size(); ++s)
    for (auto [a, b] : covers_of(parts[s]))
      c.covers.emplace_back(im.embed[s][a], im.embed[s][b]);
  bool lab = std::any_of(parts.begin(), parts.end(),
                         [](const FinLattice& p) { return !p.labels.empty(); });
  if (lab) {
    c.labels.resize(n);
    c.labels[0] = parts[0].name_of(parts[0].bot);
    c.labels[n - 1] = parts[0].name_of(parts[0].top);
    auto taken = [&](const std::string& s) {
      return std::find(c.labels.begin(), c.labels.end(), s) != c.labels.end();
    };
    for (int s = 0; s < (int)parts.size(); ++s)
      for (int i = 0; i < parts[s].n; ++i) {
        if (i == parts[s].bot || i == parts[s].top) continue;
        std::string name = parts[s].name_of(i);
        for (int suffix = 2; taken(name); ++suffix)
          name = parts[s].name_of(i) + "_" + std::to_string(suffix);
        c.labels[im.embed[s][i]] = name;
      }
  }
  return {lattice_from_covers(c), im};
}

std::pair<BZAlgebra, SumIndexMap> horizontal_sum(const std::vector<BZAlgebra>& parts) {
  for (const auto& p : parts) {
    if (p.n() < 2) throw Error(ErrorKind::TrivialSummand, "horizontal sum requires nontrivial summands");
    if (p.inv[p.bot()] != p.top() || p.inv[p.top()] != p.bot() ||
        p.brouwer[p.bot()] != p.top() || p.brouwer[p.top()] != p.bot())
      throw Error(ErrorKind::InvalidArgument,
                  "summand complements do not swap the bounds; horizontal sum undefined");
  }
  std::vector<FinLattice> lats;
  lats.reserve(parts.size());
  for (const auto& p : parts) lats.push_back(p.lat);
  auto [L, im] = horizontal_sum_lattice(lats);

  BZAlgebra S;
  S.lat = std::move(L);
  S.inv.assign(S.n(), -1);
  S.brouwer.assign(S.n(), -1);
  for (int s = 0; s < (int)parts.size(); ++s)
    for (int i = 0; i < parts[s].n(); ++i) {
      S.inv[im.embed[s][i]] = im.embed[s][parts[s].inv[i]];
      S.brouwer[im.embed[s][i]] = im.embed[s][parts[s].brouwer[i]];
    }
  return {S, im};
}

BZAlgebra hsum(const BZAlgebra& A, const BZAlgebra& B) {
  return horizontal_sum({A, B}).first;
}

BZAlgebra canonical_aol(const FinLattice& M, const BZAlgebra& K, SumIndexMap* map_out) {
  if (M.n < 2) throw Error(ErrorKind::InvalidArgument, "canonical antiortholattice needs nontrivial M");
  StructureClass ck = classify(K);
  if (!ck.pseudo_kleene)
    throw Error(ErrorKind::NotPseudoKleene, "K is not pseudo-Kleene; M(+)K(+)M^d would not be an antiortholattice");

  FinLattice Md = dual(M);
  auto [MK, im1] = ordinal_sum(M, K.lat);
  auto [L, im2] = ordinal_sum(MK, Md);

  auto emb_m = [&](int i) { return im2.embed[0][im1.embed[0][i]]; };
  auto emb_k = [&](int i) { return im2.embed[0][im1.embed[1][i]]; };
  auto emb_d = [&](int i) { return im2.embed[1][i]; };

  if (map_out) {
    map_out->embed.assign(3, {});
    map_out->embed[0].resize(M.n);
    map_out->embed[1].resize(K.n());
    map_out->embed[2].resize(M.n);
    map_out->provenance.assign(L.n, {});
    for (int i = 0; i < M.n; ++i) {
      map_out->embed[0][i] = emb_m(i);
      map_out->embed[2][i] = emb_d(i);
      map_out->provenance[emb_m(i)].push_back({0, i});
      if (emb_d(i) != emb_m(i)) map_out->provenance[emb_d(i)].push_back({2, i});
    }
    for (int i = 0; i < K.n(); ++i) {
      map_out->embed[1][i] = emb_k(i);
      map_out->provenance[emb_k(i)].push_back({1, i});
    }
  }

  BZAlgebra A;
  A.lat = std::move(L);
  A.lat.labels.assign(A.lat.n, "");
  for (int i = 0; i < M.n; ++i) {
    if (i == M.bot || i == M.top) continue;
    A.lat.labels[emb_m(i)] = M.name_of(i);
    A.lat.labels[emb_d(i)] = M.name_of(i) + "'";
  }
  for (int i = 0; i < K.n(); ++i) A.lat.labels[emb_k(i)] = K.name_of(i);
  A.lat.labels[emb_k(K.bot())] = "w0";  // glue M.top = K.bot
  A.lat.labels[emb_k(K.top())] = "w1";  // glue K.top = Md.bot
  A.lat.labels[emb_m(M.bot)] = "0";
  A.lat.labels[emb_d(M.bot)] = "1";
  A.inv.assign(A.n(), -1);
  for (int i = 0; i < M.n; ++i) {
    A.inv[emb_m(i)] = emb_d(i);  // f = carrier identity onto the dual copy
    A.inv[emb_d(i)] = emb_m(i);
  }
  for (int i = 0; i < K.n(); ++i) A.inv[emb_k(i)] = emb_k(K.inv[i]);
  A.brouwer = trivial_brouwer(A.lat);
  return A;
}

BZAlgebra mo(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "MO_k needs k >= 0");
  if (2 * k + 2 > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "MO_k exceeds 64 elements");
  if (k == 0) {
    BZAlgebra d2 = chain(2);
    d2.brouwer = d2.inv;
    return d2;
  }
  const int n = 2 * k + 2;
  CoverList c;
  c.n = n;
  c.bot = 0;
  c.top = n - 1;
  c.labels.resize(n);
  c.labels[0] = "0";
  c.labels[n - 1] = "1";
  for (int i = 0; i < k; ++i) {
    int a = 1 + 2 * i, ap = 2 + 2 * i;
    c.covers.emplace_back(0, a);
    c.covers.emplace_back(0, ap);
    c.covers.emplace_back(a, n - 1);
    c.covers.emplace_back(ap, n - 1);
    c.labels[a] = "a" + std::to_string(i + 1);
    c.labels[ap] = "a" + std::to_string(i + 1) + "'";
  }
  BZAlgebra A;
  A.lat = lattice_from_covers(c);
  A.inv.resize(n);
  A.inv[0] = n - 1;
  A.inv[n - 1] = 0;
  for (int i = 0; i < k; ++i) {
    A.inv[1 + 2 * i] = 2 + 2 * i;
    A.inv[2 + 2 * i] = 1 + 2 * i;
  }
  A.brouwer = A.inv;
  return A;
}

BZAlgebra chain(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "chain needs n >= 1");
  if (n > kMaxUniverse) throw Error(ErrorKind::SizeLimit, "chain exceeds 64 elements");
  CoverList c;
  c.n = n;
  c.bot = 0;
  c.top = n - 1;
  c.labels.resize(n);
  for (int i = 0; i < n; ++i) c.labels[i] = std::to_string(i);
  for (int i = 0; i + 1 < n; ++i) c.covers.emplace_back(i, i + 1);
  BZAlgebra A;
  A.lat = lattice_from_covers(c);
  A.inv.resize(n);
  for (int i = 0; i < n; ++i) A.inv[i] = n - 1 - i;
  A.brouwer = trivial_brouwer(A.lat);
  return A;
}

}  // namespace pbz
