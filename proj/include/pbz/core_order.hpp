#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbz/errors.hpp"

namespace pbz {

// Universes are capped at 64 elements so that down-sets/up-sets fit in one word.
using Mask = std::uint64_t;

constexpr int kMaxUniverse = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

// Iterates set bits in increasing order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = __builtin_ctzll(m);
    f(i);
    m &= m - 1;
  }
}

// Hasse-diagram input: (a,b) means b covers a.
struct CoverList {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  int bot = -1;  // -1: infer as the unique minimum
  int top = -1;
  std::vector<std::string> labels;
};

// A finite bounded lattice with the order stored as dense bit rows and
// meet/join precomputed as full tables. Indices are the semantic identity;
// labels are presentation only.
struct FinLattice {
  int n = 0;
  int bot = 0;
  int top = 0;
  std::vector<Mask> dn;  // dn[i] = { j : j <= i }
  std::vector<Mask> up;  // up[i] = { j : i <= j }
  std::vector<int> meet_tab;  // n*n, row-major
  std::vector<int> join_tab;
  std::vector<std::string> labels;  // empty or size n

  bool leq(int a, int b) const { return has(up[a], b); }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  Mask universe() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

  std::string name_of(int i) const {
    if (i >= 0 && i < (int)labels.size() && !labels[i].empty()) return labels[i];
    return std::to_string(i);
  }
  // Index of the element carrying label `s`, or -1.
  int index_of(const std::string& s) const {
    for (int i = 0; i < (int)labels.size(); ++i)
      if (labels[i] == s) return i;
    return -1;
  }
};

struct OrderProfile {
  std::vector<int> atoms;
  std::vector<int> coatoms;
  std::vector<int> join_irreducible;  // exactly one lower cover
  std::vector<int> meet_irreducible;  // exactly one upper cover
  bool is_chain = false;
  int length = 0;  // longest chain, in edges
};

// Builds the lattice from covers: reflexive-transitive closure, bound checks,
// meet/join tables. Throws NotALattice / NoBounds instead of returning a
// partial structure.
FinLattice lattice_from_covers(const CoverList& c);

// Order reversed, meet/join swapped, bot/top swapped. Involutive.
FinLattice dual(const FinLattice& L);

// Componentwise order on pairs; index codec is (i, j) -> i*|M| + j.
FinLattice direct_product(const FinLattice& L, const FinLattice& M);

OrderProfile order_profile(const FinLattice& L);

// Extracts the cover relation back out of the order.
std::vector<std::pair<int, int>> covers_of(const FinLattice& L);

// Brute-force helpers (plumbing; universes are small).
bool is_modular(const FinLattice& L);
bool is_distributive(const FinLattice& L);
bool is_chain(const FinLattice& L);

// Restriction of L to a subset that is closed under meet and join.
// Elements are re-indexed in increasing order of their original index.
FinLattice sublattice(const FinLattice& L, Mask elems);

}  // namespace pbz
