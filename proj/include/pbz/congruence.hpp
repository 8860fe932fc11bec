#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

// Equivalence relation on 0..n-1 as a normalized block assignment: block ids
// appear in first-occurrence order, so equal relations compare equal.
struct Partition {
  std::vector<int> block;
  int blocks = 0;

  static Partition identity(int n);
  static Partition all(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blks);

  int n() const { return (int)block.size(); }
  bool same(int a, int b) const { return block[a] == block[b]; }
  bool is_identity() const { return blocks == n(); }
  bool is_all() const { return blocks == 1; }
  // true iff every block of *this is contained in a block of o
  bool refines(const Partition& o) const;
  std::vector<std::vector<int>> block_list() const;
  std::string to_string(const FinLattice* names = nullptr) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block == b.block;
  }
  friend bool operator<(const Partition& a, const Partition& b) { return a.block < b.block; }
};

Partition partition_meet(const Partition& a, const Partition& b);
Partition partition_join(const Partition& a, const Partition& b);
// a x b on a product universe with the (i,j) -> i*nb + j codec.
Partition product_partition(const Partition& a, const Partition& b);
// Relational composition a o b equals the all-relation?
bool compose_is_all(const Partition& a, const Partition& b);

enum class Level { Lattice, BI, BZ };

inline const char* level_name(Level l) {
  switch (l) {
    case Level::Lattice: return "lattice";
    case Level::BI: return "bi";
    case Level::BZ: return "bz";
  }
  return "?";
}

struct EnumLimits {
  int max_universe = 24;
  int max_congruences = 20000;
};

bool is_congruence(const BZAlgebra& A, const Partition& p, Level lv);
bool is_congruence(const FinLattice& L, const Partition& p);

// Least congruence identifying a and b: iterated closure under operation
// compatibility from the single merge.
Partition principal_congruence(const BZAlgebra& A, int a, int b, Level lv);

// All congruences at the given level, ordered by refinement. Enumerated as the
// join-closure of the principal congruences.
struct CongruenceLattice {
  std::vector<Partition> cons;  // sorted, deterministic
  Level level = Level::BZ;
  int delta = -1;  // index of the identity relation
  int nabla = -1;  // index of the all relation
  std::vector<int> con0;   // indices with 0/theta = {0}
  std::vector<int> con01;  // indices with both bound classes singleton

  int size() const { return (int)cons.size(); }
  int index_of(const Partition& p) const;
  bool leq(int i, int j) const { return cons[i].refines(cons[j]); }
  int meet(int i, int j) const;
  int join(int i, int j) const;
  // Refinement order as a FinLattice (for isomorphism checks and reports).
  FinLattice order_lattice() const;
  // Same, restricted to the given congruence indices (must be meet/join closed
  // as a sublattice of the refinement order, which Con_01 always is when the
  // subset is nonempty).
  FinLattice order_lattice_of(const std::vector<int>& subset) const;
};

CongruenceLattice congruence_lattice(const BZAlgebra& A, Level lv, EnumLimits lim = {});
CongruenceLattice congruence_lattice(const FinLattice& L, EnumLimits lim = {});

// Test oracle: filter every partition of the universe (Bell-number scan).
std::vector<Partition> congruences_bruteforce(const BZAlgebra& A, Level lv);

// alpha (+) beta on L (+) M: classes of alpha, classes of beta, with the class
// of L's top merged into the class of M's bottom. The map (alpha, beta) ->
// alpha (+) beta is a lattice isomorphism Con(L) x Con(M) -> Con(L (+) M).
Partition sum_congruence_ordinal(const FinLattice& L, const Partition& alpha,
                                 const FinLattice& M, const Partition& beta);

// [+] of proper congruences of the summands: glue the 0-classes and the
// 1-classes. sizes/bots/tops describe the summands in sum layout order.
Partition sum_congruence_horizontal(const std::vector<Partition>& parts,
                                    const std::vector<const BZAlgebra*>& summands);

struct IrreducibilityReport {
  bool simple = false;
  bool subdirectly_irreducible = false;
  std::optional<Partition> monolith;
  bool directly_irreducible = false;
  std::optional<std::pair<Partition, Partition>> factor_pair;
};

IrreducibilityReport irreducibility(const BZAlgebra& A, Level lv, EnumLimits lim = {});
IrreducibilityReport irreducibility(const FinLattice& L, EnumLimits lim = {});

}  // namespace pbz
