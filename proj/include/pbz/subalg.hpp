#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbz/congruence.hpp"
#include "pbz/structures.hpp"

namespace pbz {

// Which operations a closure is taken under.
enum class Signature {
  MeetJoin,        // pure lattice terms, no constants
  BoundedLattice,  // meet, join, 0, 1
  BI,              // + Kleene complement
  BZ,              // + Brouwer complement
};

struct Subuniverse {
  Mask elements = 0;
  Signature sig = Signature::BZ;
};

// Least subset containing the seed (plus 0,1 unless the signature is
// MeetJoin) closed under the signature's operations.
Mask generate_mask(const BZAlgebra& A, Mask seed, Signature sig = Signature::BZ);
Subuniverse generate(const BZAlgebra& A, const std::vector<int>& seed,
                     Signature sig = Signature::BZ);

// Restriction of A to a BZ-closed subset, re-indexed in increasing order of
// the original indices.
BZAlgebra subalgebra(const BZAlgebra& A, Mask elems);

// Block algebra A/theta. Throws NotACongruence unless theta is a BZ-level
// congruence. Block elements are labelled by their member lists.
BZAlgebra quotient(const BZAlgebra& A, const Partition& theta);

// All subuniverses (BZ signature) of a small algebra, ascending by mask.
std::vector<Mask> all_subuniverses(const BZAlgebra& A);

// All order-reversing involutions of L (candidate Kleene complements), in a
// deterministic order.
std::vector<std::vector<int>> antitone_involutions(const FinLattice& L);

// Every bounded lattice on {0..n-1} whose order refines the index order
// (indices form a linear extension, bottom 0, top n-1). Every lattice with at
// most n elements appears up to isomorphism; labelled duplicates are kept.
std::vector<FinLattice> small_lattices(int n);

// Backtracking isomorphism search with invariant pruning. Returns a witness
// bijection image[a in A] = b in B, or nullopt. Complete within the size cap.
std::optional<std::vector<int>> isomorphism(const BZAlgebra& A, const BZAlgebra& B);
bool isomorphic(const BZAlgebra& A, const BZAlgebra& B);
std::optional<std::vector<int>> lattice_isomorphism(const FinLattice& A, const FinLattice& B);
bool lattice_isomorphic(const FinLattice& A, const FinLattice& B);

enum class SingletonClass { D1, D2, D2SQ, D4, HEX };

const char* singleton_class_name(SingletonClass c);

// Isomorphism type of the one-generated subalgebra <a>. Recognizes exactly the
// five catalogued types and throws UnexpectedType otherwise (the error message
// names the offending shape).
SingletonClass singleton_class(const BZAlgebra& A, int a);

}  // namespace pbz
