#pragma once

#include <utility>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

// Records where each element of a sum came from: (summand id, original index).
// Glue points carry the provenance of every summand they identify.
struct SumIndexMap {
  struct Origin {
    int summand;
    int index;
  };
  std::vector<std::vector<Origin>> provenance;  // per sum element
  // Element of the sum that summand s's element i was mapped to.
  std::vector<std::vector<int>> embed;  // embed[s][i]
};

// L (+) M: glue top of L onto bottom of M. L keeps its indices; the non-bottom
// elements of M follow in increasing index order.
std::pair<FinLattice, SumIndexMap> ordinal_sum(const FinLattice& L, const FinLattice& M);

// Horizontal sum of nontrivial parts: all bottoms glued to index 0, all tops
// glued to the last index, interior elements laid out summand by summand.
// Kleene and Brouwer maps are defined by restriction, which requires every
// part to send 0 to 1 and 1 to 0 under both maps.
std::pair<BZAlgebra, SumIndexMap> horizontal_sum(const std::vector<BZAlgebra>& parts);
std::pair<FinLattice, SumIndexMap> horizontal_sum_lattice(const std::vector<FinLattice>& parts);

// Convenience binary forms.
BZAlgebra hsum(const BZAlgebra& A, const BZAlgebra& B);

// The canonical antiortholattice on M (+) K (+) M^d: piecewise involution with
// the carrier-identity dual isomorphism between the two copies of M, trivial
// Brouwer complement. Requires M nontrivial and K pseudo-Kleene. When map_out
// is given it receives the three-summand embedding (0 = M, 1 = K, 2 = M^d).
BZAlgebra canonical_aol(const FinLattice& M, const BZAlgebra& K,
                        SumIndexMap* map_out = nullptr);

// MO_k: horizontal sum of k copies of the four-element Boolean algebra
// (MO_0 = D_2), with ' = ~. 2k+2 elements.
BZAlgebra mo(int k);

// D_n with the unique order-reversing involution and the trivial Brouwer
// complement.
BZAlgebra chain(int n);

}  // namespace pbz
