#pragma once

#include <string>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

struct NamedAlgebra {
  std::string name;
  BZAlgebra alg;
};

// The generated families used by the verification suites and the search
// command. Enumeration order is deterministic: catalog order, then size.

// Every catalog entry.
std::vector<NamedAlgebra> family_catalog();

// A [+] B over all nontrivial catalog orthomodular entries A and nontrivial
// catalog entries B, with |A [+] B| <= max_size.
std::vector<NamedAlgebra> family_hsums(int max_size);

// Canonical antiortholattices M (+) K (+) M^d over nontrivial catalog lattice
// reducts M and catalog pseudo-Kleene entries K, within max_size.
std::vector<NamedAlgebra> family_ordinal_aols(int max_size);

}  // namespace pbz
