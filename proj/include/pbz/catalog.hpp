#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

struct CatalogAssertion {
  std::string property;
  std::function<bool(const BZAlgebra&)> check;
};

struct CatalogEntry {
  std::string name;
  BZAlgebra alg;
  std::vector<CatalogAssertion> assertions;
  std::vector<std::string> notes;  // recorded discrepancies and caveats
};

// The named algebras: chains D1..D9, MO0..MO4, HEX = D2+D2^2+D2,
// D2MO2D2 = D2+MO2+D2, M3 = MO1 [+] D3, K = MO1 [+] (D2 x D3), and the
// diagram-derived L7, M11, NM11. Every entry's assertions are checked on
// first load; a failure aborts with AssertionFailed naming the entry and
// property.
const std::vector<CatalogEntry>& load_catalog();

// nullptr when the name is unknown.
const CatalogEntry* catalog_find(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace pbz
