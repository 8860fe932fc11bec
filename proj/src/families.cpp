#include "pbz/families.hpp"

#include "pbz/catalog.hpp"
#include "pbz/sums.hpp"

namespace pbz {

std::vector<NamedAlgebra> family_catalog() {
  std::vector<NamedAlgebra> out;
  for (const auto& e : load_catalog()) out.push_back({e.name, e.alg});
  return out;
}

std::vector<NamedAlgebra> family_hsums(int max_size) {
  std::vector<NamedAlgebra> out;
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() < 2 || !classify(a.alg).orthomodular) continue;
    for (const auto& b : cat) {
      if (b.alg.n() < 2) continue;
      int size = a.alg.n() + b.alg.n() - 2;
      if (size > max_size) continue;
      out.push_back({a.name + "[+]" + b.name, hsum(a.alg, b.alg)});
    }
  }
  return out;
}

std::vector<NamedAlgebra> family_ordinal_aols(int max_size) {
  std::vector<NamedAlgebra> out;
  const auto& cat = load_catalog();
  for (const auto& m : cat) {
    if (m.alg.n() < 2) continue;
    for (const auto& k : cat) {
      int size = 2 * m.alg.n() + k.alg.n() - 2;
      if (size > max_size) continue;
      if (!classify(k.alg).pseudo_kleene) continue;
      out.push_back({m.name + "(+)" + k.name + "(+)" + m.name + "^d",
                     canonical_aol(m.alg.lat, k.alg)});
    }
  }
  return out;
}

}  // namespace pbz
