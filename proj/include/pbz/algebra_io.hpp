#pragma once

#include <iosfwd>
#include <string>

#include "pbz/structures.hpp"
#include "pbz/sums.hpp"

namespace pbz {

// Text format, one algebra per file:
//
//   pbz-alg v1
//   universe N
//   labels: name0 name1 ...          (optional)
//   covers: a<b a<c ...              (indices or labels; may repeat)
//   involution: a->b c->d ...        (total map)
//   brouwer: trivial                 (or a total map like involution:)
//   # comment lines are ignored
//
// The writer emits a canonical form; reading it back and rewriting reproduces
// the bytes exactly.
BZAlgebra read_algebra(std::istream& in, const std::string& source_name);
std::string write_algebra(const BZAlgebra& A, const SumIndexMap* provenance = nullptr,
                          const std::vector<std::string>* part_names = nullptr);

// Loads from a path, or from the built-in catalog via "catalog:NAME".
BZAlgebra load_algebra(const std::string& path_or_uri);

}  // namespace pbz
