#include "pbz/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pbz/catalog.hpp"

namespace pbz {

namespace {

[[noreturn]] void fail(const std::string& src, int line, const std::string& what) {
  throw Error(ErrorKind::Parse, src + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

BZAlgebra read_algebra(std::istream& in, const std::string& src) {
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  int n = -1;
  std::vector<std::string> labels;
  std::vector<std::string> cover_toks, inv_toks, bro_toks;
  bool bro_trivial = false, saw_inv = false, saw_bro = false;
  int covers_line = 1, inv_line = 1, bro_line = 1;

  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "pbz-alg" || toks[1] != "v1")
        fail(src, lineno, "expected header 'pbz-alg v1'");
      saw_header = true;
      continue;
    }
    const std::string& key = toks[0];
    if (key == "universe") {
      if (toks.size() != 2) fail(src, lineno, "expected 'universe N'");
      try {
        n = std::stoi(toks[1]);
      } catch (...) {
        fail(src, lineno, "universe size is not a number");
      }
      if (n < 1 || n > kMaxUniverse) fail(src, lineno, "universe size out of range 1..64");
    } else if (key == "labels:") {
      labels.assign(toks.begin() + 1, toks.end());
    } else if (key == "covers:") {
      covers_line = lineno;
      cover_toks.insert(cover_toks.end(), toks.begin() + 1, toks.end());
    } else if (key == "involution:") {
      saw_inv = true;
      inv_line = lineno;
      inv_toks.insert(inv_toks.end(), toks.begin() + 1, toks.end());
    } else if (key == "brouwer:") {
      saw_bro = true;
      bro_line = lineno;
      if (toks.size() == 2 && toks[1] == "trivial") bro_trivial = true;
      else bro_toks.insert(bro_toks.end(), toks.begin() + 1, toks.end());
    } else {
      fail(src, lineno, "unknown directive '" + key + "'");
    }
  }
  if (!saw_header) fail(src, lineno, "missing header 'pbz-alg v1'");
  if (n < 0) fail(src, lineno, "missing 'universe N'");
  if (!labels.empty() && (int)labels.size() != n)
    fail(src, lineno, "labels count does not match the universe size");
  if (!saw_inv) fail(src, lineno, "missing 'involution:'");
  if (!saw_bro) fail(src, lineno, "missing 'brouwer:'");

  auto elem = [&](const std::string& tok, int at) -> int {
    for (int i = 0; i < (int)labels.size(); ++i)
      if (labels[i] == tok) return i;
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos == tok.size() && v >= 0 && v < n) return v;
    } catch (...) {
    }
    fail(src, at, "unknown element '" + tok + "'");
  };

  CoverList c;
  c.n = n;
  c.labels = labels;
  for (const auto& t : cover_toks) {
    auto lt = t.find('<');
    if (lt == std::string::npos) fail(src, covers_line, "cover token '" + t + "' lacks '<'");
    c.covers.emplace_back(elem(t.substr(0, lt), covers_line), elem(t.substr(lt + 1), covers_line));
  }

  BZAlgebra A;
  try {
    A.lat = lattice_from_covers(c);
  } catch (const Error& e) {
    fail(src, covers_line, e.what());
  }

  auto read_map = [&](const std::vector<std::string>& toks, int at, const char* what) {
    std::vector<int> m(n, -1);
    for (const auto& t : toks) {
      auto ar = t.find("->");
      if (ar == std::string::npos) fail(src, at, std::string(what) + " token '" + t + "' lacks '->'");
      int i = elem(t.substr(0, ar), at), j = elem(t.substr(ar + 2), at);
      if (m[i] >= 0) fail(src, at, std::string(what) + " maps element " + t.substr(0, ar) + " twice");
      m[i] = j;
    }
    for (int i = 0; i < n; ++i)
      if (m[i] < 0) fail(src, at, std::string(what) + " map is not total (element " +
                                      A.lat.name_of(i) + " missing)");
    return m;
  };
  A.inv = read_map(inv_toks, inv_line, "involution");
  A.brouwer = bro_trivial ? trivial_brouwer(A.lat) : read_map(bro_toks, bro_line, "brouwer");

  std::string defect = involution_defect(A);
  if (!defect.empty()) fail(src, inv_line, defect);
  return A;
}

namespace {

// Labels go into the file only when they are unambiguous element references.
bool labels_usable(const std::vector<std::string>& labels) {
  if (labels.empty()) return false;
  for (size_t i = 0; i < labels.size(); ++i) {
    const std::string& l = labels[i];
    if (l.empty()) return false;
    for (char c : l)
      if (std::isspace((unsigned char)c) || c == '<' || c == '#') return false;
    if (l.find("->") != std::string::npos) return false;
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[j] == l) return false;
  }
  return true;
}

}  // namespace

std::string write_algebra(const BZAlgebra& A, const SumIndexMap* prov,
                          const std::vector<std::string>* part_names) {
  BZAlgebra copy;
  const BZAlgebra* src = &A;
  if (!A.lat.labels.empty() && !labels_usable(A.lat.labels)) {
    copy = A;
    copy.lat.labels.clear();
    src = &copy;
  }
  const BZAlgebra& B = *src;
  std::ostringstream os;
  os << "pbz-alg v1\n";
  os << "universe " << B.n() << "\n";
  if (!B.lat.labels.empty()) {
    os << "labels:";
    for (const auto& l : B.lat.labels) os << " " << l;
    os << "\n";
  }
  os << "covers:";
  for (auto [a, b] : covers_of(B.lat)) os << " " << B.name_of(a) << "<" << B.name_of(b);
  os << "\n";
  os << "involution:";
  for (int i = 0; i < B.n(); ++i) os << " " << B.name_of(i) << "->" << B.name_of(B.kle(i));
  os << "\n";
  if (B.brouwer == trivial_brouwer(B.lat)) {
    os << "brouwer: trivial\n";
  } else {
    os << "brouwer:";
    for (int i = 0; i < B.n(); ++i) os << " " << B.name_of(i) << "->" << B.name_of(B.bro(i));
    os << "\n";
  }
  if (prov) {
    os << "# provenance (summand.element per sum element):\n";
    for (int i = 0; i < (int)prov->provenance.size(); ++i) {
      os << "#   " << B.name_of(i) << " =";
      for (const auto& o : prov->provenance[i]) {
        std::string part = part_names && o.summand < (int)part_names->size()
                               ? (*part_names)[o.summand]
                               : "part" + std::to_string(o.summand);
        os << " " << part << "." << o.index;
      }
      os << "\n";
    }
  }
  return os.str();
}

BZAlgebra load_algebra(const std::string& path_or_uri) {
  if (path_or_uri.rfind("catalog:", 0) == 0) {
    std::string name = path_or_uri.substr(8);
    const CatalogEntry* e = catalog_find(name);
    if (!e) throw Error(ErrorKind::Parse, "no catalog algebra named '" + name + "'");
    return e->alg;
  }
  std::ifstream in(path_or_uri);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path_or_uri);
  return read_algebra(in, path_or_uri);
}

}  // namespace pbz
