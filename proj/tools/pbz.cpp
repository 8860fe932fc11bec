// Command-line front end: check, construct, con, verify, search.
// Exit codes: 0 success / all-pass, 1 property failure, 2 usage or parse
// error, 3 size limit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbz/algebra_io.hpp"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/families.hpp"
#include "pbz/subalg.hpp"
#include "pbz/sums.hpp"
#include "pbz/terms.hpp"
#include "pbz/verify.hpp"

using nlohmann::json;
using namespace pbz;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DomainArity:
    case ErrorKind::UnboundVariable: return 2;
    case ErrorKind::SizeLimit: return 3;
    default: return 1;
  }
}

Level parse_level(const std::string& s) {
  if (s == "lattice") return Level::Lattice;
  if (s == "bi") return Level::BI;
  if (s == "bz") return Level::BZ;
  throw Error(ErrorKind::InvalidArgument, "level must be lattice|bi|bz");
}

std::string mask_names(const BZAlgebra& A, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    s += A.name_of(i);
    first = false;
  });
  return s + "}";
}

Identity resolve_identity(const std::string& text) {
  const auto& lib = identity_library();
  auto it = lib.find(text);
  if (it != lib.end()) return it->second;
  return parse_identity(text);
}

std::string witnessToString(const BZAlgebra& A, const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + A.name_of(w[i]);
  return s + ")";
}

json class_json(const StructureClass& c) {
  return json{{"bi", c.bi},
              {"pseudo_kleene", c.pseudo_kleene},
              {"paraorthomodular", c.paraorthomodular},
              {"ortholattice", c.ortholattice},
              {"orthomodular", c.orthomodular},
              {"bz", c.bz},
              {"star_bz", c.star_bz},
              {"pbz_star", c.pbz_star},
              {"antiortholattice", c.antiortholattice},
              {"bz_failure", c.bz_failure}};
}

// --------------------------------------------------------------------------
// check
// --------------------------------------------------------------------------
int cmd_check(const std::string& file, const std::vector<std::string>& idents, bool axioms,
              bool sets, bool irr, const std::string& level, bool as_json) {
  std::cout << std::boolalpha;
  BZAlgebra A = load_algebra(file);
  StructureClass c = classify(A);
  Level lv = parse_level(level);
  json j;
  j["algebra"] = file;
  j["universe"] = A.n();
  j["class"] = class_json(c);
  if (!as_json) {
    std::cout << file << ": " << A.n() << " elements\n";
    std::cout << "  flags:";
    if (c.bi) std::cout << " BI";
    if (c.pseudo_kleene) std::cout << " pseudo-Kleene";
    if (c.paraorthomodular) std::cout << " paraorthomodular";
    if (c.ortholattice) std::cout << " ortholattice";
    if (c.orthomodular) std::cout << " orthomodular";
    if (c.bz) std::cout << " BZ";
    if (c.star_bz) std::cout << " BZ*";
    if (c.pbz_star) std::cout << " PBZ*";
    if (c.antiortholattice) std::cout << " antiortholattice";
    std::cout << "\n";
    if (!c.bz) std::cout << "  not BZ: " << c.bz_failure << "\n";
  }
  if (axioms) {
    json ax;
    ax["pseudo_kleene"] = c.pseudo_kleene;
    ax["bz_axioms"] = c.bz;
    ax["condition_star"] = c.bz && satisfies_star(A);
    ax["paraorthomodular"] = c.paraorthomodular;
    ax["paraorthomodular_equational"] = c.bz ? paraorthomodular_equational(A) : false;
    j["axioms"] = ax;
    if (!as_json)
      std::cout << "  axioms: PK=" << c.pseudo_kleene << " BZ=" << c.bz
                << " (*)=" << (c.bz && satisfies_star(A)) << " paraOM=" << c.paraorthomodular
                << "\n";
  }
  if (sets) {
    ElementSets es = element_sets(A);
    j["sets"] = json{{"sharp", mask_names(A, es.sharp)},
                     {"dense", mask_names(A, es.dense)},
                     {"t", mask_names(A, es.t_set)},
                     {"central", mask_names(A, es.central)}};
    if (!as_json)
      std::cout << "  S = " << mask_names(A, es.sharp) << "\n  D = " << mask_names(A, es.dense)
                << "\n  T = " << mask_names(A, es.t_set)
                << "\n  C = " << mask_names(A, es.central) << "\n";
  }
  if (irr) {
    auto r = irreducibility(A, lv);
    j["irreducibility"] =
        json{{"level", level},
             {"simple", r.simple},
             {"subdirectly_irreducible", r.subdirectly_irreducible},
             {"monolith", r.monolith ? r.monolith->to_string(&A.lat) : ""},
             {"directly_irreducible", r.directly_irreducible}};
    if (!as_json) {
      std::cout << "  irreducibility @" << level << ": simple=" << r.simple
                << " SI=" << r.subdirectly_irreducible;
      if (r.monolith) std::cout << " monolith=" << r.monolith->to_string(&A.lat);
      std::cout << " directly_irreducible=" << r.directly_irreducible << "\n";
    }
  }
  bool all_hold = true;
  json jids = json::array();
  for (const auto& is : idents) {
    Identity id = resolve_identity(is);
    auto r = satisfies(A, id);
    all_hold = all_hold && r.holds;
    json ji{{"identity", is}, {"holds", r.holds}};
    if (!r.holds) ji["witness"] = witnessToString(A, r.witness);
    jids.push_back(ji);
    if (!as_json) {
      std::cout << "  " << is << ": " << (r.holds ? "PASS" : "FAIL");
      if (!r.holds) std::cout << " at " << witnessToString(A, r.witness);
      std::cout << "\n";
    }
  }
  j["identities"] = jids;
  if (as_json) std::cout << j.dump(2) << "\n";
  return all_hold ? 0 : 1;
}

// --------------------------------------------------------------------------
// construct
// --------------------------------------------------------------------------
int cmd_construct(const std::vector<std::string>& ordinal,
                  const std::vector<std::string>& horizontal,
                  const std::vector<std::string>& prod, int mo_k, int chain_n,
                  const std::vector<std::string>& caol, const std::string& copy,
                  const std::string& out) {
  BZAlgebra result;
  SumIndexMap im;
  bool have_map = false;
  std::vector<std::string> part_names;

  int chosen = (!ordinal.empty()) + (!horizontal.empty()) + (!prod.empty()) + (mo_k >= 0) +
               (chain_n > 0) + (!caol.empty()) + (!copy.empty());
  if (chosen != 1)
    throw Error(ErrorKind::InvalidArgument, "construct needs exactly one construction option");

  if (!ordinal.empty()) {
    if (ordinal.size() != 2) throw Error(ErrorKind::InvalidArgument, "--ordinal takes two algebras");
    BZAlgebra a = load_algebra(ordinal[0]), b = load_algebra(ordinal[1]);
    // Ordinal sums act on the lattice reducts; the summand involutions do not
    // glue. The result carries the first order involution the sum admits (a
    // deterministic choice) and the trivial Brouwer complement.
    auto [lat, m] = ordinal_sum(a.lat, b.lat);
    im = m;
    have_map = true;
    part_names = {ordinal[0], ordinal[1]};
    auto invs = antitone_involutions(lat);
    if (invs.empty())
      throw Error(ErrorKind::InvalidArgument,
                  "the ordinal sum admits no order involution; it cannot be written as an "
                  "involutive algebra");
    result.lat = lat;
    result.inv = invs.front();
    result.brouwer = trivial_brouwer(lat);
  } else if (!horizontal.empty()) {
    if (horizontal.size() < 2)
      throw Error(ErrorKind::InvalidArgument, "--horizontal takes at least two algebras");
    std::vector<BZAlgebra> parts;
    for (const auto& f : horizontal) parts.push_back(load_algebra(f));
    auto [s, m] = horizontal_sum(parts);
    result = s;
    im = m;
    have_map = true;
    part_names = horizontal;
  } else if (!prod.empty()) {
    if (prod.size() != 2) throw Error(ErrorKind::InvalidArgument, "--product takes two algebras");
    result = product(load_algebra(prod[0]), load_algebra(prod[1]));
  } else if (mo_k >= 0) {
    result = mo(mo_k);
  } else if (chain_n > 0) {
    result = chain(chain_n);
  } else if (!caol.empty()) {
    if (caol.size() != 2)
      throw Error(ErrorKind::InvalidArgument, "--canonical-aol takes M and K");
    BZAlgebra m_alg = load_algebra(caol[0]);
    BZAlgebra k_alg = load_algebra(caol[1]);
    result = canonical_aol(m_alg.lat, k_alg, &im);
    have_map = true;
    part_names = {caol[0], caol[1], caol[0] + "^d"};
  } else if (!copy.empty()) {
    result = load_algebra(copy);
  }

  std::string text = write_algebra(result, have_map ? &im : nullptr,
                                   part_names.empty() ? nullptr : &part_names);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
    os << text;
  }
  return 0;
}

// --------------------------------------------------------------------------
// con
// --------------------------------------------------------------------------
std::string recognize_shape(const FinLattice& L) {
  if (is_chain(L)) return "D" + std::to_string(L.n);
  for (int k = 0; k <= 6; ++k) {
    FinLattice p = chain(1).lat;
    for (int i = 0; i < k; ++i) p = direct_product(p, chain(2).lat);
    if ((1 << k) == L.n && lattice_isomorphic(L, p)) return "D2^" + std::to_string(k);
    if ((1 << k) + 1 == L.n && lattice_isomorphic(L, ordinal_sum(p, chain(2).lat).first))
      return "D2^" + std::to_string(k) + "(+)D2";
  }
  for (int a = 2; a * 2 <= L.n; ++a) {
    if (L.n % a) continue;
    int b = L.n / a;
    if (b < a) break;
    if (lattice_isomorphic(L, direct_product(chain(a).lat, chain(b).lat)))
      return "D" + std::to_string(a) + "xD" + std::to_string(b);
  }
  return "";
}

int cmd_con(const std::string& file, const std::string& level, const std::string& report,
            bool as_json) {
  BZAlgebra A = load_algebra(file);
  Level lv = parse_level(level);
  auto cl = congruence_lattice(A, lv);
  auto r = irreducibility(A, lv);

  json j;
  j["algebra"] = file;
  j["level"] = level;
  j["count"] = cl.size();
  j["con0"] = cl.con0.size();
  j["con01"] = cl.con01.size();
  std::string shape = recognize_shape(cl.order_lattice());
  if (!shape.empty()) j["shape"] = shape;
  if (r.monolith) j["monolith"] = r.monolith->to_string(&A.lat);

  if (as_json) {
    json cons = json::array();
    for (const auto& p : cl.cons) cons.push_back(p.to_string(&A.lat));
    j["congruences"] = cons;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "|Con_" << level << "(" << file << ")| = " << cl.size() << "\n";
  if (!shape.empty()) std::cout << "shape: " << shape << "\n";
  if (r.monolith) std::cout << "monolith: " << r.monolith->to_string(&A.lat) << "\n";
  std::cout << "|Con_01| = " << cl.con01.size() << "\n";
  FinLattice ord = cl.order_lattice();
  if (report == "dot") {
    std::cout << "digraph con {\n  rankdir=BT;\n";
    for (int i = 0; i < cl.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << cl.cons[i].to_string(&A.lat) << "\"];\n";
    for (auto [a, b] : covers_of(ord)) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
  } else {
    for (int i = 0; i < cl.size(); ++i) {
      std::cout << "  [" << i << "] " << cl.cons[i].to_string(&A.lat);
      if (i == cl.delta) std::cout << "  (delta)";
      if (i == cl.nabla) std::cout << "  (nabla)";
      std::cout << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------------------
// verify
// --------------------------------------------------------------------------
int cmd_verify(const std::string& suite, int max_size, unsigned seed, int jobs, bool as_json) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  SuiteOptions opt;
  opt.max_size = max_size;
  opt.seed = seed;
  opt.jobs = jobs;
  bool all_pass = true;
  json out = json::array();
  for (const auto& n : names) {
    SuiteReport rep = run_suite(n, opt);
    all_pass = all_pass && rep.all_pass();
    if (as_json) {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out.push_back(json{{"suite", rep.suite},
                         {"pass", rep.all_pass()},
                         {"instances", rep.instances},
                         {"seconds", rep.seconds},
                         {"checks", checks}});
    } else {
      std::cout << "suite " << rep.suite << ": " << (rep.all_pass() ? "PASS" : "FAIL") << " ("
                << rep.checks.size() << " checks, " << rep.instances << " instances, "
                << rep.seconds << "s)\n";
      for (const auto& c : rep.checks)
        if (!c.pass)
          std::cout << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                    << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

// --------------------------------------------------------------------------
// search
// --------------------------------------------------------------------------
struct Pred {
  enum class Kind { Ident, Flag, Not, And, Or } kind;
  std::string name;
  std::shared_ptr<Pred> a, b;
};

Pred parse_pred_or(const std::string& s, size_t& i);

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

Pred parse_pred_atom(const std::string& s, size_t& i) {
  skip_ws(s, i);
  if (i < s.size() && s[i] == '(') {
    ++i;
    Pred p = parse_pred_or(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw Error(ErrorKind::Parse, "expected ')' in predicate");
    ++i;
    return p;
  }
  if (i < s.size() && s[i] == '!') {
    ++i;
    Pred p;
    p.kind = Pred::Kind::Not;
    p.a = std::make_shared<Pred>(parse_pred_atom(s, i));
    return p;
  }
  size_t start = i;
  while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '\'' || s[i] == '_' ||
                          s[i] == '*'))
    ++i;
  if (start == i) throw Error(ErrorKind::Parse, "expected a predicate name");
  Pred p;
  std::string nm = s.substr(start, i - start);
  if (identity_library().count(nm)) {
    p.kind = Pred::Kind::Ident;
  } else {
    p.kind = Pred::Kind::Flag;
  }
  p.name = nm;
  return p;
}

Pred parse_pred_and(const std::string& s, size_t& i) {
  Pred p = parse_pred_atom(s, i);
  skip_ws(s, i);
  while (i < s.size() && s[i] == '&') {
    ++i;
    Pred q;
    q.kind = Pred::Kind::And;
    q.a = std::make_shared<Pred>(std::move(p));
    q.b = std::make_shared<Pred>(parse_pred_atom(s, i));
    p = std::move(q);
    skip_ws(s, i);
  }
  return p;
}

Pred parse_pred_or(const std::string& s, size_t& i) {
  Pred p = parse_pred_and(s, i);
  skip_ws(s, i);
  while (i < s.size() && s[i] == '|') {
    ++i;
    Pred q;
    q.kind = Pred::Kind::Or;
    q.a = std::make_shared<Pred>(std::move(p));
    q.b = std::make_shared<Pred>(parse_pred_and(s, i));
    p = std::move(q);
    skip_ws(s, i);
  }
  return p;
}

bool eval_pred(const Pred& p, const BZAlgebra& A) {
  switch (p.kind) {
    case Pred::Kind::Not: return !eval_pred(*p.a, A);
    case Pred::Kind::And: return eval_pred(*p.a, A) && eval_pred(*p.b, A);
    case Pred::Kind::Or: return eval_pred(*p.a, A) || eval_pred(*p.b, A);
    case Pred::Kind::Ident: return satisfies(A, named_identity(p.name)).holds;
    case Pred::Kind::Flag: {
      StructureClass c = classify(A);
      const std::string& f = p.name;
      if (f == "BI" || f == "bi") return c.bi;
      if (f == "pseudokleene" || f == "PKA") return c.pseudo_kleene;
      if (f == "paraorthomodular" || f == "para") return c.paraorthomodular;
      if (f == "OL" || f == "ortholattice") return c.ortholattice;
      if (f == "OML" || f == "orthomodular") return c.orthomodular;
      if (f == "BZ") return c.bz;
      if (f == "BZ*" || f == "starBZ") return c.star_bz;
      if (f == "PBZ" || f == "PBZ*") return c.pbz_star;
      if (f == "AOL" || f == "antiortholattice") return c.antiortholattice;
      if (f == "chain") return is_chain(A.lat);
      if (f == "modular") return is_modular(A.lat);
      if (f == "distributive") return is_distributive(A.lat);
      if (f == "simple") {
        auto r = irreducibility(A, Level::BZ);
        return r.simple;
      }
      if (f == "SI") return irreducibility(A, Level::BZ).subdirectly_irreducible;
      if (f == "dirirred") return irreducibility(A, Level::BZ).directly_irreducible;
      throw Error(ErrorKind::Parse, "unknown class flag: " + f);
    }
  }
  return false;
}

int cmd_search(const std::string& pred_text, const std::string& family, int max_size,
               const std::string& out_dir, bool distinct, bool as_json) {
  size_t pos = 0;
  Pred p = parse_pred_or(pred_text, pos);
  skip_ws(pred_text, pos);
  if (pos != pred_text.size()) throw Error(ErrorKind::Parse, "trailing input in predicate");

  std::vector<NamedAlgebra> algs;
  if (family == "hsum") algs = family_hsums(max_size);
  else if (family == "ordinal") algs = family_ordinal_aols(max_size);
  else if (family == "all") {
    algs = family_catalog();
    for (auto& x : family_hsums(max_size)) algs.push_back(std::move(x));
    for (auto& x : family_ordinal_aols(max_size)) algs.push_back(std::move(x));
  } else {
    throw Error(ErrorKind::InvalidArgument, "family must be hsum|ordinal|all");
  }

  json out = json::array();
  int found = 0;
  std::vector<BZAlgebra> kept;
  for (const auto& na : algs) {
    if (na.alg.n() > max_size) continue;
    bool match;
    try {
      match = eval_pred(p, na.alg);
    } catch (const Error& e) {
      if (e.kind == ErrorKind::SizeLimit) continue;  // skip what the budget rejects
      throw;
    }
    if (!match) continue;
    if (distinct) {
      bool dup = false;
      for (const auto& seen : kept)
        if (isomorphic(seen, na.alg)) {
          dup = true;
          break;
        }
      if (dup) continue;
      kept.push_back(na.alg);
    }
    ++found;
    if (as_json) {
      out.push_back(json{{"name", na.name}, {"size", na.alg.n()}});
    } else {
      std::cout << na.name << "  (" << na.alg.n() << " elements)\n";
    }
    if (!out_dir.empty()) {
      std::string fn = out_dir + "/match" + std::to_string(found) + ".alg";
      std::ofstream os(fn);
      os << write_algebra(na.alg);
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  else std::cout << found << " matches\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite PBZ*-lattice toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  auto* check = app.add_subcommand("check", "classify an algebra and test identities");
  std::string check_file, check_level = "bz";
  std::vector<std::string> check_idents;
  bool check_axioms = false, check_sets = false, check_irr = false;
  check->add_option("file", check_file, "algebra file or catalog:NAME")->required();
  check->add_option("--identity", check_idents, "identity names or expressions");
  check->add_flag("--axioms", check_axioms, "report axiom-level diagnostics");
  check->add_flag("--sets", check_sets, "report S/D/T/central sets");
  check->add_flag("--irreducibility", check_irr, "report the irreducibility analysis");
  check->add_option("--level", check_level, "lattice|bi|bz (default bz)");

  auto* construct = app.add_subcommand("construct", "build an algebra and write it out");
  std::vector<std::string> c_ord, c_hor, c_prod, c_caol;
  int c_mo = -1, c_chain = 0;
  std::string c_out, c_copy;
  construct->add_option("--ordinal", c_ord, "ordinal sum of two algebras")->expected(2);
  construct->add_option("--horizontal", c_hor, "horizontal sum of algebras")->expected(-2);
  construct->add_option("--product", c_prod, "direct product of two algebras")->expected(2);
  construct->add_option("--mo", c_mo, "MO_k");
  construct->add_option("--chain", c_chain, "chain D_n");
  construct->add_option("--canonical-aol", c_caol, "canonical antiortholattice M (+) K (+) M^d")
      ->expected(2);
  construct->add_option("--copy", c_copy, "re-emit an algebra (exports catalog entries)");
  construct->add_option("-o,--out", c_out, "output file (default stdout)");

  auto* con = app.add_subcommand("con", "enumerate the congruence lattice");
  std::string con_file, con_level = "bz", con_report = "table";
  con->add_option("file", con_file, "algebra file or catalog:NAME")->required();
  con->add_option("--level", con_level, "lattice|bi|bz (default bz)");
  con->add_option("--report", con_report, "dot|table");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all";
  int v_max = 0, v_jobs = 4;
  unsigned v_seed = 0;
  verify->add_option("--suite", v_suite, "suite name or 'all'");
  verify->add_option("--max-size", v_max, "cap on generated universes");
  verify->add_option("--seed", v_seed, "seed (reserved; enumeration is deterministic)");
  verify->add_option("--jobs", v_jobs, "worker pool width");

  auto* search = app.add_subcommand("search", "scan generated families for a predicate");
  std::string s_pred, s_family = "all", s_out;
  int s_max = 12;
  bool s_distinct = false;
  search->add_option("--predicate", s_pred, "boolean combination of identities and flags")
      ->required();
  search->add_option("--family", s_family, "hsum|ordinal|all");
  search->add_option("--max-size", s_max, "universe cap");
  search->add_option("--out-dir", s_out, "write matching algebras here");
  search->add_flag("--distinct", s_distinct, "collapse isomorphic matches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors map to the exit-code contract
  }

  try {
    if (*check)
      return cmd_check(check_file, check_idents, check_axioms, check_sets, check_irr,
                       check_level, as_json);
    if (*construct)
      return cmd_construct(c_ord, c_hor, c_prod, c_mo, c_chain, c_caol, c_copy, c_out);
    if (*con) return cmd_con(con_file, con_level, con_report, as_json);
    if (*verify) return cmd_verify(v_suite, v_max, v_seed, v_jobs, as_json);
    if (*search) return cmd_search(s_pred, s_family, s_max, s_out, s_distinct, as_json);
  } catch (const Error& e) {
    std::cerr << "error (" << kind_name(e.kind) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
