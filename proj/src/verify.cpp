#include "pbz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <sstream>

#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/families.hpp"
#include "pbz/subalg.hpp"
#include "pbz/sums.hpp"
#include "pbz/terms.hpp"

namespace pbz {

namespace {

using Job = std::pair<std::string, std::function<CheckResult()>>;

std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs, int width) {
  std::vector<CheckResult> out(jobs.size());
  if (width < 1) width = 1;
  size_t next = 0;
  while (next < jobs.size()) {
    size_t batch = std::min((size_t)width, jobs.size() - next);
    std::vector<std::future<CheckResult>> futs;
    for (size_t i = 0; i < batch; ++i)
      futs.push_back(std::async(std::launch::async, jobs[next + i].second));
    for (size_t i = 0; i < batch; ++i) {
      try {
        out[next + i] = futs[i].get();
      } catch (const std::exception& e) {
        out[next + i] = {jobs[next + i].first, false, std::string("exception: ") + e.what()};
      }
      if (out[next + i].name.empty()) out[next + i].name = jobs[next + i].first;
    }
    next += batch;
  }
  return out;
}

CheckResult simple_check(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

FinLattice d2_power(int k) {
  FinLattice L = chain(1).lat;
  for (int i = 0; i < k; ++i) L = direct_product(L, chain(2).lat);
  return L;
}

bool charg3(const BZAlgebra& A) {
  ElementSets es = element_sets(A);
  return (es.sharp | es.t_set) == A.lat.universe();
}

bool sat(const BZAlgebra& A, const std::string& ident) {
  return satisfies(A, named_identity(ident)).holds;
}

std::string witness_str(const BZAlgebra& A, const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + A.name_of(w[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Criterion 1: Con_BI(D_n) = D_2^{n/2}, Con_BZL(D_n) = D_2^{n/2-1} (+) D_2.
// ---------------------------------------------------------------------------
SuiteReport suite_chain_congruences(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "chain-congruences";
  int maxn = opt.max_size ? opt.max_size : 9;
  std::vector<Job> jobs;
  for (int n = 2; n <= maxn; ++n) {
    jobs.push_back({"D" + std::to_string(n), [n]() {
      BZAlgebra A = chain(n);
      int k = n / 2;
      auto con_bi = congruence_lattice(A, Level::BI);
      bool ok_bi = lattice_isomorphic(con_bi.order_lattice(), d2_power(k));
      auto con_bz = congruence_lattice(A, Level::BZ);
      FinLattice expect_bz = ordinal_sum(d2_power(k - 1), chain(2).lat).first;
      bool ok_bz = lattice_isomorphic(con_bz.order_lattice(), expect_bz);
      std::ostringstream d;
      d << "|Con_BI|=" << con_bi.size() << " vs 2^" << k << ", |Con_BZL|=" << con_bz.size();
      return simple_check("Con_BI(D" + std::to_string(n) + ")=D2^" + std::to_string(k) +
                              ", Con_BZL=D2^" + std::to_string(k - 1) + "(+)D2",
                          ok_bi && ok_bz, d.str());
    }});
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 2: SI chains are D1..D3 (BI level) and D1..D5 (antiortholattices).
// ---------------------------------------------------------------------------
SuiteReport suite_si_chains(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "si-chains";
  int maxn = opt.max_size ? opt.max_size : 9;
  std::vector<Job> jobs;
  for (int n = 1; n <= maxn; ++n) {
    jobs.push_back({"D" + std::to_string(n), [n]() {
      BZAlgebra A = chain(n);
      bool si_bi = irreducibility(A, Level::BI).subdirectly_irreducible;
      bool si_bz = irreducibility(A, Level::BZ).subdirectly_irreducible;
      bool ok = (si_bi == (n <= 3)) && (si_bz == (n <= 5));
      std::ostringstream d;
      d << "SI(BI)=" << si_bi << " SI(BZL)=" << si_bz;
      return simple_check("D" + std::to_string(n) + " subdirect irreducibility", ok, d.str());
    }});
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = maxn;
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 3: the recorded identity table for M3, K, L7, M11, with the
// recorded witnesses. Expectations are asserted exactly as recorded; see the
// M11 catalog notes for the two entries that direct computation contradicts.
// ---------------------------------------------------------------------------
SuiteReport suite_exfail12(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "exfail12";
  auto get = [](const char* n) { return catalog_find(n)->alg; };
  std::vector<Job> jobs;

  auto expect_sat = [&](const char* alg, const char* ident, bool want) {
    std::string nm = std::string(alg) + (want ? " satisfies " : " fails ") + ident;
    jobs.push_back({nm, [alg, ident, want, get, nm]() {
      BZAlgebra A = get(alg);
      auto r = satisfies(A, named_identity(ident));
      std::string d = r.holds ? "holds" : "fails at " + witness_str(A, r.witness);
      return simple_check(nm, r.holds == want, d);
    }});
  };
  auto expect_fails_at = [&](const char* alg, const char* ident,
                             std::vector<std::string> w) {
    std::string nm = std::string(alg) + " fails " + ident + " at (";
    for (size_t i = 0; i < w.size(); ++i) nm += (i ? "," : "") + w[i];
    nm += ")";
    jobs.push_back({nm, [alg, ident, w, get, nm]() {
      BZAlgebra A = get(alg);
      const Identity& id = named_identity(ident);
      std::vector<int> asg;
      for (const auto& s : w) asg.push_back(A.index_of(s));
      int l = eval(id.lhs, A, asg), r = eval(id.rhs, A, asg);
      std::ostringstream d;
      d << "lhs=" << A.name_of(l) << " rhs=" << A.name_of(r);
      return simple_check(nm, l != r, d.str());
    }});
  };

  expect_sat("M3", "WSDM", false);
  expect_sat("K", "S2", true);
  expect_sat("K", "S3", true);
  expect_sat("K", "J2", false);
  // the recorded J2 witness: (u ^ s) v (u ^ s') = 0 != u
  jobs.push_back({"K J2 witness values", [get]() {
    BZAlgebra A = get("K");
    int u = A.index_of("u"), s = A.index_of("s"), sp = A.index_of("s'"), t = A.index_of("t");
    bool values = A.join(A.meet(u, s), A.meet(u, sp)) == A.bot();
    // and that assignment (u,t) falsifies J2: (y^y')~ = t~ = s, <>(y^y') = s'
    const Identity& j2 = named_identity("J2");
    bool fails = eval(j2.lhs, A, {u, t}) != eval(j2.rhs, A, {u, t});
    bool maps = A.bro(t) == s && A.diamond(t) == sp;
    return simple_check("K J2 witness values", values && fails && maps,
                        "(u^s)v(u^s') = 0 != u");
  }});
  expect_sat("L7", "J1", false);
  expect_fails_at("L7", "J1", {"u", "t"});
  expect_sat("L7", "S2", false);
  expect_sat("L7", "S3", true);
  expect_sat("L7", "J2", false);
  expect_sat("M11", "J1", true);   // recorded verdict; computation says J1 fails
  expect_sat("M11", "S1", false);  // recorded verdict; computation says S1 holds
  expect_fails_at("M11", "S1", {"z'", "a"});
  expect_sat("M11", "J2", false);
  expect_sat("M11", "S2", false);
  expect_sat("M11", "S3", false);

  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 4: Con_BI(M(+)K(+)M^d) = {a(+)b(+)a'} = Con(M) x Con_BI(K) and
// Con_BZL = (Con_0(M) x Con_BI(K)) (+) D2, by explicit bijection against
// enumeration.
// ---------------------------------------------------------------------------
CheckResult check_mainthaol_pair(const std::string& mname, const FinLattice& M,
                                 const std::string& kname, const BZAlgebra& K) {
  std::string nm = mname + "(+)" + kname + "(+)" + mname + "^d";
  BZAlgebra L = canonical_aol(M, K);
  FinLattice MK = ordinal_sum(M, K.lat).first;
  FinLattice Md = dual(M);

  auto con_m = congruence_lattice(M);
  auto con_bik = congruence_lattice(K, Level::BI);
  auto embed = [&](const Partition& alpha, const Partition& beta) {
    Partition s1 = sum_congruence_ordinal(M, alpha, K.lat, beta);
    return sum_congruence_ordinal(MK, s1, Md, alpha);
  };

  // BI level: image set must equal the enumeration, and the map must be an
  // order isomorphism from the componentwise order.
  auto con_bi = congruence_lattice(L, Level::BI);
  std::vector<Partition> image;
  for (const auto& a : con_m.cons)
    for (const auto& b : con_bik.cons) image.push_back(embed(a, b));
  std::vector<Partition> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  bool set_eq = sorted_image == con_bi.cons &&
                sorted_image.size() ==
                    (size_t)(con_m.size() * con_bik.size());  // injectivity
  bool order_iso = true;
  for (int i = 0; i < con_m.size() && order_iso; ++i)
    for (int j = 0; j < con_bik.size() && order_iso; ++j)
      for (int k = 0; k < con_m.size() && order_iso; ++k)
        for (int l = 0; l < con_bik.size(); ++l) {
          bool comp = con_m.cons[i].refines(con_m.cons[k]) &&
                      con_bik.cons[j].refines(con_bik.cons[l]);
          bool img = image[i * con_bik.size() + j].refines(image[k * con_bik.size() + l]);
          if (comp != img) {
            order_iso = false;
            break;
          }
        }
  bool abstract_bi =
      lattice_isomorphic(con_bi.order_lattice(),
                         direct_product(con_m.order_lattice(), con_bik.order_lattice()));

  // BZ level: alpha restricted to Con_0(M), plus the all relation.
  auto con_bz = congruence_lattice(L, Level::BZ);
  std::vector<Partition> image_bz;
  for (int ia : con_m.con0)
    for (const auto& b : con_bik.cons) image_bz.push_back(embed(con_m.cons[ia], b));
  image_bz.push_back(Partition::all(L.n()));
  std::sort(image_bz.begin(), image_bz.end());
  image_bz.erase(std::unique(image_bz.begin(), image_bz.end()), image_bz.end());
  bool set_eq_bz = image_bz == con_bz.cons;
  FinLattice expect_bz =
      ordinal_sum(direct_product(con_m.order_lattice_of(con_m.con0), con_bik.order_lattice()),
                  chain(2).lat)
          .first;
  bool abstract_bz = lattice_isomorphic(con_bz.order_lattice(), expect_bz);

  std::ostringstream d;
  d << "|Con_BI|=" << con_bi.size() << " |Con_BZL|=" << con_bz.size();
  if (!set_eq) d << " [BI set mismatch]";
  if (!order_iso) d << " [BI order mismatch]";
  if (!abstract_bi) d << " [BI shape mismatch]";
  if (!set_eq_bz) d << " [BZ set mismatch]";
  if (!abstract_bz) d << " [BZ shape mismatch]";
  return simple_check(nm, set_eq && order_iso && abstract_bi && set_eq_bz && abstract_bz,
                      d.str());
}

SuiteReport suite_mainthaol(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "mainthaol";
  std::vector<std::pair<std::string, FinLattice>> ms = {
      {"D2", chain(2).lat},
      {"D3", chain(3).lat},
      {"D2^2", mo(1).lat},
      {"M3l", catalog_find("M3")->alg.lat},
  };
  std::vector<std::pair<std::string, BZAlgebra>> ks = {
      {"D1", chain(1)}, {"D2", chain(2)}, {"D3", chain(3)}, {"D2^2", mo(1)}, {"MO2", mo(2)},
  };
  std::vector<Job> jobs;
  for (const auto& [mn, M] : ms)
    for (const auto& [kn, K] : ks)
      jobs.push_back({mn + "(+)" + kn, [mn, M, kn, K]() {
        return check_mainthaol_pair(mn, M, kn, K);
      }});
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 5: Con_BZL(A[+]B) = {a[+]b} u {nabla} = (Con01(A) x Con01(B)) (+) D2,
// and = Con_BZL(B) when A is orthomodular and B an antiortholattice.
// ---------------------------------------------------------------------------
CheckResult check_cghsum_pair(const NamedAlgebra& a, const NamedAlgebra& b) {
  std::string nm = a.name + "[+]" + b.name;
  BZAlgebra X = hsum(a.alg, b.alg);
  StructureClass cx = classify(X);
  if (!cx.bz) return simple_check(nm, true, "skipped: not a BZ-lattice");

  auto con_x = congruence_lattice(X, Level::BZ);
  auto con_a = congruence_lattice(a.alg, Level::BZ);
  auto con_b = congruence_lattice(b.alg, Level::BZ);

  std::vector<Partition> image;
  for (int ia : con_a.con01)
    for (int ib : con_b.con01)
      image.push_back(
          sum_congruence_horizontal({con_a.cons[ia], con_b.cons[ib]}, {&a.alg, &b.alg}));
  image.push_back(Partition::all(X.n()));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  bool set_eq = image == con_x.cons;

  FinLattice expect =
      ordinal_sum(direct_product(con_a.order_lattice_of(con_a.con01),
                                 con_b.order_lattice_of(con_b.con01)),
                  chain(2).lat)
          .first;
  bool shape = lattice_isomorphic(con_x.order_lattice(), expect);

  bool aol_case = true;
  if (classify(a.alg).orthomodular && classify(b.alg).antiortholattice)
    aol_case = lattice_isomorphic(con_x.order_lattice(), con_b.order_lattice());

  std::ostringstream d;
  d << "|Con_BZL|=" << con_x.size();
  if (!set_eq) d << " [set mismatch]";
  if (!shape) d << " [shape mismatch]";
  if (!aol_case) d << " [OML[+]AOL case mismatch]";
  return simple_check(nm, set_eq && shape && aol_case, d.str());
}

SuiteReport suite_cghsum(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "cghsum";
  auto cat = family_catalog();
  std::vector<Job> jobs;
  for (const auto& a : cat) {
    if (a.alg.n() <= 2) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2) continue;
      if (opt.max_size && a.alg.n() + b.alg.n() - 2 > opt.max_size) continue;
      jobs.push_back({a.name + "[+]" + b.name,
                      [a, b]() { return check_cghsum_pair(a, b); }});
    }
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 6: the nine membership conditions agree on every catalog algebra
// and every generated horizontal sum within the size bound.
// ---------------------------------------------------------------------------
SuiteReport suite_charg(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "charg";
  int max_size = opt.max_size ? opt.max_size : 14;
  std::vector<NamedAlgebra> algs = family_catalog();
  for (auto& x : family_hsums(max_size)) algs.push_back(std::move(x));

  std::vector<Job> jobs;
  for (const auto& na : algs) {
    if (na.alg.n() < 2) continue;  // the characterization concerns nontrivial algebras
    jobs.push_back({na.name, [na]() {
      auto c = charg_conditions(na.alg);
      bool agree = std::all_of(c.begin(), c.end(), [&](bool v) { return v == c[0]; });
      std::string d = "conditions:";
      for (bool v : c) d += v ? " 1" : " 0";
      return simple_check(na.name, agree, d);
    }});
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 7: transfer of S1,S2,S3,J1 across A[+]B, and J2 iff OML[+]AOL
// membership of B.
// ---------------------------------------------------------------------------
SuiteReport suite_axhsum(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "axhsum";
  int max_size = opt.max_size ? opt.max_size : kMaxUniverse;
  std::vector<Job> jobs;
  for (const char* an : {"MO1", "MO2", "MO3"}) {
    const CatalogEntry* ae = catalog_find(an);
    for (const auto& b : family_catalog()) {
      if (b.alg.n() < 2) continue;
      if (ae->alg.n() + b.alg.n() - 2 > max_size) continue;
      std::string nm = std::string(an) + "[+]" + b.name;
      BZAlgebra A = ae->alg;
      jobs.push_back({nm, [nm, A, b]() {
        BZAlgebra X = hsum(A, b.alg);
        if (!classify(X).pbz_star)
          return simple_check(nm, false, "sum with an orthomodular part is not PBZ*");
        bool ok = true;
        std::string d;
        for (const char* ident : {"S1", "S2", "S3", "J1"}) {
          bool lhs = sat(X, ident), rhs = sat(b.alg, ident);
          if (lhs != rhs) {
            ok = false;
            d += std::string(" [") + ident + " transfer broken]";
          }
        }
        bool j2 = sat(X, "J2");
        bool member = charg3(b.alg);
        if (j2 != member) {
          ok = false;
          d += " [J2 iff membership broken]";
        }
        return simple_check(nm, ok, d.empty() ? "five equivalences hold" : d);
      }});
    }
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 8: every antiortholattice on <= 6 elements has a directly
// irreducible lattice reduct; the simple ones satisfying SDM are exactly
// D1, D2, D3.
// ---------------------------------------------------------------------------


SuiteReport suite_small_aol(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "small-aol";
  int maxn = opt.max_size ? opt.max_size : 6;

  long long aol_count = 0, reducible = 0;
  std::vector<BZAlgebra> simple_sdm;
  for (int n = 1; n <= maxn; ++n) {
    auto lats = small_lattices(n);
    for (const auto& L : lats) {
      for (const auto& f : antitone_involutions(L)) {
        BZAlgebra A;
        A.lat = L;
        A.inv = f;
        A.brouwer = trivial_brouwer(L);
        Mask sharp = 0;
        for (int x = 0; x < n; ++x)
          if (A.meet(x, A.kle(x)) == A.bot()) sharp |= bit(x);
        if (sharp != (bit(A.bot()) | bit(A.top()))) continue;
        if (!classify(A).antiortholattice) continue;
        aol_count++;
        auto lr = irreducibility(L);
        if (!lr.directly_irreducible) reducible++;
        auto cz = congruence_lattice(A, Level::BZ);
        bool simple = n == 1 || cz.size() == 2;
        if (simple && sat(A, "SDM")) simple_sdm.push_back(A);
      }
    }
  }

  CheckResult c1;
  c1.name = "lattice reducts directly irreducible";
  c1.pass = reducible == 0;
  c1.detail = std::to_string(aol_count) + " antiortholattices scanned";
  if (reducible) c1.detail += ", " + std::to_string(reducible) + " reducible";

  bool classes_ok = true;
  bool seen[3] = {false, false, false};
  for (const auto& A : simple_sdm) {
    bool matched = false;
    for (int i = 0; i < 3; ++i)
      if (isomorphic(A, chain(i + 1))) {
        seen[i] = true;
        matched = true;
        break;
      }
    if (!matched) classes_ok = false;
  }
  CheckResult c2;
  c2.name = "simple + SDM antiortholattices are exactly D1, D2, D3";
  c2.pass = classes_ok && seen[0] && seen[1] && seen[2];
  c2.detail = std::to_string(simple_sdm.size()) + " simple SDM instances";

  rep.checks = {c1, c2};
  rep.instances = aol_count;
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 9: one-generated subalgebras of OML[+]AOL members land in the five
// recorded types, with no UnexpectedType errors.
// ---------------------------------------------------------------------------
SuiteReport suite_singleton(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "singleton";
  int max_size = opt.max_size ? opt.max_size : 14;
  std::vector<NamedAlgebra> algs = family_catalog();
  for (auto& x : family_hsums(max_size)) algs.push_back(std::move(x));
  for (auto& x : family_ordinal_aols(max_size)) algs.push_back(std::move(x));

  long long elements = 0, errors = 0;
  std::map<std::string, long long> histogram;
  std::vector<std::string> witnesses;
  for (const auto& na : algs) {
    if (!charg3(na.alg)) continue;
    for (int a = 0; a < na.alg.n(); ++a) {
      ++elements;
      try {
        histogram[singleton_class_name(singleton_class(na.alg, a))]++;
      } catch (const Error& e) {
        if (e.kind != ErrorKind::UnexpectedType) throw;
        ++errors;
        if (witnesses.size() < 4)
          witnesses.push_back(na.name + ": " + std::string(e.what()));
      }
    }
  }
  CheckResult c;
  c.name = "zero UnexpectedType over one-generated subalgebras";
  c.pass = errors == 0;
  std::ostringstream d;
  d << elements << " elements classified";
  for (const auto& [k, v] : histogram) d << ", " << k << ":" << v;
  if (errors) {
    d << "; " << errors << " UnexpectedType errors, e.g. ";
    for (size_t i = 0; i < witnesses.size(); ++i) d << (i ? " | " : "") << witnesses[i];
  }
  c.detail = d.str();
  rep.checks = {c};
  rep.instances = elements;
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 10: join-closure enumeration equals brute-force partition
// filtering on every catalog algebra with at most 6 elements, at all levels.
// ---------------------------------------------------------------------------
SuiteReport suite_con_oracle(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "con-oracle";
  int max_size = opt.max_size ? opt.max_size : 6;
  std::vector<Job> jobs;
  for (const auto& na : family_catalog()) {
    if (na.alg.n() > max_size) continue;
    jobs.push_back({na.name, [na]() {
      bool ok = true;
      std::string d;
      for (Level lv : {Level::Lattice, Level::BI, Level::BZ}) {
        auto fast = congruence_lattice(na.alg, lv).cons;
        auto slow = congruences_bruteforce(na.alg, lv);
        if (fast != slow) {
          ok = false;
          d += std::string(" [") + level_name(lv) + " mismatch]";
        } else {
          d += std::string(" ") + level_name(lv) + ":" + std::to_string(fast.size());
        }
      }
      return simple_check(na.name, ok, d);
    }});
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)rep.checks.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Criterion 11: identity implication suite and the J2/S2/S3 direct-
// irreducibility consequence.
// ---------------------------------------------------------------------------
SuiteReport suite_implications(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "implications";
  int max_size = opt.max_size ? opt.max_size : 14;
  std::vector<NamedAlgebra> algs = family_catalog();
  for (auto& x : family_hsums(max_size)) algs.push_back(std::move(x));
  for (auto& x : family_ordinal_aols(max_size)) algs.push_back(std::move(x));

  std::vector<Job> jobs;
  for (const auto& na : algs) {
    jobs.push_back({na.name, [na]() {
      std::map<std::string, bool> v;
      for (const char* id : {"SDM", "WSDM", "S1", "S1'", "S2", "S3", "J0", "J1", "J1'", "J2"})
        v[id] = sat(na.alg, id);
      bool ok = true;
      std::string d;
      auto imp = [&](const char* a, const char* b) {
        if (v[a] && !v[b]) {
          ok = false;
          d += std::string(" [") + a + " => " + b + " broken]";
        }
      };
      imp("SDM", "WSDM");
      imp("WSDM", "S1");
      imp("WSDM", "S2");
      imp("WSDM", "S3");
      imp("J0", "J1");
      imp("J0", "J2");
      imp("J0", "WSDM");
      if (v["J1"] != v["J1'"]) {
        ok = false;
        d += " [J1 <=> J1' broken]";
      }
      if (v["S1"] != v["S1'"]) {
        ok = false;
        d += " [S1 <=> S1' broken]";
      }
      if (v["J2"] && v["S2"] && v["S3"]) {
        bool dirirred = irreducibility(na.alg, Level::BZ).directly_irreducible;
        if (dirirred && !charg3(na.alg)) {
          ok = false;
          d += " [J2,S2,S3 + directly irreducible but not OML[+]AOL]";
        }
      }
      return simple_check(na.name, ok, d.empty() ? "implications hold" : d);
    }});
  }
  rep.checks = run_jobs(jobs, opt.jobs);
  rep.instances = (long long)jobs.size();
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "chain-congruences", "si-chains", "exfail12", "mainthaol", "cghsum", "charg",
      "axhsum", "small-aol", "singleton", "con-oracle", "implications"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "chain-congruences") rep = suite_chain_congruences(opt);
  else if (name == "si-chains") rep = suite_si_chains(opt);
  else if (name == "exfail12") rep = suite_exfail12(opt);
  else if (name == "mainthaol") rep = suite_mainthaol(opt);
  else if (name == "cghsum") rep = suite_cghsum(opt);
  else if (name == "charg") rep = suite_charg(opt);
  else if (name == "axhsum") rep = suite_axhsum(opt);
  else if (name == "small-aol") rep = suite_small_aol(opt);
  else if (name == "singleton") rep = suite_singleton(opt);
  else if (name == "con-oracle") rep = suite_con_oracle(opt);
  else if (name == "implications") rep = suite_implications(opt);
  else throw Error(ErrorKind::InvalidArgument, "unknown suite: " + name);
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pbz
