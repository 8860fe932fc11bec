#include <algorithm>

#include "doctest.h"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/families.hpp"
#include "pbz/structures.hpp"
#include "pbz/subalg.hpp"
#include "pbz/sums.hpp"

using namespace pbz;

TEST_CASE("partition plumbing") {
  Partition a = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  Partition b = Partition::from_blocks(4, {{0}, {1, 2}, {3}});
  CHECK(a.refines(partition_join(a, b)));
  CHECK(partition_join(a, b) == Partition::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(partition_meet(a, b) == Partition::identity(4));
  CHECK(Partition::all(4).blocks == 1);
  CHECK_THROWS_AS((void)Partition::from_blocks(3, {{0, 1}}), Error);
}

TEST_CASE("delta and nabla are congruences at every level") {
  for (const auto& e : load_catalog()) {
    for (Level lv : {Level::Lattice, Level::BI, Level::BZ}) {
      CHECK(is_congruence(e.alg, Partition::identity(e.alg.n()), lv));
      CHECK(is_congruence(e.alg, Partition::all(e.alg.n()), lv));
    }
  }
}

TEST_CASE("middle collapse on the 4-chain is a BZ congruence") {
  BZAlgebra d4 = chain(4);
  Partition mid = Partition::from_blocks(4, {{0}, {1, 2}, {3}});
  CHECK(is_congruence(d4, mid, Level::BZ));
  // a congruence of an antiortholattice collapsing 0 with anything is improper
  for (const auto& e : load_catalog()) {
    const BZAlgebra& A = e.alg;
    if (A.n() < 2 || !classify(A).antiortholattice) continue;
    auto cl = congruence_lattice(A, Level::BZ);
    for (const auto& th : cl.cons) {
      if (th.is_all()) continue;
      for (int x = 0; x < A.n(); ++x)
        if (x != A.bot()) CHECK(!th.same(x, A.bot()));
    }
  }
}

TEST_CASE("principal congruences") {
  BZAlgebra d4 = chain(4);
  CHECK(principal_congruence(d4, 2, 2, Level::BZ).is_identity());
  // collapsing 0 with anything in an antiortholattice gives the full relation
  for (int x = 1; x < 4; ++x)
    CHECK(principal_congruence(d4, 0, x, Level::BZ).is_all());
  CHECK(principal_congruence(mo(2), 0, 1, Level::BZ).is_all());
}

TEST_CASE("lattice congruences of chains form Boolean powers") {
  for (int n = 2; n <= 6; ++n) {
    auto cl = congruence_lattice(chain(n).lat);
    CHECK(cl.size() == (1 << (n - 1)));
  }
  FinLattice cube = direct_product(direct_product(chain(2).lat, chain(2).lat), chain(2).lat);
  CHECK(lattice_isomorphic(congruence_lattice(chain(4).lat).order_lattice(), cube));
}

TEST_CASE("antiortholattice BZ congruences are the 01-kernel plus nabla") {
  for (const auto& e : load_catalog()) {
    const BZAlgebra& A = e.alg;
    if (A.n() < 2 || A.n() > 11 || !classify(A).antiortholattice) continue;
    auto bz = congruence_lattice(A, Level::BZ);
    auto bi = congruence_lattice(A, Level::BI);
    std::vector<Partition> expect;
    for (int i : bi.con01) expect.push_back(bi.cons[i]);
    expect.push_back(Partition::all(A.n()));
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    CHECK(bz.cons == expect);
    // unique coatom = max(Con_BI01)
    FinLattice ord = bz.order_lattice();
    CHECK(order_profile(ord).coatoms.size() == 1);
  }
}

TEST_CASE("ordinal sum congruences compose blockwise") {
  FinLattice d2 = chain(2).lat;
  Partition nabla2 = Partition::all(2), delta2 = Partition::identity(2);
  Partition r = sum_congruence_ordinal(d2, nabla2, d2, delta2);
  CHECK(r == Partition::from_blocks(3, {{0, 1}, {2}}));
  CHECK(sum_congruence_ordinal(d2, delta2, d2, delta2).is_identity());
  CHECK(sum_congruence_ordinal(d2, nabla2, d2, nabla2).is_all());

  // (alpha, beta) -> alpha (+) beta is a lattice isomorphism onto Con(L (+) M)
  for (const FinLattice& L : {chain(3).lat, mo(1).lat}) {
    for (const FinLattice& M : {chain(2).lat, mo(1).lat}) {
      auto cl = congruence_lattice(L);
      auto cm = congruence_lattice(M);
      auto sum = ordinal_sum(L, M).first;
      auto cs = congruence_lattice(sum);
      std::vector<Partition> image;
      for (const auto& a : cl.cons)
        for (const auto& b : cm.cons) image.push_back(sum_congruence_ordinal(L, a, M, b));
      std::sort(image.begin(), image.end());
      CHECK((int)image.size() == cl.size() * cm.size());
      CHECK(image == cs.cons);
      CHECK(lattice_isomorphic(cs.order_lattice(),
                               direct_product(cl.order_lattice(), cm.order_lattice())));
    }
  }
}

TEST_CASE("horizontal sum congruences glue the bound classes") {
  BZAlgebra a = mo(1), b = chain(4);
  BZAlgebra x = hsum(a, b);
  Partition alpha = Partition::identity(4);
  Partition beta = Partition::from_blocks(4, {{0}, {1, 2}, {3}});
  Partition r = sum_congruence_horizontal({alpha, beta}, {&a, &b});
  CHECK(r.n() == x.n());
  CHECK(is_congruence(x, r, Level::BZ));
  // the chain interior (sum indices 3,4) is collapsed, nothing else
  CHECK(r.same(3, 4));
  CHECK(!r.same(1, 2));
  CHECK(!r.same(0, 3));

  // identity glues to identity; a proper part with D2 passes through
  Partition d = sum_congruence_horizontal({Partition::identity(4), Partition::identity(4)},
                                          {&a, &b});
  CHECK(d.is_identity());
  CHECK_THROWS_AS(
      (void)sum_congruence_horizontal({Partition::all(4), beta}, {&a, &b}), Error);

  BZAlgebra d2 = chain(2);
  BZAlgebra y = hsum(d2, b);  // = b
  Partition pass = sum_congruence_horizontal({Partition::identity(2), beta}, {&d2, &b});
  CHECK(pass == beta);
}

TEST_CASE("full congruences of sums coincide with lattice congruences on proper glued pairs") {
  std::vector<std::pair<BZAlgebra, BZAlgebra>> pairs = {{mo(1), chain(3)},
                                                        {mo(2), chain(4)},
                                                        {mo(1), catalog_find("L7")->alg}};
  for (const auto& [a, b] : pairs) {
    BZAlgebra x = hsum(a, b);
    for (Level lv : {Level::BI, Level::BZ}) {
      auto ca = congruence_lattice(a, lv);
      auto cb = congruence_lattice(b, lv);
      for (const auto& alpha : ca.cons) {
        if (alpha.is_all()) continue;
        for (const auto& beta : cb.cons) {
          if (beta.is_all()) continue;
          Partition s = sum_congruence_horizontal({alpha, beta}, {&a, &b});
          CHECK(is_congruence(x, s, lv) == is_congruence(x.lat, s));
        }
      }
    }
  }
}

TEST_CASE("irreducibility reports") {
  auto d5 = irreducibility(chain(5), Level::BZ);
  CHECK(d5.subdirectly_irreducible);
  CHECK(!d5.simple);
  CHECK(d5.monolith.has_value());

  auto d6 = irreducibility(chain(6), Level::BZ);
  CHECK(!d6.subdirectly_irreducible);
  CHECK(!d6.monolith.has_value());

  auto d3 = irreducibility(chain(3), Level::BZ);
  CHECK(d3.simple);
  CHECK(d3.subdirectly_irreducible);

  // the Boolean square decomposes; the factor pair permutes
  auto sq = irreducibility(mo(1), Level::BZ);
  CHECK(!sq.directly_irreducible);
  REQUIRE(sq.factor_pair.has_value());
  auto [t, z] = *sq.factor_pair;
  CHECK(partition_meet(t, z).is_identity());
  CHECK(partition_join(t, z).is_all());
  CHECK(compose_is_all(t, z));

  // simple implies SI; monolith present iff SI and nontrivial
  for (const auto& e : load_catalog()) {
    if (e.alg.n() > 11) continue;
    auto r = irreducibility(e.alg, Level::BZ);
    if (r.simple) CHECK(r.subdirectly_irreducible);
    CHECK(r.monolith.has_value() == (r.subdirectly_irreducible && e.alg.n() > 1));
  }
}

TEST_CASE("Con_01 is closed under the meets and joins of Con") {
  for (const auto& e : load_catalog()) {
    if (e.alg.n() > 9) continue;
    for (Level lv : {Level::Lattice, Level::BI, Level::BZ}) {
      auto cl = congruence_lattice(e.alg, lv);
      for (int i : cl.con01)
        for (int j : cl.con01) {
          Partition m = partition_meet(cl.cons[i], cl.cons[j]);
          Partition jn = partition_join(cl.cons[i], cl.cons[j]);
          auto in01 = [&](const Partition& p) {
            int k = cl.index_of(p);
            REQUIRE(k >= 0);
            return std::find(cl.con01.begin(), cl.con01.end(), k) != cl.con01.end();
          };
          CHECK(in01(m));
          CHECK(in01(jn));
        }
    }
  }
}

TEST_CASE("lattice-level Con_01 of a product is the product of the Con_01s") {
  std::vector<FinLattice> small;
  for (const auto& e : load_catalog())
    if (e.alg.n() >= 2 && e.alg.n() <= 8) small.push_back(e.alg.lat);
  int done = 0;
  for (const auto& L : small) {
    for (const auto& M : small) {
      if (L.n * M.n > 24 || done > 30) continue;
      ++done;
      FinLattice P = direct_product(L, M);
      auto cp = congruence_lattice(P);
      auto cl = congruence_lattice(L);
      auto cm = congruence_lattice(M);
      std::vector<Partition> expect;
      for (int i : cl.con01)
        for (int j : cm.con01) expect.push_back(product_partition(cl.cons[i], cm.cons[j]));
      std::sort(expect.begin(), expect.end());
      std::vector<Partition> got;
      for (int i : cp.con01) got.push_back(cp.cons[i]);
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
    }
  }
  CHECK(done > 0);
}

TEST_CASE("canonical antiortholattice congruence structure over all small M and K") {
  // exhaustive over bounded lattices M and involutive K with small universes
  for (int nm = 2; nm <= 5; ++nm) {
    for (const FinLattice& M : small_lattices(nm)) {
      for (int nk = 1; nk <= 5; ++nk) {
        for (const FinLattice& KL : small_lattices(nk)) {
          for (const auto& f : antitone_involutions(KL)) {
            BZAlgebra K;
            K.lat = KL;
            K.inv = f;
            K.brouwer = trivial_brouwer(KL);
            if (!classify(K).pseudo_kleene) continue;
            BZAlgebra L = canonical_aol(M, K);
            FinLattice MK = ordinal_sum(M, K.lat).first;
            FinLattice Md = dual(M);
            auto con_m = congruence_lattice(M);
            auto con_bik = congruence_lattice(K, Level::BI);
            auto embed = [&](const Partition& a, const Partition& b) {
              return sum_congruence_ordinal(MK, sum_congruence_ordinal(M, a, KL, b), Md, a);
            };
            std::vector<Partition> bi_img;
            for (const auto& a : con_m.cons)
              for (const auto& b : con_bik.cons) bi_img.push_back(embed(a, b));
            std::sort(bi_img.begin(), bi_img.end());
            CHECK(bi_img == congruence_lattice(L, Level::BI).cons);

            std::vector<Partition> bz_img;
            for (int ia : con_m.con0)
              for (const auto& b : con_bik.cons) bz_img.push_back(embed(con_m.cons[ia], b));
            bz_img.push_back(Partition::all(L.n()));
            std::sort(bz_img.begin(), bz_img.end());
            bz_img.erase(std::unique(bz_img.begin(), bz_img.end()), bz_img.end());
            CHECK(bz_img == congruence_lattice(L, Level::BZ).cons);
          }
        }
      }
    }
  }
}

TEST_CASE("simplicity and subdirect irreducibility of glued sums") {
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() <= 2 || !classify(a.alg).orthomodular) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2 || b.alg.n() > 9) continue;
      BZAlgebra x = hsum(a.alg, b.alg);
      if (!classify(x).bz) continue;
      auto cb = congruence_lattice(b.alg, Level::BZ);
      auto rx = irreducibility(x, Level::BZ);
      bool b01_trivial = cb.con01.size() == 1;
      CHECK(rx.simple == b01_trivial);
      // SI iff Con01(B) trivial or with a single atom
      FinLattice ord = cb.order_lattice_of(cb.con01);
      bool single_atom = order_profile(ord).atoms.size() == 1;
      CHECK(rx.subdirectly_irreducible == (b01_trivial || single_atom));
      if (classify(b.alg).antiortholattice) {
        auto rb = irreducibility(b.alg, Level::BZ);
        CHECK(rx.subdirectly_irreducible == rb.subdirectly_irreducible);
      }
    }
  }
}

TEST_CASE("lattice reducts of glued sums and antiortholattices are directly irreducible") {
  const auto& cat = load_catalog();
  // antiortholattices
  for (const auto& e : cat)
    if (classify(e.alg).antiortholattice)
      CHECK(irreducibility(e.alg.lat).directly_irreducible);
  // sums with both parts larger than 2
  for (const auto& a : cat) {
    if (a.alg.n() <= 2 || a.alg.n() > 8) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2 || b.alg.n() > 8) continue;
      FinLattice s = horizontal_sum_lattice({a.alg.lat, b.alg.lat}).first;
      if (s.n < 5) continue;
      CHECK(irreducibility(s).directly_irreducible);
    }
  }
  // members of (OML [+] AOL) \ OML built from catalog parts
  for (const auto& a : cat) {
    if (a.alg.n() < 2 || !classify(a.alg).orthomodular) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2 || !classify(b.alg).antiortholattice) continue;
      if (a.alg.n() + b.alg.n() - 2 > 14) continue;
      BZAlgebra x = hsum(a.alg, b.alg);
      if (classify(x).orthomodular) continue;
      CHECK(irreducibility(x.lat).directly_irreducible);
      CHECK(irreducibility(x, Level::BZ).directly_irreducible);
    }
  }
}

TEST_CASE("enumeration limits surface as SizeLimit") {
  EnumLimits tight;
  tight.max_universe = 4;
  CHECK_THROWS_AS((void)congruence_lattice(chain(6), Level::BZ, tight), Error);
  CHECK_THROWS_AS((void)congruences_bruteforce(catalog_find("M11")->alg, Level::BZ), Error);
}

TEST_CASE("sums with an orthomodular part have the dense part's 01-kernel plus top") {
  // Con_BZL(A[+]B) = Con_BZL01(B) (+) D2 whenever A is a nontrivial
  // orthomodular lattice with more than two elements
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() <= 2 || !classify(a.alg).orthomodular) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2 || b.alg.n() > 9) continue;
      BZAlgebra x = hsum(a.alg, b.alg);
      if (!classify(x).bz) continue;
      auto cx = congruence_lattice(x, Level::BZ);
      auto cb = congruence_lattice(b.alg, Level::BZ);
      FinLattice expect =
          ordinal_sum(cb.order_lattice_of(cb.con01), chain(2).lat).first;
      CHECK(lattice_isomorphic(cx.order_lattice(), expect));
    }
  }
}
