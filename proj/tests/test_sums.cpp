#include <algorithm>
#include <map>

#include "doctest.h"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/structures.hpp"
#include "pbz/subalg.hpp"
#include "pbz/sums.hpp"
#include "pbz/terms.hpp"

using namespace pbz;

TEST_CASE("ordinal sums of chains concatenate") {
  auto [d3, im] = ordinal_sum(chain(2).lat, chain(2).lat);
  CHECK(d3.n == 3);
  CHECK(is_chain(d3));
  CHECK(im.embed[1][1] == 2);

  // D_k (+) D_2 (+) D_k = D_2k
  for (int k = 2; k <= 4; ++k) {
    FinLattice s = ordinal_sum(chain(k).lat, chain(2).lat).first;
    s = ordinal_sum(s, chain(k).lat).first;
    CHECK(s.n == 2 * k);
    CHECK(is_chain(s));
  }

  // associativity up to relabeling
  FinLattice a = ordinal_sum(ordinal_sum(chain(2).lat, mo(1).lat).first, chain(2).lat).first;
  FinLattice b = ordinal_sum(chain(2).lat, ordinal_sum(mo(1).lat, chain(2).lat).first).first;
  CHECK(lattice_isomorphic(a, b));
}

TEST_CASE("canonical antiortholattices") {
  BZAlgebra d3 = canonical_aol(chain(2).lat, chain(1));
  CHECK(d3.n() == 3);
  CHECK(isomorphic(d3, chain(3)));
  CHECK(classify(d3).antiortholattice);

  BZAlgebra hex = canonical_aol(chain(2).lat, mo(1));
  CHECK(hex.n() == 6);
  CHECK(classify(hex).antiortholattice);
  // contains an element incomparable to its involution
  bool found = false;
  for (int x = 0; x < hex.n(); ++x)
    if (!hex.leq(x, hex.kle(x)) && !hex.leq(hex.kle(x), x)) found = true;
  CHECK(found);

  BZAlgebra big = canonical_aol(chain(2).lat, mo(2));
  CHECK(big.n() == 8);
  CHECK(classify(big).antiortholattice);

  // the square-over-square antiortholattice fails SDM (its 0 is meet-reducible)
  BZAlgebra sq2 = canonical_aol(mo(1).lat, chain(1));
  CHECK(sq2.n() == 7);
  CHECK(classify(sq2).antiortholattice);
  CHECK(!satisfies(sq2, named_identity("SDM")).holds);

  // requires a pseudo-Kleene middle
  BZAlgebra bad = hsum(chain(3), chain(3));
  CHECK_THROWS_AS((void)canonical_aol(chain(2).lat, bad), Error);
  CHECK_THROWS_AS((void)canonical_aol(chain(1).lat, chain(2)), Error);
}

TEST_CASE("horizontal sums") {
  // D2 [+] L = L
  BZAlgebra l = catalog_find("L7")->alg;
  CHECK(isomorphic(hsum(chain(2), l), l));

  // MO1 [+] D3 is the catalog M3
  CHECK(isomorphic(hsum(mo(1), chain(3)), catalog_find("M3")->alg));

  // D3 [+] D3 is a BI-lattice but not pseudo-Kleene
  StructureClass c = classify(hsum(chain(3), chain(3)));
  CHECK(c.bi);
  CHECK(!c.pseudo_kleene);

  CHECK_THROWS_AS((void)hsum(chain(1), chain(3)), Error);

  // commutativity and associativity up to isomorphism
  CHECK(isomorphic(hsum(mo(2), chain(3)), hsum(chain(3), mo(2))));
  CHECK(isomorphic(hsum(hsum(mo(1), chain(3)), chain(4)),
                   hsum(mo(1), hsum(chain(3), chain(4)))));
}

TEST_CASE("MO_k ladder") {
  CHECK(isomorphic(mo(0), chain(2)));
  BZAlgebra m1 = mo(1);
  CHECK(m1.n() == 4);
  CHECK(is_distributive(m1.lat));
  CHECK(classify(m1).orthomodular);
  BZAlgebra m2 = mo(2);
  CHECK(m2.n() == 6);
  CHECK(classify(m2).orthomodular);
  CHECK(!is_distributive(m2.lat));
  CHECK(isomorphic(m2, hsum(mo(1), mo(1))));
}

TEST_CASE("chains carry the unique order involution") {
  BZAlgebra d2 = chain(2);
  CHECK(classify(d2).orthomodular);
  CHECK(classify(d2).antiortholattice);
  BZAlgebra d3 = chain(3);
  CHECK(d3.kle(1) == 1);
  BZAlgebra d5 = chain(5);
  CHECK(d5.kle(1) == 3);
  CHECK(d5.kle(2) == 2);
  CHECK(classify(chain(7)).antiortholattice);
}

TEST_CASE("a horizontal sum of PBZ* lattices is PBZ* iff one part is orthomodular") {
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() < 2) continue;
    StructureClass ca = classify(a.alg);
    if (!ca.pbz_star) continue;
    for (const auto& b : cat) {
      if (b.alg.n() < 2 || a.alg.n() + b.alg.n() - 2 > 20) continue;
      StructureClass cb = classify(b.alg);
      if (!cb.pbz_star) continue;
      bool expect = ca.orthomodular || cb.orthomodular;
      CHECK(classify(hsum(a.alg, b.alg)).pbz_star == expect);
    }
  }
}

TEST_CASE("property transfer across horizontal sums") {
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() < 2 || a.alg.n() > 8) continue;
    for (const auto& b : cat) {
      if (b.alg.n() < 2 || b.alg.n() > 8) continue;
      BZAlgebra x = hsum(a.alg, b.alg);
      StructureClass ca = classify(a.alg), cb = classify(b.alg), cx = classify(x);
      CHECK(cx.paraorthomodular == (ca.paraorthomodular && cb.paraorthomodular));
      CHECK(cx.ortholattice == (ca.ortholattice && cb.ortholattice));
      CHECK(cx.orthomodular == (ca.orthomodular && cb.orthomodular));
      CHECK(satisfies_star(x) == (satisfies_star(a.alg) && satisfies_star(b.alg)));
    }
  }
}

TEST_CASE("subalgebras and quotients distribute over horizontal sums") {
  std::vector<std::pair<BZAlgebra, BZAlgebra>> pairs = {
      {mo(1), chain(3)}, {mo(1), chain(4)}, {mo(2), chain(3)}};
  for (const auto& [a, b] : pairs) {
    BZAlgebra x = hsum(a, b);
    // part A occupies 0, its interior indices, and the top
    Mask am = bit(0) | bit(x.n() - 1);
    for (int i = 1; i <= a.n() - 2; ++i) am |= bit(i);
    Mask bm = bit(0) | bit(x.n() - 1);
    for (int i = a.n() - 1; i <= x.n() - 2; ++i) bm |= bit(i);

    for (Mask m : all_subuniverses(x)) {
      Mask ma = m & am, mb = m & bm;
      CHECK((ma | mb) == m);
      // both traces are subuniverses
      CHECK(generate_mask(x, ma, Signature::BZ) == ma);
      CHECK(generate_mask(x, mb, Signature::BZ) == mb);
      // interior elements of different parts stay incomparable
      for_each_bit(ma & ~bit(0) & ~bit(x.n() - 1), [&](int p) {
        for_each_bit(mb & ~bit(0) & ~bit(x.n() - 1), [&](int q) {
          CHECK(x.meet(p, q) == x.bot());
          CHECK(x.join(p, q) == x.top());
        });
      });
    }

    // quotients: (A [+] B)/theta = A/theta [+] B/theta for proper theta
    auto cl = congruence_lattice(x, Level::BZ);
    for (const auto& th : cl.cons) {
      if (th.is_all()) continue;
      BZAlgebra q = quotient(x, th);
      // restrict theta to the parts
      auto restrict_to = [&](Mask m) {
        std::vector<int> keep;
        for_each_bit(m, [&](int i) { keep.push_back(i); });
        Partition p;
        p.block.resize(keep.size());
        std::map<int, int> remap;
        for (size_t i = 0; i < keep.size(); ++i) {
          auto [it, fresh] = remap.emplace(th.block[keep[i]], (int)remap.size());
          p.block[i] = it->second;
        }
        p.blocks = (int)remap.size();
        return p;
      };
      BZAlgebra qa = quotient(subalgebra(x, am), restrict_to(am));
      BZAlgebra qb = quotient(subalgebra(x, bm), restrict_to(bm));
      if (qa.n() >= 2 && qb.n() >= 2) CHECK(isomorphic(q, hsum(qa, qb)));
    }
  }
}

TEST_CASE("sharp and dense parts of horizontal sums") {
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() < 2 || a.alg.n() > 8 || !classify(a.alg).orthomodular) continue;
    for (const auto& b : cat) {
      if (b.alg.n() < 2 || b.alg.n() > 9) continue;
      if (!classify(b.alg).pbz_star) continue;
      BZAlgebra x = hsum(a.alg, b.alg);
      ElementSets ex = element_sets(x);
      // S(A [+] B) = A u S(B): part A occupies 0, 1..|A|-2nd interiors, top
      Mask am = bit(0) | bit(x.n() - 1);
      for (int i = 1; i <= a.alg.n() - 2; ++i) am |= bit(i);
      Mask sb = 0;
      ElementSets eb = element_sets(b.alg);
      // embed B's sharp set: interior j (not bot/top) sits at a.n()-2 + j index
      {
        int next = a.alg.n() - 1;
        for (int j = 0; j < b.alg.n(); ++j) {
          if (j == b.alg.bot()) {
            if (has(eb.sharp, j)) sb |= bit(0);
          } else if (j == b.alg.top()) {
            if (has(eb.sharp, j)) sb |= bit(x.n() - 1);
          } else {
            if (has(eb.sharp, j)) sb |= bit(next);
            ++next;
          }
        }
      }
      CHECK(ex.sharp == (am | sb));
      if (classify(b.alg).antiortholattice) {
        // S = A and T = B
        CHECK(ex.sharp == am);
        Mask bm = bit(0) | bit(x.n() - 1);
        for (int i = a.alg.n() - 1; i <= x.n() - 2; ++i) bm |= bit(i);
        CHECK(ex.t_set == bm);
      }
    }
  }
}

TEST_CASE("horizontal sums of two large PBZ* parts are never antiortholattices") {
  const auto& cat = load_catalog();
  for (const auto& a : cat) {
    if (a.alg.n() <= 2 || a.alg.n() > 8 || !classify(a.alg).pbz_star) continue;
    for (const auto& b : cat) {
      if (b.alg.n() <= 2 || b.alg.n() > 8 || !classify(b.alg).pbz_star) continue;
      CHECK(!classify(hsum(a.alg, b.alg)).antiortholattice);
    }
  }
}
