#pragma once

#include <string>
#include <vector>

#include "pbz/core_order.hpp"

namespace pbz {

// A bounded lattice with two unary maps: the Kleene complement (an order
// involution) and the Brouwer complement. Type (2,2,1,1,0,0). Whether the
// axioms of the various classes hold is decided by classify(), never assumed.
struct BZAlgebra {
  FinLattice lat;
  std::vector<int> inv;
  std::vector<int> brouwer;

  int n() const { return lat.n; }
  int bot() const { return lat.bot; }
  int top() const { return lat.top; }
  int meet(int a, int b) const { return lat.meet(a, b); }
  int join(int a, int b) const { return lat.join(a, b); }
  bool leq(int a, int b) const { return lat.leq(a, b); }
  int kle(int a) const { return inv[a]; }
  int bro(int a) const { return brouwer[a]; }
  int diamond(int a) const { return brouwer[brouwer[a]]; }
  int box(int a) const { return brouwer[inv[a]]; }
  std::string name_of(int i) const { return lat.name_of(i); }
  int index_of(const std::string& s) const { return lat.index_of(s); }
};

struct StructureClass {
  bool bi = false;
  bool pseudo_kleene = false;
  bool paraorthomodular = false;
  bool ortholattice = false;
  bool orthomodular = false;
  bool bz = false;
  bool star_bz = false;
  bool pbz_star = false;
  bool antiortholattice = false;
  std::string bz_failure;  // reason code when bz is false
};

struct ElementSets {
  Mask sharp = 0;    // S(L) = { a : a /\ a' = 0 }
  Mask dense = 0;    // D(L) = { a : a~ = 0 }
  Mask t_set = 0;    // T(L) = {0} u D(L)
  Mask central = 0;  // C(L), elementwise criterion
};

// The trivial Brouwer complement on an n-element bounded lattice.
std::vector<int> trivial_brouwer(const FinLattice& L);

// Checks that inv is an order-reversing involution; returns a reason on failure.
std::string involution_defect(const BZAlgebra& A);

// Decides every class flag by exhaustive sweeps. Throws NotInvolution if the
// Kleene map is not a valid involution. On a non-BZ algebra the BZ-dependent
// flags come back false with a reason code in bz_failure.
StructureClass classify(const BZAlgebra& A);

// Truth of (a~ v (<>a /\ <>b)) /\ <>a <= <>b over all pairs. Agrees with the
// implication form of paraorthomodularity on BZ*-lattices.
bool paraorthomodular_equational(const BZAlgebra& A);

// Sharp, dense, T and central element sets. Central elements use the
// elementwise criterion: a sharp and for all b,
//   (a/\b)~ = a~ v b~,  (a'/\b)~ = a'~ v b~,  b = (a/\b) v (a'/\b).
ElementSets element_sets(const BZAlgebra& A);

// (box a, diamond a) = (a'~, a~~).
std::pair<int, int> box_diamond(const BZAlgebra& A, int a);

// Componentwise direct product of two algebras (pair codec as in
// direct_product on lattices).
BZAlgebra product(const BZAlgebra& A, const BZAlgebra& B);

// Condition (*) alone: (a /\ a')~ = a~ v a'~ for all a.
bool satisfies_star(const BZAlgebra& A);

// Membership test for the class OML [+] AOL (horizontal sums of orthomodular
// lattices with antiortholattices) by explicit structural decomposition of the
// universe into a sharp part and a dense part glued at the bounds.
bool oml_hsum_aol_member(const BZAlgebra& A);

// The nine equivalent membership conditions for OML [+] AOL, each computed
// independently of the others.
std::vector<bool> charg_conditions(const BZAlgebra& A);

}  // namespace pbz
