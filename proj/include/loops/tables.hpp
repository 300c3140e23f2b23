#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/errors.hpp"

namespace loops {

using Elem = int;

// Desk-scale bound: exhaustive triple scans stay fast below this order.
inline constexpr int kOrderCap = 4096;

// A finite binary system given by its Cayley table, elements 0..n-1.
struct MagmaTable {
  int n = 0;
  std::vector<Elem> t;  // row-major, t[x*n+y] = x*y

  Elem at(Elem x, Elem y) const { return t[static_cast<size_t>(x) * n + y]; }
  Elem& at(Elem x, Elem y) { return t[static_cast<size_t>(x) * n + y]; }
};

// A loop whose identity has been renumbered to index 0.
// Invariant: every row and column is a permutation, row/column 0 are trivial.
struct LoopTable {
  MagmaTable m;

  int order() const { return m.n; }
  Elem mul(Elem x, Elem y) const { return m.at(x, y); }

  // Unique solution of a*y = b.
  Elem left_div(Elem a, Elem b) const;
  // Unique solution of x*a = b.
  Elem right_div(Elem b, Elem a) const;

  Elem linv(Elem x) const { return right_div(0, x); }  // e/x
  Elem rinv(Elem x) const { return left_div(x, 0); }   // x\e

  bool commutative() const;
};

// An associativity-verified loop with its inverse map.
struct GroupTable {
  LoopTable l;
  std::vector<Elem> inverse;

  int order() const { return l.order(); }
  Elem mul(Elem x, Elem y) const { return l.mul(x, y); }
  Elem mul(Elem x, Elem y, Elem z) const { return mul(mul(x, y), z); }
  Elem inv(Elem x) const { return inverse[x]; }
  bool abelian() const { return l.commutative(); }
};

struct SubsetReport {
  std::vector<Elem> members;  // sorted
  std::string label;

  bool contains(Elem x) const;
  size_t size() const { return members.size(); }
};

struct TripleWitness {
  Elem x = 0, y = 0, z = 0;
};

// Latin-square and identity axioms; renumbers the identity to index 0.
LoopTable validate_loop(const MagmaTable& m, Elem identity);

// First (lexicographically least) failing triple, or nullopt if associative.
std::optional<TripleWitness> associativity_witness(const LoopTable& l);
bool is_associative(const LoopTable& l);

struct NucleiReport {
  SubsetReport left, right, middle, nucleus;
};

NucleiReport nuclei(const LoopTable& l);
SubsetReport centre(const LoopTable& l);

// Smallest subloop containing all associators and commutators, closed under
// multiplication and both divisions.
SubsetReport derived_subloop(const LoopTable& l);

SubsetReport subgroup_generated(const GroupTable& g, const std::vector<Elem>& gens);

struct QuotientResult {
  GroupTable group;
  std::vector<Elem> projection;  // element index -> coset index
};

// Coset multiplication table modulo a normal subgroup; throws NotNormal.
QuotientResult quotient_group(const GroupTable& g, const SubsetReport& n);

int element_order(const GroupTable& g, Elem x);

// Verifies associativity and computes inverses.
GroupTable as_group(const LoopTable& l);

GroupTable make_cyclic(int n);
GroupTable make_elementary_abelian_2(int k);
GroupTable make_symmetric(int n);  // n <= 4
GroupTable make_direct_product(const GroupTable& g1, const GroupTable& g2);
// (Z3)^s semidirect Z2, the involution acting by x -> -x.
GroupTable make_gf3_semidirect(int s);

// Parses names like "Z8", "Z2^3", "S4" and 'x'-separated products ("Z4xZ2").
GroupTable make_group_by_name(const std::string& name);

// Exhaustive bijection search, identity-preserving; order <= 24.
std::optional<std::vector<Elem>> find_group_isomorphism(const GroupTable& g1,
                                                        const GroupTable& g2);

// Membership mask of Z(A), indexed by element.
std::vector<char> centre_mask(const GroupTable& g);

// Cayley table of a subgroup in its own indexing; optionally reports the
// global->local index map (-1 outside the subgroup).
GroupTable subgroup_table(const GroupTable& g, const SubsetReport& s,
                          std::vector<Elem>* global_to_local = nullptr);

}  // namespace loops
