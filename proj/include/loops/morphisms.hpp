#pragma once

#include <optional>
#include <vector>

#include "loops/extension.hpp"
#include "loops/tables.hpp"
#include "loops/translations.hpp"
#include "loops/weighted.hpp"

namespace loops {

// An A-preserving morphism (x, xi) -> (x^{alpha_s}, rho(x^{alpha_s}) xi^{alpha_a})
// between two extensions over the same S- and A-orders. rho is indexed by the
// target S-point, rho[0] = identity, all values central in A.
struct MorphismWitness {
  Permutation alpha_s;
  Permutation alpha_a;
  std::vector<Elem> rho;

  bool operator==(const MorphismWitness&) const = default;
  bool operator<(const MorphismWitness& o) const;
};

// All bijections l1 -> l2 fixing 0 and preserving the tables; exhaustive
// backtracking with forced-product propagation. Throws OrderCap past order 64.
std::vector<Permutation> loop_isomorphisms(const LoopTable& l1, const LoopTable& l2);
std::vector<Permutation> loop_automorphisms(const LoopTable& l);

struct EquationCheck {
  bool ok = true;
  std::optional<PairWitness> witness;  // first failing S-pair
};

// The defining equation over all pairs of S:
//   f1(x,y)^{alpha_a} = rho((xy)^{alpha_s})^{-1} rho(x^{alpha_s}) rho(y^{alpha_s})
//                       f2(x^{alpha_s}, y^{alpha_s})
// The x = y case is the diagonal form rho(x^{alpha_s})^2 = f1(x,x)^{alpha_a}
// f2(x^{alpha_s},x^{alpha_s})^{-1}.
EquationCheck check_iso_equation(const MorphismWitness& w, const ExtensionSpec& spec1,
                                 const ExtensionSpec& spec2);
// Additionally checks the weighted forms explicitly: the diagonal equation and
// the off-diagonal h-form h1(x)^{alpha_a} h1(y)^{alpha_a} = (central factor)
// h2(x^{alpha_s}) h2(y^{alpha_s}).
EquationCheck check_iso_equation(const MorphismWitness& w, const WeightedSteinerLoop& w1,
                                 const WeightedSteinerLoop& w2);

// The witness expanded to the point map between the built tables.
Permutation witness_point_map(const MorphismWitness& w, const ExtensionSpec& spec1,
                              const ExtensionSpec& spec2);
bool is_table_isomorphism(const Permutation& map, const LoopTable& l1, const LoopTable& l2);

struct FindOptions {
  // Skip (alpha_s, alpha_a) pairs violating the commutator condition
  //   (f1(x,y) f1(y,x)^{-1})^{alpha_a} = f2(x',y') f2(y',x')^{-1}
  // before solving for rho.
  bool prune = true;
};

// All witnesses between two standard-variant extensions of Steiner loops;
// every returned witness has been re-verified as a table isomorphism.
std::vector<MorphismWitness> find_isomorphisms(const ExtensionSpec& spec1,
                                               const ExtensionSpec& spec2,
                                               FindOptions opts = {});

struct AutGroupReport {
  std::vector<MorphismWitness> full;
  std::vector<MorphismWitness> psi;     // alpha_s = alpha_a = id
  std::vector<MorphismWitness> sigma;   // rho trivial
  std::vector<MorphismWitness> sigma1;  // rho trivial, alpha_a = id
  std::vector<MorphismWitness> sigma2;  // rho trivial, alpha_s = id
  bool psi_closed = false;
  bool psi_elementary_abelian_2 = false;  // every nonidentity element squares to id
  bool psi_sigma_trivial = false;         // psi intersect sigma = {identity}
  bool rho_kernels_contain_derived = false;  // ker rho contains S' for homomorphic rho
  bool weight_conjugation_ok = true;  // weighted overload only; see below
};

AutGroupReport automorphism_group(const ExtensionSpec& spec, FindOptions opts = {});
// Additionally cross-checks, for every witness with homomorphic rho and
// |S| > 2: f(x,x)^{alpha_a} = f(x',x') and the existence of c with
// c h(x') = h(x') c^{-1} = h(x)^{alpha_a} for all x.
AutGroupReport automorphism_group(const WeightedSteinerLoop& w, FindOptions opts = {});

}  // namespace loops
