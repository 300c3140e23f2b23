#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loops/extension.hpp"
#include "loops/tables.hpp"

namespace loops {

// A Steiner loop S with a weight h into a group A, plus the explicit
// diagonal f(x,x). Indices 0 of h and diag are unused (identity slot).
struct WeightedSteinerLoop {
  LoopTable s;
  GroupTable a;
  std::vector<Elem> h;     // size |S|, h[0] ignored
  std::vector<Elem> diag;  // size |S|, diag[0] ignored

  void validate() const;  // throws NotSteiner / BadIndex
};

// Factor system of the Steiner-like loop: f(x,y) = h(x)h(y) off the
// diagonal, f(x,x) = diag(x), border = identity.
std::vector<Elem> factor_table(const WeightedSteinerLoop& w);

ExtensionSpec to_extension_spec(const WeightedSteinerLoop& w, Variant v = Variant::Standard);

struct PairWitness {
  Elem x = 0, y = 0;
};

struct CheckResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

// h(x) h(y) h(x) h(xy) = f(x,x) over all ordered pairs of distinct
// non-identity points.
CheckResult check_core_identity(const WeightedSteinerLoop& w);

// h(x)^2 h(y)^2 = f(x,x) f(y,y) f(xy,xy)^{-1}; requires A abelian.
CheckResult check_square_identity(const WeightedSteinerLoop& w);

struct ConstantT {
  Elem t = 0;
};

// Abelian non-constant weight: h(x) = t chi(x) where chi is a homomorphism
// of S onto an elementary abelian 2-subgroup Omega <= D of rank >= 1, and
// diag = t^4 chi. The rank-1 shape (S = U x Z2, weights {t, t omega}) is the
// generic one; higher ranks occur whenever the 2-torsion of D is larger than
// Z2 (e.g. h surjective onto D = Z2 x Z2), with S = U x (Z2)^rank.
struct DirectWithZ2 {
  Elem t = 0;
  Elem omega = 0;  // the first generator of Omega (the unique one at rank 1)
  int rank = 1;
  std::vector<Elem> omega_gens;  // a basis of Omega
  SubsetReport subloop_u;        // kernel of chi: the points with h = t
  // S = U x Omega witnessed by an explicit complement subloop.
  bool s_splits = true;
  // D = <t> x Omega; fails only in degenerate cases with Omega <= <t>
  // (e.g. h = t on U and h = 1 off U, so omega = t^-1).
  bool product_direct = true;
};

struct NonabelianFischer {
  Elem u = 0;             // central-in-D element with h(x)u^{-1} involutory
  bool u_in_d = false;
  GroupTable quotient;    // D<u>/<u>
  std::vector<Elem> gamma;  // involution images generating the quotient
};

struct SmallNonabelian {  // |S| = 4 branch: D = K * <a> with K = <s> x Z(D)
  Elem a = 0, t = 0, s = 0;
};

struct Unstructured {};

using WeightClassification =
    std::variant<ConstantT, DirectWithZ2, NonabelianFischer, SmallNonabelian, Unstructured>;

struct WeightAnalysis {
  SubsetReport d_group;
  bool d_abelian = false;
  bool k_central = false;  // all h(x)h(y), x != y, central in A
  bool f_central = false;  // all diag values central in A
  bool core_identity = false;
  WeightClassification classification = Unstructured{};
};

const char* classification_name(const WeightClassification& c);

// Structure of the weight group D under the core identity; every reported
// classification is re-verified against its defining equations.
WeightAnalysis analyze_weight_group(const WeightedSteinerLoop& w);

}  // namespace loops
