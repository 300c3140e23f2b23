#pragma once

#include <optional>
#include <vector>

#include "loops/extension.hpp"
#include "loops/tables.hpp"

namespace loops {

// A bijection of [0, n), stored as its image array.
using Permutation = std::vector<Elem>;

inline constexpr long long kClosureCap = 1000000;

Permutation identity_perm(int n);
// Composition convention throughout: (p o q)(x) = p(q(x)), q applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert_perm(const Permutation& p);
bool is_permutation(const Permutation& p);

enum class Side { Left, Right };

// Row (left: x -> a*x) or column (right: x -> x*a) permutation of the table.
Permutation translation(const LoopTable& l, Elem a, Side side);

// The group generated by a set of permutations, enumerated explicitly.
struct PermGroupClosure {
  std::vector<Permutation> elements;  // sorted lexicographically

  size_t size() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

// Breadth-first products with set dedup; throws ClosureCap past the cap.
PermGroupClosure close(const std::vector<Permutation>& generators,
                       long long cap = kClosureCap);

// The translation groups of the built extension table, with the structure
// the right-translation group carries: the slice N = {rho_(e,alpha)} is a
// normal subgroup isomorphic to A, and G_r is an extension of A by
// Sigma = <rho_(a,1)>.
struct TranslationGroupsReport {
  PermGroupClosure g_left, g_right, g_full;
  bool left_equals_right = false;
  bool a_abelian = false;

  bool kernel_is_subgroup = false;     // {rho_(e,alpha)} closed under products
  bool kernel_isomorphic_to_a = false; // via alpha -> rho_(e, alpha^{-1})
  bool kernel_normal = false;          // in G_r
  size_t kernel_order = 0;
  size_t sigma_order = 0;              // |<rho_(a,1)>|
  size_t sigma_kernel_order = 0;       // |Sigma intersect N|
  // G_r = Sigma N, so |G_r| * |Sigma intersect N| == |Sigma| * |N|. The
  // intersection can be nontrivial (e.g. diagonal values pulling the A-slice
  // into Sigma), in which case Sigma covers part of N.
  bool order_product_ok = false;
};

TranslationGroupsReport translation_groups(const ExtensionSpec& spec,
                                           long long cap = kClosureCap);

// The maps iota_alpha: (x, xi) -> (x, alpha^{-1} xi alpha), one per alpha.
// All of them are automorphisms exactly when every f value is central.
struct IotaReport {
  std::vector<Permutation> maps;  // indexed by alpha
  bool all_automorphisms = false;
  bool f_central = false;
  std::optional<Elem> failing_alpha;
};

IotaReport iota_maps(const ExtensionSpec& spec);

// G = <G_l, Lambda> where Lambda = <iota_alpha>; requires every iota_alpha
// to be an automorphism (throws HypothesisFailed otherwise).
struct DecompositionReport {
  size_t g_order = 0;
  bool generated_equal = false;       // G == <G_l, Lambda> as sets
  bool rho_decomposition_ok = false;  // rho_(a,alpha) == iota_alpha o lambda_(a,alpha)
  bool commutative = false;           // the extension table
  bool lambda_slice_central = false;  // {lambda_(e,alpha)} central in G (commutative case)
};

DecompositionReport full_group_decomposition(const ExtensionSpec& spec,
                                             long long cap = kClosureCap);

// rho_(a,alpha) == rho_(e,alpha) o rho_(a,1) for every (a, alpha).
bool check_rho_factorization(const ExtensionSpec& spec);
// rho_(a,gamma)^{-1} o rho_(e,alpha) o rho_(a,gamma) == rho_(e, gamma alpha gamma^{-1}).
bool check_conjugation_identity(const ExtensionSpec& spec);

}  // namespace loops
