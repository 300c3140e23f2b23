#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loops/extension.hpp"
#include "loops/tables.hpp"
#include "loops/weighted.hpp"

namespace loops {

enum class IdentityName {
  Flexible,
  LeftAlternative,
  RightAlternative,
  LeftInverseProperty,
  RightInverseProperty,
  CrossInverse,
  AutomorphicInverse,
  WeakInverse,
  LeftBol,
  RightBol,
  Moufang,
  PowerAssociative,
  Associative,
  TotallySymmetric,
};

const char* identity_name(IdentityName id);
std::optional<IdentityName> identity_from_name(const std::string& s);

// The ten quantified laws of the preliminaries, in table order.
extern const IdentityName kTenIdentities[10];

struct BruteResult {
  bool holds = true;
  std::vector<Elem> witness;  // a failing assignment, empty when holds
};

// Exhaustive quantifier evaluation over the table. The witness is
// deterministic (fixed scan order); the scan runs from high indices down,
// which exits early on extension tables whose low block is well-behaved.
BruteResult brute_check(const LoopTable& l, IdentityName id);

// Same scan with the one-sided inverse maps supplied by the caller (they are
// recomputed per call otherwise, which dominates batched runs).
BruteResult brute_check(const LoopTable& l, IdentityName id, const std::vector<Elem>& lambda,
                        const std::vector<Elem>& rho);

// Fills lambda[x] = e/x and rho[x] = x\e in one pass over the table.
void one_sided_inverses(const LoopTable& l, std::vector<Elem>& lambda, std::vector<Elem>& rho);

struct CriterionReport {
  bool holds = false;
  std::vector<std::pair<std::string, bool>> breakdown;
  std::optional<PairWitness> witness;
  // Right/left Bol only: the built loop is proper (t^2 not central).
  std::optional<bool> properness;
};

// Algebraic criterion for the identity on the given variant, evaluated on
// the weight data alone (the product table is never built here).
CriterionReport criterion(const WeightedSteinerLoop& w, IdentityName id, Variant v);

// True when the criterion schema for (id, variant) exists.
bool criterion_applies(IdentityName id, Variant v);

// Star variant: with a noncentral factor value, all ten laws must fail —
// except flexibility, which survives exactly when every diagonal value is
// central and the weights of each block differ by central elements (e.g. a
// constant noncentral h), a degenerate case the blanket claim misses.
bool star_all_fail_applies(const WeightedSteinerLoop& w);
bool star_flexible_criterion(const WeightedSteinerLoop& w);

}  // namespace loops
