#pragma once

#include <array>
#include <optional>
#include <vector>

#include "loops/sts.hpp"
#include "loops/tables.hpp"

namespace loops {

// A group together with a generating set E of involutions satisfying
// (xy)^3 = 1 and xyx in E for all x, y in E.
struct FischerPair {
  GroupTable g;
  std::vector<Elem> e_set;  // sorted
};

struct FischerWitness {
  std::string reason;
  Elem x = 0, y = 0;
};

std::optional<FischerWitness> restricted_fischer_witness(const GroupTable& g,
                                                         const std::vector<Elem>& e_set);
bool is_restricted_fischer(const GroupTable& g, const std::vector<Elem>& e_set);

// An STS weighted into a group: w(x) w(y) w(x) = w(xy) blockwise, the image
// consisting of involutions.
struct WeightedSTS {
  SteinerTripleSystem sts;
  GroupTable g;
  std::vector<Elem> w;  // size n+1, w[0] unused; w[p] = group element of point p
};

WeightedSTS validate_weighted_sts(const SteinerTripleSystem& sts, const GroupTable& g,
                                  const std::vector<Elem>& w);

// Points are the distinct weight values, lines the triples {wi, wj, wi wj wi}.
struct FischerSpace {
  std::vector<Elem> points;                  // sorted involution set I
  std::vector<std::array<Elem, 3>> lines;    // sorted triples, sorted list
};

struct FischerSpaceResult {
  FischerSpace space;
  std::vector<Elem> phi;  // STS point -> index of w(x) in space.points
};

// Throws DegenerateAbelian when the generated group is abelian.
FischerSpaceResult fischer_space(const WeightedSTS& ws);

struct AffineCovering {
  FischerPair pair;        // G = (Z3)^s x| Z2 with its involution set I
  WeightedSTS weighted;    // AG(n,3) lines weighted by truncation
};

// Covering of the Fischer space of (Z3)^s x| Z2 by the affine space AG(n,3).
AffineCovering affine_covering(int s, int n);

// Every non-collinear triple generates a 9-point affine plane.
bool hall_system_check(const FischerSpace& space);

// x*y = third block point for x != y, x*x = x; verified idempotent,
// symmetric and left-distributive. Requires w bijective onto I.
MagmaTable distributive_quasigroup(const WeightedSTS& ws);

}  // namespace loops
