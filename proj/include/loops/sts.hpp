#pragma once

#include <array>
#include <vector>

#include "loops/tables.hpp"

namespace loops {

// Points are 1-based so that index 0 stays free for the loop identity.
struct SteinerTripleSystem {
  int point_count = 0;
  std::vector<std::array<Elem, 3>> blocks;  // each sorted ascending, list sorted
};

// Checks the pairing axioms; throws PairMissing / PairDuplicated / BadBlock.
SteinerTripleSystem validate_sts(int n, std::vector<std::array<Elem, 3>> blocks);

// Bose construction for n = 3 (mod 6), Skolem construction for n = 1 (mod 6).
SteinerTripleSystem construct_sts(int n);

// Steiner loop of order n+1: identity 0, x*y = third point of the block.
LoopTable loop_from_sts(const SteinerTripleSystem& s);

// Inverse of loop_from_sts; throws NotSteiner.
SteinerTripleSystem sts_from_loop(const LoopTable& l);

// x*y == y*x and x*(x*y) == y for all pairs.
bool is_steiner_loop(const LoopTable& l);

}  // namespace loops
