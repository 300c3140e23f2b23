#include "loops/sts.hpp"

#include <algorithm>
#include <set>

namespace loops {

SteinerTripleSystem validate_sts(int n, std::vector<std::array<Elem, 3>> blocks) {
  if (n < 0 || n + 1 > kOrderCap) throw Error(Errc::OrderCap, "point count out of range");
  if (n >= 3 && n % 6 != 1 && n % 6 != 3)
    throw Error(Errc::BadResidue, "no Steiner triple system on " + std::to_string(n) + " points");
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (b[0] < 1 || b[2] > n || b[0] == b[1] || b[1] == b[2])
      throw Error(Errc::BadBlock, "block with repeated or out-of-range points");
  }
  std::sort(blocks.begin(), blocks.end());

  // Every unordered pair in exactly one block.
  std::vector<char> pair_seen(static_cast<size_t>(n + 1) * (n + 1), 0);
  auto pid = [n](Elem p, Elem q) { return static_cast<size_t>(p) * (n + 1) + q; };
  for (const auto& b : blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (pair_seen[pid(b[i], b[j])])
          throw Error(Errc::PairDuplicated, "pair (" + std::to_string(b[i]) + "," +
                                                std::to_string(b[j]) + ") in two blocks");
        pair_seen[pid(b[i], b[j])] = 1;
      }
  for (Elem p = 1; p <= n; ++p)
    for (Elem q = p + 1; q <= n; ++q)
      if (!pair_seen[pid(p, q)])
        throw Error(Errc::PairMissing,
                    "pair (" + std::to_string(p) + "," + std::to_string(q) + ") uncovered");
  return SteinerTripleSystem{n, std::move(blocks)};
}

namespace {

// Commutative idempotent quasigroup on Z_{2k+1}: i*j = (i+j)(k+1).
inline int half_odd(int i, int j, int k) { return static_cast<int>((static_cast<long long>(i + j) * (k + 1)) % (2 * k + 1)); }

// Half-idempotent commutative quasigroup on Z_{2k}: i*j = h(i+j) with
// h(2m) = m and h(2m+1) = k+m.
inline int half_even(int i, int j, int k) {
  int s = (i + j) % (2 * k);
  return (s % 2 == 0) ? s / 2 : k + s / 2;
}

}  // namespace

SteinerTripleSystem construct_sts(int n) {
  if (n == 1) return SteinerTripleSystem{1, {}};
  if (n + 1 > kOrderCap) throw Error(Errc::OrderCap, "point count out of range");
  if (n <= 0 || (n % 6 != 1 && n % 6 != 3))
    throw Error(Errc::BadResidue, "n must be 1 or 3 (mod 6)");
  std::vector<std::array<Elem, 3>> blocks;
  if (n % 6 == 3) {
    // Bose: points Z_{2k+1} x {0,1,2}, 1-based id = 1 + i*3 + r.
    const int k = (n - 3) / 6;
    const int m = 2 * k + 1;
    auto pt = [m](int i, int r) { return static_cast<Elem>(1 + i * 3 + r); };
    (void)m;
    for (int i = 0; i < 2 * k + 1; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int i = 0; i < 2 * k + 1; ++i)
      for (int j = i + 1; j < 2 * k + 1; ++j)
        for (int r = 0; r < 3; ++r)
          blocks.push_back({pt(i, r), pt(j, r), pt(half_odd(i, j, k), (r + 1) % 3)});
  } else {
    // Skolem: points (Z_{2k} x {0,1,2}) + {infinity}, infinity = point n.
    const int k = (n - 1) / 6;
    auto pt = [](int i, int r) { return static_cast<Elem>(1 + i * 3 + r); };
    const Elem inf = static_cast<Elem>(n);
    for (int i = 0; i < k; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int i = 0; i < k; ++i)
      for (int r = 0; r < 3; ++r) blocks.push_back({inf, pt(k + i, r), pt(i, (r + 1) % 3)});
    for (int i = 0; i < 2 * k; ++i)
      for (int j = i + 1; j < 2 * k; ++j)
        for (int r = 0; r < 3; ++r)
          blocks.push_back({pt(i, r), pt(j, r), pt(half_even(i, j, k), (r + 1) % 3)});
  }
  return validate_sts(n, std::move(blocks));
}

LoopTable loop_from_sts(const SteinerTripleSystem& s) {
  const int n = s.point_count + 1;
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    m.at(0, x) = x;
    m.at(x, 0) = x;
    m.at(x, x) = 0;
  }
  for (const auto& b : s.blocks) {
    m.at(b[0], b[1]) = b[2];
    m.at(b[1], b[0]) = b[2];
    m.at(b[0], b[2]) = b[1];
    m.at(b[2], b[0]) = b[1];
    m.at(b[1], b[2]) = b[0];
    m.at(b[2], b[1]) = b[0];
  }
  return validate_loop(m, 0);
}

bool is_steiner_loop(const LoopTable& l) {
  const int n = l.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (l.mul(x, y) != l.mul(y, x)) return false;
      if (l.mul(x, l.mul(x, y)) != y) return false;
    }
  return true;
}

SteinerTripleSystem sts_from_loop(const LoopTable& l) {
  if (!is_steiner_loop(l)) throw Error(Errc::NotSteiner, "loop is not totally symmetric");
  const int n = l.order();
  std::set<std::array<Elem, 3>> blocks;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Elem z = l.mul(x, y);
      std::array<Elem, 3> b{x, y, z};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  return validate_sts(n - 1, {blocks.begin(), blocks.end()});
}

}  // namespace loops
