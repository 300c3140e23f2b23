#include "loops/fischer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loops/errors.hpp"

namespace loops {

std::optional<FischerWitness> restricted_fischer_witness(const GroupTable& g,
                                                         const std::vector<Elem>& e_set) {
  if (e_set.empty()) return FischerWitness{"empty generating set", 0, 0};
  std::vector<char> in_e(g.order(), 0);
  for (Elem x : e_set) {
    if (x < 0 || x >= g.order()) throw Error(Errc::BadIndex, "generator index out of range");
    in_e[x] = 1;
  }
  for (Elem x : e_set) {
    if (x == 0 || g.mul(x, x) != 0) return FischerWitness{"generator is not an involution", x, x};
  }
  for (Elem x : e_set)
    for (Elem y : e_set) {
      Elem xy = g.mul(x, y);
      if (g.mul(xy, g.mul(xy, xy)) != 0) return FischerWitness{"(xy)^3 != 1", x, y};
      if (!in_e[g.mul(g.mul(x, y), x)]) return FischerWitness{"xyx leaves the generating set", x, y};
    }
  if (subgroup_generated(g, e_set).size() != static_cast<size_t>(g.order()))
    return FischerWitness{"set does not generate the group", e_set.front(), e_set.front()};
  return std::nullopt;
}

bool is_restricted_fischer(const GroupTable& g, const std::vector<Elem>& e_set) {
  return !restricted_fischer_witness(g, e_set).has_value();
}

WeightedSTS validate_weighted_sts(const SteinerTripleSystem& sts, const GroupTable& g,
                                  const std::vector<Elem>& w) {
  const int n = sts.point_count;
  if (static_cast<int>(w.size()) != n + 1)
    throw Error(Errc::BadIndex, "weight vector must have one entry per point");
  for (int p = 1; p <= n; ++p) {
    if (w[p] < 0 || w[p] >= g.order()) throw Error(Errc::BadIndex, "weight index out of range");
    if (g.mul(w[p], w[p]) != 0)
      throw Error(Errc::BlockViolation, "weight of point " + std::to_string(p) +
                                            " is not an involution");
  }
  // third[i][j] = remaining point of the block through i and j
  std::vector<Elem> third(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (const auto& b : sts.blocks) {
    const Elem i = b[0], j = b[1], k = b[2];
    auto put = [&](Elem x, Elem y, Elem z) { third[static_cast<size_t>(x) * (n + 1) + y] = z; };
    put(i, j, k); put(j, i, k); put(i, k, j); put(k, i, j); put(j, k, i); put(k, j, i);
  }
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (x == y) continue;
      const Elem z = third[static_cast<size_t>(x) * (n + 1) + y];
      if (g.mul(g.mul(w[x], w[y]), w[x]) != w[z])
        throw Error(Errc::BlockViolation, "w(x)w(y)w(x) != w(xy) at points " +
                                              std::to_string(x) + "," + std::to_string(y));
    }
  return WeightedSTS{sts, g, w};
}

FischerSpaceResult fischer_space(const WeightedSTS& ws) {
  const int n = ws.sts.point_count;
  std::set<Elem> pts(ws.w.begin() + 1, ws.w.begin() + 1 + n);
  std::vector<Elem> points(pts.begin(), pts.end());
  SubsetReport gen = subgroup_generated(ws.g, points);
  bool ab = true;
  for (Elem x : gen.members)
    for (Elem y : gen.members)
      if (ws.g.mul(x, y) != ws.g.mul(y, x)) { ab = false; break; }
  if (ab) throw Error(Errc::DegenerateAbelian, "weights generate an abelian group");
  std::set<std::array<Elem, 3>> lines;
  for (Elem wi : points)
    for (Elem wj : points) {
      if (wi == wj) continue;
      Elem wk = ws.g.mul(ws.g.mul(wi, wj), wi);
      std::array<Elem, 3> line{wi, wj, wk};
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  FischerSpace space;
  space.points = points;
  space.lines.assign(lines.begin(), lines.end());
  std::vector<Elem> phi(n + 1, -1);
  for (int p = 1; p <= n; ++p)
    phi[p] = static_cast<Elem>(std::lower_bound(points.begin(), points.end(), ws.w[p]) -
                               points.begin());
  return FischerSpaceResult{space, phi};
}

AffineCovering affine_covering(int s, int n) {
  if (s < 1 || n <= s) throw Error(Errc::UnsupportedParams, "need 1 <= s < n");
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= 3;
  if (pn > kOrderCap) throw Error(Errc::OrderCap, "affine space exceeds order cap");
  const int points = static_cast<int>(pn);  // |AG(n,3)|
  int ts = 1;
  for (int i = 0; i < s; ++i) ts *= 3;

  GroupTable g = make_gf3_semidirect(s);
  std::vector<Elem> e_set;
  for (int v = 0; v < ts; ++v) e_set.push_back(ts + v);  // all (v, 1)
  if (auto bad = restricted_fischer_witness(g, e_set))
    throw Error(Errc::HypothesisFailed, "involution class fails: " + bad->reason);

  // Affine lines {p, q, -p-q} over (Z3)^n, coordinates in base-3 digits.
  auto combine = [&](int a, int b, int ca, int cb) {
    int r = 0, pow = 1;
    for (int i = 0; i < n; ++i) {
      int d = ((a % 3) * ca + (b % 3) * cb) % 3;
      if (d < 0) d += 3;
      a /= 3;
      b /= 3;
      r += d * pow;
      pow *= 3;
    }
    return r;
  };
  std::set<std::array<Elem, 3>> blocks;
  for (int p = 0; p < points; ++p)
    for (int q = p + 1; q < points; ++q) {
      int r = combine(p, q, -1, -1);  // p + q + r = 0
      std::array<Elem, 3> b{p + 1, q + 1, r + 1};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  SteinerTripleSystem sts =
      validate_sts(points, std::vector<std::array<Elem, 3>>(blocks.begin(), blocks.end()));

  // Weight = truncation to the first s coordinates, placed in the involution coset.
  std::vector<Elem> w(points + 1, 0);
  for (int p = 0; p < points; ++p) w[p + 1] = ts + p % ts;
  return AffineCovering{FischerPair{g, e_set}, validate_weighted_sts(sts, g, w)};
}

bool hall_system_check(const FischerSpace& space) {
  const auto& pts = space.points;
  const int m = static_cast<int>(pts.size());
  auto idx = [&](Elem p) {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
  };
  // pair -> third point of the joining line, -1 when no line joins them
  std::vector<int> third(static_cast<size_t>(m) * m, -1);
  for (const auto& line : space.lines) {
    int a = idx(line[0]), b = idx(line[1]), c = idx(line[2]);
    auto put = [&](int x, int y, int z) { third[static_cast<size_t>(x) * m + y] = z; };
    put(a, b, c); put(b, a, c); put(a, c, b); put(c, a, b); put(b, c, a); put(c, b, a);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (third[static_cast<size_t>(i) * m + j] < 0) return false;

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        if (third[static_cast<size_t>(i) * m + j] == k) continue;  // collinear
        std::vector<char> in(m, 0);
        std::vector<int> stack{i, j, k};
        in[i] = in[j] = in[k] = 1;
        size_t count = 3;
        bool grew = true;
        while (grew) {
          grew = false;
          for (size_t a = 0; a < stack.size() && count <= 9; ++a)
            for (size_t b = a + 1; b < stack.size(); ++b) {
              int t = third[static_cast<size_t>(stack[a]) * m + stack[b]];
              if (!in[t]) {
                in[t] = 1;
                stack.push_back(t);
                ++count;
                grew = true;
                if (count > 9) break;
              }
            }
        }
        if (count != 9) return false;
      }
  return true;
}

MagmaTable distributive_quasigroup(const WeightedSTS& ws) {
  const int n = ws.sts.point_count;
  std::set<Elem> image(ws.w.begin() + 1, ws.w.begin() + 1 + n);
  if (static_cast<int>(image.size()) != n)
    throw Error(Errc::NotBijective, "weight map is not injective");
  SubsetReport gen = subgroup_generated(ws.g, std::vector<Elem>(image.begin(), image.end()));
  bool ab = true;
  for (Elem x : gen.members)
    for (Elem y : gen.members)
      if (ws.g.mul(x, y) != ws.g.mul(y, x)) { ab = false; break; }
  if (ab) throw Error(Errc::DegenerateAbelian, "weights generate an abelian group");

  std::vector<Elem> third(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (const auto& b : ws.sts.blocks) {
    const Elem i = b[0], j = b[1], k = b[2];
    auto put = [&](Elem x, Elem y, Elem z) { third[static_cast<size_t>(x) * (n + 1) + y] = z; };
    put(i, j, k); put(j, i, k); put(i, k, j); put(k, i, j); put(j, k, i); put(k, j, i);
  }
  MagmaTable q;
  q.n = n;
  q.t.resize(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      q.at(x - 1, y - 1) = (x == y) ? x - 1 : third[static_cast<size_t>(x) * (n + 1) + y] - 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (q.at(x, y) != q.at(y, x))
        throw Error(Errc::HypothesisFailed, "block operation is not symmetric");
      for (int z = 0; z < n; ++z)
        if (q.at(x, q.at(y, z)) != q.at(q.at(x, y), q.at(x, z)))
          throw Error(Errc::HypothesisFailed, "block operation is not left distributive");
    }
  return q;
}

}  // namespace loops
