#include "loops/tables.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loops {

Elem LoopTable::left_div(Elem a, Elem b) const {
  const int n = m.n;
  for (Elem y = 0; y < n; ++y)
    if (m.at(a, y) == b) return y;
  throw Error(Errc::BadIndex, "left_div: no solution (not a loop?)");
}

Elem LoopTable::right_div(Elem b, Elem a) const {
  const int n = m.n;
  for (Elem x = 0; x < n; ++x)
    if (m.at(x, a) == b) return x;
  throw Error(Errc::BadIndex, "right_div: no solution (not a loop?)");
}

bool LoopTable::commutative() const {
  const int n = m.n;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (m.at(x, y) != m.at(y, x)) return false;
  return true;
}

bool SubsetReport::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

LoopTable validate_loop(const MagmaTable& m, Elem identity) {
  const int n = m.n;
  if (n <= 0 || m.t.size() != static_cast<size_t>(n) * n)
    throw Error(Errc::BadIndex, "malformed magma table");
  if (n > kOrderCap) throw Error(Errc::OrderCap, "order exceeds cap");
  if (identity < 0 || identity >= n) throw Error(Errc::BadIndex, "identity out of range");
  for (Elem v : m.t)
    if (v < 0 || v >= n) throw Error(Errc::BadIndex, "table entry out of range");

  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      Elem v = m.at(x, y);
      if (seen[v])
        throw Error(Errc::NotLatin, "row " + std::to_string(x) + " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (Elem y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x = 0; x < n; ++x) {
      Elem v = m.at(x, y);
      if (seen[v])
        throw Error(Errc::NotLatin, "column " + std::to_string(y) + " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }

  // Structural (latin) defects are reported before identity defects.
  for (Elem x = 0; x < n; ++x)
    if (m.at(identity, x) != x || m.at(x, identity) != x)
      throw Error(Errc::NoIdentity, "element " + std::to_string(identity) + " is not an identity");

  LoopTable out;
  out.m.n = n;
  out.m.t.resize(static_cast<size_t>(n) * n);
  if (identity == 0) {
    out.m.t = m.t;
  } else {
    // Swap labels 0 <-> identity so the identity sits at index 0.
    auto relabel = [&](Elem v) { return v == identity ? 0 : (v == 0 ? identity : v); };
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        out.m.at(relabel(x), relabel(y)) = relabel(m.at(x, y));
  }
  return out;
}

std::optional<TripleWitness> associativity_witness(const LoopTable& l) {
  const int n = l.order();
  const Elem* t = l.m.t.data();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = t[static_cast<size_t>(x) * n + y];
      for (Elem z = 0; z < n; ++z)
        if (t[static_cast<size_t>(xy) * n + z] !=
            t[static_cast<size_t>(x) * n + t[static_cast<size_t>(y) * n + z]])
          return TripleWitness{x, y, z};
    }
  return std::nullopt;
}

bool is_associative(const LoopTable& l) { return !associativity_witness(l).has_value(); }

namespace {

// Checks that a subset of a loop is closed, contains 0 and associates.
void require_subgroup(const LoopTable& l, const std::vector<Elem>& s, const char* what) {
  if (s.empty() || s[0] != 0) throw Error(Errc::BadIndex, std::string(what) + ": missing identity");
  for (Elem a : s)
    for (Elem b : s) {
      Elem ab = l.mul(a, b);
      if (!std::binary_search(s.begin(), s.end(), ab))
        throw Error(Errc::BadIndex, std::string(what) + ": not closed");
      for (Elem c : s)
        if (l.mul(ab, c) != l.mul(a, l.mul(b, c)))
          throw Error(Errc::BadIndex, std::string(what) + ": not associative");
    }
}

}  // namespace

NucleiReport nuclei(const LoopTable& l) {
  const int n = l.order();
  std::vector<Elem> nl, nr, nm, nn;
  for (Elem u = 0; u < n; ++u) {
    bool in_l = true, in_r = true, in_m = true;
    for (Elem x = 0; x < n && (in_l || in_r || in_m); ++x)
      for (Elem y = 0; y < n && (in_l || in_r || in_m); ++y) {
        if (in_l && l.mul(l.mul(u, x), y) != l.mul(u, l.mul(x, y))) in_l = false;
        if (in_r && l.mul(x, l.mul(y, u)) != l.mul(l.mul(x, y), u)) in_r = false;
        if (in_m && l.mul(l.mul(x, u), y) != l.mul(x, l.mul(u, y))) in_m = false;
      }
    if (in_l) nl.push_back(u);
    if (in_r) nr.push_back(u);
    if (in_m) nm.push_back(u);
    if (in_l && in_r && in_m) nn.push_back(u);
  }
  require_subgroup(l, nl, "left nucleus");
  require_subgroup(l, nr, "right nucleus");
  require_subgroup(l, nm, "middle nucleus");
  require_subgroup(l, nn, "nucleus");
  return NucleiReport{{nl, "left_nucleus"}, {nr, "right_nucleus"}, {nm, "middle_nucleus"}, {nn, "nucleus"}};
}

SubsetReport centre(const LoopTable& l) {
  const int n = l.order();
  NucleiReport nuc = nuclei(l);
  std::vector<Elem> z;
  for (Elem u : nuc.nucleus.members) {
    bool commutes = true;
    for (Elem x = 0; x < n && commutes; ++x)
      if (l.mul(u, x) != l.mul(x, u)) commutes = false;
    if (commutes) z.push_back(u);
  }
  require_subgroup(l, z, "centre");
  return SubsetReport{z, "centre"};
}

namespace {

// Closure of a generating set under multiplication and both divisions.
std::vector<Elem> subloop_closure(const LoopTable& l, std::vector<Elem> gens) {
  std::vector<char> in(l.order(), 0);
  in[0] = 1;
  std::vector<Elem> work{0};
  for (Elem g : gens)
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (Elem v : {l.mul(work[i], work[j]), l.mul(work[j], work[i]),
                     l.left_div(work[i], work[j]), l.left_div(work[j], work[i]),
                     l.right_div(work[i], work[j]), l.right_div(work[j], work[i])}) {
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace

SubsetReport derived_subloop(const LoopTable& l) {
  const int n = l.order();
  std::vector<Elem> gens;
  std::vector<char> seen(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      // commutator: (yx) \ (xy)
      Elem c = l.left_div(l.mul(y, x), l.mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
      for (Elem z = 0; z < n; ++z) {
        // associator: (x(yz)) \ ((xy)z)
        Elem a = l.left_div(l.mul(x, l.mul(y, z)), l.mul(l.mul(x, y), z));
        if (!seen[a]) {
          seen[a] = 1;
          gens.push_back(a);
        }
      }
    }
  return SubsetReport{subloop_closure(l, gens), "derived"};
}

SubsetReport subgroup_generated(const GroupTable& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Elem> work{0};
  for (Elem x : gens) {
    if (x < 0 || x >= g.order()) throw Error(Errc::BadIndex, "generator out of range");
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    Elem iv = g.inv(work[i]);
    if (!in[iv]) {
      in[iv] = 1;
      work.push_back(iv);
    }
    for (size_t j = 0; j < work.size(); ++j) {
      Elem p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
      Elem q = g.mul(work[j], work[i]);
      if (!in[q]) {
        in[q] = 1;
        work.push_back(q);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return SubsetReport{work, "generated"};
}

QuotientResult quotient_group(const GroupTable& g, const SubsetReport& nsub) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (Elem x : nsub.members) in[x] = 1;
  if (nsub.members.empty() || !in[0]) throw Error(Errc::NotNormal, "subgroup must contain identity");
  for (Elem x : nsub.members)
    for (Elem a = 0; a < n; ++a)
      if (!in[g.mul(g.mul(g.inv(a), x), a)])
        throw Error(Errc::NotNormal, "subgroup is not normal");

  // Cosets labeled by their least member, then renumbered in that order
  // with the identity coset first (its least member is 0).
  std::vector<Elem> coset_of(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != -1) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem h : nsub.members) coset_of[g.mul(x, h)] = id;
  }
  const int q = static_cast<int>(reps.size());
  MagmaTable qt;
  qt.n = q;
  qt.t.resize(static_cast<size_t>(q) * q);
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j) qt.at(i, j) = coset_of[g.mul(reps[i], reps[j])];
  // Consistency: projection must be a homomorphism on every pair.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (coset_of[g.mul(x, y)] != qt.at(coset_of[x], coset_of[y]))
        throw Error(Errc::NotNormal, "cosets do not multiply consistently");
  QuotientResult res{as_group(validate_loop(qt, 0)), coset_of};
  return res;
}

int element_order(const GroupTable& g, Elem x) {
  int k = 1;
  Elem p = x;
  while (p != 0) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

GroupTable as_group(const LoopTable& l) {
  if (auto w = associativity_witness(l))
    throw Error(Errc::BadIndex, "table is not associative at (" + std::to_string(w->x) + "," +
                                    std::to_string(w->y) + "," + std::to_string(w->z) + ")");
  GroupTable g;
  g.l = l;
  g.inverse.resize(l.order());
  for (Elem x = 0; x < l.order(); ++x) {
    Elem r = l.rinv(x);
    if (l.mul(r, x) != 0) throw Error(Errc::BadIndex, "one-sided inverse in a group");
    g.inverse[x] = r;
  }
  return g;
}

GroupTable make_cyclic(int n) {
  if (n <= 0 || n > kOrderCap) throw Error(Errc::UnsupportedParams, "cyclic: bad order");
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m.at(x, y) = (x + y) % n;
  return as_group(validate_loop(m, 0));
}

GroupTable make_elementary_abelian_2(int k) {
  if (k < 0 || (1 << k) > kOrderCap) throw Error(Errc::UnsupportedParams, "elementary_abelian_2: bad rank");
  const int n = 1 << k;
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m.at(x, y) = x ^ y;
  return as_group(validate_loop(m, 0));
}

GroupTable make_symmetric(int n) {
  if (n < 1 || n > 4) throw Error(Errc::UnsupportedParams, "symmetric: n must be 1..4");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int ord = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<Elem>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  MagmaTable m;
  m.n = ord;
  m.t.resize(static_cast<size_t>(ord) * ord);
  std::vector<Elem> comp(n);
  for (Elem i = 0; i < ord; ++i)
    for (Elem j = 0; j < ord; ++j) {
      for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
      m.at(i, j) = index_of(comp);
    }
  return as_group(validate_loop(m, 0));
}

GroupTable make_direct_product(const GroupTable& g1, const GroupTable& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  if (static_cast<long long>(n1) * n2 > kOrderCap) throw Error(Errc::OrderCap, "product exceeds cap");
  const int n = n1 * n2;
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      for (Elem c = 0; c < n1; ++c)
        for (Elem d = 0; d < n2; ++d)
          m.at(a * n2 + b, c * n2 + d) = g1.mul(a, c) * n2 + g2.mul(b, d);
  return as_group(validate_loop(m, 0));
}

GroupTable make_group_by_name(const std::string& name) {
  auto parse_atom = [](const std::string& a) -> GroupTable {
    if (a.size() >= 2 && a[0] == 'S') return make_symmetric(std::stoi(a.substr(1)));
    if (a.size() >= 2 && a[0] == 'Z') {
      auto caret = a.find('^');
      if (caret != std::string::npos) {
        int base = std::stoi(a.substr(1, caret - 1));
        int exp = std::stoi(a.substr(caret + 1));
        if (base == 2) return make_elementary_abelian_2(exp);
        GroupTable g = make_cyclic(base);
        GroupTable r = g;
        for (int i = 1; i < exp; ++i) r = make_direct_product(r, g);
        return r;
      }
      return make_cyclic(std::stoi(a.substr(1)));
    }
    throw Error(Errc::UnsupportedParams, "unknown group name: " + a);
  };
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i < name.size(); ++i)
    if (name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  parts.push_back(name.substr(start));
  if (parts.empty() || parts.front().empty())
    throw Error(Errc::UnsupportedParams, "unknown group name: " + name);
  GroupTable g = parse_atom(parts.front());
  for (size_t i = 1; i < parts.size(); ++i) g = make_direct_product(g, parse_atom(parts[i]));
  return g;
}

GroupTable make_gf3_semidirect(int s) {
  if (s < 0) throw Error(Errc::UnsupportedParams, "gf3_semidirect: negative rank");
  long long v = 1;
  for (int i = 0; i < s; ++i) v *= 3;
  if (2 * v > kOrderCap) throw Error(Errc::OrderCap, "gf3_semidirect exceeds cap");
  const int vn = static_cast<int>(v);
  const int n = 2 * vn;
  // Element (x, eps) with x in (Z3)^s, eps in {0,1}, encoded eps*3^s + x.
  auto add = [&](int a, int b, int sign) {
    int r = 0, pow = 1;
    for (int i = 0; i < s; ++i) {
      int da = a % 3, db = b % 3;
      a /= 3;
      b /= 3;
      int d = (da + sign * db) % 3;
      if (d < 0) d += 3;
      r += d * pow;
      pow *= 3;
    }
    return r;
  };
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int x = 0; x < vn; ++x)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int y = 0; y < vn; ++y) {
          int sum = add(x, y, e1 ? -1 : 1);
          m.at(e1 * vn + x, e2 * vn + y) = ((e1 ^ e2) * vn) + sum;
        }
  return as_group(validate_loop(m, 0));
}

namespace {

bool extend_iso(const GroupTable& g1, const GroupTable& g2, std::vector<Elem>& img,
                std::vector<char>& used, Elem next) {
  const int n = g1.order();
  if (next == n) return true;
  for (Elem cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (element_order(g1, next) != element_order(g2, cand)) continue;
    img[next] = cand;
    used[cand] = 1;
    bool ok = true;
    for (Elem a = 0; a <= next && ok; ++a) {
      if (img[a] < 0) continue;
      Elem p = g1.mul(a, next), q = g1.mul(next, a);
      if (p <= next && img[p] >= 0 && g2.mul(img[a], cand) != img[p]) ok = false;
      if (ok && q <= next && img[q] >= 0 && g2.mul(cand, img[a]) != img[q]) ok = false;
      // Also the reverse direction when the product lands beyond the prefix.
      if (ok && p > next && img[p] >= 0 && g2.mul(img[a], cand) != img[p]) ok = false;
      if (ok && q > next && img[q] >= 0 && g2.mul(cand, img[a]) != img[q]) ok = false;
    }
    if (ok && extend_iso(g1, g2, img, used, next + 1)) return true;
    img[next] = -1;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_group_isomorphism(const GroupTable& g1, const GroupTable& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > 24) throw Error(Errc::OrderCap, "isomorphism search limited to order <= 24");
  std::vector<Elem> img(g1.order(), -1);
  std::vector<char> used(g1.order(), 0);
  img[0] = 0;
  used[0] = 1;
  if (extend_iso(g1, g2, img, used, 1)) {
    // Full verification.
    for (Elem a = 0; a < g1.order(); ++a)
      for (Elem b = 0; b < g1.order(); ++b)
        if (img[g1.mul(a, b)] != g2.mul(img[a], img[b]))
          throw Error(Errc::BadIndex, "isomorphism search produced a non-homomorphism");
    return img;
  }
  return std::nullopt;
}

GroupTable subgroup_table(const GroupTable& g, const SubsetReport& s,
                          std::vector<Elem>* global_to_local) {
  const int k = static_cast<int>(s.members.size());
  std::vector<Elem> loc(g.order(), -1);
  for (int i = 0; i < k; ++i) loc[s.members[i]] = i;
  if (s.members.empty() || s.members[0] != 0)
    throw Error(Errc::BadIndex, "subgroup must contain the identity");
  MagmaTable m;
  m.n = k;
  m.t.resize(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem p = g.mul(s.members[i], s.members[j]);
      if (loc[p] < 0) throw Error(Errc::BadIndex, "subset is not closed");
      m.at(i, j) = loc[p];
    }
  if (global_to_local) *global_to_local = loc;
  return as_group(validate_loop(m, 0));
}

std::vector<char> centre_mask(const GroupTable& g) {
  const int n = g.order();
  std::vector<char> mask(n, 1);
  for (Elem z = 0; z < n; ++z)
    for (Elem x = 0; x < n; ++x)
      if (g.mul(z, x) != g.mul(x, z)) {
        mask[z] = 0;
        break;
      }
  return mask;
}

}  // namespace loops
