#include "loops/morphisms.hpp"

#include <algorithm>

#include "loops/errors.hpp"
#include "loops/sts.hpp"

namespace loops {

bool MorphismWitness::operator<(const MorphismWitness& o) const {
  if (alpha_s != o.alpha_s) return alpha_s < o.alpha_s;
  if (alpha_a != o.alpha_a) return alpha_a < o.alpha_a;
  return rho < o.rho;
}

namespace {

constexpr int kIsoOrderCap = 64;

// Backtracking over images in element order; every product of two already
// mapped elements forces a third image, so the search collapses quickly.
struct IsoSearch {
  const LoopTable& l1;
  const LoopTable& l2;
  int n;
  std::vector<Elem> img;
  std::vector<char> used;
  std::vector<Elem> assigned;  // in assignment order
  std::vector<Permutation>& out;

  bool propagate(size_t first_new, std::vector<Elem>& trail) {
    for (size_t qi = first_new; qi < assigned.size(); ++qi) {
      Elem a = assigned[qi];
      for (size_t bi = 0; bi < assigned.size(); ++bi) {
        Elem b = assigned[bi];
        const Elem pairs[2][2] = {{a, b}, {b, a}};
        for (const auto& p : pairs) {
          Elem c = l1.mul(p[0], p[1]);
          Elem w = l2.mul(img[p[0]], img[p[1]]);
          if (img[c] < 0) {
            if (used[w]) return false;
            img[c] = w;
            used[w] = 1;
            trail.push_back(c);
            assigned.push_back(c);
          } else if (img[c] != w) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem c : trail) {
      used[img[c]] = 0;
      img[c] = -1;
    }
    assigned.resize(assigned.size() - trail.size());
  }

  void dfs(Elem pos) {
    while (pos < n && img[pos] >= 0) ++pos;
    if (pos == n) {
      out.push_back(img);
      return;
    }
    for (Elem v = 1; v < n; ++v) {
      if (used[v]) continue;
      std::vector<Elem> trail;
      img[pos] = v;
      used[v] = 1;
      trail.push_back(pos);
      assigned.push_back(pos);
      size_t first_new = assigned.size() - 1;
      if (propagate(first_new, trail)) dfs(pos + 1);
      undo(trail);
    }
  }
};

}  // namespace

std::vector<Permutation> loop_isomorphisms(const LoopTable& l1, const LoopTable& l2) {
  if (l1.order() != l2.order()) return {};
  const int n = l1.order();
  if (n > kIsoOrderCap)
    throw Error(Errc::OrderCap, "exhaustive isomorphism search capped at order 64");
  std::vector<Permutation> out;
  IsoSearch search{l1, l2, n, std::vector<Elem>(n, -1), std::vector<char>(n, 0), {}, out};
  search.img[0] = 0;
  search.used[0] = 1;
  search.assigned.push_back(0);
  search.dfs(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> loop_automorphisms(const LoopTable& l) {
  return loop_isomorphisms(l, l);
}

EquationCheck check_iso_equation(const MorphismWitness& w, const ExtensionSpec& spec1,
                                 const ExtensionSpec& spec2) {
  const int ns = spec1.s.order();
  const GroupTable& a2 = spec2.a;
  EquationCheck out;
  for (Elem x = 0; x < ns; ++x)
    for (Elem y = 0; y < ns; ++y) {
      Elem xp = w.alpha_s[x], yp = w.alpha_s[y], zp = w.alpha_s[spec1.s.mul(x, y)];
      Elem lhs = w.alpha_a[spec1.fv(x, y)];
      Elem rhs = a2.mul(a2.inv(w.rho[zp]),
                        a2.mul(w.rho[xp], a2.mul(w.rho[yp], spec2.fv(xp, yp))));
      if (lhs != rhs) {
        out.ok = false;
        out.witness = PairWitness{x, y};
        return out;
      }
    }
  return out;
}

EquationCheck check_iso_equation(const MorphismWitness& w, const WeightedSteinerLoop& w1,
                                 const WeightedSteinerLoop& w2) {
  EquationCheck out =
      check_iso_equation(w, to_extension_spec(w1), to_extension_spec(w2));
  if (!out.ok) return out;
  const int ns = w1.s.order();
  const GroupTable& a2 = w2.a;
  for (Elem x = 1; x < ns; ++x) {
    // Diagonal form: rho(x')^2 = diag1(x)^{alpha_a} diag2(x')^{-1}.
    Elem xp = w.alpha_s[x];
    if (a2.mul(w.rho[xp], w.rho[xp]) !=
        a2.mul(w.alpha_a[w1.diag[x]], a2.inv(w2.diag[xp]))) {
      out.ok = false;
      out.witness = PairWitness{x, x};
      return out;
    }
    for (Elem y = 1; y < ns; ++y) {
      if (y == x) continue;
      // Off-diagonal h-form.
      Elem yp = w.alpha_s[y], zp = w.alpha_s[w1.s.mul(x, y)];
      Elem lhs = w.alpha_a[w1.a.mul(w1.h[x], w1.h[y])];
      Elem rhs = a2.mul(a2.inv(w.rho[zp]),
                        a2.mul(w.rho[xp],
                               a2.mul(w.rho[yp], a2.mul(w2.h[xp], w2.h[yp]))));
      if (lhs != rhs) {
        out.ok = false;
        out.witness = PairWitness{x, y};
        return out;
      }
    }
  }
  return out;
}

Permutation witness_point_map(const MorphismWitness& w, const ExtensionSpec& spec1,
                              const ExtensionSpec& spec2) {
  const int na = spec2.a.order();
  Permutation map(static_cast<size_t>(spec1.order()));
  for (Elem x = 0; x < spec1.s.order(); ++x)
    for (Elem xi = 0; xi < spec1.a.order(); ++xi) {
      Elem xp = w.alpha_s[x];
      map[spec1.encode(x, xi)] =
          xp * na + spec2.a.mul(w.rho[xp], w.alpha_a[xi]);
    }
  return map;
}

bool is_table_isomorphism(const Permutation& map, const LoopTable& l1,
                          const LoopTable& l2) {
  if (static_cast<int>(map.size()) != l1.order() || l1.order() != l2.order() ||
      !is_permutation(map))
    return false;
  for (Elem u = 0; u < l1.order(); ++u)
    for (Elem v = 0; v < l1.order(); ++v)
      if (map[l1.mul(u, v)] != l2.mul(map[u], map[v])) return false;
  return true;
}

std::vector<MorphismWitness> find_isomorphisms(const ExtensionSpec& spec1,
                                               const ExtensionSpec& spec2,
                                               FindOptions opts) {
  if (spec1.variant != Variant::Standard || spec2.variant != Variant::Standard)
    throw Error(Errc::UnsupportedParams, "isomorphism search handles the standard variant");
  if (spec1.s.order() != spec2.s.order() || spec1.a.order() != spec2.a.order())
    return {};
  if (!is_steiner_loop(spec1.s) || !is_steiner_loop(spec2.s))
    throw Error(Errc::UnsupportedParams,
                "isomorphism search requires Steiner base loops (x*x = e)");

  const int ns = spec1.s.order();
  const GroupTable& a1 = spec1.a;
  const GroupTable& a2 = spec2.a;
  const std::vector<Permutation> s_maps = loop_isomorphisms(spec1.s, spec2.s);
  const std::vector<Permutation> a_maps = loop_isomorphisms(a1.l, a2.l);

  std::vector<Elem> central;
  {
    const std::vector<char> zmask = centre_mask(a2);
    for (Elem c = 0; c < a2.order(); ++c)
      if (zmask[c]) central.push_back(c);
  }

  const LoopTable t1 = build_extension(spec1);
  const LoopTable t2 = build_extension(spec2);

  std::vector<MorphismWitness> out;
  std::vector<Elem> rho(ns, 0);

  for (const Permutation& as : s_maps)
    for (const Permutation& aa : a_maps) {
      if (opts.prune) {
        bool feasible = true;
        for (Elem x = 1; x < ns && feasible; ++x)
          for (Elem y = 1; y < ns; ++y) {
            if (y == x) continue;
            Elem lhs = aa[a1.mul(spec1.fv(x, y), a1.inv(spec1.fv(y, x)))];
            Elem rhs = a2.mul(spec2.fv(as[x], as[y]), a2.inv(spec2.fv(as[y], as[x])));
            if (lhs != rhs) {
              feasible = false;
              break;
            }
          }
        if (!feasible) continue;
      }

      // Solve for rho point by point: the diagonal fixes rho(x')^2, pair
      // equations against earlier points filter candidates.
      auto pair_ok = [&](Elem x, Elem y) {
        Elem xp = as[x], yp = as[y], zp = as[spec1.s.mul(x, y)];
        return aa[spec1.fv(x, y)] ==
               a2.mul(a2.inv(rho[zp]),
                      a2.mul(rho[xp], a2.mul(rho[yp], spec2.fv(xp, yp))));
      };
      auto dfs = [&](auto&& self, Elem x) -> void {
        if (x == ns) {
          MorphismWitness w{as, aa, rho};
          if (check_iso_equation(w, spec1, spec2).ok &&
              is_table_isomorphism(witness_point_map(w, spec1, spec2), t1, t2))
            out.push_back(std::move(w));
          return;
        }
        Elem xp = as[x];
        Elem square = a2.mul(aa[spec1.fv(x, x)], a2.inv(spec2.fv(xp, xp)));
        for (Elem c : central) {
          if (a2.mul(c, c) != square) continue;
          rho[xp] = c;
          // Only pair equations whose three points all have assigned rho
          // values may prune; the rest wait for later assignments.
          bool ok = true;
          for (Elem u = 1; u <= x && ok; ++u)
            for (Elem v = 1; v <= x; ++v)
              if ((u == x || v == x || spec1.s.mul(u, v) == x) &&
                  spec1.s.mul(u, v) <= x && !pair_ok(u, v)) {
                ok = false;
                break;
              }
          if (ok) self(self, x + 1);
        }
        rho[xp] = 0;
      };
      dfs(dfs, 1);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool rho_homomorphic(const std::vector<Elem>& rho, const LoopTable& s,
                     const GroupTable& a) {
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (rho[s.mul(x, y)] != a.mul(rho[x], rho[y])) return false;
  return true;
}

}  // namespace

AutGroupReport automorphism_group(const ExtensionSpec& spec, FindOptions opts) {
  AutGroupReport rep;
  rep.full = find_isomorphisms(spec, spec, opts);

  const int ns = spec.s.order();
  const Permutation id_s = identity_perm(ns);
  const Permutation id_a = identity_perm(spec.a.order());
  const std::vector<Elem> zero_rho(ns, 0);
  const MorphismWitness identity{id_s, id_a, zero_rho};

  for (const auto& w : rep.full) {
    if (w.alpha_s == id_s && w.alpha_a == id_a) rep.psi.push_back(w);
    if (w.rho == zero_rho) {
      rep.sigma.push_back(w);
      if (w.alpha_a == id_a) rep.sigma1.push_back(w);
      if (w.alpha_s == id_s) rep.sigma2.push_back(w);
    }
  }

  auto in_psi = [&](const MorphismWitness& w) {
    return std::binary_search(rep.psi.begin(), rep.psi.end(), w);
  };
  rep.psi_closed = true;
  rep.psi_elementary_abelian_2 = true;
  for (const auto& p : rep.psi) {
    for (const auto& q : rep.psi) {
      // Composition within Psi multiplies rho pointwise (central values).
      MorphismWitness prod{id_s, id_a, std::vector<Elem>(ns, 0)};
      for (Elem x = 0; x < ns; ++x) prod.rho[x] = spec.a.mul(p.rho[x], q.rho[x]);
      if (!in_psi(prod)) rep.psi_closed = false;
    }
    bool involutory = true;
    for (Elem x = 0; x < ns; ++x)
      if (spec.a.mul(p.rho[x], p.rho[x]) != 0) involutory = false;
    if (!involutory) rep.psi_elementary_abelian_2 = false;
  }

  rep.psi_sigma_trivial = true;
  for (const auto& w : rep.psi)
    if (w.rho == zero_rho && !(w == identity)) rep.psi_sigma_trivial = false;

  const SubsetReport derived = derived_subloop(spec.s);
  rep.rho_kernels_contain_derived = true;
  for (const auto& w : rep.full) {
    if (!rho_homomorphic(w.rho, spec.s, spec.a)) continue;
    for (Elem d : derived.members)
      if (w.rho[d] != 0) rep.rho_kernels_contain_derived = false;
  }
  return rep;
}

AutGroupReport automorphism_group(const WeightedSteinerLoop& w, FindOptions opts) {
  AutGroupReport rep = automorphism_group(to_extension_spec(w), opts);
  const int ns = w.s.order();
  if (ns <= 2) return rep;
  for (const auto& m : rep.full) {
    if (!rho_homomorphic(m.rho, w.s, w.a)) continue;
    bool ok = true;
    for (Elem x = 1; x < ns && ok; ++x)
      ok = m.alpha_a[w.diag[x]] == w.diag[m.alpha_s[x]];
    if (ok) {
      // c h(x') = h(x') c^{-1} = h(x)^{alpha_a} for a single c, all x.
      Elem c = w.a.mul(m.alpha_a[w.h[1]], w.a.inv(w.h[m.alpha_s[1]]));
      for (Elem x = 1; x < ns && ok; ++x) {
        Elem hp = w.h[m.alpha_s[x]];
        Elem target = m.alpha_a[w.h[x]];
        ok = w.a.mul(c, hp) == target && w.a.mul(hp, w.a.inv(c)) == target;
      }
    }
    if (!ok) rep.weight_conjugation_ok = false;
  }
  return rep;
}

}  // namespace loops
