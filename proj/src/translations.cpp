#include "loops/translations.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "loops/errors.hpp"

namespace loops {

Permutation identity_perm(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Permutation invert_perm(const Permutation& p) {
  Permutation r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<Elem>(x);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (Elem v : p) {
    if (v < 0 || v >= static_cast<Elem>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation translation(const LoopTable& l, Elem a, Side side) {
  const int n = l.order();
  if (a < 0 || a >= n) throw Error(Errc::BadIndex, "translation element out of range");
  Permutation p(n);
  for (Elem x = 0; x < n; ++x) p[x] = side == Side::Left ? l.mul(a, x) : l.mul(x, a);
  return p;
}

bool PermGroupClosure::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroupClosure close(const std::vector<Permutation>& generators, long long cap) {
  if (generators.empty()) return {};
  const size_t degree = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != degree || !is_permutation(g))
      throw Error(Errc::NotBijective, "closure generators must be permutations of one degree");

  // Finite bijections generate a group under composition alone (inverses are
  // powers), so breadth-first products from the identity reach everything.
  std::set<Permutation> seen;
  std::deque<const Permutation*> frontier;
  auto push = [&](Permutation p) {
    auto [it, fresh] = seen.insert(std::move(p));
    if (fresh) {
      if (static_cast<long long>(seen.size()) > cap)
        throw Error(Errc::ClosureCap, "permutation closure exceeds cap");
      frontier.push_back(&*it);
    }
  };
  push(identity_perm(static_cast<int>(degree)));
  while (!frontier.empty()) {
    const Permutation* cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) push(compose(*cur, g));
  }
  PermGroupClosure out;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

TranslationGroupsReport translation_groups(const ExtensionSpec& spec, long long cap) {
  TranslationGroupsReport rep;
  const LoopTable table = build_extension(spec);
  const int n = table.order();
  const int na = spec.a.order();

  std::vector<Permutation> left_gens, right_gens, all_gens;
  for (Elem u = 0; u < n; ++u) {
    left_gens.push_back(translation(table, u, Side::Left));
    right_gens.push_back(translation(table, u, Side::Right));
  }
  all_gens = left_gens;
  all_gens.insert(all_gens.end(), right_gens.begin(), right_gens.end());

  rep.g_left = close(left_gens, cap);
  rep.g_right = close(right_gens, cap);
  rep.g_full = close(all_gens, cap);
  rep.left_equals_right = rep.g_left.elements == rep.g_right.elements;
  rep.a_abelian = spec.a.abelian();

  // N = {rho_(e,alpha)}: right translations by the A-slice.
  std::vector<Permutation> kernel(na);
  for (Elem alpha = 0; alpha < na; ++alpha)
    kernel[alpha] = translation(table, spec.encode(0, alpha), Side::Right);
  rep.kernel_order = kernel.size();

  std::vector<Permutation> sorted_kernel = kernel;
  std::sort(sorted_kernel.begin(), sorted_kernel.end());
  auto in_kernel = [&](const Permutation& p) {
    return std::binary_search(sorted_kernel.begin(), sorted_kernel.end(), p);
  };

  rep.kernel_is_subgroup = true;
  for (Elem a = 0; a < na && rep.kernel_is_subgroup; ++a)
    for (Elem b = 0; b < na; ++b)
      if (!in_kernel(compose(kernel[a], kernel[b]))) {
        rep.kernel_is_subgroup = false;
        break;
      }

  // alpha -> rho_(e, alpha^{-1}) is the isomorphism of A onto N.
  rep.kernel_isomorphic_to_a = rep.kernel_is_subgroup;
  auto image = [&](Elem alpha) { return kernel[spec.a.inv(alpha)]; };
  for (Elem a = 0; a < na && rep.kernel_isomorphic_to_a; ++a)
    for (Elem b = 0; b < na; ++b) {
      if (compose(image(a), image(b)) != image(spec.a.mul(a, b)) ||
          (a != b && image(a) == image(b))) {
        rep.kernel_isomorphic_to_a = false;
        break;
      }
    }

  rep.kernel_normal = true;
  for (const auto& g : right_gens) {
    const Permutation gi = invert_perm(g);
    for (const auto& k : kernel)
      if (!in_kernel(compose(gi, compose(k, g)))) {
        rep.kernel_normal = false;
        break;
      }
    if (!rep.kernel_normal) break;
  }

  std::vector<Permutation> sigma_gens;
  for (Elem a = 0; a < spec.s.order(); ++a)
    sigma_gens.push_back(translation(table, spec.encode(a, 0), Side::Right));
  PermGroupClosure sigma = close(sigma_gens, cap);
  rep.sigma_order = sigma.size();
  rep.sigma_kernel_order = 0;
  for (const auto& p : sigma.elements)
    if (in_kernel(p)) ++rep.sigma_kernel_order;
  // G_r = Sigma N with N normal: |G_r| |Sigma cap N| = |Sigma| |N|.
  rep.order_product_ok = rep.g_right.size() * rep.sigma_kernel_order ==
                         rep.sigma_order * static_cast<size_t>(na);
  return rep;
}

IotaReport iota_maps(const ExtensionSpec& spec) {
  IotaReport rep;
  const LoopTable table = build_extension(spec);
  const int n = table.order();
  const int na = spec.a.order();

  rep.f_central = true;
  const std::vector<char> zmask = centre_mask(spec.a);
  for (Elem v : spec.f)
    if (!zmask[v]) {
      rep.f_central = false;
      break;
    }

  rep.all_automorphisms = true;
  for (Elem alpha = 0; alpha < na; ++alpha) {
    Permutation p(n);
    for (Elem u = 0; u < n; ++u) {
      Elem xi = spec.a_part(u);
      p[u] = spec.encode(spec.s_part(u), spec.a.mul(spec.a.inv(alpha), xi, alpha));
    }
    bool automorphism = true;
    for (Elem u = 0; u < n && automorphism; ++u)
      for (Elem v = 0; v < n; ++v)
        if (p[table.mul(u, v)] != table.mul(p[u], p[v])) {
          automorphism = false;
          break;
        }
    if (!automorphism && rep.all_automorphisms) {
      rep.all_automorphisms = false;
      rep.failing_alpha = alpha;
    }
    rep.maps.push_back(std::move(p));
  }
  return rep;
}

DecompositionReport full_group_decomposition(const ExtensionSpec& spec, long long cap) {
  DecompositionReport rep;
  const LoopTable table = build_extension(spec);
  const int n = table.order();

  IotaReport iota = iota_maps(spec);
  if (!iota.all_automorphisms)
    throw Error(Errc::HypothesisFailed,
                "some iota_alpha is not an automorphism of the extension");

  std::vector<Permutation> left_gens, all_gens;
  for (Elem u = 0; u < n; ++u) {
    left_gens.push_back(translation(table, u, Side::Left));
    all_gens.push_back(left_gens.back());
  }
  for (Elem u = 0; u < n; ++u) all_gens.push_back(translation(table, u, Side::Right));

  PermGroupClosure g = close(all_gens, cap);
  rep.g_order = g.size();

  std::vector<Permutation> left_and_iota = left_gens;
  left_and_iota.insert(left_and_iota.end(), iota.maps.begin(), iota.maps.end());
  rep.generated_equal = close(left_and_iota, cap).elements == g.elements;

  rep.rho_decomposition_ok = true;
  for (Elem u = 0; u < n && rep.rho_decomposition_ok; ++u) {
    Elem alpha = spec.a_part(u);
    if (translation(table, u, Side::Right) !=
        compose(iota.maps[alpha], translation(table, u, Side::Left)))
      rep.rho_decomposition_ok = false;
  }

  rep.commutative = table.commutative();
  if (rep.commutative) {
    rep.lambda_slice_central = true;
    for (Elem alpha = 0; alpha < spec.a.order() && rep.lambda_slice_central; ++alpha) {
      Permutation lam = translation(table, spec.encode(0, alpha), Side::Left);
      for (const auto& p : g.elements)
        if (compose(lam, p) != compose(p, lam)) {
          rep.lambda_slice_central = false;
          break;
        }
    }
  }
  return rep;
}

bool check_rho_factorization(const ExtensionSpec& spec) {
  const LoopTable table = build_extension(spec);
  for (Elem u = 0; u < table.order(); ++u) {
    Elem a = spec.s_part(u), alpha = spec.a_part(u);
    if (translation(table, u, Side::Right) !=
        compose(translation(table, spec.encode(0, alpha), Side::Right),
                translation(table, spec.encode(a, 0), Side::Right)))
      return false;
  }
  return true;
}

bool check_conjugation_identity(const ExtensionSpec& spec) {
  const LoopTable table = build_extension(spec);
  const int na = spec.a.order();
  std::vector<Permutation> slice(na);
  for (Elem alpha = 0; alpha < na; ++alpha)
    slice[alpha] = translation(table, spec.encode(0, alpha), Side::Right);
  for (Elem a = 0; a < spec.s.order(); ++a)
    for (Elem gamma = 0; gamma < na; ++gamma) {
      Permutation r = translation(table, spec.encode(a, gamma), Side::Right);
      Permutation ri = invert_perm(r);
      for (Elem alpha = 0; alpha < na; ++alpha) {
        Elem conj = spec.a.mul(spec.a.mul(gamma, alpha), spec.a.inv(gamma));
        if (compose(ri, compose(slice[alpha], r)) != slice[conj]) return false;
      }
    }
  return true;
}

}  // namespace loops
