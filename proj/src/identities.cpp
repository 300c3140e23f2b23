#include "loops/identities.hpp"

#include <algorithm>
#include <map>

#include "loops/errors.hpp"

namespace loops {

const IdentityName kTenIdentities[10] = {
    IdentityName::Flexible,
    IdentityName::LeftAlternative,
    IdentityName::RightAlternative,
    IdentityName::LeftInverseProperty,
    IdentityName::RightInverseProperty,
    IdentityName::CrossInverse,
    IdentityName::AutomorphicInverse,
    IdentityName::WeakInverse,
    IdentityName::LeftBol,
    IdentityName::RightBol,
};

const char* identity_name(IdentityName id) {
  switch (id) {
    case IdentityName::Flexible: return "flexible";
    case IdentityName::LeftAlternative: return "left_alternative";
    case IdentityName::RightAlternative: return "right_alternative";
    case IdentityName::LeftInverseProperty: return "left_inverse_property";
    case IdentityName::RightInverseProperty: return "right_inverse_property";
    case IdentityName::CrossInverse: return "cross_inverse";
    case IdentityName::AutomorphicInverse: return "automorphic_inverse";
    case IdentityName::WeakInverse: return "weak_inverse";
    case IdentityName::LeftBol: return "left_bol";
    case IdentityName::RightBol: return "right_bol";
    case IdentityName::Moufang: return "moufang";
    case IdentityName::PowerAssociative: return "power_associative";
    case IdentityName::Associative: return "associative";
    case IdentityName::TotallySymmetric: return "totally_symmetric";
  }
  return "?";
}

std::optional<IdentityName> identity_from_name(const std::string& s) {
  static const std::map<std::string, IdentityName> names = {
      {"flexible", IdentityName::Flexible},
      {"left_alternative", IdentityName::LeftAlternative},
      {"right_alternative", IdentityName::RightAlternative},
      {"left_inverse_property", IdentityName::LeftInverseProperty},
      {"right_inverse_property", IdentityName::RightInverseProperty},
      {"cross_inverse", IdentityName::CrossInverse},
      {"automorphic_inverse", IdentityName::AutomorphicInverse},
      {"weak_inverse", IdentityName::WeakInverse},
      {"left_bol", IdentityName::LeftBol},
      {"right_bol", IdentityName::RightBol},
      {"moufang", IdentityName::Moufang},
      {"power_associative", IdentityName::PowerAssociative},
      {"associative", IdentityName::Associative},
      {"totally_symmetric", IdentityName::TotallySymmetric},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

void one_sided_inverses(const LoopTable& l, std::vector<Elem>& lambda, std::vector<Elem>& rho) {
  const int n = l.order();
  lambda.resize(n);
  rho.resize(n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      if (l.mul(u, v) == 0) {
        rho[u] = v;
        lambda[v] = u;
      }
}

namespace {

BruteResult power_associative_check(const LoopTable& l) {
  const int n = l.order();
  std::vector<char> in(n);
  std::vector<Elem> closure;
  for (Elem g = 1; g < n; ++g) {
    std::fill(in.begin(), in.end(), 0);
    closure.assign({0, g});
    in[0] = in[g] = 1;
    for (size_t i = 0; i < closure.size(); ++i)
      for (size_t j = 0; j < closure.size(); ++j) {
        Elem p = closure[i], q = closure[j];
        for (Elem r : {l.mul(p, q), l.left_div(p, q), l.right_div(q, p)})
          if (!in[r]) {
            in[r] = 1;
            closure.push_back(r);
          }
      }
    std::sort(closure.begin(), closure.end());
    for (Elem a : closure)
      for (Elem b : closure)
        for (Elem c : closure)
          if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c)))
            return {false, {g, a, b, c}};
  }
  return {true, {}};
}

}  // namespace

BruteResult brute_check(const LoopTable& l, IdentityName id) {
  switch (id) {
    case IdentityName::LeftInverseProperty:
    case IdentityName::RightInverseProperty:
    case IdentityName::CrossInverse:
    case IdentityName::AutomorphicInverse:
    case IdentityName::WeakInverse: {
      std::vector<Elem> lam, rho;
      one_sided_inverses(l, lam, rho);
      return brute_check(l, id, lam, rho);
    }
    default: {
      static const std::vector<Elem> none;
      return brute_check(l, id, none, none);
    }
  }
}

BruteResult brute_check(const LoopTable& l, IdentityName id, const std::vector<Elem>& lam,
                        const std::vector<Elem>& rho) {
  const int n = l.order();
  switch (id) {
    case IdentityName::Flexible:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(l.mul(x, y), x) != l.mul(x, l.mul(y, x))) return {false, {x, y}};
      return {true, {}};
    case IdentityName::LeftAlternative:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(x, l.mul(x, y)) != l.mul(l.mul(x, x), y)) return {false, {x, y}};
      return {true, {}};
    case IdentityName::RightAlternative:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(l.mul(y, x), x) != l.mul(y, l.mul(x, x))) return {false, {x, y}};
      return {true, {}};
    case IdentityName::LeftInverseProperty:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(lam[x], l.mul(x, y)) != y) return {false, {x, y}};
      return {true, {}};
    case IdentityName::RightInverseProperty:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(l.mul(y, x), rho[x]) != y) return {false, {x, y}};
      return {true, {}};
    case IdentityName::CrossInverse:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(l.mul(x, y), rho[x]) != y) return {false, {x, y}};
      return {true, {}};
    case IdentityName::AutomorphicInverse:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (rho[l.mul(x, y)] != l.mul(rho[x], rho[y])) return {false, {x, y}};
      return {true, {}};
    case IdentityName::WeakInverse: {
      // z is forced by (xy)z = e, then x(yz) = e is demanded.
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y) {
          Elem z = rho[l.mul(x, y)];
          if (l.mul(x, l.mul(y, z)) != 0) return {false, {x, y, z}};
        }
      return {true, {}};
    }
    case IdentityName::LeftBol:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y) {
          Elem xyx = l.mul(x, l.mul(y, x));
          for (Elem z = n - 1; z >= 0; --z)
            if (l.mul(xyx, z) != l.mul(x, l.mul(y, l.mul(x, z)))) return {false, {x, y, z}};
        }
      return {true, {}};
    case IdentityName::RightBol:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y) {
          Elem xyx = l.mul(l.mul(x, y), x);
          for (Elem z = n - 1; z >= 0; --z)
            if (l.mul(z, xyx) != l.mul(l.mul(l.mul(z, x), y), x)) return {false, {x, y, z}};
        }
      return {true, {}};
    case IdentityName::Moufang:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          for (Elem z = n - 1; z >= 0; --z)
            if (l.mul(l.mul(x, y), l.mul(z, x)) != l.mul(l.mul(x, l.mul(y, z)), x))
              return {false, {x, y, z}};
      return {true, {}};
    case IdentityName::Associative:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          for (Elem z = n - 1; z >= 0; --z)
            if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) return {false, {x, y, z}};
      return {true, {}};
    case IdentityName::TotallySymmetric:
      for (Elem x = n - 1; x >= 0; --x)
        for (Elem y = n - 1; y >= 0; --y)
          if (l.mul(x, y) != l.mul(y, x) || l.mul(x, l.mul(x, y)) != y) return {false, {x, y}};
      return {true, {}};
    case IdentityName::PowerAssociative:
      return power_associative_check(l);
  }
  return {true, {}};
}

namespace {

struct SpecConditions {
  const WeightedSteinerLoop& w;
  std::vector<char> zmask;

  explicit SpecConditions(const WeightedSteinerLoop& ws) : w(ws), zmask(centre_mask(ws.a)) {}

  bool f_diag_central(std::optional<PairWitness>* wt) const {
    for (Elem x = 1; x < w.s.order(); ++x)
      if (!zmask[w.diag[x]]) {
        if (wt && !*wt) *wt = PairWitness{x, x};
        return false;
      }
    return true;
  }
  bool k_central(std::optional<PairWitness>* wt) const {
    for (Elem x = 1; x < w.s.order(); ++x)
      for (Elem y = 1; y < w.s.order(); ++y)
        if (x != y && !zmask[w.a.mul(w.h[x], w.h[y])]) {
          if (wt && !*wt) *wt = PairWitness{x, y};
          return false;
        }
    return true;
  }
  bool h_range_commutative(std::optional<PairWitness>* wt) const {
    for (Elem x = 1; x < w.s.order(); ++x)
      for (Elem y = x + 1; y < w.s.order(); ++y)
        if (w.a.mul(w.h[x], w.h[y]) != w.a.mul(w.h[y], w.h[x])) {
          if (wt && !*wt) *wt = PairWitness{x, y};
          return false;
        }
    return true;
  }
  bool h_constant(std::optional<PairWitness>* wt) const {
    for (Elem x = 2; x < w.s.order(); ++x)
      if (w.h[x] != w.h[1]) {
        if (wt && !*wt) *wt = PairWitness{1, x};
        return false;
      }
    return true;
  }
  Elem t_pow(int k) const {
    Elem r = 0;
    for (int i = 0; i < k; ++i) r = w.a.mul(r, w.h[1]);
    return r;
  }
  bool diag_is_t4(std::optional<PairWitness>* wt) const {
    Elem t4 = t_pow(4);
    for (Elem x = 1; x < w.s.order(); ++x)
      if (w.diag[x] != t4) {
        if (wt && !*wt) *wt = PairWitness{x, x};
        return false;
      }
    return true;
  }
  bool wip_shift_constant(std::optional<PairWitness>* wt) const {
    // f(x,x) = s h(x) for a fixed s
    Elem s = w.a.mul(w.diag[1], w.a.inv(w.h[1]));
    for (Elem x = 2; x < w.s.order(); ++x)
      if (w.a.mul(w.diag[x], w.a.inv(w.h[x])) != s) {
        if (wt && !*wt) *wt = PairWitness{1, x};
        return false;
      }
    return true;
  }
};

CriterionReport conjunction(std::vector<std::pair<std::string, bool>> breakdown,
                            std::optional<PairWitness> wt) {
  CriterionReport r;
  r.breakdown = std::move(breakdown);
  r.holds = std::all_of(r.breakdown.begin(), r.breakdown.end(),
                        [](const auto& p) { return p.second; });
  if (!r.holds) r.witness = wt;
  return r;
}

CriterionReport left_alternative_schema(const SpecConditions& c) {
  std::optional<PairWitness> wt;
  bool fc = c.f_diag_central(&wt);
  bool kc = c.k_central(&wt);
  CheckResult core = check_core_identity(c.w);
  if (!core.holds && !wt) wt = core.witness;
  return conjunction({{"F central", fc}, {"K central", kc}, {"core identity", core.holds}}, wt);
}

// Shared by the right Bol law on the plain extension and the left Bol law on
// the both-sided variant; the sub-conditions are branch-split on |S|.
CriterionReport bol_schema(const SpecConditions& c) {
  const WeightedSteinerLoop& w = c.w;
  std::optional<PairWitness> wt;
  CriterionReport r;
  if (w.s.order() <= 4) {
    bool hc = c.h_range_commutative(&wt);
    bool fc = c.f_diag_central(&wt);
    CheckResult core = check_core_identity(w);
    if (!core.holds && !wt) wt = core.witness;
    r = conjunction(
        {{"range of h commutative", hc}, {"F central", fc}, {"core identity", core.holds}}, wt);
  } else {
    bool sg = is_associative(w.s);
    bool hk = c.h_constant(&wt);
    bool d4 = hk && c.diag_is_t4(&wt);
    bool t4c = hk && c.zmask[c.t_pow(4)];
    r = conjunction({{"S elementary abelian 2-group", sg},
                     {"h constant", hk},
                     {"diag = t^4", d4},
                     {"t^4 central", t4c}},
                    wt);
  }
  if (r.holds) r.properness = !c.k_central(nullptr);
  return r;
}

CriterionReport group_schema(const SpecConditions& c) {
  const WeightedSteinerLoop& w = c.w;
  if (w.s.order() <= 4) return left_alternative_schema(c);
  std::optional<PairWitness> wt;
  bool sg = is_associative(w.s);
  bool hk = c.h_constant(&wt);
  bool d4 = hk && c.diag_is_t4(&wt);
  bool t2c = hk && c.zmask[c.t_pow(2)];
  return conjunction({{"S elementary abelian 2-group", sg},
                      {"h constant", hk},
                      {"diag = t^4", d4},
                      {"t^2 central", t2c}},
                     wt);
}

}  // namespace

bool criterion_applies(IdentityName id, Variant v) {
  switch (v) {
    case Variant::Standard:
      switch (id) {
        case IdentityName::Flexible:
        case IdentityName::LeftAlternative:
        case IdentityName::RightAlternative:
        case IdentityName::LeftInverseProperty:
        case IdentityName::RightInverseProperty:
        case IdentityName::CrossInverse:
        case IdentityName::AutomorphicInverse:
        case IdentityName::WeakInverse:
        case IdentityName::LeftBol:
        case IdentityName::RightBol:
        case IdentityName::Moufang:
        case IdentityName::Associative:
          return true;
        default:
          return false;
      }
    case Variant::StarStar:
      return id == IdentityName::LeftAlternative || id == IdentityName::LeftInverseProperty ||
             id == IdentityName::LeftBol;
    case Variant::Star:
      return false;
  }
  return false;
}

bool star_all_fail_applies(const WeightedSteinerLoop& w) {
  SpecConditions c(w);
  return !(c.f_diag_central(nullptr) && c.k_central(nullptr));
}

bool star_flexible_criterion(const WeightedSteinerLoop& w) {
  // (x,xi)(y,eta)(x,xi) associates both ways iff every diag value is central
  // and h(xy)^{-1} h(y) is central for every ordered pair of distinct points.
  std::vector<char> zmask = centre_mask(w.a);
  for (Elem x = 1; x < w.s.order(); ++x)
    if (!zmask[w.diag[x]]) return false;
  for (Elem x = 1; x < w.s.order(); ++x)
    for (Elem y = 1; y < w.s.order(); ++y) {
      if (x == y) continue;
      Elem z = w.s.mul(x, y);
      if (!zmask[w.a.mul(w.a.inv(w.h[z]), w.h[y])]) return false;
    }
  return true;
}

CriterionReport criterion(const WeightedSteinerLoop& w, IdentityName id, Variant v) {
  if (!criterion_applies(id, v))
    throw Error(Errc::UnsupportedParams,
                std::string("no criterion for ") + identity_name(id) + " on variant " +
                    variant_name(v));
  SpecConditions c(w);

  if (v == Variant::StarStar) {
    if (id == IdentityName::LeftAlternative || id == IdentityName::LeftInverseProperty) {
      std::optional<PairWitness> wt;
      bool fc = c.f_diag_central(&wt);
      CheckResult core = check_core_identity(w);
      if (!core.holds && !wt) wt = core.witness;
      return conjunction({{"F central", fc}, {"core identity", core.holds}}, wt);
    }
    return bol_schema(c);  // left Bol on the both-sided variant
  }

  switch (id) {
    case IdentityName::Flexible: {
      std::optional<PairWitness> wt;
      bool fc = c.f_diag_central(&wt);
      bool kc = c.k_central(&wt);
      return conjunction({{"F central", fc}, {"K central", kc}}, wt);
    }
    case IdentityName::RightAlternative:
    case IdentityName::RightInverseProperty: {
      std::optional<PairWitness> wt;
      bool fc = c.f_diag_central(&wt);
      CheckResult core = check_core_identity(w);
      if (!core.holds && !wt) wt = core.witness;
      return conjunction({{"F central", fc}, {"core identity", core.holds}}, wt);
    }
    case IdentityName::LeftAlternative:
    case IdentityName::LeftInverseProperty:
      return left_alternative_schema(c);
    case IdentityName::CrossInverse: {
      bool ab = w.a.abelian();
      std::optional<PairWitness> wt;
      CheckResult cr = check_core_identity(w);
      if (!cr.holds) wt = cr.witness;
      return conjunction({{"A abelian", ab}, {"core identity", cr.holds}}, wt);
    }
    case IdentityName::AutomorphicInverse: {
      bool ab = w.a.abelian();
      std::optional<PairWitness> wt;
      bool sq = false;
      if (ab) {
        CheckResult cr = check_square_identity(w);
        sq = cr.holds;
        if (!sq) wt = cr.witness;
      }
      return conjunction({{"A abelian", ab}, {"square identity", sq}}, wt);
    }
    case IdentityName::WeakInverse: {
      std::optional<PairWitness> wt;
      bool fc = c.f_diag_central(&wt);
      bool kc = c.k_central(&wt);
      bool sc = c.wip_shift_constant(&wt);
      return conjunction(
          {{"F central", fc}, {"K central", kc}, {"f(x,x) h(x)^-1 constant", sc}}, wt);
    }
    case IdentityName::RightBol:
      return bol_schema(c);
    case IdentityName::LeftBol:
    case IdentityName::Moufang:
    case IdentityName::Associative:
      return group_schema(c);
    default:
      break;
  }
  throw Error(Errc::UnsupportedParams, "unreachable criterion request");
}

}  // namespace loops
