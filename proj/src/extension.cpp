#include "loops/extension.hpp"

namespace loops {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Standard: return "standard";
    case Variant::Star: return "star";
    case Variant::StarStar: return "starstar";
  }
  return "?";
}

void ExtensionSpec::check_border() const {
  const int ns = s.order();
  if (f.size() != static_cast<size_t>(ns) * ns)
    throw Error(Errc::BadIndex, "factor table has wrong shape");
  for (Elem v : f)
    if (v < 0 || v >= a.order()) throw Error(Errc::BadIndex, "factor value out of range");
  for (Elem x = 0; x < ns; ++x)
    if (fv(x, 0) != 0 || fv(0, x) != 0)
      throw Error(Errc::BadIndex, "border condition f(x,e)=f(e,y)=1 violated");
}

LoopTable build_extension(const ExtensionSpec& spec, bool validate) {
  spec.check_border();
  const int ns = spec.s.order(), na = spec.a.order();
  if (static_cast<long long>(ns) * na > kOrderCap) throw Error(Errc::OrderCap, "extension exceeds order cap");
  const int n = ns * na;
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < ns; ++x)
    for (Elem y = 0; y < ns; ++y) {
      const Elem xy = spec.s.mul(x, y);
      const Elem fxy = spec.fv(x, y);
      for (Elem xi = 0; xi < na; ++xi)
        for (Elem eta = 0; eta < na; ++eta) {
          Elem av;
          switch (spec.variant) {
            case Variant::Standard: av = spec.a.mul(spec.a.mul(fxy, xi), eta); break;
            case Variant::Star: av = spec.a.mul(spec.a.mul(xi, fxy), eta); break;
            default: av = spec.a.mul(spec.a.mul(xi, eta), fxy); break;
          }
          m.at(x * na + xi, y * na + eta) = xy * na + av;
        }
    }
  if (validate) return validate_loop(m, 0);
  LoopTable l;
  l.m = std::move(m);
  return l;
}

InverseMaps inverse_maps(const ExtensionSpec& spec) {
  const int ns = spec.s.order(), na = spec.a.order();
  LoopTable table = build_extension(spec);
  InverseMaps out;
  out.left.resize(table.order());
  out.right.resize(table.order());
  for (Elem x = 0; x < ns; ++x) {
    const Elem xi_inv_s = spec.s.left_div(x, 0);  // x^{-1} in S (= e/x as well)
    const Elem f_ix = spec.fv(xi_inv_s, x);
    const Elem f_xi = spec.fv(x, xi_inv_s);
    for (Elem xi = 0; xi < na; ++xi) {
      const Elem u = spec.encode(x, xi);
      Elem la, ra;
      switch (spec.variant) {
        case Variant::Standard:
          la = spec.a.mul(spec.a.inv(f_ix), spec.a.inv(xi));
          ra = spec.a.mul(spec.a.inv(xi), spec.a.inv(f_xi));
          break;
        case Variant::Star:
          la = spec.a.mul(spec.a.inv(xi), spec.a.inv(f_ix));
          ra = spec.a.mul(spec.a.inv(f_xi), spec.a.inv(xi));
          break;
        default:  // StarStar
          la = spec.a.mul(spec.a.inv(f_ix), spec.a.inv(xi));
          ra = spec.a.mul(spec.a.inv(xi), spec.a.inv(f_xi));
          break;
      }
      out.left[u] = spec.encode(xi_inv_s, la);
      out.right[u] = spec.encode(xi_inv_s, ra);
      if (table.mul(out.left[u], u) != 0 || table.mul(u, out.right[u]) != 0)
        throw Error(Errc::BadIndex, "inverse formula disagrees with the table");
    }
  }
  out.coincide = (out.left == out.right);
  return out;
}

bool is_direct_product(const ExtensionSpec& spec) {
  for (Elem v : spec.f)
    if (v != 0) return false;
  return true;
}

LoopTable build_amalgamated(const AmalgamatedSpec& am) {
  if (!am.delta.abelian()) throw Error(Errc::NotAbelian, "Delta must be abelian");
  const int ns = am.s.order(), nb = am.b.order(), nd = am.delta.order();
  if (am.k.size() != static_cast<size_t>(nb) * nb || am.f_values.size() != static_cast<size_t>(ns) * ns)
    throw Error(Errc::BadIndex, "amalgamated spec tables have wrong shape");
  for (Elem r = 0; r < nb; ++r)
    if (am.kv(r, 0) != 0 || am.kv(0, r) != 0)
      throw Error(Errc::BadIndex, "factor system border k(r,1)=k(1,r)=1 violated");
  for (Elem x = 0; x < ns; ++x)
    if (am.fv(x, 0) != 0 || am.fv(0, x) != 0)
      throw Error(Errc::BadIndex, "border condition on f violated");
  if (static_cast<long long>(ns) * nb * nd > kOrderCap)
    throw Error(Errc::OrderCap, "amalgamated extension exceeds order cap");
  const int n = ns * nb * nd;
  MagmaTable m;
  m.n = n;
  m.t.resize(static_cast<size_t>(n) * n);
  for (Elem a1 = 0; a1 < ns; ++a1)
    for (Elem r1 = 0; r1 < nb; ++r1)
      for (Elem s1 = 0; s1 < nd; ++s1)
        for (Elem a2 = 0; a2 < ns; ++a2)
          for (Elem r2 = 0; r2 < nb; ++r2)
            for (Elem s2 = 0; s2 < nd; ++s2) {
              Elem sa = am.s.mul(a1, a2);
              Elem rb = am.b.mul(r1, r2);
              Elem sd = am.delta.mul(am.delta.mul(am.delta.mul(s1, s2), am.fv(a1, a2)),
                                     am.kv(r1, r2));
              m.at((a1 * nb + r1) * nd + s1, (a2 * nb + r2) * nd + s2) = (sa * nb + rb) * nd + sd;
            }
  return validate_loop(m, 0);
}

}  // namespace loops
