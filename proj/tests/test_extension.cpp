#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loops/extension.hpp"
#include "loops/sts.hpp"
#include "loops/tables.hpp"
#include "loops/weighted.hpp"

using namespace loops;

namespace {

WeightedSteinerLoop sample_weighted(const std::string& group, Elem t, Elem d) {
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(3));
  w.a = make_group_by_name(group);
  w.h.assign(4, t);
  w.h[0] = 0;
  w.diag.assign(4, d);
  w.diag[0] = 0;
  w.validate();
  return w;
}

}  // namespace

TEST_CASE("the product entry follows the variant formula") {
  WeightedSteinerLoop w = sample_weighted("S3", 2, 3);
  for (Variant v : {Variant::Standard, Variant::Star, Variant::StarStar}) {
    ExtensionSpec spec = to_extension_spec(w, v);
    LoopTable l = build_extension(spec);
    CHECK(l.order() == 24);
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y)
        for (Elem xi = 0; xi < 6; ++xi)
          for (Elem eta = 0; eta < 6; ++eta) {
            Elem f = spec.fv(x, y);
            Elem a_part = v == Variant::Standard ? spec.a.mul(f, xi, eta)
                          : v == Variant::Star   ? spec.a.mul(xi, f, eta)
                                                 : spec.a.mul(xi, eta, f);
            CHECK(l.mul(spec.encode(x, xi), spec.encode(y, eta)) ==
                  spec.encode(w.s.mul(x, y), a_part));
          }
  }
}

TEST_CASE("trivial factor system gives the direct product") {
  WeightedSteinerLoop w = sample_weighted("Z4", 0, 0);
  ExtensionSpec spec = to_extension_spec(w);
  CHECK(is_direct_product(spec));
  LoopTable l = build_extension(spec);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      for (Elem xi = 0; xi < 4; ++xi)
        for (Elem eta = 0; eta < 4; ++eta)
          CHECK(l.mul(spec.encode(x, xi), spec.encode(y, eta)) ==
                spec.encode(w.s.mul(x, y), spec.a.mul(xi, eta)));
  CHECK_FALSE(is_direct_product(to_extension_spec(sample_weighted("Z4", 1, 2))));
}

TEST_CASE("closed-form inverses agree with the table on all variants") {
  for (const char* g : {"Z4", "S3"})
    for (Elem t : {1, 2})
      for (Elem d : {0, 2}) {
        WeightedSteinerLoop w = sample_weighted(g, t, d);
        for (Variant v : {Variant::Standard, Variant::Star, Variant::StarStar}) {
          ExtensionSpec spec = to_extension_spec(w, v);
          LoopTable l = build_extension(spec);
          InverseMaps inv = inverse_maps(spec);
          for (Elem u = 0; u < l.order(); ++u) {
            CHECK(l.mul(inv.left[u], u) == 0);
            CHECK(l.mul(u, inv.right[u]) == 0);
          }
          CHECK(inv.coincide == (inv.left == inv.right));
        }
      }
}

TEST_CASE("border violations are rejected") {
  WeightedSteinerLoop w = sample_weighted("Z4", 1, 0);
  ExtensionSpec spec = to_extension_spec(w);
  spec.f[1] = 2;  // f(e, 1) must stay the identity
  CHECK_THROWS_AS(build_extension(spec), Error);
}

TEST_CASE("amalgamated construction yields a loop of the product order") {
  AmalgamatedSpec am;
  am.s = loop_from_sts(construct_sts(3));
  am.b = make_cyclic(2);
  am.delta = make_cyclic(2);
  am.k = {0, 0, 0, 1};              // k(1,1) = delta generator
  am.f_values.assign(16, 0);
  for (Elem x = 1; x < 4; ++x)
    for (Elem y = 1; y < 4; ++y)
      if (x != y) am.f_values[static_cast<size_t>(x) * 4 + y] = 1;

  LoopTable l = build_amalgamated(am);
  CHECK(l.order() == 16);
  // Spot-check the three-coordinate formula.
  auto enc = [&](Elem a, Elem r, Elem s) { return (a * 2 + r) * 2 + s; };
  for (Elem a1 = 0; a1 < 4; ++a1)
    for (Elem a2 = 0; a2 < 4; ++a2)
      for (Elem r1 = 0; r1 < 2; ++r1)
        for (Elem r2 = 0; r2 < 2; ++r2) {
          Elem s = am.delta.mul(am.fv(a1, a2), am.kv(r1, r2));
          CHECK(l.mul(enc(a1, r1, 0), enc(a2, r2, 0)) ==
                enc(am.s.mul(a1, a2), am.b.mul(r1, r2), s));
        }

  am.delta = make_symmetric(3);
  am.k.assign(4, 0);
  am.f_values.assign(16, 0);
  CHECK_THROWS_AS(build_amalgamated(am), Error);
}

TEST_CASE("order cap is enforced") {
  ExtensionSpec spec;
  spec.s = loop_from_sts(construct_sts(21));
  spec.a = make_cyclic(200);
  spec.f.assign(static_cast<size_t>(22) * 22, 0);
  CHECK_THROWS_AS(build_extension(spec), Error);
}
