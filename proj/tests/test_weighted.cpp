#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loops/extension.hpp"
#include "loops/identities.hpp"
#include "loops/sts.hpp"
#include "loops/tables.hpp"
#include "loops/weighted.hpp"

using namespace loops;

namespace {

WeightedSteinerLoop fano_constant(const std::string& group, Elem t, Elem d) {
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(7));
  w.a = make_group_by_name(group);
  w.h.assign(8, t);
  w.h[0] = 0;
  w.diag.assign(8, d);
  w.diag[0] = 0;
  return w;
}

}  // namespace

TEST_CASE("factor table has the product form off the diagonal") {
  WeightedSteinerLoop w = fano_constant("S3", 0, 0);
  w.h = {0, 1, 2, 3, 4, 5, 1, 2};
  w.diag = {0, 3, 3, 3, 3, 3, 3, 3};
  std::vector<Elem> f = factor_table(w);
  auto fv = [&](Elem x, Elem y) { return f[static_cast<size_t>(x) * 8 + y]; };
  for (Elem x = 0; x < 8; ++x) {
    CHECK(fv(x, 0) == 0);
    CHECK(fv(0, x) == 0);
  }
  for (Elem x = 1; x < 8; ++x) {
    CHECK(fv(x, x) == w.diag[x]);
    for (Elem y = 1; y < 8; ++y)
      if (x != y) CHECK(fv(x, y) == w.a.mul(w.h[x], w.h[y]));
  }
}

TEST_CASE("validation rejects malformed weight data") {
  WeightedSteinerLoop w = fano_constant("Z4", 1, 0);
  CHECK_NOTHROW(w.validate());
  w.h[3] = 9;
  CHECK_THROWS_AS(w.validate(), Error);

  WeightedSteinerLoop not_steiner;
  not_steiner.s = make_cyclic(4).l;
  not_steiner.a = make_cyclic(2);
  not_steiner.h.assign(4, 0);
  not_steiner.diag.assign(4, 0);
  CHECK_THROWS_AS(not_steiner.validate(), Error);
}

TEST_CASE("core identity holds exactly for the matching diagonal") {
  // Constant weight t forces f(x,x) = t^4.
  WeightedSteinerLoop good = fano_constant("Z8", 1, 4);
  CHECK(check_core_identity(good).holds);

  WeightedSteinerLoop bad = fano_constant("Z8", 1, 0);
  CheckResult r = check_core_identity(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->x >= 1);
}

TEST_CASE("square identity on abelian groups, rejected otherwise") {
  WeightedSteinerLoop good = fano_constant("Z8", 1, 4);
  CHECK(check_square_identity(good).holds);

  WeightedSteinerLoop bad = fano_constant("Z8", 1, 4);
  bad.diag[5] = 3;
  CHECK_FALSE(check_square_identity(bad).holds);

  WeightedSteinerLoop nonab = fano_constant("S3", 1, 0);
  CHECK_THROWS_AS(check_square_identity(nonab), Error);
}

TEST_CASE("constant weight classifies as a single generator") {
  WeightedSteinerLoop w = fano_constant("Z8", 1, 4);
  WeightAnalysis an = analyze_weight_group(w);
  CHECK(an.core_identity);
  CHECK(an.f_central);
  CHECK(an.d_abelian);
  REQUIRE(std::holds_alternative<ConstantT>(an.classification));
  CHECK(std::get<ConstantT>(an.classification).t == 1);
}

TEST_CASE("direct-with-Z2 weight on the Fano loop") {
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(7));
  w.a = make_group_by_name("Z4xZ2");

  Elem t = -1;
  for (Elem x = 1; x < 8 && t < 0; ++x)
    if (element_order(w.a, x) == 4) t = x;
  REQUIRE(t >= 0);
  SubsetReport t_span = subgroup_generated(w.a, {t});
  Elem omega = -1;
  for (Elem x = 1; x < 8 && omega < 0; ++x)
    if (element_order(w.a, x) == 2 && !t_span.contains(x)) omega = x;
  REQUIRE(omega >= 0);

  // U = the subloop generated by points 1 and 2.
  Elem third = w.s.mul(1, 2);
  auto in_u = [&](Elem x) { return x == 1 || x == 2 || x == third; };
  w.h.assign(8, 0);
  w.diag.assign(8, 0);
  for (Elem x = 1; x < 8; ++x) {
    w.h[x] = in_u(x) ? t : w.a.mul(t, omega);
    w.diag[x] = in_u(x) ? 0 : omega;  // t^4 = e here
  }

  CHECK(check_core_identity(w).holds);
  WeightAnalysis an = analyze_weight_group(w);
  REQUIRE(std::holds_alternative<DirectWithZ2>(an.classification));
  const DirectWithZ2& c = std::get<DirectWithZ2>(an.classification);
  CHECK(c.t == t);
  CHECK(c.omega == omega);
  CHECK(c.subloop_u.size() == 4);

  // The classified instance satisfies the right alternative law on the table.
  LoopTable l = build_extension(to_extension_spec(w));
  CHECK(brute_check(l, IdentityName::RightAlternative).holds);
  CHECK(criterion(w, IdentityName::RightAlternative, Variant::Standard).holds);
}

TEST_CASE("rank-2 elementary abelian weight on the Fano loop") {
  // h surjective onto D = Z2 x Z2: four weight values, so S splits off a
  // Klein factor rather than a single Z2.
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(7));
  w.a = make_elementary_abelian_2(2);
  w.h = {0, 3, 2, 2, 1, 1, 0, 0};
  w.diag = {0, 0, 1, 1, 2, 2, 3, 3};

  CHECK(check_core_identity(w).holds);
  WeightAnalysis an = analyze_weight_group(w);
  CHECK(an.d_abelian);
  CHECK(an.f_central);
  REQUIRE(std::holds_alternative<DirectWithZ2>(an.classification));
  const DirectWithZ2& c = std::get<DirectWithZ2>(an.classification);
  CHECK(c.rank == 2);
  CHECK(c.omega_gens.size() == 2);
  CHECK(c.subloop_u.size() == 2);
  CHECK(c.s_splits);
  // <t> meets Omega = D, so the product with <t> cannot be direct.
  CHECK_FALSE(c.product_direct);
}

TEST_CASE("nonabelian weight group on the order-4 loop") {
  // D = S3: a a transposition, t a rotation, h = (a, a t, t a), diagonal e.
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(3));
  w.a = make_symmetric(3);
  Elem a = -1, t = -1;
  for (Elem x = 1; x < 6; ++x) {
    if (a < 0 && element_order(w.a, x) == 2) a = x;
    if (t < 0 && element_order(w.a, x) == 3) t = x;
  }
  REQUIRE(a >= 0);
  REQUIRE(t >= 0);
  w.h = {0, a, w.a.mul(w.a.inv(a), t), w.a.mul(t, a)};
  w.diag = {0, 0, 0, 0};
  w.diag[1] = w.a.mul(a, a);                      // a^2 z with z = e
  w.diag[2] = w.a.mul(t, t, t);                   // t^3 z
  w.diag[3] = w.a.mul(w.a.mul(t, t, t), w.a.mul(a, a));

  CHECK(check_core_identity(w).holds);
  WeightAnalysis an = analyze_weight_group(w);
  CHECK_FALSE(an.d_abelian);
  REQUIRE(std::holds_alternative<SmallNonabelian>(an.classification));
  const SmallNonabelian& c = std::get<SmallNonabelian>(an.classification);
  CHECK(c.a == w.h[1]);
  CHECK(c.t == w.a.mul(w.h[1], w.h[2]));
  CHECK(element_order(w.a, c.s) == 3);
}

TEST_CASE("instances violating the core identity stay unclassified") {
  WeightedSteinerLoop w = fano_constant("Z8", 1, 0);  // diag != t^4
  WeightAnalysis an = analyze_weight_group(w);
  CHECK_FALSE(an.core_identity);
  CHECK(std::holds_alternative<Unstructured>(an.classification));
}

TEST_CASE("weight group report lists the generated subgroup") {
  WeightedSteinerLoop w = fano_constant("Z8", 2, 0);
  w.diag.assign(8, 0);  // t = 2 has t^4 = 0 in Z8
  w.diag[0] = 0;
  WeightAnalysis an = analyze_weight_group(w);
  CHECK(an.core_identity);
  CHECK(an.d_group.size() == 4);  // <2> in Z8
  CHECK(an.k_central);
}
