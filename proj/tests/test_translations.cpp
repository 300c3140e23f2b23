#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loops/extension.hpp"
#include "loops/sts.hpp"
#include "loops/tables.hpp"
#include "loops/translations.hpp"
#include "loops/weighted.hpp"

using namespace loops;

namespace {

ExtensionSpec spec_of(const std::string& group, std::vector<Elem> h, std::vector<Elem> diag) {
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(3));
  w.a = make_group_by_name(group);
  w.h = std::move(h);
  w.diag = std::move(diag);
  w.validate();
  return to_extension_spec(w);
}

}  // namespace

TEST_CASE("permutation helpers") {
  Permutation p = {1, 2, 0};
  Permutation q = {0, 2, 1};
  CHECK(compose(p, q) == Permutation{1, 0, 2});
  CHECK(compose(q, p) == Permutation{2, 1, 0});
  CHECK(compose(p, invert_perm(p)) == identity_perm(3));
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation({0, 0, 1}));
}

TEST_CASE("translations of a Steiner loop are involutions and two-sided") {
  LoopTable ten = loop_from_sts(construct_sts(9));
  CHECK(translation(ten, 0, Side::Left) == identity_perm(10));
  for (Elem a = 0; a < 10; ++a) {
    Permutation l = translation(ten, a, Side::Left);
    CHECK(l == translation(ten, a, Side::Right));
    CHECK(compose(l, l) == identity_perm(10));
  }
}

TEST_CASE("left and right translations differ in a noncommutative extension") {
  ExtensionSpec spec = spec_of("S3", {0, 3, 3, 3}, {0, 0, 0, 0});
  LoopTable l = build_extension(spec);
  bool differ = false;
  for (Elem u = 0; u < l.order() && !differ; ++u)
    differ = translation(l, u, Side::Left) != translation(l, u, Side::Right);
  CHECK(differ);
}

TEST_CASE("closure of small generator sets") {
  CHECK(close(std::vector<Permutation>{}).size() == 0);
  CHECK(close({Permutation{1, 0, 2}}).size() == 2);

  // All translations of the Klein four-group give the regular representation.
  GroupTable e4 = make_elementary_abelian_2(2);
  std::vector<Permutation> gens;
  for (Elem a = 0; a < 4; ++a) gens.push_back(translation(e4.l, a, Side::Left));
  CHECK(close(gens).size() == 4);

  // A tiny cap aborts the enumeration.
  GroupTable z8 = make_cyclic(8);
  CHECK_THROWS_AS(close({translation(z8.l, 1, Side::Left)}, 5), Error);
}

TEST_CASE("abelian coordinate groups make the two translation groups coincide") {
  for (const char* g : {"Z2", "Z4"}) {
    ExtensionSpec spec = spec_of(g, {0, 1, 1, 1}, {0, 2 % make_group_by_name(g).order(), 0, 1});
    TranslationGroupsReport rep = translation_groups(spec);
    CHECK(rep.a_abelian);
    CHECK(rep.left_equals_right);
    CHECK(rep.kernel_is_subgroup);
    CHECK(rep.kernel_isomorphic_to_a);
    CHECK(rep.kernel_normal);
    CHECK(rep.order_product_ok);
  }
}

TEST_CASE("noncommutative coordinate group splits the translation groups") {
  // f noncentral: h constant rotation in S3.
  ExtensionSpec spec = spec_of("S3", {0, 3, 3, 3}, {0, 0, 0, 0});
  TranslationGroupsReport rep = translation_groups(spec);
  CHECK_FALSE(rep.a_abelian);
  CHECK_FALSE(rep.left_equals_right);
  CHECK(rep.kernel_is_subgroup);
  CHECK(rep.kernel_isomorphic_to_a);
  CHECK(rep.kernel_normal);
  CHECK(rep.order_product_ok);

  // f central: h constant involution, diagonal e.
  ExtensionSpec central = spec_of("S3", {0, 1, 1, 1}, {0, 0, 0, 0});
  TranslationGroupsReport rep2 = translation_groups(central);
  CHECK_FALSE(rep2.left_equals_right);
  CHECK(rep2.kernel_normal);
  CHECK(rep2.order_product_ok);
}

TEST_CASE("iota maps are automorphisms exactly under central factor values") {
  ExtensionSpec central = spec_of("S3", {0, 1, 1, 1}, {0, 0, 0, 0});
  IotaReport ri = iota_maps(central);
  CHECK(ri.f_central);
  CHECK(ri.all_automorphisms);
  CHECK(ri.maps.size() == 6);

  ExtensionSpec noncentral = spec_of("S3", {0, 3, 3, 3}, {0, 0, 0, 0});
  IotaReport rn = iota_maps(noncentral);
  CHECK_FALSE(rn.f_central);
  CHECK_FALSE(rn.all_automorphisms);
  CHECK(rn.failing_alpha.has_value());

  // Abelian A: every iota is the identity map.
  ExtensionSpec ab = spec_of("Z4", {0, 1, 1, 1}, {0, 0, 0, 0});
  for (const Permutation& p : iota_maps(ab).maps) CHECK(p == identity_perm(16));
}

TEST_CASE("the full group is generated by left translations and the iota maps") {
  ExtensionSpec central = spec_of("S3", {0, 1, 1, 1}, {0, 0, 0, 0});
  DecompositionReport rep = full_group_decomposition(central);
  CHECK(rep.generated_equal);
  CHECK(rep.rho_decomposition_ok);
  CHECK_FALSE(rep.commutative);

  ExtensionSpec ab = spec_of("Z4", {0, 1, 1, 1}, {0, 2, 2, 2});
  DecompositionReport rc = full_group_decomposition(ab);
  CHECK(rc.generated_equal);
  CHECK(rc.rho_decomposition_ok);
  CHECK(rc.commutative);
  CHECK(rc.lambda_slice_central);

  ExtensionSpec noncentral = spec_of("S3", {0, 3, 3, 3}, {0, 0, 0, 0});
  CHECK_THROWS_AS(full_group_decomposition(noncentral), Error);
}

TEST_CASE("factorization and conjugation identities of right translations") {
  for (const ExtensionSpec& spec :
       {spec_of("Z4", {0, 1, 1, 1}, {0, 2, 0, 2}), spec_of("S3", {0, 1, 1, 1}, {0, 0, 0, 0}),
        spec_of("S3", {0, 3, 3, 3}, {0, 0, 0, 0})}) {
    CHECK(check_rho_factorization(spec));
    CHECK(check_conjugation_identity(spec));
  }
}
