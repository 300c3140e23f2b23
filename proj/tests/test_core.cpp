#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loops/tables.hpp"

using namespace loops;

namespace {

MagmaTable table_of(std::initializer_list<std::initializer_list<int>> rows) {
  MagmaTable m;
  m.n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    for (int v : r) m.t.push_back(v);
  return m;
}

}  // namespace

TEST_CASE("validate_loop accepts a cyclic table and renumbers the identity") {
  // Z3 with the identity written at index 2.
  MagmaTable m = table_of({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  LoopTable l = validate_loop(m, 2);
  CHECK(l.order() == 3);
  for (Elem x = 0; x < 3; ++x) {
    CHECK(l.mul(0, x) == x);
    CHECK(l.mul(x, 0) == x);
  }
  CHECK(l.mul(1, 2) == l.mul(2, 1));
}

TEST_CASE("validate_loop rejects non-latin and identity-free tables") {
  MagmaTable bad_latin = table_of({{0, 1}, {0, 1}});
  CHECK_THROWS_AS(validate_loop(bad_latin, 0), Error);
  try {
    validate_loop(bad_latin, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatin);
  }

  MagmaTable no_id = table_of({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}});
  bool found = false;
  for (Elem cand = 0; cand < 3 && !found; ++cand) {
    try {
      validate_loop(no_id, cand);
      found = true;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoIdentity);
    }
  }
  CHECK_FALSE(found);
}

TEST_CASE("division and inverses solve their defining equations") {
  GroupTable g = make_symmetric(3);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      CHECK(g.l.mul(a, g.l.left_div(a, b)) == b);
      CHECK(g.l.mul(g.l.right_div(b, a), a) == b);
    }
  for (Elem x = 0; x < 6; ++x) CHECK(g.mul(x, g.inv(x)) == 0);
}

TEST_CASE("cyclic and elementary abelian factories") {
  GroupTable z6 = make_cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.abelian());
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 2) == 3);
  CHECK(element_order(z6, 3) == 2);

  GroupTable e8 = make_elementary_abelian_2(3);
  CHECK(e8.order() == 8);
  for (Elem x = 0; x < 8; ++x) CHECK(e8.mul(x, x) == 0);
}

TEST_CASE("symmetric groups") {
  GroupTable s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.abelian());
  CHECK(centre(s3.l).size() == 1);

  GroupTable s4 = make_symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(centre(s4.l).size() == 1);
  CHECK(is_associative(s4.l));
  CHECK_THROWS_AS(make_symmetric(5), Error);
}

TEST_CASE("direct products and the name parser") {
  GroupTable z2xz3 = make_direct_product(make_cyclic(2), make_cyclic(3));
  CHECK(find_group_isomorphism(z2xz3, make_cyclic(6)).has_value());

  GroupTable byname = make_group_by_name("Z4xZ2");
  CHECK(byname.order() == 8);
  CHECK(byname.abelian());
  CHECK_FALSE(find_group_isomorphism(byname, make_cyclic(8)).has_value());
  CHECK_FALSE(find_group_isomorphism(byname, make_elementary_abelian_2(3)).has_value());

  CHECK(find_group_isomorphism(make_group_by_name("Z2^3"),
                               make_elementary_abelian_2(3))
            .has_value());
  CHECK(make_group_by_name("S4").order() == 24);
  CHECK_THROWS_AS(make_group_by_name("Q8"), Error);
}

TEST_CASE("gf3 semidirect product is S3 at rank 1") {
  GroupTable g = make_gf3_semidirect(1);
  CHECK(g.order() == 6);
  CHECK(find_group_isomorphism(g, make_symmetric(3)).has_value());
  CHECK(make_gf3_semidirect(2).order() == 18);
}

TEST_CASE("nuclei and centre of a group are everything") {
  GroupTable z4 = make_cyclic(4);
  NucleiReport nr = nuclei(z4.l);
  CHECK(nr.left.size() == 4);
  CHECK(nr.right.size() == 4);
  CHECK(nr.middle.size() == 4);
  CHECK(nr.nucleus.size() == 4);
  CHECK(centre(z4.l).size() == 4);

  GroupTable s3 = make_symmetric(3);
  std::vector<char> mask = centre_mask(s3);
  SubsetReport z = centre(s3.l);
  for (Elem x = 0; x < 6; ++x) CHECK(static_cast<bool>(mask[x]) == z.contains(x));
}

TEST_CASE("derived subgroup, generated subgroups, quotients") {
  GroupTable s3 = make_symmetric(3);
  SubsetReport d = derived_subloop(s3.l);
  CHECK(d.size() == 3);  // the rotation subgroup

  // Any involution generates a subgroup of order 2, which is not normal.
  Elem invol = 0;
  for (Elem x = 1; x < 6; ++x)
    if (s3.mul(x, x) == 0) {
      invol = x;
      break;
    }
  SubsetReport two = subgroup_generated(s3, {invol});
  CHECK(two.size() == 2);
  CHECK_THROWS_AS(quotient_group(s3, two), Error);

  QuotientResult q = quotient_group(s3, d);
  CHECK(q.group.order() == 2);
  CHECK(q.projection[0] == 0);

  std::vector<Elem> g2l;
  GroupTable sub = subgroup_table(s3, d, &g2l);
  CHECK(sub.order() == 3);
  CHECK(find_group_isomorphism(sub, make_cyclic(3)).has_value());
  int inside = 0;
  for (Elem x = 0; x < 6; ++x)
    if (g2l[x] >= 0) ++inside;
  CHECK(inside == 3);
}

TEST_CASE("associativity witness is absent exactly for groups") {
  CHECK_FALSE(associativity_witness(make_cyclic(5).l).has_value());
  CHECK_THROWS_AS(as_group(validate_loop(
                      table_of({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}}),
                      0)),
                  Error);
}
