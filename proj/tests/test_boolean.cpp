#include "doctest.h"
#include "lmkit/boolean.hpp"
#include "lmkit/error.hpp"

using namespace lmkit;

namespace {

Congruence first_coordinate_collapse() {
  return from_class_of({0, 1, 2, 0, 1, 2, 0, 1, 2});
}

Congruence second_coordinate_collapse() {
  return from_class_of({0, 0, 0, 3, 3, 3, 6, 6, 6});
}

}  // namespace

TEST_CASE("is_boolean finds the complementary factor collapse") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  const auto complement = is_boolean(d, first_coordinate_collapse());
  REQUIRE(complement.has_value());
  CHECK(*complement == second_coordinate_collapse());

  const auto of_identity = is_boolean(d, identity_congruence(9));
  REQUIRE(of_identity.has_value());
  CHECK(*of_identity == total_congruence(9));
}

TEST_CASE("boolean_congruences counts |C(A)|") {
  CHECK(boolean_congruences(dualize(make_chain(3))).size() == 2);
  CHECK(boolean_congruences(dualize(make_chain(2))).size() == 2);
  const auto records =
      boolean_congruences(dualize(make_product(make_chain(3), make_chain(3))));
  CHECK(records.size() == 4);
}

TEST_CASE("boolean_from_element") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  const LMnAlgebra& sq = d.algebra;
  CHECK(boolean_from_element(d, sq.index_of("(0,1)"), 1) ==
        first_coordinate_collapse());
  CHECK(boolean_from_element(d, sq.top(), 1) == identity_congruence(9));
  CHECK(boolean_from_element(d, sq.bottom(), 2) == total_congruence(9));

  const Duality dc = dualize(make_chain(3));
  CHECK_THROWS_AS(boolean_from_element(dc, 1, 1), NotBoolean);
}

TEST_CASE("Boolean congruences permute") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  const LMnAlgebra& sq = d.algebra;
  CHECK(check_permutable(sq, first_coordinate_collapse(),
                         second_coordinate_collapse()));
  CHECK(check_permutable(sq, first_coordinate_collapse(),
                         identity_congruence(9)));
  for (const auto& r1 : boolean_congruences(d)) {
    for (const auto& r2 : boolean_congruences(d)) {
      CHECK(check_permutable(sq, r1.congruence, r2.congruence));
    }
  }
}

TEST_CASE("uniformity_report") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  const LMnAlgebra& sq = d.algebra;

  const UniformityReport collapse = uniformity_report(d, sq.index_of("(0,1)"));
  CHECK(collapse.class_sizes == std::vector<int>{3, 3, 3});
  CHECK(collapse.uniform);
  CHECK(collapse.shape_ok);

  const UniformityReport of_top = uniformity_report(d, sq.top());
  CHECK(of_top.class_sizes == std::vector<int>(9, 1));
  CHECK(of_top.uniform);
  CHECK(of_top.shape_ok);

  const UniformityReport of_bottom = uniformity_report(d, sq.bottom());
  CHECK(of_bottom.class_sizes == std::vector<int>{9});
  CHECK(of_bottom.uniform);
  CHECK(of_bottom.shape_ok);
}

TEST_CASE("principal_is_boolean certificates") {
  const Duality dc = dualize(make_chain(3));
  const PrincipalBooleanResult r1 = principal_is_boolean(dc, 0, 1);
  CHECK(r1.holds);
  CHECK(r1.certificate == 0);

  const PrincipalBooleanResult r2 = principal_is_boolean(dc, 1, 1);
  CHECK(r2.holds);
  CHECK(r2.certificate == 2);  // the top of the 3-chain

  const Duality ds = dualize(make_product(make_chain(3), make_chain(3)));
  const LMnAlgebra& sq = ds.algebra;
  const PrincipalBooleanResult r3 =
      principal_is_boolean(ds, sq.index_of("(0,0)"), sq.index_of("(1/2,0)"));
  CHECK(r3.holds);
  CHECK(r3.certificate == sq.index_of("(0,1)"));
}

TEST_CASE("records carry matching generators and complements") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  for (const auto& rec : boolean_congruences(d)) {
    CHECK(d.sigma[rec.generator] == rec.dual_subset);
    CHECK(meet(rec.congruence, rec.complement_congruence) ==
          identity_congruence(9));
    CHECK(join(rec.congruence, rec.complement_congruence) ==
          total_congruence(9));
    const auto complement = is_boolean(d, rec.congruence);
    REQUIRE(complement.has_value());
    CHECK(*complement == rec.complement_congruence);
  }
}
