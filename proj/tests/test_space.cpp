#include "doctest.h"
#include "lmkit/duality.hpp"
#include "lmkit/error.hpp"
#include "lmkit/space.hpp"

using namespace lmkit;

namespace {

LnPSpace two_chain_space(int n, std::vector<std::vector<int>> maps) {
  LnPSpace x;
  x.poset = build_poset({"p", "q"}, {{"p", "q"}});
  x.n = n;
  x.maps = std::move(maps);
  return x;
}

}  // namespace

TEST_CASE("dual space of the 3-chain") {
  const LnPSpace x = dual_space(make_chain(3));
  REQUIRE(x.size() == 2);
  CHECK(x.poset.leq(0, 1));  // {1} inside {1/2,1}
  CHECK(x.maps[0] == std::vector<int>{0, 0});
  CHECK(x.maps[1] == std::vector<int>{1, 1});
  CHECK(validate_space(x).ok());
}

TEST_CASE("dual space of the square of the 3-chain is two 2-chains") {
  const LnPSpace x = dual_space(make_product(make_chain(3), make_chain(3)));
  REQUIRE(x.size() == 4);
  CHECK(x.poset.leq(0, 1));
  CHECK(x.poset.leq(2, 3));
  CHECK_FALSE(x.poset.comparable(0, 2));
  CHECK_FALSE(x.poset.comparable(1, 3));
  // f_i act within each chain
  CHECK(x.maps[0] == std::vector<int>{0, 0, 2, 2});
  CHECK(x.maps[1] == std::vector<int>{1, 1, 3, 3});
  CHECK(validate_space(x).ok());
}

TEST_CASE("validate_space flags broken spaces") {
  // identity on a 2-chain with n=2 breaks lP3
  const LnPSpace id2 = two_chain_space(2, {{0, 1}});
  const ValidationReport r1 = validate_space(id2);
  CHECK(r1.mentions("lP3"));

  // f_1 constant to the top, f_2 constant to the bottom
  const LnPSpace crossed = two_chain_space(3, {{1, 1}, {0, 0}});
  const ValidationReport r2 = validate_space(crossed);
  CHECK(r2.mentions("lP4"));
  CHECK(r2.mentions("lP9"));
  CHECK(r2.mentions("lP10"));

  // swap on a 2-antichain: lnP6 holds but lnP8 fails, so the three
  // surjectivity readings genuinely disagree on this invalid space
  LnPSpace swap;
  swap.poset = build_poset({"p", "q"}, {});
  swap.n = 2;
  swap.maps = {{1, 0}};
  const ValidationReport r3 = validate_space(swap);
  CHECK(r3.mentions("lP5"));
  CHECK(r3.mentions("lnP8"));
  CHECK_FALSE(r3.mentions("lnP6"));
  CHECK(r3.mentions("lnP6<=>lnP7<=>lnP8"));
}

TEST_CASE("chain_decomposition") {
  CHECK(chain_decomposition(dual_space(make_chain(2))) ==
        std::vector<Mask>{bit(0)});
  CHECK(chain_decomposition(dual_space(make_chain(3))) ==
        std::vector<Mask>{bit(0) | bit(1)});
  const auto blocks =
      chain_decomposition(dual_space(make_product(make_chain(3), make_chain(3))));
  CHECK(blocks == std::vector<Mask>{bit(0) | bit(1), bit(2) | bit(3)});

  for (int n = 2; n <= 5; ++n) {
    for (const Mask block : chain_decomposition(dual_space(make_chain(n))))
      CHECK(popcount(block) <= n - 1);
  }
}

TEST_CASE("classify_subset") {
  const LnPSpace x3 = dual_space(make_chain(3));
  const SubsetFlags one_point = classify_subset(x3, bit(0));
  CHECK_FALSE(one_point.semimodal);  // f_2 maps P1 out of the set
  CHECK_FALSE(one_point.modal);

  const SubsetFlags whole = classify_subset(x3, x3.all());
  CHECK(whole.increasing);
  CHECK(whole.decreasing);
  CHECK(whole.convex);
  CHECK(whole.semimodal);
  CHECK(whole.modal);
  CHECK(whole.theta_subset);

  const LnPSpace sq =
      dual_space(make_product(make_chain(3), make_chain(3)));
  const SubsetFlags chain = classify_subset(sq, bit(2) | bit(3));
  CHECK(chain.semimodal);
  CHECK(chain.modal);
  CHECK(chain.theta_subset);
  CHECK(chain.convex);
}

TEST_CASE("a 2-antichain with identity maps is a valid LM3 space") {
  LnPSpace x;
  x.poset = build_poset({"p", "q"}, {});
  x.n = 3;
  x.maps = {{0, 1}, {0, 1}};
  CHECK(validate_space(x).ok());
  const LMnAlgebra a = co_dual(x);
  CHECK(a.size() == 4);
  CHECK(boolean_elements(a) == a.lattice.poset.all());
}
