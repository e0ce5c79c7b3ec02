#include "doctest.h"
#include "lmkit/error.hpp"
#include "lmkit/lattice.hpp"
#include "oracles.hpp"

using namespace lmkit;
using namespace lmkit_test;

namespace {

Poset three_chain() {
  return build_poset({"0", "e", "1"}, {{"0", "e"}, {"e", "1"}});
}

Poset diamond() {
  return build_poset({"bot", "a", "b", "top"},
                     {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

Poset m3() {
  return build_poset({"bot", "a", "b", "c", "top"},
                     {{"bot", "a"},
                      {"bot", "b"},
                      {"bot", "c"},
                      {"a", "top"},
                      {"b", "top"},
                      {"c", "top"}});
}

}  // namespace

TEST_CASE("lattice_from_poset on a chain gives min/max") {
  const DistLattice lat = lattice_from_poset(three_chain());
  CHECK(lat.bottom == 0);
  CHECK(lat.top == 2);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(lat.jn(a, b) == std::max(a, b));
      CHECK(lat.mt(a, b) == std::min(a, b));
    }
  }
}

TEST_CASE("lattice absorption holds on derived lattices") {
  for (const Poset& p : {three_chain(), diamond()}) {
    const DistLattice lat = lattice_from_poset(p);
    for (int a = 0; a < lat.size(); ++a) {
      for (int b = 0; b < lat.size(); ++b) {
        CHECK(lat.jn(a, lat.mt(a, b)) == a);
        CHECK(lat.mt(a, lat.jn(a, b)) == a);
      }
    }
  }
}

TEST_CASE("diamond is distributive, M3 is not, V has no lattice") {
  CHECK_NOTHROW(lattice_from_poset(diamond()));
  CHECK_THROWS_AS(lattice_from_poset(m3()), NotDistributive);
  const Poset v = build_poset({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}});
  CHECK_THROWS_AS(lattice_from_poset(v), NotALattice);
}

TEST_CASE("prime filters of small lattices") {
  const DistLattice two =
      lattice_from_poset(build_poset({"0", "1"}, {{"0", "1"}}));
  const PrimeFilters pf2 = prime_filters(two);
  CHECK(pf2.size() == 1);
  CHECK(pf2.filters[0] == bit(1));

  const DistLattice three = lattice_from_poset(three_chain());
  const PrimeFilters pf3 = prime_filters(three);
  CHECK(pf3.size() == 2);
  CHECK(pf3.filters[0] == bit(2));           // {1}
  CHECK(pf3.filters[1] == (bit(1) | bit(2)));  // {e,1}
  CHECK(pf3.order.leq(0, 1));

  const DistLattice d = lattice_from_poset(diamond());
  const PrimeFilters pfd = prime_filters(d);
  CHECK(pfd.size() == 2);
  CHECK_FALSE(pfd.order.leq(0, 1));
  CHECK_FALSE(pfd.order.leq(1, 0));
  CHECK(pfd.filters[0] == (bit(1) | bit(3)));  // [a)
  CHECK(pfd.filters[1] == (bit(2) | bit(3)));  // [b)
}

TEST_CASE("prime filter enumeration matches the subset-scan oracle") {
  for (const Poset& p : {three_chain(), diamond()}) {
    const DistLattice lat = lattice_from_poset(p);
    CHECK(prime_filters(lat).filters == oracle_prime_filters(lat));
  }
}

TEST_CASE("sigma") {
  const DistLattice lat = lattice_from_poset(three_chain());
  const PrimeFilters pf = prime_filters(lat);
  CHECK(sigma_of(lat, pf, 0) == 0);       // bottom in no proper filter
  CHECK(sigma_of(lat, pf, 1) == bit(1));  // {P2}
  CHECK(sigma_of(lat, pf, 2) == (bit(0) | bit(1)));

  // lattice homomorphism into sets, exhaustively
  const auto table = sigma_table(lat, pf);
  for (int a = 0; a < lat.size(); ++a) {
    for (int b = 0; b < lat.size(); ++b) {
      CHECK(table[lat.jn(a, b)] == (table[a] | table[b]));
      CHECK(table[lat.mt(a, b)] == (table[a] & table[b]));
      if (a != b) CHECK(table[a] != table[b]);
    }
  }
}

TEST_CASE("representation: increasing sets of the filter poset count the carrier") {
  for (const Poset& p : {three_chain(), diamond()}) {
    const DistLattice lat = lattice_from_poset(p);
    const PrimeFilters pf = prime_filters(lat);
    CHECK(static_cast<int>(increasing_sets(pf.order).size()) == lat.size());
  }
}
