// Property tests over randomly generated valid spaces. A finite space
// satisfying the axioms is a cardinal sum of chains of at most n-1 points,
// where each f_i picks a point per block, monotonically in i, onto the block,
// with f_1 the minimum and f_{n-1} the maximum. Sampling those directly gives
// arbitrary valid spaces, and through co_dual arbitrary valid algebras beyond
// the fixed corpus.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "lmkit/boolean.hpp"

using namespace lmkit;

namespace {

// monotone onto {1..n-1} -> {1..size} with endpoints fixed
std::vector<int> random_level_map(std::mt19937& rng, int n, int size) {
  std::vector<int> gaps;  // positions (after index) where the value steps up
  for (int g = 1; g <= n - 2; ++g) gaps.push_back(g);
  std::shuffle(gaps.begin(), gaps.end(), rng);
  gaps.resize(size - 1);
  std::sort(gaps.begin(), gaps.end());
  std::vector<int> levels(n - 1);
  int value = 1;
  for (int i = 1; i <= n - 1; ++i) {
    if (std::find(gaps.begin(), gaps.end(), i - 1) != gaps.end()) ++value;
    levels[i - 1] = value;
  }
  return levels;
}

LnPSpace random_space(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num_blocks(1, 3);
  std::uniform_int_distribution<int> block_size(1, n - 1);
  std::vector<int> sizes;
  int carrier = 1;
  const int blocks = num_blocks(rng);
  for (int b = 0; b < blocks; ++b) {
    int s = block_size(rng);
    while (carrier * (s + 1) > 40) s = 1;  // keep the co-dual small
    sizes.push_back(s);
    carrier *= s + 1;
  }

  LnPSpace x;
  x.n = n;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> block_start;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    block_start.push_back(static_cast<int>(names.size()));
    for (int j = 0; j < sizes[b]; ++j) {
      names.push_back("b" + std::to_string(b) + "p" + std::to_string(j));
      if (j > 0) {
        const int at = static_cast<int>(names.size()) - 1;
        edges.emplace_back(at - 1, at);
      }
    }
  }
  x.poset = make_poset(std::move(names), edges);
  x.maps.assign(n - 1, std::vector<int>(x.size()));
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const std::vector<int> levels = random_level_map(rng, n, sizes[b]);
    for (int j = 0; j < sizes[b]; ++j) {
      for (int i = 1; i <= n - 1; ++i)
        x.maps[i - 1][block_start[b] + j] = block_start[b] + levels[i - 1] - 1;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("random cardinal sums of chains are valid spaces") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 5);
    const LnPSpace x = random_space(rng, pick_n(rng));
    CAPTURE(trial);
    CHECK(validate_space(x).ok());
    const auto blocks = chain_decomposition(x);
    Mask covered = 0;
    for (const Mask block : blocks) covered |= block;
    CHECK(covered == x.all());
  }
}

TEST_CASE("co-duals of random spaces satisfy the whole theory") {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 5);
    const LnPSpace x = random_space(rng, pick_n(rng));
    CAPTURE(trial);
    const LMnAlgebra a = co_dual(x);  // validates the laws internally
    CHECK_NOTHROW(round_trip(a));

    const Duality d = dualize(a);
    CHECK(d.num_points() == x.size());
    CHECK(chain_decomposition(d.space).size() ==
          chain_decomposition(x).size());

    // one congruence per set of blocks, all of them Boolean and principal
    const std::size_t block_count = chain_decomposition(x).size();
    const CongruenceLattice con = all_congruences(d);
    CHECK(con.size() == 1 << block_count);
    CHECK(boolean_congruences(d).size() == std::size_t{1} << block_count);
    CHECK(popcount(boolean_elements(a)) == 1 << block_count);
    for (const Congruence& c : con.elements) {
      CHECK(is_principal(d, c).has_value());
      CHECK(is_boolean(d, c, 20, &con).has_value());
    }
  }
}

TEST_CASE("principal formulas agree with the oracle on random algebras") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 5);
    const LMnAlgebra a = co_dual(random_space(rng, pick_n(rng)));
    const Duality d = dualize(a);
    std::uniform_int_distribution<int> pick(0, a.size() - 1);
    for (int k = 0; k < 30; ++k) {
      const int p = pick(rng);
      const int q = pick(rng);
      const PrincipalForms forms = principal_congruence_forms(d, p, q);
      CHECK(forms.result == generate_congruence_oracle(
                                a, {{forms.lo, forms.hi}}, ClosureMode::lm));
      CHECK(principal_theta_congruence(d, p, q) == forms.result);
    }
  }
}
