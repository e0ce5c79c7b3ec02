#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lmkit/bits.hpp"

namespace lmkit {

/// Finite partially ordered set. Elements carry stable string names and are
/// addressed by dense integer indices; the order is kept as per-element
/// up/down masks so that all set operations are single-word bit operations.
struct Poset {
  std::vector<std::string> names;
  std::vector<Mask> up;    // up[x] = {y : x <= y}, contains x
  std::vector<Mask> down;  // down[x] = {y : y <= x}, contains x

  int size() const { return static_cast<int>(names.size()); }
  Mask all() const { return full_mask(size()); }
  bool leq(int x, int y) const { return has_bit(up[x], y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  int index_of(const std::string& name) const;  // throws UnknownElement
};

/// Builds the poset whose order is the reflexive-transitive closure of the
/// given generating pairs (a, b) meaning a <= b.
Poset build_poset(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

/// Index-based variant of build_poset.
Poset make_poset(std::vector<std::string> names,
                 const std::vector<std::pair<int, int>>& pairs);

/// [Y) = {x : exists y in Y with y <= x}
Mask up_set(const Poset& p, Mask y);

/// (Y] = {x : exists y in Y with x <= y}
Mask down_set(const Poset& p, Mask y);

/// True iff x <= z <= y with x, y in Y forces z in Y.
bool is_convex(const Poset& p, Mask y);

bool is_chain(const Poset& p, Mask y);

/// Elements of `within` that are minimal (maximal) in the whole poset.
Mask minimal_elements(const Poset& p, Mask within);
Mask maximal_elements(const Poset& p, Mask within);

/// Covering pairs (x, y): x < y with nothing strictly between. Sorted.
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

/// A linear extension, minimal elements first.
std::vector<int> linear_extension(const Poset& p);

/// All increasing subsets Y = [Y), sorted ascending as masks. Enumerated by
/// deciding membership along a reverse linear extension, so the cost is
/// proportional to the output, not to 2^size.
std::vector<Mask> increasing_sets(const Poset& p,
                                  std::size_t limit = std::size_t{1} << 20);

}  // namespace lmkit
