#include "lmkit/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "lmkit/error.hpp"

namespace lmkit {

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names[i] == name) return i;
  }
  throw UnknownElement("unknown element '" + name + "'");
}

Poset make_poset(std::vector<std::string> names,
                 const std::vector<std::pair<int, int>>& pairs) {
  const int m = static_cast<int>(names.size());
  if (m == 0) throw InvalidInput("poset needs at least one element");
  if (m > kMaxElements)
    throw InvalidInput("carrier exceeds " + std::to_string(kMaxElements) +
                       " elements");

  Poset p;
  p.names = std::move(names);
  p.up.assign(m, 0);
  for (int x = 0; x < m; ++x) p.up[x] = bit(x);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw UnknownElement("pair index out of range");
    p.up[a] |= bit(b);
  }

  // reflexive-transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      Mask acc = p.up[x];
      for_each_bit(p.up[x], [&](int y) { acc |= p.up[y]; });
      if (acc != p.up[x]) {
        p.up[x] = acc;
        changed = true;
      }
    }
  }

  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (p.leq(x, y) && p.leq(y, x)) {
        throw CycleError("antisymmetry fails: '" + p.names[x] + "' and '" +
                         p.names[y] + "' are in a cycle");
      }
    }
  }

  p.down.assign(m, 0);
  for (int x = 0; x < m; ++x) {
    for_each_bit(p.up[x], [&](int y) { p.down[y] |= bit(x); });
  }
  return p;
}

Poset build_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!index.emplace(elements[i], i).second)
      throw InvalidInput("duplicate element name '" + elements[i] + "'");
  }
  auto resolve = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      throw UnknownElement("unknown element '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(resolve(a), resolve(b));
  return make_poset(elements, edges);
}

Mask up_set(const Poset& p, Mask y) {
  Mask out = 0;
  for_each_bit(y, [&](int x) { out |= p.up[x]; });
  return out;
}

Mask down_set(const Poset& p, Mask y) {
  Mask out = 0;
  for_each_bit(y, [&](int x) { out |= p.down[x]; });
  return out;
}

bool is_convex(const Poset& p, Mask y) {
  bool ok = true;
  for_each_bit(y, [&](int x) {
    for_each_bit(y, [&](int z) {
      if (p.leq(x, z)) {
        const Mask between = p.up[x] & p.down[z];
        if (!is_subset(between, y)) ok = false;
      }
    });
  });
  return ok;
}

bool is_chain(const Poset& p, Mask y) {
  bool ok = true;
  for_each_bit(y, [&](int x) {
    for_each_bit(y, [&](int z) {
      if (!p.comparable(x, z)) ok = false;
    });
  });
  return ok;
}

Mask minimal_elements(const Poset& p, Mask within) {
  Mask out = 0;
  for_each_bit(within, [&](int x) {
    if ((p.down[x] & ~bit(x)) == 0) out |= bit(x);
  });
  return out;
}

Mask maximal_elements(const Poset& p, Mask within) {
  Mask out = 0;
  for_each_bit(within, [&](int x) {
    if ((p.up[x] & ~bit(x)) == 0) out |= bit(x);
  });
  return out;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  const int m = p.size();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      const Mask strictly_between = p.up[x] & p.down[y] & ~bit(x) & ~bit(y);
      if (strictly_between == 0) covers.emplace_back(x, y);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<int> linear_extension(const Poset& p) {
  // x <= y implies down[x] is a proper subset of down[y], so sorting by the
  // size of the down set is a linear extension.
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.down[a]) < popcount(p.down[b]);
  });
  return order;
}

std::vector<Mask> increasing_sets(const Poset& p, std::size_t limit) {
  const auto order = linear_extension(p);
  std::vector<Mask> out;
  // Decide membership from maximal elements down; including x is allowed
  // exactly when everything strictly above it is already in.
  std::function<void(int, Mask)> rec = [&](int k, Mask y) {
    if (k < 0) {
      out.push_back(y);
      if (out.size() > limit)
        throw InvalidInput("increasing-set enumeration exceeds limit");
      return;
    }
    const int x = order[static_cast<std::size_t>(k)];
    rec(k - 1, y);
    if (is_subset(p.up[x] & ~bit(x), y)) rec(k - 1, y | bit(x));
  };
  rec(static_cast<int>(order.size()) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lmkit
