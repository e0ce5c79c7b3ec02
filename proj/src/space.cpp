#include "lmkit/space.hpp"

#include <algorithm>

#include "lmkit/error.hpp"

namespace lmkit {

Mask LnPSpace::image(int i, Mask y) const {
  Mask out = 0;
  for_each_bit(y, [&](int x) { out |= bit(f(i, x)); });
  return out;
}

Mask LnPSpace::preimage(int i, Mask y) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (has_bit(y, f(i, x))) out |= bit(x);
  }
  return out;
}

Mask LnPSpace::union_images(Mask y) const {
  Mask out = 0;
  for (int i = 1; i <= n - 1; ++i) out |= image(i, y);
  return out;
}

Mask LnPSpace::union_preimages(Mask y) const {
  Mask out = 0;
  for (int i = 1; i <= n - 1; ++i) out |= preimage(i, y);
  return out;
}

namespace {

// lnP7 evaluated on its own: are there distinct subsets with identical
// f_i-preimages for every i? Since preimage commutes with symmetric
// difference, such a pair exists iff some nonempty W has empty f_i-preimages
// for every i; small spaces get the literal pair scan.
bool lnp7_holds(const LnPSpace& x, std::string* witness) {
  const int m = x.size();
  if (m <= 10) {
    const Mask top = x.all();
    for (Mask y = 0; y <= top; ++y) {
      for (Mask z = y + 1; z <= top; ++z) {
        bool same = true;
        for (int i = 1; i <= x.n - 1 && same; ++i) {
          if (x.preimage(i, y) != x.preimage(i, z)) same = false;
        }
        if (same) {
          if (witness)
            *witness = "distinct subsets with identical preimages under every f_i";
          return false;
        }
      }
      if (y == top) break;
    }
    return true;
  }
  for (int p = 0; p < m; ++p) {
    const Mask w = bit(p);
    bool all_empty = true;
    for (int i = 1; i <= x.n - 1; ++i) {
      if (x.preimage(i, w) != 0) all_empty = false;
    }
    if (all_empty) {
      if (witness)
        *witness = "point '" + x.poset.names[p] +
                   "' is invisible to every f_i-preimage";
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_space(const LnPSpace& x) {
  ValidationReport report;
  const int m = x.size();
  const auto& p = x.poset;
  auto add = [&](const char* law, const std::string& witness) {
    if (!report.mentions(law)) report.violations.push_back({law, witness});
  };

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      for (int i = 1; i <= x.n - 1; ++i) {
        if (x.f(i, a) != x.f(i, b)) {
          add("lP3", "'" + p.names[a] + "' <= '" + p.names[b] + "' but f_" +
                         std::to_string(i) + " differs");
        }
      }
    }
  }

  for (int i = 1; i <= x.n - 1; ++i) {
    for (int j = i; j <= x.n - 1; ++j) {
      for (int a = 0; a < m; ++a) {
        if (!p.leq(x.f(i, a), x.f(j, a))) {
          add("lP4", "i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                         ", x='" + p.names[a] + "': f_i x not <= f_j x");
        }
      }
    }
  }

  for (int i = 1; i <= x.n - 1; ++i) {
    for (int j = 1; j <= x.n - 1; ++j) {
      for (int a = 0; a < m; ++a) {
        if (x.f(i, x.f(j, a)) != x.f(i, a)) {
          add("lP5", "f_" + std::to_string(i) + " f_" + std::to_string(j) +
                         " '" + p.names[a] + "' != f_" + std::to_string(i) +
                         " '" + p.names[a] + "'");
        }
      }
    }
  }

  const bool p6 = x.union_images(x.all()) == x.all();
  if (!p6) add("lnP6", "X is not the union of the f_i images");

  std::string p7_witness;
  const bool p7 = lnp7_holds(x, &p7_witness);
  if (!p7) add("lnP7", p7_witness);

  bool p8n = true;
  for (int a = 0; a < m; ++a) {
    bool fixed = false;
    for (int i = 1; i <= x.n - 1; ++i) {
      if (x.f(i, a) == a) fixed = true;
    }
    if (!fixed) {
      p8n = false;
      add("lnP8", "'" + p.names[a] + "' is not fixed by any f_i");
    }
  }

  if (p6 != p7 || p7 != p8n) {
    add("lnP6<=>lnP7<=>lnP8",
        "independent evaluations disagree: lnP6=" + std::to_string(p6) +
            " lnP7=" + std::to_string(p7) + " lnP8=" + std::to_string(p8n));
  }

  for (int a = 0; a < m; ++a) {
    for (int i = 1; i <= x.n - 1; ++i) {
      if (!p.comparable(a, x.f(i, a))) {
        add("lP8", "'" + p.names[a] + "' and f_" + std::to_string(i) +
                       " of it are incomparable");
      }
    }
  }

  // least and greatest index of I = {1..n-1}
  for (int a = 0; a < m; ++a) {
    const int fa = x.f(1, a);
    const Mask minimal_below = minimal_elements(p, p.down[a]);
    if (!p.leq(fa, a) || minimal_below != bit(fa)) {
      add("lP9", "f_1 '" + p.names[a] +
                     "' is not the unique minimal element below it");
    }
    const int ga = x.f(x.n - 1, a);
    const Mask maximal_above = maximal_elements(p, p.up[a]);
    if (!p.leq(a, ga) || maximal_above != bit(ga)) {
      add("lP10", "f_" + std::to_string(x.n - 1) + " '" + p.names[a] +
                      "' is not the unique maximal element above it");
    }
  }

  // segments [f_1(x), f_{n-1}(x)] partition X and absorb all comparabilities
  {
    std::vector<Mask> segments;
    for (int a = 0; a < m; ++a) {
      const Mask seg = p.up[x.f(1, a)] & p.down[x.f(x.n - 1, a)];
      if (std::find(segments.begin(), segments.end(), seg) == segments.end())
        segments.push_back(seg);
    }
    Mask covered = 0;
    bool disjoint = true;
    for (const Mask seg : segments) {
      if (covered & seg) disjoint = false;
      covered |= seg;
    }
    bool closed = true;
    for (const Mask seg : segments) {
      for_each_bit(seg, [&](int a) {
        if (!is_subset(p.up[a] | p.down[a], seg)) closed = false;
      });
    }
    if (covered != x.all() || !disjoint || !closed) {
      add("lP11",
          "segments [f_1 x, f_" + std::to_string(x.n - 1) +
              " x] do not decompose X into a cardinal sum");
    }
  }

  return report;
}

std::vector<Mask> chain_decomposition(const LnPSpace& x) {
  const int m = x.size();
  std::vector<Mask> blocks;
  for (int a = 0; a < m; ++a) {
    Mask block = 0;
    for (int i = 1; i <= x.n - 1; ++i) block |= bit(x.f(i, a));
    if (std::find(blocks.begin(), blocks.end(), block) == blocks.end())
      blocks.push_back(block);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });

  Mask covered = 0;
  for (const Mask block : blocks) {
    if (covered & block)
      throw InvalidInput("chain blocks overlap; space is not valid");
    covered |= block;
    if (popcount(block) > x.n - 1)
      throw InvalidInput("chain block larger than n-1; space is not valid");
    if (!is_chain(x.poset, block))
      throw InvalidInput("block is not a chain; space is not valid");
    bool closed = true;
    for_each_bit(block, [&](int a) {
      if (!is_subset(x.poset.up[a] | x.poset.down[a], block)) closed = false;
    });
    if (!closed)
      throw InvalidInput("block is not a maximal chain; space is not valid");
  }
  if (covered != x.all())
    throw InvalidInput("chain blocks do not cover X; space is not valid");
  return blocks;
}

SubsetFlags classify_subset(const LnPSpace& x, Mask y) {
  SubsetFlags flags;
  flags.increasing = up_set(x.poset, y) == y;
  flags.decreasing = down_set(x.poset, y) == y;
  flags.convex = is_convex(x.poset, y);
  const Mask img = x.union_images(y);
  flags.semimodal = is_subset(img, y);
  flags.theta_subset = img == y;
  flags.modal = true;
  for (int i = 1; i <= x.n - 1; ++i) {
    if (x.preimage(i, y) != y) flags.modal = false;
  }

  if (y != 0) {
    bool chain_union = true;
    for (const Mask block : chain_decomposition(x)) {
      const Mask hit = block & y;
      if (hit != 0 && hit != block) chain_union = false;
    }
    if (flags.semimodal != flags.modal || flags.modal != chain_union) {
      throw InternalError(
          "semimodal/modal/union-of-chains disagree on a nonempty subset");
    }
  }
  return flags;
}

}  // namespace lmkit
