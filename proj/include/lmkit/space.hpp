#pragma once

#include <vector>

#include "lmkit/algebra.hpp"
#include "lmkit/poset.hpp"

namespace lmkit {

/// Finite n-valued Lukasiewicz-Moisil space: a poset X with self-maps
/// f_1..f_{n-1}. In the finite setting every subset is clopen and closure is
/// the identity, so the topological side of the axioms holds by fiat.
struct LnPSpace {
  Poset poset;
  int n = 2;
  std::vector<std::vector<int>> maps;  // maps[i-1][x] = f_i(x)

  int size() const { return poset.size(); }
  Mask all() const { return poset.all(); }
  int f(int i, int x) const { return maps[i - 1][x]; }

  Mask image(int i, Mask y) const;     // f_i(Y)
  Mask preimage(int i, Mask y) const;  // f_i^{-1}(Y)
  Mask union_images(Mask y) const;     // U_i f_i(Y)
  Mask union_preimages(Mask y) const;  // U_i f_i^{-1}(Y)
};

/// Checks the space laws, one report entry per violated law:
///   lP3   x <= y implies f_i(x) = f_i(y)
///   lP4   i <= j implies f_i(x) <= f_j(x)
///   lP5   f_i . f_j = f_i
///   lnP6  X = U_i f_i(X)
///   lnP7  subsets with identical f_i-preimages for every i are equal
///   lnP8  every x is a fixed point of some f_i
///   lP8   x and f_i(x) are always comparable
///   lP9   f_1(x) is the unique minimal element below x
///   lP10  f_{n-1}(x) is the unique maximal element above x
///   lP11  the segments [f_1(x), f_{n-1}(x)] partition X with no order
///         relations across them
/// lnP6, lnP7 and lnP8 are evaluated independently; the entry "lnP6<=>lnP7<=>lnP8"
/// reports when the three disagree on this instance.
ValidationReport validate_space(const LnPSpace& x);

/// The blocks {f_i(x) : i in I}, one per element, deduplicated. For a valid
/// space these are maximal chains of at most n-1 points partitioning X.
/// Throws InvalidInput when the partition or chain structure fails.
std::vector<Mask> chain_decomposition(const LnPSpace& x);

struct SubsetFlags {
  bool increasing = false;
  bool decreasing = false;
  bool convex = false;
  bool semimodal = false;     // U_i f_i(Y) contained in Y
  bool modal = false;         // Y = f_i^{-1}(Y) for all i
  bool theta_subset = false;  // Y = U_i f_i(Y) (finite closure is identity)
};

/// Classifies Y against the subset vocabulary. Presupposes a valid space:
/// for nonempty Y the classifier cross-checks that semimodal, modal and
/// union-of-maximal-chains agree, and throws InternalError if they do not.
SubsetFlags classify_subset(const LnPSpace& x, Mask y);

}  // namespace lmkit
