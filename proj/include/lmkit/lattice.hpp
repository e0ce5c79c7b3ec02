#pragma once

#include <vector>

#include "lmkit/poset.hpp"

namespace lmkit {

/// Bounded distributive lattice over a finite poset. Join/meet tables are
/// always derived from the order, never taken from input.
struct DistLattice {
  Poset poset;
  std::vector<std::vector<int>> join;  // least upper bounds
  std::vector<std::vector<int>> meet;  // greatest lower bounds
  int bottom = 0;
  int top = 0;

  int size() const { return poset.size(); }
  int jn(int a, int b) const { return join[a][b]; }
  int mt(int a, int b) const { return meet[a][b]; }
  bool leq(int a, int b) const { return poset.leq(a, b); }
  const std::string& name_of(int a) const { return poset.names[a]; }

  /// [x) as a mask.
  Mask principal_filter(int x) const { return poset.up[x]; }
  /// (x] as a mask.
  Mask principal_ideal(int x) const { return poset.down[x]; }
};

/// Derives join/meet tables and bounds; verifies that every pair has a least
/// upper and greatest lower bound and that both distributive laws hold.
/// Throws NotALattice / NotDistributive with a witness otherwise.
DistLattice lattice_from_poset(const Poset& p);

/// Prime filters of a bounded distributive lattice, ordered by inclusion.
/// Enumerated from the increasing subsets by filtering for meet closure and
/// primality. Filters are sorted ascending as masks; the poset carries
/// printable names built from the member elements.
struct PrimeFilters {
  std::vector<Mask> filters;  // member masks over lattice elements
  Poset order;                // inclusion order on the filters

  int size() const { return static_cast<int>(filters.size()); }
  int index_of_mask(Mask members) const;  // -1 when absent
};

PrimeFilters prime_filters(const DistLattice& lat);

/// sigma(a) = {P prime filter : a in P}, as a mask over filter indices.
Mask sigma_of(const DistLattice& lat, const PrimeFilters& pf, int a);

/// sigma for every element at once.
std::vector<Mask> sigma_table(const DistLattice& lat, const PrimeFilters& pf);

}  // namespace lmkit
