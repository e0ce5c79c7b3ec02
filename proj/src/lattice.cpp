#include "lmkit/lattice.hpp"

#include <algorithm>

#include "lmkit/error.hpp"

namespace lmkit {

namespace {

// Least element of a nonempty mask, i.e. the unique member below all others;
// -1 when there is none.
int least_of(const Poset& p, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int z) {
    if (is_subset(candidates, p.up[z])) found = z;
  });
  return found;
}

int greatest_of(const Poset& p, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int z) {
    if (is_subset(candidates, p.down[z])) found = z;
  });
  return found;
}

}  // namespace

DistLattice lattice_from_poset(const Poset& p) {
  const int m = p.size();
  DistLattice lat;
  lat.poset = p;
  lat.join.assign(m, std::vector<int>(m, -1));
  lat.meet.assign(m, std::vector<int>(m, -1));

  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const int sup = least_of(p, p.up[a] & p.up[b]);
      if (sup < 0)
        throw NotALattice("elements '" + p.names[a] + "' and '" + p.names[b] +
                          "' have no least upper bound");
      const int inf = greatest_of(p, p.down[a] & p.down[b]);
      if (inf < 0)
        throw NotALattice("elements '" + p.names[a] + "' and '" + p.names[b] +
                          "' have no greatest lower bound");
      lat.join[a][b] = lat.join[b][a] = sup;
      lat.meet[a][b] = lat.meet[b][a] = inf;
    }
  }

  lat.bottom = least_of(p, p.all());
  lat.top = greatest_of(p, p.all());
  if (lat.bottom < 0 || lat.top < 0)
    throw NotALattice("no global bottom/top element");

  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (lat.mt(x, lat.jn(y, z)) != lat.jn(lat.mt(x, y), lat.mt(x, z)))
          throw NotDistributive("meet does not distribute over join at ('" +
                                p.names[x] + "','" + p.names[y] + "','" +
                                p.names[z] + "')");
        if (lat.jn(x, lat.mt(y, z)) != lat.mt(lat.jn(x, y), lat.jn(x, z)))
          throw NotDistributive("join does not distribute over meet at ('" +
                                p.names[x] + "','" + p.names[y] + "','" +
                                p.names[z] + "')");
      }
    }
  }
  return lat;
}

int PrimeFilters::index_of_mask(Mask members) const {
  const auto it = std::lower_bound(filters.begin(), filters.end(), members);
  if (it == filters.end() || *it != members) return -1;
  return static_cast<int>(it - filters.begin());
}

PrimeFilters prime_filters(const DistLattice& lat) {
  std::vector<Mask> found;
  for (Mask f : increasing_sets(lat.poset)) {
    if (f == 0 || f == lat.poset.all()) continue;  // proper and nonempty
    bool good = true;
    // closed under meet
    for_each_bit(f, [&](int x) {
      for_each_bit(f, [&](int y) {
        if (!has_bit(f, lat.mt(x, y))) good = false;
      });
    });
    if (!good) continue;
    // prime: a v b in F forces a in F or b in F
    const Mask outside = lat.poset.all() & ~f;
    for_each_bit(outside, [&](int x) {
      for_each_bit(outside, [&](int y) {
        if (has_bit(f, lat.jn(x, y))) good = false;
      });
    });
    if (good) found.push_back(f);
  }
  std::sort(found.begin(), found.end());

  PrimeFilters pf;
  pf.filters = found;
  std::vector<std::string> names;
  names.reserve(found.size());
  for (Mask f : found) {
    std::string label = "{";
    bool first = true;
    for_each_bit(f, [&](int x) {
      if (!first) label += ",";
      label += lat.name_of(x);
      first = false;
    });
    label += "}";
    names.push_back(std::move(label));
  }
  std::vector<std::pair<int, int>> incl;
  const int k = static_cast<int>(found.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && is_subset(found[i], found[j])) incl.emplace_back(i, j);
    }
  }
  pf.order = make_poset(std::move(names), incl);
  return pf;
}

Mask sigma_of(const DistLattice& lat, const PrimeFilters& pf, int a) {
  (void)lat;
  Mask s = 0;
  for (int i = 0; i < pf.size(); ++i) {
    if (has_bit(pf.filters[i], a)) s |= bit(i);
  }
  return s;
}

std::vector<Mask> sigma_table(const DistLattice& lat, const PrimeFilters& pf) {
  std::vector<Mask> table(lat.size());
  for (int a = 0; a < lat.size(); ++a) table[a] = sigma_of(lat, pf, a);
  return table;
}

}  // namespace lmkit
