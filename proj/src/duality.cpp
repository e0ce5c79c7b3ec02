#include "lmkit/duality.hpp"

#include <algorithm>

#include "lmkit/error.hpp"

namespace lmkit {

LnPSpace dual_space(const LMnAlgebra& a) {
  const PrimeFilters pf = prime_filters(a.lattice);
  LnPSpace x;
  x.poset = pf.order;
  x.n = a.n;
  x.maps.assign(a.n - 1, std::vector<int>(pf.size()));
  for (int i = 1; i <= a.n - 1; ++i) {
    for (int p = 0; p < pf.size(); ++p) {
      Mask preimage = 0;
      for (int e = 0; e < a.size(); ++e) {
        if (has_bit(pf.filters[p], a.phi_at(i, e))) preimage |= bit(e);
      }
      const int q = pf.index_of_mask(preimage);
      if (q < 0)
        throw InternalError("phi_" + std::to_string(i) +
                            "-preimage of a prime filter is not prime");
      x.maps[i - 1][p] = q;
    }
  }
  return x;
}

Duality dualize(const LMnAlgebra& a) {
  Duality d;
  d.algebra = a;
  d.space = dual_space(a);
  const PrimeFilters pf = prime_filters(a.lattice);
  d.sigma = sigma_table(a.lattice, pf);
  return d;
}

std::vector<Mask> co_dual_carrier(const LnPSpace& x) {
  return increasing_sets(x.poset);
}

LMnAlgebra co_dual(const LnPSpace& x) {
  const std::vector<Mask> carrier = co_dual_carrier(x);
  const int m = static_cast<int>(carrier.size());

  std::vector<std::string> names;
  names.reserve(m);
  for (const Mask u : carrier) {
    std::string label = "{";
    bool first = true;
    for_each_bit(u, [&](int p) {
      if (!first) label += ",";
      label += x.poset.names[p];
      first = false;
    });
    label += "}";
    names.push_back(std::move(label));
  }

  std::vector<std::pair<int, int>> incl;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && is_subset(carrier[i], carrier[j])) incl.emplace_back(i, j);
    }
  }
  DistLattice lat = lattice_from_poset(make_poset(std::move(names), incl));

  auto index_of = [&](Mask u) {
    const auto it = std::lower_bound(carrier.begin(), carrier.end(), u);
    if (it == carrier.end() || *it != u)
      throw InternalError("f_i-preimage of an increasing set is not increasing");
    return static_cast<int>(it - carrier.begin());
  };

  std::vector<std::vector<int>> phi(x.n - 1, std::vector<int>(m));
  for (int i = 1; i <= x.n - 1; ++i) {
    for (int u = 0; u < m; ++u) {
      phi[i - 1][u] = index_of(x.preimage(i, carrier[u]));
    }
  }
  LMnAlgebra out = make_algebra(std::move(lat), x.n, std::move(phi));
  const ValidationReport report = validate_axioms(out);
  if (!report.ok())
    throw InternalError("co_dual produced an invalid algebra: " +
                        report.to_string());
  return out;
}

RoundTripResult round_trip(const LMnAlgebra& a) {
  const Duality d = dualize(a);
  const LMnAlgebra b = co_dual(d.space);
  const std::vector<Mask> carrier = co_dual_carrier(d.space);

  RoundTripResult result;
  if (static_cast<int>(carrier.size()) != a.size())
    throw RoundTripFailure("increasing-set count differs from carrier size");

  result.sigma_iso.assign(a.size(), -1);
  for (int e = 0; e < a.size(); ++e) {
    const auto it =
        std::lower_bound(carrier.begin(), carrier.end(), d.sigma[e]);
    if (it == carrier.end() || *it != d.sigma[e])
      throw RoundTripFailure("sigma image of '" + a.name_of(e) +
                             "' is not an increasing set");
    result.sigma_iso[e] = static_cast<int>(it - carrier.begin());
  }
  for (int e = 0; e < a.size(); ++e) {
    for (int g = e + 1; g < a.size(); ++g) {
      if (result.sigma_iso[e] == result.sigma_iso[g])
        throw RoundTripFailure("sigma is not injective");
    }
  }
  if (result.sigma_iso[a.bottom()] != b.bottom())
    throw RoundTripFailure("sigma does not preserve 0");
  if (result.sigma_iso[a.top()] != b.top())
    throw RoundTripFailure("sigma does not preserve 1");
  for (int e = 0; e < a.size(); ++e) {
    for (int g = 0; g < a.size(); ++g) {
      if (result.sigma_iso[a.lattice.jn(e, g)] !=
          b.lattice.jn(result.sigma_iso[e], result.sigma_iso[g]))
        throw RoundTripFailure("sigma does not preserve join");
      if (result.sigma_iso[a.lattice.mt(e, g)] !=
          b.lattice.mt(result.sigma_iso[e], result.sigma_iso[g]))
        throw RoundTripFailure("sigma does not preserve meet");
    }
    for (int i = 1; i <= a.n - 1; ++i) {
      if (result.sigma_iso[a.phi_at(i, e)] !=
          b.phi_at(i, result.sigma_iso[e]))
        throw RoundTripFailure("sigma does not preserve phi_" +
                               std::to_string(i));
      if (result.sigma_iso[a.phi_bar_at(i, e)] !=
          b.phi_bar_at(i, result.sigma_iso[e]))
        throw RoundTripFailure("sigma does not preserve phi_bar_" +
                               std::to_string(i));
    }
  }

  // epsilon: x -> {U in D(X) : x in U}, landing in the prime filters of b
  const Duality db = dualize(b);
  if (db.num_points() != d.num_points())
    throw RoundTripFailure("double dual space has a different size");
  const PrimeFilters pfb = prime_filters(b.lattice);
  result.epsilon_iso.assign(d.num_points(), -1);
  for (int p = 0; p < d.num_points(); ++p) {
    Mask members = 0;
    for (int u = 0; u < static_cast<int>(carrier.size()); ++u) {
      if (has_bit(carrier[u], p)) members |= bit(u);
    }
    const int q = pfb.index_of_mask(members);
    if (q < 0)
      throw RoundTripFailure("epsilon image of '" + d.space.poset.names[p] +
                             "' is not a prime filter");
    result.epsilon_iso[p] = q;
  }
  for (int p = 0; p < d.num_points(); ++p) {
    for (int q = 0; q < d.num_points(); ++q) {
      if (p != q && result.epsilon_iso[p] == result.epsilon_iso[q])
        throw RoundTripFailure("epsilon is not injective");
      if (d.space.poset.leq(p, q) !=
          db.space.poset.leq(result.epsilon_iso[p], result.epsilon_iso[q]))
        throw RoundTripFailure("epsilon does not preserve the order");
    }
    for (int i = 1; i <= a.n - 1; ++i) {
      if (result.epsilon_iso[d.space.f(i, p)] !=
          db.space.f(i, result.epsilon_iso[p]))
        throw RoundTripFailure("epsilon does not commute with f_" +
                               std::to_string(i));
    }
  }
  return result;
}

std::vector<int> dual_hom(const Duality& da, const Duality& db,
                          const std::vector<int>& h) {
  if (const auto violation = hom_violation(da.algebra, db.algebra, h))
    throw NotAHomomorphism(*violation);

  const PrimeFilters pfa = prime_filters(da.algebra.lattice);
  const PrimeFilters pfb = prime_filters(db.algebra.lattice);
  std::vector<int> dual(pfb.size());
  for (int p = 0; p < pfb.size(); ++p) {
    Mask preimage = 0;
    for (int e = 0; e < da.algebra.size(); ++e) {
      if (has_bit(pfb.filters[p], h[e])) preimage |= bit(e);
    }
    const int q = pfa.index_of_mask(preimage);
    if (q < 0)
      throw InternalError("h-preimage of a prime filter is not prime");
    dual[p] = q;
  }

  for (int p = 0; p < pfb.size(); ++p) {
    for (int q = 0; q < pfb.size(); ++q) {
      if (db.space.poset.leq(p, q) &&
          !da.space.poset.leq(dual[p], dual[q]))
        throw InternalError("dual of a homomorphism is not increasing");
    }
    for (int i = 1; i <= da.algebra.n - 1; ++i) {
      if (dual[db.space.f(i, p)] != da.space.f(i, dual[p]))
        throw InternalError("dual map does not commute with f_" +
                            std::to_string(i));
    }
  }
  return dual;
}

}  // namespace lmkit
