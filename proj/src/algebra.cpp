#include "lmkit/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lmkit/error.hpp"

namespace lmkit {

bool ValidationReport::mentions(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) os << v.law << ": " << v.witness << "\n";
  return os.str();
}

int LMnAlgebra::phi_bar_at(int i, int x) const {
  const auto& c = phi_bar[i - 1][x];
  if (!c)
    throw InternalError("phi_bar_" + std::to_string(i) + " undefined at '" +
                        name_of(x) + "'");
  return *c;
}

std::optional<int> complement_of(const DistLattice& lat, int x) {
  std::optional<int> found;
  for (int y = 0; y < lat.size(); ++y) {
    if (lat.jn(x, y) == lat.top && lat.mt(x, y) == lat.bottom) {
      if (found && *found != y)
        throw InternalError("two complements in a distributive lattice");
      found = y;
    }
  }
  return found;
}

LMnAlgebra make_algebra(DistLattice lattice, int n,
                        std::vector<std::vector<int>> phi) {
  if (n < 2) throw InvalidN("n must be at least 2, got " + std::to_string(n));
  const int m = lattice.size();
  if (lattice.bottom == lattice.top)
    throw InvalidInput("carrier must have 0 != 1");
  if (static_cast<int>(phi.size()) != n - 1)
    throw InvalidInput("expected " + std::to_string(n - 1) + " phi tables");
  for (const auto& table : phi) {
    if (static_cast<int>(table.size()) != m)
      throw InvalidInput("phi table size does not match carrier");
    for (int v : table) {
      if (v < 0 || v >= m) throw InvalidInput("phi value out of range");
    }
  }

  LMnAlgebra a;
  a.lattice = std::move(lattice);
  a.n = n;
  a.phi = std::move(phi);
  a.phi_bar.assign(n - 1, std::vector<std::optional<int>>(m));
  for (int i = 1; i <= n - 1; ++i) {
    for (int x = 0; x < m; ++x) {
      a.phi_bar[i - 1][x] = complement_of(a.lattice, a.phi_at(i, x));
    }
  }
  return a;
}

ValidationReport validate_axioms(const LMnAlgebra& a) {
  ValidationReport report;
  const int m = a.size();
  const auto& lat = a.lattice;
  auto add = [&](const char* law, const std::string& witness) {
    if (!report.mentions(law)) report.violations.push_back({law, witness});
  };

  for (int i = 1; i <= a.n - 1 && !report.mentions("L1"); ++i) {
    if (a.phi_at(i, lat.bottom) != lat.bottom) {
      add("L1", "phi_" + std::to_string(i) + " 0 != 0");
      break;
    }
    if (a.phi_at(i, lat.top) != lat.top) {
      add("L1", "phi_" + std::to_string(i) + " 1 != 1");
      break;
    }
    for (int x = 0; x < m && !report.mentions("L1"); ++x) {
      for (int y = 0; y < m; ++y) {
        if (a.phi_at(i, lat.jn(x, y)) !=
            lat.jn(a.phi_at(i, x), a.phi_at(i, y))) {
          add("L1", "phi_" + std::to_string(i) + " does not preserve join at ('" +
                        a.name_of(x) + "','" + a.name_of(y) + "')");
          break;
        }
        if (a.phi_at(i, lat.mt(x, y)) !=
            lat.mt(a.phi_at(i, x), a.phi_at(i, y))) {
          add("L1", "phi_" + std::to_string(i) + " does not preserve meet at ('" +
                        a.name_of(x) + "','" + a.name_of(y) + "')");
          break;
        }
      }
    }
  }

  for (int i = 1; i <= a.n - 1 && !report.mentions("L2"); ++i) {
    for (int x = 0; x < m; ++x) {
      if (!a.phi_bar_defined(i, x)) {
        add("L2", "phi_" + std::to_string(i) + " '" + a.name_of(x) +
                      "' has no lattice complement");
        break;
      }
    }
  }

  for (int i = 1; i <= a.n - 1 && !report.mentions("L3"); ++i) {
    for (int j = 1; j <= a.n - 1 && !report.mentions("L3"); ++j) {
      for (int x = 0; x < m; ++x) {
        if (a.phi_at(i, a.phi_at(j, x)) != a.phi_at(j, x)) {
          add("L3", "phi_" + std::to_string(i) + " phi_" + std::to_string(j) +
                        " '" + a.name_of(x) + "' != phi_" + std::to_string(j) +
                        " '" + a.name_of(x) + "'");
          break;
        }
      }
    }
  }

  for (int i = 1; i <= a.n - 1 && !report.mentions("L4"); ++i) {
    for (int j = i; j <= a.n - 1 && !report.mentions("L4"); ++j) {
      for (int x = 0; x < m; ++x) {
        if (!lat.leq(a.phi_at(i, x), a.phi_at(j, x))) {
          add("L4", "i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                        ", x='" + a.name_of(x) + "': phi_i x = '" +
                        a.name_of(a.phi_at(i, x)) + "' not <= phi_j x = '" +
                        a.name_of(a.phi_at(j, x)) + "'");
          break;
        }
      }
    }
  }

  for (int x = 0; x < m && !report.mentions("L5"); ++x) {
    for (int y = x + 1; y < m; ++y) {
      bool all_equal = true;
      for (int i = 1; i <= a.n - 1; ++i) {
        if (a.phi_at(i, x) != a.phi_at(i, y)) {
          all_equal = false;
          break;
        }
      }
      if (all_equal) {
        add("L5", "x='" + a.name_of(x) + "', y='" + a.name_of(y) +
                      "' agree under every phi_i");
        break;
      }
    }
  }
  return report;
}

Mask boolean_elements(const LMnAlgebra& a) {
  Mask out = 0;
  for (int x = 0; x < a.size(); ++x) {
    const bool complemented = complement_of(a.lattice, x).has_value();
    bool some_image = false;   // x = phi_i y for some y, i
    bool some_fixed = false;   // x = phi_i x for some i
    bool all_fixed = true;     // x = phi_i x for all i
    for (int i = 1; i <= a.n - 1; ++i) {
      for (int y = 0; y < a.size(); ++y) {
        if (a.phi_at(i, y) == x) some_image = true;
      }
      if (a.phi_at(i, x) == x) {
        some_fixed = true;
      } else {
        all_fixed = false;
      }
    }
    if (complemented != some_image || some_image != some_fixed ||
        some_fixed != all_fixed) {
      throw L6EquivalenceFailure(
          "Boolean-element descriptions disagree at '" + a.name_of(x) +
          "': complemented=" + std::to_string(complemented) +
          " image=" + std::to_string(some_image) +
          " some-fixed=" + std::to_string(some_fixed) +
          " all-fixed=" + std::to_string(all_fixed));
    }
    if (complemented) out |= bit(x);
  }
  return out;
}

LMnAlgebra make_chain(int n) {
  if (n < 2) throw InvalidN("chain needs n >= 2, got " + std::to_string(n));
  if (n > kMaxElements) throw InvalidN("chain too large");
  std::vector<std::string> names;
  names.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (j == 0) {
      names.emplace_back("0");
    } else if (j == n - 1) {
      names.emplace_back("1");
    } else {
      names.push_back(std::to_string(j) + "/" + std::to_string(n - 1));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  DistLattice lat = lattice_from_poset(make_poset(std::move(names), edges));

  std::vector<std::vector<int>> phi(n - 1, std::vector<int>(n));
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 0; j < n; ++j) {
      phi[i - 1][j] = (i + j >= n) ? n - 1 : 0;
    }
  }
  return make_algebra(std::move(lat), n, std::move(phi));
}

LMnAlgebra make_product(const LMnAlgebra& a, const LMnAlgebra& b) {
  if (a.n != b.n)
    throw ArityMismatch("factors have different n: " + std::to_string(a.n) +
                        " vs " + std::to_string(b.n));
  const int ma = a.size();
  const int mb = b.size();
  if (ma * mb > kMaxElements) throw InvalidInput("product carrier too large");
  auto idx = [mb](int x, int y) { return x * mb + y; };

  std::vector<std::string> names;
  names.reserve(ma * mb);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < ma; ++x) {
    for (int y = 0; y < mb; ++y) {
      names.push_back("(" + a.name_of(x) + "," + b.name_of(y) + ")");
      for (int u = 0; u < ma; ++u) {
        for (int v = 0; v < mb; ++v) {
          if (a.lattice.leq(x, u) && b.lattice.leq(y, v))
            edges.emplace_back(idx(x, y), idx(u, v));
        }
      }
    }
  }
  DistLattice lat = lattice_from_poset(make_poset(std::move(names), edges));

  std::vector<std::vector<int>> phi(a.n - 1, std::vector<int>(ma * mb));
  for (int i = 1; i <= a.n - 1; ++i) {
    for (int x = 0; x < ma; ++x) {
      for (int y = 0; y < mb; ++y) {
        phi[i - 1][idx(x, y)] = idx(a.phi_at(i, x), b.phi_at(i, y));
      }
    }
  }
  return make_algebra(std::move(lat), a.n, std::move(phi));
}

std::optional<std::string> hom_violation(const LMnAlgebra& a,
                                         const LMnAlgebra& b,
                                         const std::vector<int>& h) {
  if (a.n != b.n) return "algebras have different n";
  if (static_cast<int>(h.size()) != a.size()) return "map is not total";
  for (int v : h) {
    if (v < 0 || v >= b.size()) return "map value out of range";
  }
  if (h[a.bottom()] != b.bottom()) return "0 is not preserved";
  if (h[a.top()] != b.top()) return "1 is not preserved";
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (h[a.lattice.jn(x, y)] != b.lattice.jn(h[x], h[y]))
        return "join not preserved at ('" + a.name_of(x) + "','" +
               a.name_of(y) + "')";
      if (h[a.lattice.mt(x, y)] != b.lattice.mt(h[x], h[y]))
        return "meet not preserved at ('" + a.name_of(x) + "','" +
               a.name_of(y) + "')";
    }
    for (int i = 1; i <= a.n - 1; ++i) {
      if (h[a.phi_at(i, x)] != b.phi_at(i, h[x]))
        return "phi_" + std::to_string(i) + " not preserved at '" +
               a.name_of(x) + "'";
    }
  }
  return std::nullopt;
}

}  // namespace lmkit
