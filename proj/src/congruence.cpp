#include "lmkit/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lmkit/error.hpp"

namespace lmkit {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller index wins, keeps labels near-canonical
    return true;
  }
};

Congruence canonicalize(UnionFind& uf) {
  const int m = static_cast<int>(uf.parent.size());
  std::vector<int> labels(m);
  for (int x = 0; x < m; ++x) labels[x] = uf.find(x);
  return from_class_of(labels);
}

}  // namespace

int Congruence::num_classes() const {
  int count = 0;
  for (int x = 0; x < size(); ++x) {
    if (class_of[x] == x) ++count;
  }
  return count;
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out;
  std::map<int, int> slot;
  for (int x = 0; x < size(); ++x) {
    auto [it, inserted] = slot.emplace(class_of[x], out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

Mask Congruence::class_mask(int a) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (class_of[x] == class_of[a]) out |= bit(x);
  }
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (int x = 0; x < size(); ++x) {
    if (other.class_of[x] != other.class_of[class_of[x]]) return false;
  }
  return true;
}

Congruence identity_congruence(int m) {
  Congruence c;
  c.class_of.resize(m);
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  return c;
}

Congruence total_congruence(int m) {
  Congruence c;
  c.class_of.assign(m, 0);
  return c;
}

Congruence from_class_of(const std::vector<int>& labels) {
  const int m = static_cast<int>(labels.size());
  std::vector<int> least(m, -1);
  for (int x = 0; x < m; ++x) {
    if (least[labels[x]] < 0) least[labels[x]] = x;
  }
  Congruence c;
  c.class_of.resize(m);
  for (int x = 0; x < m; ++x) c.class_of[x] = least[labels[x]];
  return c;
}

std::optional<std::string> congruence_violation(const LMnAlgebra& a,
                                                const Congruence& theta) {
  if (theta.size() != a.size()) return "partition size mismatch";
  const int m = a.size();
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (!theta.related(x, y)) continue;
      for (int c = 0; c < m; ++c) {
        if (!theta.related(a.lattice.jn(x, c), a.lattice.jn(y, c)))
          return "join with '" + a.name_of(c) + "' separates related ('" +
                 a.name_of(x) + "','" + a.name_of(y) + "')";
        if (!theta.related(a.lattice.mt(x, c), a.lattice.mt(y, c)))
          return "meet with '" + a.name_of(c) + "' separates related ('" +
                 a.name_of(x) + "','" + a.name_of(y) + "')";
      }
      for (int i = 1; i <= a.n - 1; ++i) {
        if (!theta.related(a.phi_at(i, x), a.phi_at(i, y)))
          return "phi_" + std::to_string(i) + " separates related ('" +
                 a.name_of(x) + "','" + a.name_of(y) + "')";
        if (!theta.related(a.phi_bar_at(i, x), a.phi_bar_at(i, y)))
          return "phi_bar_" + std::to_string(i) + " separates related ('" +
                 a.name_of(x) + "','" + a.name_of(y) + "')";
      }
    }
  }
  return std::nullopt;
}

bool is_theta_congruence(const LMnAlgebra& a, const Congruence& theta) {
  if (congruence_violation(a, theta)) return false;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = x + 1; y < a.size(); ++y) {
      if (theta.related(x, y)) continue;
      bool images_related = true;
      for (int i = 1; i <= a.n - 1; ++i) {
        if (!theta.related(a.phi_at(i, x), a.phi_at(i, y)))
          images_related = false;
      }
      if (images_related) return false;  // reflection fails
    }
  }
  return true;
}

Congruence generate_congruence_oracle(
    const LMnAlgebra& a, const std::vector<std::pair<int, int>>& pairs,
    ClosureMode mode) {
  const int m = a.size();
  UnionFind uf(m);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m)
      throw InvalidInput("generator pair out of range");
    uf.unite(x, y);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int c = 0; c < m; ++c) {
          changed |= uf.unite(a.lattice.jn(x, c), a.lattice.jn(y, c));
          changed |= uf.unite(a.lattice.mt(x, c), a.lattice.mt(y, c));
        }
        for (int i = 1; i <= a.n - 1; ++i) {
          changed |= uf.unite(a.phi_at(i, x), a.phi_at(i, y));
          if (mode == ClosureMode::lm)
            changed |= uf.unite(a.phi_bar_at(i, x), a.phi_bar_at(i, y));
        }
      }
    }
    if (mode == ClosureMode::theta) {
      for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
          if (uf.find(x) == uf.find(y)) continue;
          bool images_related = true;
          for (int i = 1; i <= a.n - 1; ++i) {
            if (uf.find(a.phi_at(i, x)) != uf.find(a.phi_at(i, y)))
              images_related = false;
          }
          if (images_related) changed |= uf.unite(x, y);
        }
      }
    }
  }
  return canonicalize(uf);
}

Congruence theta_from_subset(const Duality& d, Mask y) {
  if (!is_subset(d.space.union_images(y), y))
    throw NotSemimodal("subset is not semimodal");
  const int m = d.algebra.size();
  std::vector<int> labels(m);
  std::map<Mask, int> first_with_key;
  for (int e = 0; e < m; ++e) {
    const Mask key = d.sigma[e] & y;
    auto [it, inserted] = first_with_key.emplace(key, e);
    labels[e] = it->second;
  }
  return from_class_of(labels);
}

Congruence congruence_from_open(const Duality& d, Mask g) {
  const Mask complement = d.all_points() & ~g;
  if (!is_subset(d.space.union_images(complement), complement))
    throw ComplementNotSemimodal("complement of the open set is not semimodal");

  // direct definition
  const int m = d.algebra.size();
  UnionFind uf(m);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (is_subset(d.sigma[x] ^ d.sigma[y], g)) uf.unite(x, y);
    }
  }
  Congruence direct = canonicalize(uf);
  if (direct != theta_from_subset(d, complement))
    throw InternalError(
        "Theta_OS(G) differs from Theta_S(X\\G) on the same open set");
  return direct;
}

Mask dual_subset_of(const Duality& d, const Congruence& theta) {
  Mask separating = 0;
  for (int x = 0; x < theta.size(); ++x) {
    for (int y = x + 1; y < theta.size(); ++y) {
      if (theta.related(x, y)) separating |= d.sigma[x] ^ d.sigma[y];
    }
  }
  return d.all_points() & ~separating;
}

PrincipalForms principal_congruence_forms(const Duality& d, int a, int b) {
  const auto& alg = d.algebra;
  const auto& lat = alg.lattice;
  PrincipalForms forms;
  forms.lo = lat.mt(a, b);
  forms.hi = lat.jn(a, b);
  const Mask diff = d.sigma[forms.hi] & ~d.sigma[forms.lo];

  forms.g_modal_preimage = d.space.union_preimages(diff);
  forms.g_set_preimage = diff | forms.g_modal_preimage;

  Mask sigma_union = 0;
  int join_fold = lat.bottom;
  int meet_fold = lat.top;
  for (int i = 1; i <= alg.n - 1; ++i) {
    const int contracted = lat.mt(alg.phi_at(i, forms.hi),
                                  alg.phi_bar_at(i, forms.lo));
    sigma_union |= d.sigma[contracted];
    join_fold = lat.jn(join_fold, contracted);
    meet_fold = lat.mt(
        meet_fold, lat.jn(alg.phi_bar_at(i, forms.hi), alg.phi_at(i, forms.lo)));
  }
  forms.g_set_sigma = diff | sigma_union;
  forms.g_modal_sigma = d.sigma[join_fold];
  forms.filter_generator = meet_fold;

  if (forms.g_set_preimage != forms.g_set_sigma ||
      forms.g_set_preimage != forms.g_modal_preimage ||
      forms.g_modal_preimage != forms.g_modal_sigma)
    throw InternalError("principal congruence: open-set forms disagree at ('" +
                        alg.name_of(forms.lo) + "','" + alg.name_of(forms.hi) +
                        "')");

  forms.result = congruence_from_open(d, forms.g_set_preimage);

  const FilterCongruenceResult filter_form =
      filter_congruence(d, lat.principal_filter(forms.filter_generator));
  if (filter_form.congruence != forms.result)
    throw InternalError("principal congruence: filter form disagrees at ('" +
                        alg.name_of(forms.lo) + "','" + alg.name_of(forms.hi) +
                        "')");

  const Congruence oracle = generate_congruence_oracle(
      alg, {{forms.lo, forms.hi}}, ClosureMode::lm);
  if (oracle != forms.result)
    throw InternalError("principal congruence: oracle disagrees at ('" +
                        alg.name_of(forms.lo) + "','" + alg.name_of(forms.hi) +
                        "')");
  return forms;
}

Congruence principal_congruence(const Duality& d, int a, int b) {
  return principal_congruence_forms(d, a, b).result;
}

PrincipalThetaForms principal_theta_congruence_forms(const Duality& d, int a,
                                                     int b) {
  const auto& alg = d.algebra;
  const auto& lat = alg.lattice;
  const Mask all = d.all_points();
  PrincipalThetaForms forms;
  forms.lo = lat.mt(a, b);
  forms.hi = lat.jn(a, b);
  const Mask diff = d.sigma[forms.hi] & ~d.sigma[forms.lo];

  const Mask g = diff | d.space.union_preimages(diff);
  forms.h_from_g = all & ~d.space.union_images(all & ~g);

  Mask core_preimage = all;
  for (int i = 1; i <= alg.n - 1; ++i)
    core_preimage &= d.space.preimage(i, all & ~diff);
  forms.h_preimage = all & ~d.space.union_images(core_preimage);

  Mask core_sigma = all;
  for (int i = 1; i <= alg.n - 1; ++i) {
    core_sigma &= d.sigma[lat.jn(alg.phi_at(i, forms.lo),
                                 alg.phi_bar_at(i, forms.hi))];
  }
  forms.h_sigma = all & ~d.space.union_images(core_sigma);

  if (forms.h_from_g != forms.h_preimage || forms.h_preimage != forms.h_sigma)
    throw InternalError(
        "principal theta-congruence: open-set forms disagree at ('" +
        alg.name_of(forms.lo) + "','" + alg.name_of(forms.hi) + "')");

  const Mask complement = all & ~forms.h_from_g;
  if (d.space.union_images(complement) != complement)
    throw InternalError(
        "principal theta-congruence: complement is not a theta-subset");
  forms.result = theta_from_subset(d, complement);

  const Congruence oracle = generate_congruence_oracle(
      alg, {{forms.lo, forms.hi}}, ClosureMode::theta);
  if (oracle != forms.result)
    throw InternalError("principal theta-congruence: oracle disagrees at ('" +
                        alg.name_of(forms.lo) + "','" + alg.name_of(forms.hi) +
                        "')");
  return forms;
}

Congruence principal_theta_congruence(const Duality& d, int a, int b) {
  return principal_theta_congruence_forms(d, a, b).result;
}

int CongruenceLattice::index_of(const Congruence& theta) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i] == theta) return i;
  }
  return -1;
}

namespace {

std::vector<Congruence> principal_join_closure(const Duality& d, bool theta) {
  const int m = d.algebra.size();
  std::vector<Congruence> closed;
  auto add = [&](const Congruence& c) {
    if (std::find(closed.begin(), closed.end(), c) == closed.end()) {
      closed.push_back(c);
      return true;
    }
    return false;
  };
  add(identity_congruence(m));
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      if (!d.algebra.lattice.leq(a, b)) continue;
      add(theta ? principal_theta_congruence(d, a, b)
                : principal_congruence(d, a, b));
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = closed.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (add(join(closed[i], closed[j]))) grew = true;
      }
    }
  }
  return closed;
}

void sort_lattice(CongruenceLattice& lat) {
  std::vector<std::size_t> order(lat.elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lat.elements[a].class_of < lat.elements[b].class_of;
  });
  CongruenceLattice sorted;
  sorted.enumerated_by_subsets = lat.enumerated_by_subsets;
  for (std::size_t k : order) {
    sorted.elements.push_back(lat.elements[k]);
    if (!lat.dual_subsets.empty())
      sorted.dual_subsets.push_back(lat.dual_subsets[k]);
  }
  lat = std::move(sorted);
}

CongruenceLattice all_congruences_impl(const Duality& d, int max_space_size,
                                       bool theta_mode) {
  CongruenceLattice lat;
  const std::vector<Congruence> generated =
      principal_join_closure(d, theta_mode);

  const int points = d.num_points();
  if (points > max_space_size) {
    lat.elements = generated;
    lat.enumerated_by_subsets = false;
    sort_lattice(lat);
    return lat;
  }

  lat.enumerated_by_subsets = true;
  const Mask all = d.all_points();
  for (Mask y = 0;; ++y) {
    const Mask img = d.space.union_images(y);
    const bool eligible = theta_mode ? img == y : is_subset(img, y);
    if (eligible) {
      lat.elements.push_back(theta_from_subset(d, y));
      lat.dual_subsets.push_back(y);
    }
    if (y == all) break;
  }

  // The subset map must be injective, order-reversing, and must produce
  // exactly the principal-join closure.
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.elements.size(); ++j) {
      if (lat.elements[i] == lat.elements[j])
        throw InternalError("subset-to-congruence map is not injective");
      if (is_subset(lat.dual_subsets[i], lat.dual_subsets[j]) &&
          !lat.elements[j].refines(lat.elements[i]))
        throw InternalError("subset-to-congruence map is not order-reversing");
      if (is_subset(lat.dual_subsets[j], lat.dual_subsets[i]) &&
          !lat.elements[i].refines(lat.elements[j]))
        throw InternalError("subset-to-congruence map is not order-reversing");
    }
  }
  if (generated.size() != lat.elements.size())
    throw InternalError("principal-join closure misses congruences");
  for (const auto& c : generated) {
    if (lat.index_of(c) < 0)
      throw InternalError("principal-join closure is not onto");
  }

  sort_lattice(lat);
  return lat;
}

}  // namespace

CongruenceLattice all_congruences(const Duality& d, int max_space_size) {
  return all_congruences_impl(d, max_space_size, false);
}

CongruenceLattice all_theta_congruences(const Duality& d, int max_space_size) {
  return all_congruences_impl(d, max_space_size, true);
}

Congruence meet(const Congruence& t1, const Congruence& t2) {
  if (t1.size() != t2.size())
    throw AlgebraMismatch("congruences over different carriers");
  const int m = t1.size();
  std::vector<int> labels(m);
  std::map<std::pair<int, int>, int> slot;
  for (int x = 0; x < m; ++x) {
    auto [it, inserted] =
        slot.emplace(std::pair{t1.class_of[x], t2.class_of[x]}, x);
    labels[x] = it->second;
  }
  return from_class_of(labels);
}

Congruence join(const Congruence& t1, const Congruence& t2) {
  if (t1.size() != t2.size())
    throw AlgebraMismatch("congruences over different carriers");
  UnionFind uf(t1.size());
  for (int x = 0; x < t1.size(); ++x) {
    uf.unite(x, t1.class_of[x]);
    uf.unite(x, t2.class_of[x]);
  }
  return canonicalize(uf);
}

std::optional<PrincipalWitness> is_principal(const Duality& d,
                                             const Congruence& theta) {
  const auto& lat = d.algebra.lattice;
  for (int a = 0; a < d.algebra.size(); ++a) {
    for (int b = a; b < d.algebra.size(); ++b) {
      if (!lat.leq(a, b)) continue;
      const PrincipalForms forms = principal_congruence_forms(d, a, b);
      if (forms.result != theta) continue;

      PrincipalWitness witness;
      witness.a = a;
      witness.b = b;
      witness.convex_r = d.sigma[b] & ~d.sigma[a];
      if (!is_convex(d.space.poset, witness.convex_r))
        throw InternalError("sigma(b)\\sigma(a) is not convex");
      if ((witness.convex_r | d.space.union_preimages(witness.convex_r)) !=
          forms.g_set_preimage)
        throw InternalError("convex-set description of G fails");
      for (int i = 1; i <= d.algebra.n - 1; ++i) {
        if (d.space.preimage(i, forms.g_set_preimage) != forms.g_set_preimage)
          throw InternalError("open set of a principal congruence is not modal");
      }
      return witness;
    }
  }
  return std::nullopt;
}

FilterCongruenceResult filter_congruence(const Duality& d, Mask filter) {
  const auto& alg = d.algebra;
  const auto& lat = alg.lattice;
  if (filter == 0) throw NotAFilter("filter must be nonempty");
  if (up_set(lat.poset, filter) != filter)
    throw NotAFilter("filter is not upward closed");
  bool meet_closed = true;
  for_each_bit(filter, [&](int x) {
    for_each_bit(filter, [&](int y) {
      if (!has_bit(filter, lat.mt(x, y))) meet_closed = false;
    });
  });
  if (!meet_closed) throw NotAFilter("filter is not closed under meet");

  const int m = alg.size();
  UnionFind uf(m);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      bool equalized = false;
      for_each_bit(filter, [&](int f) {
        if (lat.mt(x, f) == lat.mt(y, f)) equalized = true;
      });
      if (equalized) uf.unite(x, y);
    }
  }

  FilterCongruenceResult result;
  result.congruence = canonicalize(uf);
  result.y_filter = d.all_points();
  for_each_bit(filter, [&](int f) { result.y_filter &= d.sigma[f]; });

  result.lm_compatible =
      !congruence_violation(alg, result.congruence).has_value();

  if (is_subset(d.space.union_images(result.y_filter), result.y_filter)) {
    if (!result.lm_compatible)
      throw InternalError("filter congruence with semimodal Y_F is not LM-compatible");
    if (result.congruence != theta_from_subset(d, result.y_filter))
      throw InternalError("filter congruence differs from Theta_S(Y_F)");
  }
  return result;
}

}  // namespace lmkit
