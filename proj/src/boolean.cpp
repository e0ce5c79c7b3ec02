#include "lmkit/boolean.hpp"

#include <algorithm>

#include "lmkit/error.hpp"

namespace lmkit {

std::optional<Congruence> is_boolean(const Duality& d, const Congruence& theta,
                                     int max_space_size,
                                     const CongruenceLattice* precomputed) {
  const int m = d.algebra.size();
  CongruenceLattice computed;
  if (!precomputed) {
    computed = all_congruences(d, max_space_size);
    precomputed = &computed;
  }
  const CongruenceLattice& lattice = *precomputed;
  if (lattice.index_of(theta) < 0)
    throw InvalidInput("partition is not a congruence of this algebra");

  const Congruence delta = identity_congruence(m);
  const Congruence nabla = total_congruence(m);
  std::optional<Congruence> complement;
  for (const Congruence& psi : lattice.elements) {
    if (meet(theta, psi) == delta && join(theta, psi) == nabla) {
      complement = psi;
      break;
    }
  }

  // independent criterion: the dual subset is modal
  const Mask y = dual_subset_of(d, theta);
  bool modal = true;
  for (int i = 1; i <= d.algebra.n - 1; ++i) {
    if (d.space.preimage(i, y) != y) modal = false;
  }
  if (modal != complement.has_value())
    throw InternalError(
        "complement search and modal-dual-subset criterion disagree");
  return complement;
}

std::vector<BooleanCongruenceRecord> boolean_congruences(const Duality& d) {
  const Mask booleans = boolean_elements(d.algebra);
  const std::vector<Mask> blocks = chain_decomposition(d.space);
  const int k = static_cast<int>(blocks.size());
  if (k > 30) throw InvalidInput("too many chain blocks to enumerate");

  // Modal subsets are exactly the unions of chain blocks.
  std::vector<Mask> modal_subsets;
  for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
    Mask y = 0;
    for_each_bit(pick, [&](int j) { y |= blocks[j]; });
    modal_subsets.push_back(y);
  }
  std::sort(modal_subsets.begin(), modal_subsets.end());

  std::vector<BooleanCongruenceRecord> records;
  records.reserve(modal_subsets.size());
  for (const Mask y : modal_subsets) {
    BooleanCongruenceRecord rec;
    rec.dual_subset = y;
    rec.congruence = theta_from_subset(d, y);
    rec.complement_congruence = theta_from_subset(d, d.all_points() & ~y);

    int generator = -1;
    for_each_bit(booleans, [&](int c) {
      if (d.sigma[c] == y) generator = c;
    });
    if (generator < 0)
      throw InternalError("modal subset is not sigma of a Boolean element");
    rec.generator = generator;

    const int m = d.algebra.size();
    if (meet(rec.congruence, rec.complement_congruence) !=
        identity_congruence(m))
      throw InternalError("record complement does not meet to the identity");
    if (join(rec.congruence, rec.complement_congruence) !=
        total_congruence(m))
      throw InternalError("record complement does not join to the total congruence");
    records.push_back(std::move(rec));
  }

  if (static_cast<std::size_t>(popcount(booleans)) != records.size())
    throw InternalError("Boolean congruence count differs from |C(A)|");
  return records;
}

Congruence boolean_from_element(const Duality& d, int c, int i) {
  const Mask booleans = boolean_elements(d.algebra);
  if (!has_bit(booleans, c))
    throw NotBoolean("'" + d.algebra.name_of(c) + "' is not a Boolean element");
  if (i < 1 || i > d.algebra.n - 1) throw InvalidInput("index out of range");
  if (d.algebra.phi_at(i, c) != c)
    throw InternalError("phi_i does not fix a Boolean element");

  const FilterCongruenceResult base = filter_congruence(
      d, d.algebra.lattice.principal_filter(d.algebra.phi_at(i, c)));
  for (int j = 1; j <= d.algebra.n - 1; ++j) {
    const FilterCongruenceResult other = filter_congruence(
        d, d.algebra.lattice.principal_filter(d.algebra.phi_at(j, c)));
    if (other.congruence != base.congruence)
      throw InternalError("filter congruence depends on the index");
  }
  if (!base.lm_compatible)
    throw InternalError("Boolean filter congruence is not LM-compatible");

  // complement generated by the complementary element
  const auto cc = complement_of(d.algebra.lattice, c);
  if (!cc) throw InternalError("Boolean element without complement");
  const FilterCongruenceResult comp =
      filter_congruence(d, d.algebra.lattice.principal_filter(*cc));
  const int m = d.algebra.size();
  if (meet(base.congruence, comp.congruence) != identity_congruence(m) ||
      join(base.congruence, comp.congruence) != total_congruence(m))
    throw InternalError("filter congruence of a Boolean element is not Boolean");
  return base.congruence;
}

bool check_permutable(const LMnAlgebra& a, const Congruence& t1,
                      const Congruence& t2) {
  const int m = a.size();
  auto compose = [m](const Congruence& first, const Congruence& second) {
    // (x,z) with x first y and y second z for some y
    std::vector<Mask> reach(m, 0);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (first.related(x, y)) reach[x] |= second.class_mask(y);
      }
    }
    return reach;
  };
  return compose(t1, t2) == compose(t2, t1);
}

UniformityReport uniformity_report(const Duality& d, int c) {
  const Mask booleans = boolean_elements(d.algebra);
  if (!has_bit(booleans, c))
    throw NotBoolean("'" + d.algebra.name_of(c) + "' is not a Boolean element");
  const auto& lat = d.algebra.lattice;
  const auto cc = complement_of(lat, c);
  if (!cc) throw InternalError("Boolean element without complement");

  const Congruence theta =
      filter_congruence(d, lat.principal_filter(c)).congruence;
  UniformityReport report;
  report.shape_ok = true;
  for (int b = 0; b < d.algebra.size(); ++b) {
    Mask predicted = 0;
    for_each_bit(lat.principal_ideal(*cc), [&](int e) {
      predicted |= bit(lat.jn(lat.mt(b, c), e));
    });
    if (predicted != theta.class_mask(b)) report.shape_ok = false;
  }
  if (theta.class_mask(lat.bottom) != lat.principal_ideal(*cc))
    report.shape_ok = false;

  report.uniform = true;
  const int base_size = popcount(theta.class_mask(lat.bottom));
  for (const auto& cls : theta.classes()) {
    report.class_sizes.push_back(static_cast<int>(cls.size()));
    if (static_cast<int>(cls.size()) != base_size) report.uniform = false;
  }
  return report;
}

PrincipalBooleanResult principal_is_boolean(const Duality& d, int a, int b,
                                            const CongruenceLattice* lattice) {
  const auto& alg = d.algebra;
  const auto& lat = alg.lattice;
  PrincipalBooleanResult result;
  const int lo = lat.mt(a, b);
  const int hi = lat.jn(a, b);

  const PrincipalForms forms = principal_congruence_forms(d, lo, hi);
  const Mask g = forms.g_modal_preimage;

  // In the finite discrete topology every subset is closed; evaluate the
  // closure condition literally anyway.
  auto closure = [](Mask z) { return z; };
  if (closure(g) != g) {
    result.detail = "open set is not closed";
    return result;
  }

  Mask sigma_union = 0;
  for (int i = 1; i <= alg.n - 1; ++i) {
    sigma_union |=
        d.sigma[lat.mt(alg.phi_at(i, hi), alg.phi_bar_at(i, lo))];
  }
  if (sigma_union != g) {
    result.detail = "union of sigma(phi_i b ^ phibar_i a) differs from G";
    return result;
  }
  if (forms.g_modal_sigma != g) {
    result.detail = "sigma of the finite join differs from G";
    return result;
  }
  if (!is_subset(d.sigma[hi] & ~d.sigma[lo], g)) {
    result.detail = "sigma(b)\\sigma(a) is not contained in G";
    return result;
  }

  result.certificate = forms.filter_generator;
  if (!has_bit(boolean_elements(alg), result.certificate)) {
    result.detail = "certificate is not a Boolean element";
    return result;
  }
  if (d.sigma[result.certificate] != (d.all_points() & ~g)) {
    result.detail = "sigma(certificate) is not the complement of G";
    return result;
  }
  const Congruence via_filter =
      filter_congruence(d, lat.principal_filter(result.certificate)).congruence;
  if (via_filter != forms.result) {
    result.detail = "filter form of the certificate generates a different congruence";
    return result;
  }
  if (!is_boolean(d, forms.result, 20, lattice)) {
    result.detail = "no complement found in Con(A)";
    return result;
  }
  result.holds = true;
  return result;
}

}  // namespace lmkit
