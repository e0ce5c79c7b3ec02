// Acceptance suite: runs every contract of the library over the full default
// corpus (chains n = 2..5, their squares up to 25 elements, and the
// hand-written LM_3 algebras) and prints one line per criterion. All
// comparisons are exact; the whole run is expected to stay under 60 seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "lmkit/boolean.hpp"
#include "lmkit/check.hpp"
#include "lmkit/error.hpp"

using namespace lmkit;

namespace {

struct Criterion {
  std::string title;
  std::function<void(std::vector<std::string>&)> run;
};

struct Prepared {
  std::string name;
  Duality duality;
  CongruenceLattice con;
};

std::vector<Prepared> prepared_corpus() {
  std::vector<Prepared> out;
  for (const auto& entry : default_corpus()) {
    Prepared p;
    p.name = entry.name;
    p.duality = dualize(entry.algebra);
    p.con = all_congruences(p.duality);
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<Prepared>& corpus() {
  static const std::vector<Prepared> instance = prepared_corpus();
  return instance;
}

std::vector<std::pair<int, int>> comparable_pairs(const LMnAlgebra& a) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = x; y < a.size(); ++y) {
      if (a.lattice.leq(x, y)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::vector<Congruence> distinct_principals(const Duality& d, bool theta) {
  std::vector<Congruence> out;
  for (auto [a, b] : comparable_pairs(d.algebra)) {
    Congruence c = theta ? principal_theta_congruence(d, a, b)
                         : principal_congruence(d, a, b);
    if (std::find(out.begin(), out.end(), c) == out.end())
      out.push_back(std::move(c));
  }
  return out;
}

void criterion_round_trip(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    round_trip(inst.duality.algebra);
    if (static_cast<int>(co_dual_carrier(inst.duality.space).size()) !=
        inst.duality.algebra.size())
      failures.push_back(inst.name + ": |D(X(A))| != |A|");
  }
}

void criterion_space_axioms(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    const ValidationReport report = validate_space(inst.duality.space);
    if (!report.ok())
      failures.push_back(inst.name + ": " + report.violations.front().law);
    Mask covered = 0;
    for (const Mask block : chain_decomposition(inst.duality.space)) {
      if (popcount(block) > inst.duality.algebra.n - 1)
        failures.push_back(inst.name + ": chain block too large");
      if (covered & block)
        failures.push_back(inst.name + ": chain blocks overlap");
      covered |= block;
    }
    if (covered != inst.duality.all_points())
      failures.push_back(inst.name + ": chain blocks do not partition X");
  }
}

void criterion_correspondence(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    if (inst.duality.num_points() > 20) continue;
    if (!inst.con.enumerated_by_subsets) {
      failures.push_back(inst.name + ": subset enumeration did not run");
      continue;
    }
    // independent principal-join generation
    std::vector<Congruence> generated = {
        identity_congruence(inst.duality.algebra.size())};
    for (auto [a, b] : comparable_pairs(inst.duality.algebra)) {
      const Congruence c = principal_congruence(inst.duality, a, b);
      if (std::find(generated.begin(), generated.end(), c) == generated.end())
        generated.push_back(c);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      const std::size_t count = generated.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
          Congruence joined = join(generated[i], generated[j]);
          if (std::find(generated.begin(), generated.end(), joined) ==
              generated.end()) {
            generated.push_back(std::move(joined));
            grew = true;
          }
        }
      }
    }
    if (generated.size() != inst.con.elements.size()) {
      failures.push_back(inst.name + ": join closure size differs");
      continue;
    }
    for (const auto& c : generated) {
      if (inst.con.index_of(c) < 0)
        failures.push_back(inst.name + ": generated congruence missing");
    }
    // order reversal over the enumerated subsets
    for (std::size_t i = 0; i < inst.con.dual_subsets.size(); ++i) {
      for (std::size_t j = 0; j < inst.con.dual_subsets.size(); ++j) {
        if (is_subset(inst.con.dual_subsets[i], inst.con.dual_subsets[j]) &&
            !inst.con.elements[j].refines(inst.con.elements[i]))
          failures.push_back(inst.name + ": correspondence not order-reversing");
      }
    }
  }
}

void criterion_principal_forms(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    const int m = inst.duality.algebra.size();
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const PrincipalForms forms =
            principal_congruence_forms(inst.duality, a, b);
        if (forms.result != generate_congruence_oracle(
                                inst.duality.algebra, {{forms.lo, forms.hi}},
                                ClosureMode::lm))
          failures.push_back(inst.name + ": LM forms disagree with oracle");
        const PrincipalThetaForms theta =
            principal_theta_congruence_forms(inst.duality, a, b);
        if (theta.result != generate_congruence_oracle(
                                inst.duality.algebra, {{theta.lo, theta.hi}},
                                ClosureMode::theta))
          failures.push_back(inst.name + ": theta forms disagree with oracle");
      }
    }
  }
}

void criterion_intersections(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    for (const bool theta : {false, true}) {
      const auto principals = distinct_principals(inst.duality, theta);
      for (const auto& c1 : principals) {
        for (const auto& c2 : principals) {
          const Congruence intersection = meet(c1, c2);
          const auto witness = is_principal(inst.duality, intersection);
          if (!witness) {
            failures.push_back(inst.name + ": intersection not principal");
            continue;
          }
          if (theta && principal_theta_congruence(inst.duality, witness->a,
                                                  witness->b) != intersection)
            failures.push_back(inst.name +
                               ": theta witness generates something else");
        }
      }
    }
  }
}

void criterion_boolean_theory(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    const auto records = boolean_congruences(inst.duality);
    const Mask booleans = boolean_elements(inst.duality.algebra);
    if (static_cast<int>(records.size()) != popcount(booleans))
      failures.push_back(inst.name + ": |Con_b| != |C(A)|");
    for (const auto& rec : records) {
      if (!is_boolean(inst.duality, rec.congruence, 20, &inst.con))
        failures.push_back(inst.name + ": record not Boolean by complement search");
      for (int i = 1; i <= inst.duality.algebra.n - 1; ++i) {
        if (boolean_from_element(inst.duality, rec.generator, i) !=
            rec.congruence)
          failures.push_back(inst.name + ": filter form disagrees");
      }
      if (!is_principal(inst.duality, rec.congruence))
        failures.push_back(inst.name + ": Boolean congruence not principal");
      bool theta_witness = false;
      for (auto [a, b] : comparable_pairs(inst.duality.algebra)) {
        if (principal_theta_congruence(inst.duality, a, b) == rec.congruence) {
          theta_witness = true;
          break;
        }
      }
      if (!theta_witness)
        failures.push_back(inst.name + ": Boolean congruence not theta-principal");
      const UniformityReport uniformity =
          uniformity_report(inst.duality, rec.generator);
      if (!uniformity.uniform)
        failures.push_back(inst.name + ": classes not uniform");
      if (!uniformity.shape_ok)
        failures.push_back(inst.name + ": class-shape formula fails");
    }
    for (const auto& r1 : records) {
      for (const auto& r2 : records) {
        if (!check_permutable(inst.duality.algebra, r1.congruence,
                              r2.congruence))
          failures.push_back(inst.name + ": Boolean congruences do not permute");
      }
    }
  }
}

void criterion_lmn_coincidence(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    std::vector<Congruence> principals = distinct_principals(inst.duality, false);
    std::vector<Congruence> booleans;
    for (const auto& rec : boolean_congruences(inst.duality))
      booleans.push_back(rec.congruence);
    auto by_classes = [](const Congruence& x, const Congruence& y) {
      return x.class_of < y.class_of;
    };
    std::sort(principals.begin(), principals.end(), by_classes);
    std::sort(booleans.begin(), booleans.end(), by_classes);
    if (principals != booleans)
      failures.push_back(inst.name +
                         ": principal and Boolean congruences differ");
  }
}

void criterion_simplicity(std::vector<std::string>& failures) {
  for (const auto& inst : corpus()) {
    const int m = inst.duality.algebra.size();
    if (inst.name.rfind("chain-", 0) == 0) {
      if (inst.con.size() != 2 ||
          inst.con.index_of(identity_congruence(m)) < 0 ||
          inst.con.index_of(total_congruence(m)) < 0)
        failures.push_back(inst.name + ": chain is not simple");
    }
    if (inst.name == "product-3-3" && inst.con.size() != 4)
      failures.push_back(inst.name + ": expected exactly 4 congruences");
  }
}

void criterion_vacuity(std::vector<std::string>& failures) {
  const auto closure = [](Mask z) { return z; };
  for (const auto& inst : corpus()) {
    const Duality& d = inst.duality;
    if (d.num_points() <= 12) {
      for (Mask s = 0;; ++s) {
        for (Mask sub = (s - 1) & s;; sub = (sub - 1) & s) {
          if (sub != s && (closure(sub) & s) == s)
            failures.push_back(inst.name + ": proper dense subset exists");
          if (sub == 0) break;
        }
        if (s == d.all_points()) break;
      }
    }
    for (auto [a1, b1] : comparable_pairs(d.algebra)) {
      for (auto [a2, b2] : comparable_pairs(d.algebra)) {
        const Mask r1 = d.sigma[b1] & ~d.sigma[a1];
        const Mask r2 = d.sigma[b2] & ~d.sigma[a2];
        const Mask s = r1 & ~(r2 | d.space.union_preimages(r1));
        const Mask t = s & d.space.union_preimages(r2);
        const bool proper = t != s;
        const bool dense = (closure(t) & s) == s;
        if (proper && dense)
          failures.push_back(inst.name + ": hypothesis satisfiable");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"duality round trip: sigma and epsilon isomorphisms, |D(X(A))| = |A|",
       criterion_round_trip},
      {"space axioms and chain decomposition on every dual space",
       criterion_space_axioms},
      {"semimodal subsets <-> congruences, against principal-join generation",
       criterion_correspondence},
      {"principal formulas (set, sigma, modal, filter) match the oracle",
       criterion_principal_forms},
      {"intersections of principal congruences stay principal",
       criterion_intersections},
      {"Boolean theory: counts, filter forms, principality, permutability, "
       "uniformity",
       criterion_boolean_theory},
      {"principal and Boolean congruences coincide", criterion_lmn_coincidence},
      {"simplicity spot checks", criterion_simplicity},
      {"non-principality hypothesis is vacuous on finite discrete spaces",
       criterion_vacuity},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::vector<std::string> failures;
    try {
      criteria[k].run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    if (failures.empty()) {
      std::cout << "[PASS] criterion " << k + 1 << ": " << criteria[k].title
                << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] criterion " << k + 1 << ": " << criteria[k].title
                << "\n";
      for (const auto& f : failures) std::cout << "       " << f << "\n";
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << "total: " << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed in " << elapsed << "s\n";
  if (elapsed > 60.0) {
    std::cout << "[FAIL] runtime exceeded 60 seconds\n";
    ++failed;
  }
  return failed == 0 ? 0 : 1;
}
