#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmkit/lattice.hpp"

namespace lmkit {

/// One law violation, with a human-readable witness tuple.
struct Violation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(const std::string& law) const;
  std::string to_string() const;
};

/// Finite n-valued Lukasiewicz-Moisil algebra: a bounded distributive lattice
/// with unary operations phi_1..phi_{n-1}. The complementary operations
/// phi_bar_i are never taken from input; they are derived as lattice
/// complements of phi_i x (and can be absent only on broken structures).
struct LMnAlgebra {
  DistLattice lattice;
  int n = 2;                              // index set I = {1..n-1}
  std::vector<std::vector<int>> phi;      // phi[i-1][x]
  std::vector<std::vector<std::optional<int>>> phi_bar;  // derived

  int size() const { return lattice.size(); }
  int bottom() const { return lattice.bottom; }
  int top() const { return lattice.top; }
  int phi_at(int i, int x) const { return phi[i - 1][x]; }
  bool phi_bar_defined(int i, int x) const {
    return phi_bar[i - 1][x].has_value();
  }
  int phi_bar_at(int i, int x) const;  // InternalError when undefined
  const std::string& name_of(int x) const { return lattice.name_of(x); }
  int index_of(const std::string& name) const {
    return lattice.poset.index_of(name);
  }
};

/// The unique y with x v y = 1 and x ^ y = 0, when it exists.
std::optional<int> complement_of(const DistLattice& lat, int x);

/// Assembles an algebra and derives phi_bar. Performs structural checks only
/// (sizes, ranges, 0 != 1); laws L1-L5 are checked by validate_axioms so that
/// intentionally broken algebras can still be constructed and inspected.
LMnAlgebra make_algebra(DistLattice lattice, int n,
                        std::vector<std::vector<int>> phi);

/// Checks L1-L5; one report entry per violated law with the first witness.
ValidationReport validate_axioms(const LMnAlgebra& a);

/// Boolean (complemented) elements C(A). The four equivalent descriptions of
/// a Boolean element are evaluated independently; any disagreement throws
/// L6EquivalenceFailure, which signals a broken algebra.
Mask boolean_elements(const LMnAlgebra& a);

/// The n-element chain 0 < 1/(n-1) < ... < 1 with
/// phi_i(j/(n-1)) = 1 if i + j >= n else 0.
LMnAlgebra make_chain(int n);

/// Componentwise product; both factors must share n.
LMnAlgebra make_product(const LMnAlgebra& a, const LMnAlgebra& b);

/// First failing preservation condition of a candidate homomorphism h: A -> B
/// (0, 1, join, meet, each phi_i), or nullopt when h is a homomorphism.
std::optional<std::string> hom_violation(const LMnAlgebra& a,
                                         const LMnAlgebra& b,
                                         const std::vector<int>& h);

}  // namespace lmkit
