#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lmkit/duality.hpp"

namespace lmkit {

/// A partition of the carrier in canonical form: class_of[x] is the least
/// element index of x's class. Canonical labels give O(1) equality, so
/// congruences can be deduplicated and compared directly. Whether a partition
/// actually is a (lattice / LM / theta) congruence is checked by free
/// functions; meet and join only need matching carrier sizes and raise
/// AlgebraMismatch otherwise.
struct Congruence {
  std::vector<int> class_of;

  int size() const { return static_cast<int>(class_of.size()); }
  bool related(int a, int b) const { return class_of[a] == class_of[b]; }
  int num_classes() const;
  std::vector<std::vector<int>> classes() const;
  Mask class_mask(int a) const;

  bool operator==(const Congruence&) const = default;

  /// theta refines other: every related pair of theta is related in other.
  bool refines(const Congruence& other) const;
};

Congruence identity_congruence(int m);
Congruence total_congruence(int m);

/// Canonicalizes arbitrary class labels.
Congruence from_class_of(const std::vector<int>& labels);

/// First failing compatibility condition (join, meet, phi_i, phi_bar_i), or
/// nullopt when theta is an LM-congruence of a.
std::optional<std::string> congruence_violation(const LMnAlgebra& a,
                                                const Congruence& theta);

/// True when (x,y) related iff (phi_i x, phi_i y) related for all i, both
/// directions.
bool is_theta_congruence(const LMnAlgebra& a, const Congruence& theta);

enum class ClosureMode { lm, theta };

/// Brute-force generation oracle: the least equivalence relation containing
/// the pairs, closed under join/meet translation by every constant, forward
/// phi_i rules (plus phi_bar_i in lm mode), and in theta mode the reflection
/// rule: relate (x,y) as soon as (phi_i x, phi_i y) is related for every i.
/// Iterates to a fixpoint.
Congruence generate_congruence_oracle(
    const LMnAlgebra& a, const std::vector<std::pair<int, int>>& pairs,
    ClosureMode mode);

/// Theta_S(Y): (a,b) related iff sigma(a) and sigma(b) agree on Y.
/// Y must be semimodal (NotSemimodal otherwise).
Congruence theta_from_subset(const Duality& d, Mask y);

/// Theta_OS(G) = {(a,b) : sigma(b) triangle sigma(a) contained in G} for open
/// G whose complement is semimodal (ComplementNotSemimodal otherwise); also
/// cross-checks the identity Theta_OS(G) = Theta_S(X \ G).
Congruence congruence_from_open(const Duality& d, Mask g);

/// The largest Y with theta contained in Theta_S(Y); for genuine congruences
/// this is the dual subset of the correspondence.
Mask dual_subset_of(const Duality& d, const Congruence& theta);

/// Every description of the principal congruence of a pair, kept separate so
/// they can be compared: the open set computed four ways, the generating
/// filter element, and the resulting congruence.
struct PrincipalForms {
  int lo = 0;
  int hi = 0;
  Mask g_set_preimage = 0;   // (sb\sa) u U_i f_i^{-1}(sb\sa)
  Mask g_set_sigma = 0;      // (sb\sa) u U_i sigma(phi_i b ^ phibar_i a)
  Mask g_modal_preimage = 0; // U_i f_i^{-1}(sb\sa)
  Mask g_modal_sigma = 0;    // sigma(V_i (phi_i b ^ phibar_i a))
  int filter_generator = 0;  // /\_i (phibar_i b v phi_i a)
  Congruence result;
};

/// Principal LM-congruence of (a,b). Incomparable pairs are reduced to
/// (a^b, avb). All forms are computed and must agree with each other and
/// with the generation oracle; a mismatch throws InternalError.
PrincipalForms principal_congruence_forms(const Duality& d, int a, int b);
Congruence principal_congruence(const Duality& d, int a, int b);

struct PrincipalThetaForms {
  int lo = 0;
  int hi = 0;
  Mask h_from_g = 0;    // X \ U_i f_i(X\G)
  Mask h_preimage = 0;  // X \ U_i f_i( /\_i f_i^{-1}(X \ (sb\sa)) )
  Mask h_sigma = 0;     // X \ U_i f_i( /\_i sigma(phi_i a v phibar_i b) )
  Congruence result;
};

/// Principal theta-congruence of (a,b); same contract as the LM version.
PrincipalThetaForms principal_theta_congruence_forms(const Duality& d, int a,
                                                     int b);
Congruence principal_theta_congruence(const Duality& d, int a, int b);

/// The full congruence lattice. When the space fits under max_space_size the
/// lattice is enumerated through semimodal (resp. theta-) subsets and
/// cross-checked against the join closure of all principal congruences;
/// beyond the cap only the principal-join generation runs.
struct CongruenceLattice {
  std::vector<Congruence> elements;  // sorted canonically
  std::vector<Mask> dual_subsets;    // aligned; empty when not enumerated
  bool enumerated_by_subsets = false;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const Congruence& theta) const;  // -1 when absent
};

CongruenceLattice all_congruences(const Duality& d, int max_space_size = 20);
CongruenceLattice all_theta_congruences(const Duality& d,
                                        int max_space_size = 20);

Congruence meet(const Congruence& t1, const Congruence& t2);
Congruence join(const Congruence& t1, const Congruence& t2);

struct PrincipalWitness {
  int a = 0;
  int b = 0;        // a <= b with principal_congruence(a,b) = theta
  Mask convex_r = 0;  // convex clopen R with G = R u U_i f_i^{-1}(R)
};

/// Scans pairs a <= b for a principal generator of theta; also exhibits the
/// convex set behind the open-set description and checks that the open set
/// is modal and clopen.
std::optional<PrincipalWitness> is_principal(const Duality& d,
                                             const Congruence& theta);

struct FilterCongruenceResult {
  Congruence congruence;     // always a lattice congruence
  bool lm_compatible = false;
  Mask y_filter = 0;         // Y_F = intersection of sigma(a), a in F
};

/// Congruence of a lattice filter: (x,y) related iff x^f = y^f for some f in
/// F. When Y_F is semimodal the result must coincide with Theta_S(Y_F) and be
/// LM-compatible; otherwise LM-compatibility is merely reported.
FilterCongruenceResult filter_congruence(const Duality& d, Mask filter);

}  // namespace lmkit
