#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmkit/congruence.hpp"

namespace lmkit {

/// A Boolean congruence with its dual modal subset, the Boolean element
/// generating that subset through sigma, and the complementary congruence.
struct BooleanCongruenceRecord {
  Congruence congruence;
  Mask dual_subset = 0;  // modal subset Y of X(A)
  int generator = 0;     // c in C(A) with sigma(c) = Y
  Congruence complement_congruence;
};

/// Complement of theta in Con(A) when theta is Boolean, nullopt otherwise.
/// The definitional complement search and the modal-dual-subset criterion are
/// evaluated independently; a disagreement throws InternalError. Callers that
/// already hold Con(A) can pass it to avoid recomputation.
std::optional<Congruence> is_boolean(const Duality& d, const Congruence& theta,
                                     int max_space_size = 20,
                                     const CongruenceLattice* lattice = nullptr);

/// One record per modal subset of X(A). The record count must equal |C(A)|
/// and each dual subset must be sigma of a unique Boolean element.
std::vector<BooleanCongruenceRecord> boolean_congruences(const Duality& d);

/// Theta([phi_i c)) for a Boolean element c; independent of i since
/// phi_i c = c. Throws NotBoolean when c is not a Boolean element.
Congruence boolean_from_element(const Duality& d, int c, int i);

/// theta1 o theta2 = theta2 o theta1 as relations.
bool check_permutable(const LMnAlgebra& a, const Congruence& t1,
                      const Congruence& t2);

struct UniformityReport {
  std::vector<int> class_sizes;  // one per class, in class order
  bool uniform = false;          // all classes have equal cardinality
  bool shape_ok = false;         // class of b is {(b^c) v d : d <= c'},
                                 // class of 0 is the ideal of c'
};

/// Class-size and class-shape check of the Boolean congruence generated by
/// c in C(A).
UniformityReport uniformity_report(const Duality& d, int c);

struct PrincipalBooleanResult {
  bool holds = false;
  int certificate = 0;  // /\_i (phibar_i b v phi_i a), a Boolean element
  std::string detail;   // first failed step when holds is false
};

/// Verifies, for a <= b, the equivalence chain behind "every principal
/// congruence is Boolean" in the finite setting: the open set is closed and
/// equals sigma of a single element, the filter form generates the same
/// congruence, and a complement exists in Con(A).
PrincipalBooleanResult principal_is_boolean(
    const Duality& d, int a, int b,
    const CongruenceLattice* lattice = nullptr);

}  // namespace lmkit
