#pragma once

#include <vector>

#include "lmkit/algebra.hpp"
#include "lmkit/space.hpp"

namespace lmkit {

/// Dual space of an algebra: prime filters ordered by inclusion, with
/// f_i(P) = phi_i^{-1}(P). Requires a valid algebra.
LnPSpace dual_space(const LMnAlgebra& a);

/// An algebra together with its dual space and the table sigma[a] =
/// {P : a in P} over space point indices. This bundle is what the congruence
/// machinery operates on.
struct Duality {
  LMnAlgebra algebra;
  LnPSpace space;
  std::vector<Mask> sigma;

  int num_points() const { return space.size(); }
  Mask all_points() const { return space.all(); }
};

Duality dualize(const LMnAlgebra& a);

/// The increasing subsets of X in the canonical (ascending mask) order used
/// as the carrier of co_dual(X).
std::vector<Mask> co_dual_carrier(const LnPSpace& x);

/// Algebra of increasing subsets: join = union, meet = intersection,
/// phi_i(U) = f_i^{-1}(U). Requires a valid space; the result always passes
/// validate_axioms.
LMnAlgebra co_dual(const LnPSpace& x);

struct RoundTripResult {
  std::vector<int> sigma_iso;    // element of A -> element of co_dual(dual_space(A))
  std::vector<int> epsilon_iso;  // point of X(A) -> point of X(co_dual(X(A)))
};

/// Verifies that sigma is an LM_n-isomorphism onto the double dual and that
/// epsilon is an order- and f_i-preserving bijection. Throws RoundTripFailure
/// naming the first unpreserved operation.
RoundTripResult round_trip(const LMnAlgebra& a);

/// Dual of a homomorphism h: A -> B, as the map X(B) -> X(A), P -> h^{-1}(P).
/// Validates h first (NotAHomomorphism with a witness), then checks that the
/// dual map is increasing and commutes with the f_i.
std::vector<int> dual_hom(const Duality& da, const Duality& db,
                          const std::vector<int>& h);

}  // namespace lmkit
