#pragma once

#include <string>

#include "lmkit/congruence.hpp"

namespace lmkit {

/// Hasse diagram of the lattice order, bottom-up, deterministic node order.
std::string emit_dot(const LMnAlgebra& a);

/// Hasse diagram of the space order plus the f_i maps as labeled dashed
/// edges.
std::string emit_dot(const LnPSpace& x);

/// Hasse diagram of the congruence lattice ordered by refinement. Nodes are
/// labeled with their partitions.
std::string emit_dot(const CongruenceLattice& lattice, const LMnAlgebra& a);

}  // namespace lmkit
