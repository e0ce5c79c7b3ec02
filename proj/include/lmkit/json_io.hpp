#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lmkit/algebra.hpp"

namespace lmkit {

/// Parsed form of an lmkit-algebra/1 file. The format tag is mandatory at the
/// top level; product factors repeat the same structure without the tag.
/// Unknown fields are rejected.
struct AlgebraSpec {
  enum class Kind { chain, product, explicit_tables };

  Kind kind = Kind::chain;
  int n = 2;                                        // chain and explicit
  std::vector<std::string> elements;                // explicit
  std::vector<std::pair<std::string, std::string>> leq;  // explicit
  std::vector<std::vector<std::string>> phi;        // explicit, phi[i-1] by element
  std::vector<AlgebraSpec> factors;                 // product
};

/// ParseError on malformed JSON or schema violations.
AlgebraSpec parse_algebra_spec(const nlohmann::json& j);
AlgebraSpec parse_algebra_spec_text(const std::string& text);

nlohmann::json algebra_spec_to_json(const AlgebraSpec& spec);

/// Builds the algebra and validates it. Order problems, lattice failures and
/// axiom violations all surface as ValidationError with a witness.
LMnAlgebra realize(const AlgebraSpec& spec);

/// Builds without running the L1-L5 check, so that a broken explicit algebra
/// can still be inspected and reported on. Structural failures (order cycles,
/// non-lattices, bad tables) still raise ValidationError.
LMnAlgebra realize_unchecked(const AlgebraSpec& spec);

/// parse + realize.
LMnAlgebra load_algebra_text(const std::string& text);

/// The algebra spelled out as an explicit spec: elements, covering pairs of
/// the order, and the phi tables.
nlohmann::json explicit_spec_json(const LMnAlgebra& a);

}  // namespace lmkit
