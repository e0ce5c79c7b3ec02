#include <string>

#include "doctest.h"
#include "lmkit/dot.hpp"
#include "lmkit/error.hpp"
#include "lmkit/json_io.hpp"

using namespace lmkit;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

const char* kExplicitC3 = R"({
  "format": "lmkit-algebra/1",
  "kind": "explicit",
  "n": 3,
  "elements": ["0", "e", "1"],
  "leq": [["0", "e"], ["e", "1"]],
  "phi": {
    "1": {"0": "0", "e": "0", "1": "1"},
    "2": {"0": "0", "e": "1", "1": "1"}
  }
})";

const char* kSwappedC3 = R"({
  "format": "lmkit-algebra/1",
  "kind": "explicit",
  "n": 3,
  "elements": ["0", "e", "1"],
  "leq": [["0", "e"], ["e", "1"]],
  "phi": {
    "1": {"0": "0", "e": "1", "1": "1"},
    "2": {"0": "0", "e": "0", "1": "1"}
  }
})";

}  // namespace

TEST_CASE("parse generator specs") {
  const LMnAlgebra c3 =
      load_algebra_text(R"({"format":"lmkit-algebra/1","kind":"chain","n":3})");
  CHECK(c3.size() == 3);
  CHECK(c3.n == 3);

  const LMnAlgebra sq = load_algebra_text(
      R"({"format":"lmkit-algebra/1","kind":"product",
          "factors":[{"kind":"chain","n":3},{"kind":"chain","n":3}]})");
  CHECK(sq.size() == 9);
  CHECK(validate_axioms(sq).ok());
}

TEST_CASE("parse explicit spec") {
  const LMnAlgebra a = load_algebra_text(kExplicitC3);
  CHECK(a.size() == 3);
  CHECK(a.name_of(1) == "e");
  CHECK(validate_axioms(a).ok());
  CHECK(boolean_elements(a) == (bit(0) | bit(2)));
}

TEST_CASE("schema strictness") {
  CHECK_THROWS_AS(load_algebra_text("not json at all"), ParseError);
  CHECK_THROWS_AS(load_algebra_text(R"({"kind":"chain","n":3})"), ParseError);
  CHECK_THROWS_AS(
      load_algebra_text(R"({"format":"lmkit-algebra/2","kind":"chain","n":3})"),
      ParseError);
  CHECK_THROWS_AS(
      load_algebra_text(
          R"({"format":"lmkit-algebra/1","kind":"chain","n":3,"extra":1})"),
      ParseError);
  CHECK_THROWS_AS(
      load_algebra_text(R"({"format":"lmkit-algebra/1","kind":"frobnicate"})"),
      ParseError);
  // nested format tags are rejected
  CHECK_THROWS_AS(load_algebra_text(
                      R"({"format":"lmkit-algebra/1","kind":"product",
              "factors":[{"format":"lmkit-algebra/1","kind":"chain","n":3}]})"),
                  ParseError);
}

TEST_CASE("axiom violations in files surface as ValidationError") {
  CHECK_THROWS_AS(load_algebra_text(kSwappedC3), ValidationError);
  try {
    load_algebra_text(kSwappedC3);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("L4") != std::string::npos);
  }
  // order cycle
  CHECK_THROWS_AS(load_algebra_text(
                      R"({"format":"lmkit-algebra/1","kind":"explicit","n":2,
              "elements":["a","b"],"leq":[["a","b"],["b","a"]],
              "phi":{"1":{"a":"a","b":"b"}}})"),
                  ValidationError);
}

TEST_CASE("explicit emission round-trips") {
  const LMnAlgebra sq = make_product(make_chain(3), make_chain(2 + 1));
  const nlohmann::json j = explicit_spec_json(sq);
  const LMnAlgebra back = load_algebra_text(j.dump());
  CHECK(back.size() == sq.size());
  CHECK(back.lattice.poset.names == sq.lattice.poset.names);
  CHECK(back.phi == sq.phi);
}

TEST_CASE("dot output for an algebra") {
  const std::string dot = emit_dot(make_chain(3));
  CHECK(count_occurrences(dot, "label=") == 3);
  CHECK(count_occurrences(dot, " -> ") == 2);
  CHECK(dot == emit_dot(make_chain(3)));  // byte-identical
}

TEST_CASE("dot output for a space") {
  const std::string dot = emit_dot(dual_space(make_chain(3)));
  CHECK(count_occurrences(dot, "style=dashed") == 4);  // two maps, two points
  CHECK(count_occurrences(dot, " -> n") >= 5);
}

TEST_CASE("dot output for the congruence lattice of the square") {
  const Duality d = dualize(make_product(make_chain(3), make_chain(3)));
  const std::string dot = emit_dot(all_congruences(d), d.algebra);
  CHECK(count_occurrences(dot, "label=") == 4);
  // a diamond has four covering edges
  CHECK(count_occurrences(dot, " -> ") == 4);
}
