#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lmkit/boolean.hpp"

namespace lmkit {

struct NamedAlgebra {
  std::string name;
  LMnAlgebra algebra;
};

/// Chains n = 2..5, their squares up to 25 elements, and two hand-written
/// LM_3 algebras (the two-element chain carrying identity operations, and its
/// product with the three-element chain).
std::vector<NamedAlgebra> default_corpus();

struct CheckOptions {
  int max_space_size = 20;
  unsigned seed = 0;  // shuffles execution order; reports stay canonical
};

struct CheckFailure {
  std::string instance;
  std::string witness;
};

struct CheckResult {
  std::string id;
  std::string statement;
  std::vector<std::string> suites;
  int instances = 0;
  std::vector<CheckFailure> failures;
  double elapsed_ms = 0.0;

  bool ok() const { return failures.empty(); }
};

struct CheckReport {
  std::string suite;
  std::vector<std::string> corpus;
  std::vector<std::pair<std::string, std::string>> skipped;  // input, error
  std::vector<CheckResult> checks;

  bool ok() const;
  int failed_checks() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Prepared per-corpus-entry state shared by the checks.
struct CheckInstance {
  std::string name;
  LMnAlgebra algebra;
  std::optional<Duality> duality;       // absent when dualization failed
  std::optional<CongruenceLattice> con; // Con(A), when computable
  std::string preparation_error;
};

struct CheckDef {
  std::string id;
  std::string statement;
  std::vector<std::string> suites;
  /// Returns false when the check does not apply to this instance; failures
  /// are appended with witnesses.
  std::function<bool(const CheckInstance&, const CheckOptions&,
                     std::vector<CheckFailure>&)>
      run;
};

/// All registered theorem checks, in canonical order.
const std::vector<CheckDef>& check_registry();

bool known_suite(const std::string& suite);

/// Runs every check of the suite ("all", "duality", "principal", "boolean")
/// over the corpus. Skipped inputs are carried into the report verbatim.
CheckReport run_suite(
    const std::vector<NamedAlgebra>& corpus, const std::string& suite,
    const CheckOptions& options = {},
    const std::vector<std::pair<std::string, std::string>>& skipped = {});

}  // namespace lmkit
