#include "lmkit/json_io.hpp"

#include <algorithm>
#include <functional>

#include "lmkit/error.hpp"

namespace lmkit {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::vector<std::string> allowed,
                  const char* where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError(std::string("unknown field '") + key + "' in " + where);
  }
}

int read_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field 'n'");
  return j["n"].get<int>();
}

AlgebraSpec parse_spec_object(const json& j, bool top_level) {
  if (!j.is_object()) throw ParseError("algebra spec must be an object");
  if (top_level) {
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != "lmkit-algebra/1")
      throw ParseError("missing or unsupported format tag; expected \"lmkit-algebra/1\"");
  } else if (j.contains("format")) {
    throw ParseError("format tag is only allowed at the top level");
  }
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("missing string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();

  AlgebraSpec spec;
  std::vector<std::string> allowed = {"kind"};
  if (top_level) allowed.push_back("format");

  if (kind == "chain") {
    spec.kind = AlgebraSpec::Kind::chain;
    allowed.push_back("n");
    require_keys(j, allowed, "chain spec");
    spec.n = read_n(j);
  } else if (kind == "product") {
    spec.kind = AlgebraSpec::Kind::product;
    allowed.push_back("factors");
    require_keys(j, allowed, "product spec");
    if (!j.contains("factors") || !j["factors"].is_array() ||
        j["factors"].empty())
      throw ParseError("product spec needs a nonempty 'factors' array");
    for (const auto& f : j["factors"])
      spec.factors.push_back(parse_spec_object(f, false));
  } else if (kind == "explicit") {
    spec.kind = AlgebraSpec::Kind::explicit_tables;
    allowed.insert(allowed.end(), {"n", "elements", "leq", "phi"});
    require_keys(j, allowed, "explicit spec");
    spec.n = read_n(j);
    if (!j.contains("elements") || !j["elements"].is_array())
      throw ParseError("explicit spec needs an 'elements' array");
    for (const auto& e : j["elements"]) {
      if (!e.is_string()) throw ParseError("element names must be strings");
      spec.elements.push_back(e.get<std::string>());
    }
    if (!j.contains("leq") || !j["leq"].is_array())
      throw ParseError("explicit spec needs a 'leq' array of pairs");
    for (const auto& pair : j["leq"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        throw ParseError("'leq' entries must be [name, name] pairs");
      spec.leq.emplace_back(pair[0].get<std::string>(),
                            pair[1].get<std::string>());
    }
    if (!j.contains("phi") || !j["phi"].is_object())
      throw ParseError("explicit spec needs a 'phi' object");
    spec.phi.assign(spec.n - 1, {});
    for (int i = 1; i <= spec.n - 1; ++i) {
      const std::string key = std::to_string(i);
      if (!j["phi"].contains(key) || !j["phi"][key].is_object())
        throw ParseError("'phi' needs a table for index " + key);
      const json& table = j["phi"][key];
      for (const auto& name : spec.elements) {
        if (!table.contains(name) || !table[name].is_string())
          throw ParseError("phi table " + key + " misses element '" + name +
                           "'");
        spec.phi[i - 1].push_back(table[name].get<std::string>());
      }
      if (table.size() != spec.elements.size())
        throw ParseError("phi table " + key + " has extra entries");
    }
    for (const auto& [key, value] : j["phi"].items()) {
      (void)value;
      bool good = false;
      for (int i = 1; i <= spec.n - 1; ++i) {
        if (key == std::to_string(i)) good = true;
      }
      if (!good)
        throw ParseError("phi table key '" + key +
                         "' is not an index 1..n-1");
    }
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  return spec;
}

}  // namespace

AlgebraSpec parse_algebra_spec(const nlohmann::json& j) {
  return parse_spec_object(j, true);
}

AlgebraSpec parse_algebra_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_spec(j);
}

nlohmann::json algebra_spec_to_json(const AlgebraSpec& spec) {
  std::function<json(const AlgebraSpec&, bool)> render =
      [&](const AlgebraSpec& s, bool top) {
        json j;
        if (top) j["format"] = "lmkit-algebra/1";
        switch (s.kind) {
          case AlgebraSpec::Kind::chain:
            j["kind"] = "chain";
            j["n"] = s.n;
            break;
          case AlgebraSpec::Kind::product: {
            j["kind"] = "product";
            json factors = json::array();
            for (const auto& f : s.factors) factors.push_back(render(f, false));
            j["factors"] = std::move(factors);
            break;
          }
          case AlgebraSpec::Kind::explicit_tables: {
            j["kind"] = "explicit";
            j["n"] = s.n;
            j["elements"] = s.elements;
            json leq = json::array();
            for (const auto& [a, b] : s.leq)
              leq.push_back(json::array({a, b}));
            j["leq"] = std::move(leq);
            json phi = json::object();
            for (int i = 1; i <= s.n - 1; ++i) {
              json table = json::object();
              for (std::size_t e = 0; e < s.elements.size(); ++e)
                table[s.elements[e]] = s.phi[i - 1][e];
              phi[std::to_string(i)] = std::move(table);
            }
            j["phi"] = std::move(phi);
            break;
          }
        }
        return j;
      };
  return render(spec, true);
}

LMnAlgebra realize_unchecked(const AlgebraSpec& spec) {
  try {
    switch (spec.kind) {
      case AlgebraSpec::Kind::chain:
        return make_chain(spec.n);
      case AlgebraSpec::Kind::product: {
        LMnAlgebra acc = realize_unchecked(spec.factors.front());
        for (std::size_t k = 1; k < spec.factors.size(); ++k)
          acc = make_product(acc, realize_unchecked(spec.factors[k]));
        return acc;
      }
      case AlgebraSpec::Kind::explicit_tables: {
        const Poset poset = build_poset(spec.elements, spec.leq);
        DistLattice lat = lattice_from_poset(poset);
        std::vector<std::vector<int>> phi(spec.n - 1);
        for (int i = 1; i <= spec.n - 1; ++i) {
          for (const auto& target : spec.phi[i - 1])
            phi[i - 1].push_back(poset.index_of(target));
        }
        return make_algebra(std::move(lat), spec.n, std::move(phi));
      }
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  throw InternalError("unreachable spec kind");
}

LMnAlgebra realize(const AlgebraSpec& spec) {
  LMnAlgebra a = realize_unchecked(spec);
  const ValidationReport report = validate_axioms(a);
  if (!report.ok())
    throw ValidationError("algebra violates " + report.violations.front().law +
                          ": " + report.violations.front().witness);
  return a;
}

LMnAlgebra load_algebra_text(const std::string& text) {
  return realize(parse_algebra_spec_text(text));
}

nlohmann::json explicit_spec_json(const LMnAlgebra& a) {
  AlgebraSpec spec;
  spec.kind = AlgebraSpec::Kind::explicit_tables;
  spec.n = a.n;
  spec.elements = a.lattice.poset.names;
  for (auto [x, y] : cover_pairs(a.lattice.poset))
    spec.leq.emplace_back(a.name_of(x), a.name_of(y));
  spec.phi.assign(a.n - 1, {});
  for (int i = 1; i <= a.n - 1; ++i) {
    for (int x = 0; x < a.size(); ++x)
      spec.phi[i - 1].push_back(a.name_of(a.phi_at(i, x)));
  }
  return algebra_spec_to_json(spec);
}

}  // namespace lmkit
