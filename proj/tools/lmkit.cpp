#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lmkit/check.hpp"
#include "lmkit/dot.hpp"
#include "lmkit/error.hpp"
#include "lmkit/json_io.hpp"

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lmkit::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_payload(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw lmkit::ParseError("cannot write '" + out_path + "'");
  out << payload;
}

std::string point_names(const lmkit::LnPSpace& space, lmkit::Mask y) {
  std::string s = "{";
  bool first = true;
  lmkit::for_each_bit(y, [&](int p) {
    if (!first) s += ",";
    s += space.poset.names[p];
    first = false;
  });
  return s + "}";
}

json space_json(const lmkit::Duality& d) {
  json j;
  j["format"] = "lmkit-space/1";
  j["n"] = d.space.n;
  j["points"] = d.space.poset.names;
  json covers = json::array();
  for (auto [x, y] : cover_pairs(d.space.poset))
    covers.push_back(json::array({x, y}));
  j["cover_leq"] = std::move(covers);
  json maps = json::object();
  for (int i = 1; i <= d.space.n - 1; ++i)
    maps["f" + std::to_string(i)] = d.space.maps[i - 1];
  j["maps"] = std::move(maps);
  json chains = json::array();
  for (const lmkit::Mask block : chain_decomposition(d.space))
    chains.push_back(point_names(d.space, block));
  j["chains"] = std::move(chains);
  json sigma = json::object();
  for (int e = 0; e < d.algebra.size(); ++e)
    sigma[d.algebra.name_of(e)] = point_names(d.space, d.sigma[e]);
  j["sigma"] = std::move(sigma);
  return j;
}

json congruence_json(const lmkit::LMnAlgebra& a, const lmkit::Congruence& c) {
  json classes = json::array();
  for (const auto& cls : c.classes()) {
    json names = json::array();
    for (int e : cls) names.push_back(a.name_of(e));
    classes.push_back(std::move(names));
  }
  return classes;
}

int cmd_validate(const std::string& path, bool as_json,
                 const std::string& out_path) {
  const lmkit::AlgebraSpec spec =
      lmkit::parse_algebra_spec_text(read_file(path));
  lmkit::ValidationReport report;
  try {
    const lmkit::LMnAlgebra a = lmkit::realize_unchecked(spec);
    report = lmkit::validate_axioms(a);
  } catch (const lmkit::ValidationError& e) {
    report.violations.push_back({"structure", e.what()});
  }
  if (as_json) {
    json j;
    j["format"] = "lmkit-validation/1";
    j["input"] = path;
    j["ok"] = report.ok();
    json violations = json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"law", v.law}, {"witness", v.witness}});
    j["violations"] = std::move(violations);
    write_payload(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << path << ": " << (report.ok() ? "valid" : "INVALID") << "\n";
    for (const auto& v : report.violations)
      os << "  " << v.law << ": " << v.witness << "\n";
    write_payload(out_path, os.str());
  }
  return report.ok() ? 0 : 1;
}

int cmd_dual(const std::string& path, bool as_json,
             const std::string& out_path) {
  const lmkit::LMnAlgebra a =
      lmkit::realize(lmkit::parse_algebra_spec_text(read_file(path)));
  const lmkit::Duality d = lmkit::dualize(a);
  if (as_json) {
    write_payload(out_path, space_json(d).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "dual space of " << path << ": " << d.num_points() << " points, n="
     << a.n << "\n";
  os << "points:";
  for (const auto& name : d.space.poset.names) os << " " << name;
  os << "\nchains:";
  for (const lmkit::Mask block : chain_decomposition(d.space))
    os << " " << point_names(d.space, block);
  os << "\n";
  for (int i = 1; i <= a.n - 1; ++i) {
    os << "f" << i << ":";
    for (int p = 0; p < d.num_points(); ++p)
      os << " " << d.space.poset.names[p] << "->"
         << d.space.poset.names[d.space.f(i, p)];
    os << "\n";
  }
  write_payload(out_path, os.str());
  return 0;
}

int cmd_con(const std::string& path, bool as_json, const std::string& out_path,
            int max_space_size) {
  const lmkit::LMnAlgebra a =
      lmkit::realize(lmkit::parse_algebra_spec_text(read_file(path)));
  const lmkit::Duality d = lmkit::dualize(a);
  const lmkit::CongruenceLattice lat =
      lmkit::all_congruences(d, max_space_size);
  if (as_json) {
    json j;
    j["format"] = "lmkit-con/1";
    j["count"] = lat.size();
    j["enumerated_by_subsets"] = lat.enumerated_by_subsets;
    json list = json::array();
    for (int k = 0; k < lat.size(); ++k) {
      json entry;
      entry["classes"] = congruence_json(a, lat.elements[k]);
      entry["num_classes"] = lat.elements[k].num_classes();
      if (!lat.dual_subsets.empty())
        entry["dual_subset"] = point_names(d.space, lat.dual_subsets[k]);
      const auto witness = lmkit::is_principal(d, lat.elements[k]);
      if (witness)
        entry["principal_witness"] =
            json::array({a.name_of(witness->a), a.name_of(witness->b)});
      entry["boolean"] =
          lmkit::is_boolean(d, lat.elements[k], max_space_size, &lat)
              .has_value();
      list.push_back(std::move(entry));
    }
    j["congruences"] = std::move(list);
    write_payload(out_path, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "congruences of " << path << ": " << lat.size() << "\n";
  for (int k = 0; k < lat.size(); ++k) {
    os << "  #" << k << " (" << lat.elements[k].num_classes() << " classes):";
    for (const auto& cls : lat.elements[k].classes()) {
      os << " {";
      for (std::size_t j = 0; j < cls.size(); ++j)
        os << (j ? " " : "") << a.name_of(cls[j]);
      os << "}";
    }
    os << "\n";
  }
  write_payload(out_path, os.str());
  return 0;
}

int cmd_boolean(const std::string& path, bool as_json,
                const std::string& out_path) {
  const lmkit::LMnAlgebra a =
      lmkit::realize(lmkit::parse_algebra_spec_text(read_file(path)));
  const lmkit::Duality d = lmkit::dualize(a);
  const auto records = lmkit::boolean_congruences(d);
  bool permutable = true;
  for (const auto& r1 : records) {
    for (const auto& r2 : records) {
      if (!lmkit::check_permutable(a, r1.congruence, r2.congruence))
        permutable = false;
    }
  }
  if (as_json) {
    json j;
    j["format"] = "lmkit-boolean/1";
    j["count"] = records.size();
    j["permutable_all_pairs"] = permutable;
    json list = json::array();
    for (const auto& rec : records) {
      const auto uniformity = lmkit::uniformity_report(d, rec.generator);
      list.push_back({{"generator", a.name_of(rec.generator)},
                      {"dual_subset", point_names(d.space, rec.dual_subset)},
                      {"classes", congruence_json(a, rec.congruence)},
                      {"class_sizes", uniformity.class_sizes},
                      {"uniform", uniformity.uniform}});
    }
    j["records"] = std::move(list);
    write_payload(out_path, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "Boolean congruences of " << path << ": " << records.size()
     << " (= |C(A)|)\n";
  for (const auto& rec : records) {
    os << "  generator " << a.name_of(rec.generator) << ", dual subset "
       << point_names(d.space, rec.dual_subset) << ", "
       << rec.congruence.num_classes() << " classes\n";
  }
  os << "all pairs permute: " << (permutable ? "yes" : "NO") << "\n";
  write_payload(out_path, os.str());
  return 0;
}

int cmd_check(const std::vector<std::string>& files, const std::string& suite,
              bool use_default_corpus, bool as_json,
              const std::string& out_path, const lmkit::CheckOptions& options) {
  std::vector<lmkit::NamedAlgebra> corpus;
  if (use_default_corpus) corpus = lmkit::default_corpus();
  std::vector<std::pair<std::string, std::string>> skipped;
  for (const auto& file : files) {
    const lmkit::AlgebraSpec spec =
        lmkit::parse_algebra_spec_text(read_file(file));
    try {
      corpus.push_back({file, lmkit::realize(spec)});
    } catch (const lmkit::ValidationError& e) {
      skipped.emplace_back(file, e.what());
    }
  }
  const lmkit::CheckReport report =
      lmkit::run_suite(corpus, suite, options, skipped);
  write_payload(out_path,
                as_json ? report.to_json().dump(2) + "\n" : report.to_text());
  if (!report.ok()) return 2;
  if (!skipped.empty()) return 1;
  return 0;
}

int cmd_dot(const std::string& path, const std::string& what,
            const std::string& out_path, int max_space_size) {
  const lmkit::LMnAlgebra a =
      lmkit::realize(lmkit::parse_algebra_spec_text(read_file(path)));
  std::string payload;
  if (what == "algebra") {
    payload = lmkit::emit_dot(a);
  } else if (what == "space") {
    payload = lmkit::emit_dot(lmkit::dual_space(a));
  } else if (what == "con") {
    const lmkit::Duality d = lmkit::dualize(a);
    payload = lmkit::emit_dot(lmkit::all_congruences(d, max_space_size), a);
  } else {
    throw lmkit::ParseError("unknown dot target '" + what + "'");
  }
  write_payload(out_path, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite n-valued Lukasiewicz-Moisil algebras: duality, "
               "congruences and theorem checks"};
  app.require_subcommand(1);

  std::string out_path;
  int max_space_size = 20;
  unsigned seed = 0;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--max-space-size", max_space_size,
                 "cap on dual-space points for subset enumeration")
      ->capture_default_str();
  app.add_option("--seed", seed,
                 "shuffle check execution order (reports stay canonical)");

  auto* gen = app.add_subcommand("gen", "generate an algebra file");
  gen->require_subcommand(1);
  gen->fallthrough();
  int gen_n = 3;
  int gen_copies = 2;
  bool gen_expand = false;
  auto* gen_chain = gen->add_subcommand("chain", "the n-element chain");
  gen_chain->add_option("-n,--n", gen_n, "number of truth values")->required();
  gen_chain->add_flag("--expand", gen_expand, "write explicit tables");
  gen_chain->fallthrough();
  auto* gen_product =
      gen->add_subcommand("product", "product of equal-n chains");
  gen_product->add_option("-n,--n", gen_n, "number of truth values")
      ->required();
  gen_product->add_option("--copies", gen_copies, "number of factors")
      ->capture_default_str();
  gen_product->add_flag("--expand", gen_expand, "write explicit tables");
  gen_product->fallthrough();

  std::string file;
  bool as_json = false;

  auto* validate =
      app.add_subcommand("validate", "check a file against the algebra laws");
  validate->add_option("file", file, "algebra file")->required();
  validate->add_flag("--json", as_json, "JSON output");
  validate->fallthrough();

  auto* dual = app.add_subcommand("dual", "dual space of an algebra");
  dual->add_option("file", file, "algebra file")->required();
  dual->add_flag("--json", as_json, "JSON output");
  dual->fallthrough();

  auto* con = app.add_subcommand("con", "congruence lattice of an algebra");
  con->add_option("file", file, "algebra file")->required();
  con->add_flag("--json", as_json, "JSON output");
  con->fallthrough();

  auto* boolean =
      app.add_subcommand("boolean", "Boolean congruences of an algebra");
  boolean->add_option("file", file, "algebra file")->required();
  boolean->add_flag("--json", as_json, "JSON output");
  boolean->fallthrough();

  auto* check = app.add_subcommand("check", "run the theorem suite");
  std::vector<std::string> check_files;
  std::string suite = "all";
  bool no_default_corpus = false;
  check->add_option("files", check_files, "extra algebra files");
  check->add_option("--suite", suite, "all, duality, principal or boolean")
      ->capture_default_str();
  check->add_flag("--no-default-corpus", no_default_corpus,
                  "only check the given files");
  check->add_flag("--json", as_json, "JSON report");
  check->fallthrough();

  auto* dot = app.add_subcommand("dot", "Graphviz output");
  std::string what = "algebra";
  dot->add_option("file", file, "algebra file")->required();
  dot->add_option("--what", what, "algebra, space or con")
      ->capture_default_str();
  dot->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      lmkit::AlgebraSpec spec;
      if (gen_chain->parsed()) {
        spec.kind = lmkit::AlgebraSpec::Kind::chain;
        spec.n = gen_n;
      } else {
        spec.kind = lmkit::AlgebraSpec::Kind::product;
        lmkit::AlgebraSpec factor;
        factor.kind = lmkit::AlgebraSpec::Kind::chain;
        factor.n = gen_n;
        spec.factors.assign(gen_copies, factor);
      }
      const lmkit::LMnAlgebra algebra = lmkit::realize(spec);
      const nlohmann::json payload = gen_expand
                                         ? lmkit::explicit_spec_json(algebra)
                                         : lmkit::algebra_spec_to_json(spec);
      write_payload(out_path, payload.dump(2) + "\n");
      return 0;
    }
    if (validate->parsed()) return cmd_validate(file, as_json, out_path);
    if (dual->parsed()) return cmd_dual(file, as_json, out_path);
    if (con->parsed()) return cmd_con(file, as_json, out_path, max_space_size);
    if (boolean->parsed()) return cmd_boolean(file, as_json, out_path);
    if (check->parsed()) {
      if (!lmkit::known_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 3;
      }
      lmkit::CheckOptions options;
      options.max_space_size = max_space_size;
      options.seed = seed;
      return cmd_check(check_files, suite, !no_default_corpus, as_json,
                       out_path, options);
    }
    if (dot->parsed()) return cmd_dot(file, what, out_path, max_space_size);
  } catch (const lmkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lmkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lmkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
