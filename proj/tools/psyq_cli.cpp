/* Copyright 2026 The psyq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// psyq: validate psyquandles and weight pairs, compute invariants, search cocycles.
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "psyq/errors.hpp"
#include "psyq/invariants.hpp"
#include "psyq/suite.hpp"

namespace {

using namespace psyq;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string with_file(const std::string& path, const ParseError& e) {
  return path + ": " + e.what();
}

OperationTables load_tables(const std::string& path) {
  try {
    return parse_operation_tables(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(with_file(path, e));
  }
}

WeightPair load_weights(const std::string& path) {
  try {
    return parse_weight_pair(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(with_file(path, e));
  }
}

DiagramCode load_diagram(const std::string& path) {
  try {
    return parse_diagram(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(with_file(path, e));
  }
}

struct ValidateArgs {
  std::string psyquandle;
  std::string weights;
  bool require_pI = false;
  bool require_strong = false;
};

int cmd_validate(const ValidateArgs& a) {
  const OperationTables tables = load_tables(a.psyquandle);
  std::optional<WeightPair> w;
  if (!a.weights.empty()) w = load_weights(a.weights);

  const AxiomReport r = check_axioms(tables);
  std::cout << "psyquandle: order " << tables.order() << ", fingerprint " << fingerprint(tables) << "\n";
  for (const auto& v : r.violations) std::cout << "  " << describe(v) << "\n";
  if (!r.valid) {
    std::cout << "not a psyquandle\n";
    return kDomainFailure;
  }
  std::cout << (r.pI_adequate ? "valid psyquandle, pI-adequate\n" : "valid psyquandle, not pI-adequate\n");
  bool ok = !a.require_pI || r.pI_adequate;
  if (!w) return ok ? kOk : kDomainFailure;

  const WeightReport wr = validate_weight_pair(Psyquandle(tables), *w);
  std::cout << "weights: mod " << w->modulus() << "\n";
  for (const auto& v : wr.violations) std::cout << "  " << describe(v) << "\n";
  std::cout << (wr.satisfies_core ? "core conditions hold\n" : "core conditions fail\n");
  std::cout << (wr.pI_adequate ? "pI-adequate pair\n" : "pair not pI-adequate\n");
  std::cout << (wr.strongly_compatible ? "strongly compatible\n" : "not strongly compatible\n");
  ok = ok && wr.satisfies_core && (!a.require_pI || wr.pI_adequate) &&
       (!a.require_strong || wr.strongly_compatible);
  return ok ? kOk : kDomainFailure;
}

struct InvariantArgs {
  std::string catalog_name;
  std::string diagram_file;
  std::string psyquandle;
  std::string weights;
  bool two_variable = false;
  bool pseudoknot = false;
  bool json = false;
};

int cmd_invariant(const InvariantArgs& a) {
  if (a.catalog_name.empty() == a.diagram_file.empty())
    throw CLI::ValidationError("give exactly one of --catalog and --diagram");
  if (a.json && a.weights.empty()) throw CLI::ValidationError("--json needs --weights");
  const DiagramCode d = a.catalog_name.empty() ? load_diagram(a.diagram_file) : catalog(a.catalog_name);
  const std::string name = a.catalog_name.empty() ? a.diagram_file : a.catalog_name;
  const OperationTables tables = load_tables(a.psyquandle);
  std::optional<WeightPair> w;
  if (!a.weights.empty()) w = load_weights(a.weights);
  const Psyquandle x(tables);

  if (a.pseudoknot && !x.pI_adequate()) throw AdequacyError("psyquandle is not pI-adequate");
  const std::uint64_t count = counting_invariant(d, x);
  if (!w) {
    std::cout << "Φ = " << count << "\n";
    return kOk;
  }
  const auto mode = a.two_variable ? PolynomialMode::TwoVariable : PolynomialMode::SingleVariable;
  const auto interp = a.pseudoknot ? Interpretation::Pseudoknot : Interpretation::SingularLink;
  const WeightPolynomial p = enhanced_polynomial(d, x, *w, mode, interp);
  if (a.json) {
    std::cout << to_json(InvariantResult{name, fingerprint(tables), count, p}) << "\n";
  } else {
    std::cout << "Φ = " << count << ", polynomial = " << polynomial_to_string(p) << "\n";
  }
  return kOk;
}

struct CocycleArgs {
  std::string psyquandle;
  Residue modulus = 2;
  bool require_pI = false;
  bool require_strong = false;
};

int cmd_cocycles(const CocycleArgs& a) {
  if (a.modulus < 2) throw CLI::ValidationError("--mod must be at least 2");
  const Psyquandle x(load_tables(a.psyquandle));
  const WeightSpace space = weight_solution_space(x, a.modulus, {a.require_pI, a.require_strong});
  std::cout << "# count " << space.count.str() << "\n";
  std::cout << "# zero pair\n" << serialize_weight_pair(WeightPair(ResidueTable(x.order(), a.modulus),
                                                                    ResidueTable(x.order(), a.modulus)));
  for (std::size_t i = 0; i < space.generators.size(); ++i)
    std::cout << "\n# generator " << i + 1 << "\n" << serialize_weight_pair(space.generators[i]);
  return kOk;
}

int cmd_catalog(bool json) {
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["summary"] = summarize(e.code);
      j["components"] = e.code.components().size();
      j["semiarcs"] = e.code.semiarc_count();
      j["base"] = e.base;
      j["move"] = e.move;
      j["pseudoknot_only"] = e.pseudoknot_only;
      j["description"] = e.description;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : catalog_entries()) std::cout << e.name << " (" << summarize(e.code) << ")\n";
  return kOk;
}

int cmd_suite(const std::string& dir, bool with_catalog, bool two_variable) {
  const auto mode = two_variable ? PolynomialMode::TwoVariable : PolynomialMode::SingleVariable;
  const auto blocks = run_suite(dir, with_catalog, mode);
  if (blocks.empty()) {
    std::cerr << "psyq: no .psy/.wgt pairs in " << dir << "\n";
    return kUsage;
  }
  std::cout << format_suite(blocks);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Psyquandle colorings and Boltzmann weight invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "psyq 0.1.0");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check the psyquandle axioms and, optionally, a weight pair");
  validate->add_option("psyquandle", va.psyquandle, "Block-matrix file")->required();
  validate->add_option("weights", va.weights, "Weight-pair file");
  validate->add_flag("--pI", va.require_pI, "Also require pI-adequacy");
  validate->add_flag("--strong", va.require_strong, "Also require strong compatibility");

  InvariantArgs ia;
  auto* invariant = app.add_subcommand("invariant", "Counting invariant and enhanced polynomial");
  invariant->add_option("--catalog", ia.catalog_name, "Built-in diagram name");
  invariant->add_option("--diagram", ia.diagram_file, "Diagram file");
  invariant->add_option("--psyquandle", ia.psyquandle, "Block-matrix file")->required();
  invariant->add_option("--weights", ia.weights, "Weight-pair file");
  invariant->add_flag("--two-variable", ia.two_variable, "Report u^a v^b terms");
  invariant->add_flag("--pseudoknot", ia.pseudoknot, "Require pI-adequacy of X and w");
  invariant->add_flag("--json", ia.json, "Emit the JSON result object");

  CocycleArgs ca;
  auto* cocycles = app.add_subcommand("cocycles", "Weight pairs over Z_N as a module");
  cocycles->add_option("psyquandle", ca.psyquandle, "Block-matrix file")->required();
  cocycles->add_option("--mod", ca.modulus, "Coefficient modulus N")->required();
  cocycles->add_flag("--pI", ca.require_pI, "Impose pI-adequacy");
  cocycles->add_flag("--strong", ca.require_strong, "Impose strong compatibility");

  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in diagrams");
  catalog_cmd->add_flag("--json", catalog_json, "Machine-readable listing");

  std::string suite_dir;
  bool suite_catalog = false, suite_two = false;
  auto* suite = app.add_subcommand("suite", "Tabulate every psyquandle/weights/diagram triple in a directory");
  suite->add_option("dir", suite_dir, "Directory with *.psy, *.wgt and *.dgm files")->required();
  suite->add_flag("--catalog", suite_catalog, "Include the built-in base diagrams");
  suite->add_flag("--two-variable", suite_two, "Report u^a v^b terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(va);
    if (*invariant) return cmd_invariant(ia);
    if (*cocycles) return cmd_cocycles(ca);
    if (*catalog_cmd) return cmd_catalog(catalog_json);
    if (*suite) return cmd_suite(suite_dir, suite_catalog, suite_two);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "psyq: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "psyq: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const TableShapeError& e) {
    std::cerr << "psyq: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownDiagramError& e) {
    std::cerr << "psyq: " << e.what() << "\n";
    return kUsage;
  } catch (const IncidenceError& e) {
    std::cerr << "psyq: " << e.what() << "\n";
    return kUsage;
  } catch (const AdequacyError& e) {
    std::cerr << "psyq: AdequacyError: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const CompatibilityError& e) {
    std::cerr << "psyq: CompatibilityError: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const psyq::Error& e) {
    std::cerr << "psyq: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
