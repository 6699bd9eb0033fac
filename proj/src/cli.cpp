#include "lcom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcom/corpus.hpp"
#include "lcom/crm.hpp"
#include "lcom/report.hpp"
#include "lcom/source_frontend.hpp"
#include "lcom/stats.hpp"

namespace lcom {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string input_format = "source";
  std::string format = "csv";
  std::string out;
  bool include_constructors = false;
  bool merge_nested = false;
  bool strict_algorithm1 = false;
  unsigned workers = 1;
  bool verbose = false;
  std::string baseline = "yalcom";
  std::string route = "both";
  std::string type_name;

  RunOptions options() const {
    RunOptions o;
    o.format = input_format == "crm" ? InputFormat::Crm : InputFormat::Source;
    o.metrics.include_constructors = include_constructors;
    o.metrics.strict_algorithm1 = strict_algorithm1;
    o.merge_nested = merge_nested;
    o.workers = workers;
    return o;
  }
};

void add_input_options(CLI::App& cmd, RunConfig& config, bool inputs_required) {
  auto* inputs = cmd.add_option("inputs", config.inputs, "Repository roots (directories or files)");
  if (inputs_required) inputs->required();
  cmd.add_option("--input-format", config.input_format, "Input kind")
      ->check(CLI::IsMember({"source", "crm"}))
      ->capture_default_str();
  cmd.add_flag("--include-constructors", config.include_constructors, "Count constructors as methods");
  cmd.add_flag("--merge-nested", config.merge_nested, "Fold nested types into their top-level type");
  cmd.add_flag("--strict-algorithm1", config.strict_algorithm1,
               "Measure attribute-less classes instead of reporting them as not computable");
  cmd.add_option("--workers", config.workers, "Worker threads, 0 for all cores")->capture_default_str();
  cmd.add_flag("-v,--verbose", config.verbose, "Print info diagnostics too");
}

void add_output_options(CLI::App& cmd, RunConfig& config, bool with_format) {
  if (with_format)
    cmd.add_option("--format", config.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  cmd.add_option("--out", config.out, "Write the report to this file instead of stdout");
}

std::vector<RepositoryRoot> roots_of(const std::vector<std::string>& inputs) {
  std::vector<RepositoryRoot> roots;
  std::map<std::string, int> seen;
  for (const auto& input : inputs) {
    auto root = RepositoryRoot::from_path(input);
    if (int n = ++seen[root.label]; n > 1) root.label += "~" + std::to_string(n);
    roots.push_back(std::move(root));
  }
  return roots;
}

void print_diagnostics(const Diagnostics& diagnostics, bool verbose, std::ostream& err) {
  std::size_t info = 0;
  std::size_t warn = 0;
  for (const auto& d : diagnostics) {
    (d.severity == Severity::Info ? info : warn)++;
    if (verbose || d.severity == Severity::Warn) err << format_diagnostic(d) << '\n';
  }
  err << "diagnostics: " << info << " info, " << warn << " warn\n";
}

int emit(const std::string& text, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) {
    err << "error: cannot write " << config.out << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto run = run_corpus(roots_of(config.inputs), config.options());
  print_diagnostics(run.diagnostics, config.verbose, err);
  err << "types: " << run.records.size() << ", not computable: "
      << format_number(100.0 * not_computable_fraction(run)) << "%\n";
  return emit(config.format == "json" ? metrics_json(run) : metrics_csv(run), config, out, err);
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto baseline = parse_algorithm(config.baseline);
  if (!baseline) {
    err << "error: unknown baseline '" << config.baseline << "' (expected lcom1..lcom5 or yalcom)\n";
    return kExitConfig;
  }
  const auto run = run_corpus(roots_of(config.inputs), config.options());
  print_diagnostics(run.diagnostics, config.verbose, err);
  const auto report = compare_to_baseline(run, *baseline);
  err << "compared: " << report.compared << ", excluded as not computable: " << report.excluded << '\n';
  if (report.empty()) err << "warning: no computable types; comparison is empty\n";
  if (!report.false_zero_audit.empty() && config.format != "json")
    err << "false-zero audit: " << report.false_zero_audit.size()
        << " not-computable types get a cohesive-looking value (see --format json)\n";
  return emit(config.format == "json" ? distances_json(report) : distances_csv(report), config, out, err);
}

std::string two_decimals(double value) {
  if (std::isnan(value)) return "?";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  std::string text = buffer;
  if (text == "-0.00") text = "0.00";
  return text;
}

std::string case_table(const CaseCheck& check) {
  std::ostringstream table;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-6s %-12s %-12s %-12s %-12s %-12s %-12s %s\n", "route", "case",
                "L1", "L2", "L3", "L4", "L5", "L", "ground truth");
  table << line;
  const auto& expected = expected_cases();
  for (std::size_t c = 0; c < expected.size(); ++c) {
    std::string cells[6];
    for (std::size_t a = 0; a < 6; ++a) {
      const auto& cell = check.cells[c * 6 + a];
      const bool whole = a < 4;
      auto show = [whole](double v) {
        return whole && !std::isnan(v) ? std::to_string(static_cast<long long>(v)) : two_decimals(v);
      };
      cells[a] = show(cell.computed) + "/" + show(cell.expected) + (cell.matches ? "" : "*");
    }
    std::snprintf(line, sizeof line, "%-6s %-6s %-12s %-12s %-12s %-12s %-12s %-12s %s\n",
                  std::string(to_string(check.route)).c_str(), std::string(expected[c].name).c_str(),
                  cells[0].c_str(), cells[1].c_str(), cells[2].c_str(), cells[3].c_str(), cells[4].c_str(),
                  cells[5].c_str(), std::string(expected[c].label).c_str());
    table << line;
  }
  return table.str();
}

int cmd_cases(const RunConfig& config, const CliHooks& hooks, std::ostream& out, std::ostream& err) {
  const auto metric = hooks.case_metric ? hooks.case_metric : default_metric();
  std::vector<FixtureRoute> routes;
  if (config.route != "source") routes.push_back(FixtureRoute::Crm);
  if (config.route != "crm") routes.push_back(FixtureRoute::Source);

  std::string text = "cells: computed/expected, * marks a mismatch\n";
  std::vector<CellResult> mismatches;
  std::vector<FixtureRoute> mismatch_routes;
  for (auto route : routes) {
    const auto check = check_cases(fixture_registry(route), route, metric);
    text += case_table(check);
    for (auto& m : check.mismatches()) {
      mismatches.push_back(m);
      mismatch_routes.push_back(route);
    }
  }
  const auto cells = routes.size() * expected_cases().size() * kAllAlgorithms.size();
  text += std::to_string(cells - mismatches.size()) + "/" + std::to_string(cells) + " cells match\n";
  if (const int rc = emit(text, config, out, err); rc != kExitOk) return rc;
  if (mismatches.empty()) return kExitOk;
  for (std::size_t i = 0; i < mismatches.size(); ++i) {
    const auto& m = mismatches[i];
    err << "mismatch: " << to_string(mismatch_routes[i]) << ' ' << m.case_name << ' ' << to_string(m.algorithm)
        << ": computed " << format_number(m.computed) << ", expected " << format_number(m.expected) << '\n';
  }
  return kExitMismatch;
}

const TypeModel* find_type(const TypeRegistry& registry, std::string_view name, std::ostream& err) {
  if (const auto* exact = registry.find(name)) return exact;
  std::vector<const TypeModel*> matches;
  for (const auto& [qualified, type] : registry.types())
    if (type.simple_name() == name) matches.push_back(&type);
  if (matches.size() == 1) return matches.front();
  if (matches.size() > 1) {
    err << "error: type name '" << name << "' is ambiguous:";
    for (const auto* t : matches) err << ' ' << t->qualified_name;
    err << '\n';
  } else {
    err << "error: unknown type '" << name << "'\n";
  }
  return nullptr;
}

int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto options = config.options();
  TypeRegistry merged;
  Diagnostics diagnostics;
  if (config.inputs.empty()) {
    merged = fixture_registry(FixtureRoute::Crm);
  } else {
    for (const auto& root : roots_of(config.inputs)) {
      TypeRegistry registry;
      if (options.format == InputFormat::Crm) {
        registry = load_crm_root(root.path, diagnostics);
      } else {
        auto extraction = extract_directory(root.path, {options.merge_nested, options.workers});
        diagnostics.insert(diagnostics.end(), extraction.diagnostics.begin(), extraction.diagnostics.end());
        registry = std::move(extraction.registry);
      }
      for (const auto& [name, type] : registry.types()) merged.add(type);
    }
  }
  if (config.verbose) print_diagnostics(diagnostics, true, err);

  const auto* type = find_type(merged, config.type_name, err);
  if (type == nullptr) return kExitConfig;
  Diagnostics graph_diagnostics;
  const auto graph = build_member_graph(*type, merged, options.metrics, &graph_diagnostics);
  for (const auto& d : graph_diagnostics) err << format_diagnostic(d) << '\n';
  return emit(member_graph_dot(graph, type->qualified_name), config, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Class cohesion metrics (LCOM1-5, YALCOM) for Java sources and CRM documents", "lcom"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  RunConfig config;
  auto* analyze = app.add_subcommand("analyze", "Per-type metric table");
  add_input_options(*analyze, config, true);
  add_output_options(*analyze, config, true);

  auto* compare = app.add_subcommand("compare", "Euclidean distances of every metric to a baseline");
  add_input_options(*compare, config, true);
  add_output_options(*compare, config, true);
  compare->add_option("--baseline", config.baseline, "lcom1..lcom5 or yalcom")->capture_default_str();

  auto* cases = app.add_subcommand("cases", "Check the eight reference cases against their expected values");
  cases->add_option("--route", config.route, "Fixture form to check")
      ->check(CLI::IsMember({"crm", "source", "both"}))
      ->capture_default_str();
  add_output_options(*cases, config, false);

  auto* graph = app.add_subcommand("graph", "DOT rendering of one type's member graph");
  graph->add_option("type", config.type_name, "Qualified or unique simple type name")->required();
  add_input_options(*graph, config, false);
  add_output_options(*graph, config, false);

  auto* schema = app.add_subcommand("schema", "Print the CRM JSON schema");
  add_output_options(*schema, config, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(config, out, err);
    if (compare->parsed()) return cmd_compare(config, out, err);
    if (cases->parsed()) return cmd_cases(config, hooks, out, err);
    if (graph->parsed()) return cmd_graph(config, out, err);
    if (schema->parsed()) return emit(std::string(crm_schema()), config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitConfig;
}

}  // namespace lcom
