#include "lcom/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace lcom {

namespace {

using Json = nlohmann::ordered_json;

// Values in JSON carry the same 4-decimal rounding as the CSV text.
double rounded(double value) {
  double r = std::round(value * 10000.0) / 10000.0;
  return r == 0.0 ? 0.0 : r;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Json options_json(const RunOptions& options) {
  return Json{{"input_format", to_string(options.format)},
              {"include_constructors", options.metrics.include_constructors},
              {"merge_nested", options.merge_nested},
              {"strict_algorithm1", options.metrics.strict_algorithm1}};
}

Json metrics_object(const MetricVector& m) {
  return Json{{"lcom1", m.lcom1},
              {"lcom2", m.lcom2},
              {"lcom3", m.lcom3},
              {"lcom4", m.lcom4},
              {"lcom5", rounded(m.lcom5)},
              {"yalcom", rounded(m.yalcom.reported())}};
}

Json distances_array(const std::vector<AlgorithmDistance>& distances) {
  Json out = Json::array();
  for (const auto& d : distances)
    out.push_back({{"algorithm", to_string(d.algorithm)},
                   {"absolute", rounded(d.absolute)},
                   {"normalized", rounded(d.normalized)}});
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  std::string text = buffer;
  if (text == "-0.0000") text = "0.0000";
  return text;
}

std::string metrics_csv(const CorpusRun& run) {
  std::ostringstream out;
  out << "repo,qualified_name,kind,n_methods,n_attributes,lcom1,lcom2,lcom3,lcom4,lcom5,yalcom\n";
  for (const auto& r : run.records) {
    const auto& m = r.metrics;
    out << csv_field(r.repo) << ',' << csv_field(r.qualified_name) << ',' << to_string(m.kind) << ','
        << m.n_methods << ',' << m.n_attributes << ',' << m.lcom1 << ',' << m.lcom2 << ',' << m.lcom3
        << ',' << m.lcom4 << ',' << format_number(m.lcom5) << ',' << format_number(m.yalcom.reported())
        << '\n';
  }
  return out.str();
}

std::string metrics_json(const CorpusRun& run) {
  Json records = Json::array();
  for (const auto& r : run.records) {
    Json record{{"repo", r.repo},
                {"qualified_name", r.qualified_name},
                {"kind", to_string(r.metrics.kind)},
                {"n_methods", r.metrics.n_methods},
                {"n_attributes", r.metrics.n_attributes}};
    record.update(metrics_object(r.metrics));
    if (r.location) record["location"] = {{"path", r.location->path}, {"line", r.location->line}};
    records.push_back(std::move(record));
  }
  Json diagnostics = Json::array();
  for (const auto& d : run.diagnostics)
    diagnostics.push_back(
        {{"path", d.path}, {"line", d.line}, {"severity", to_string(d.severity)}, {"message", d.message}});
  const auto summary = run.summary();
  Json doc{{"options", options_json(run.options)},
           {"records", std::move(records)},
           {"diagnostics", {{"info", summary.info}, {"warn", summary.warn}, {"items", std::move(diagnostics)}}}};
  return doc.dump(2) + "\n";
}

std::string distances_csv(const DistanceReport& report) {
  std::ostringstream out;
  out << "scope,baseline,algorithm,compared,excluded,absolute,normalized\n";
  auto rows = [&](std::string_view scope, std::size_t compared, std::size_t excluded,
                  const std::vector<AlgorithmDistance>& distances) {
    for (const auto& d : distances)
      out << csv_field(scope) << ',' << to_string(report.baseline) << ',' << to_string(d.algorithm) << ','
          << compared << ',' << excluded << ',' << format_number(d.absolute) << ','
          << format_number(d.normalized) << '\n';
  };
  rows("*", report.compared, report.excluded, report.distances);
  for (const auto& repo : report.per_repo) rows(repo.repo, repo.compared, 0, repo.distances);
  return out.str();
}

std::string distances_json(const DistanceReport& report) {
  Json per_repo = Json::array();
  for (const auto& repo : report.per_repo)
    per_repo.push_back(
        {{"repo", repo.repo}, {"compared", repo.compared}, {"distances", distances_array(repo.distances)}});

  Json summaries = Json::object();
  for (std::size_t i = 0; i < report.summaries.size(); ++i) {
    const auto& s = report.summaries[i];
    summaries[std::string(to_string(kAllAlgorithms[i]))] = {{"maximum", rounded(s.maximum)},
                                                             {"minimum", rounded(s.minimum)},
                                                             {"median", rounded(s.median)},
                                                             {"average", rounded(s.average)}};
  }

  Json audit = Json::array();
  for (const auto& entry : report.false_zero_audit) {
    Json flagged = Json::array();
    for (auto a : entry.flagged) flagged.push_back(to_string(a));
    Json item{{"repo", entry.repo}, {"qualified_name", entry.qualified_name}, {"kind", to_string(entry.kind)}};
    item.update(metrics_object(entry.metrics));
    item["flagged"] = std::move(flagged);
    audit.push_back(std::move(item));
  }

  Json doc{{"baseline", to_string(report.baseline)},
           {"compared", report.compared},
           {"excluded_not_computable", report.excluded},
           {"distances", distances_array(report.distances)},
           {"per_repo", std::move(per_repo)},
           {"summary", std::move(summaries)},
           {"false_zero_audit", std::move(audit)}};
  return doc.dump(2) + "\n";
}

std::string member_graph_dot(const MemberGraph& graph, std::string_view type_name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(type_name) << "\" {\n";
  out << "  graph [rankdir=LR];\n";
  out << "  edge [arrowhead=none];\n";
  const auto& vertices = graph.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    std::string label = v.name;
    if (v.is_method()) {
      label += "/" + std::to_string(v.arity);
    } else if (v.owner != type_name) {
      label = v.owner + "#" + v.name;
    }
    out << "  n" << i << " [label=\"" << dot_escape(label) << "\", shape=box";
    if (v.is_attribute()) out << ", style=rounded";
    out << "];\n";
  }
  for (const auto& e : graph.edges()) {
    out << "  n" << e.from << " -> n" << e.to;
    if (vertices[e.to].is_method()) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lcom
