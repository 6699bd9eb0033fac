#include "lcom/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lcom/crm.hpp"
#include "lcom/source_frontend.hpp"
#include "parallel.hpp"

namespace lcom {

std::string_view to_string(InputFormat format) {
  return format == InputFormat::Crm ? "crm" : "source";
}

RepositoryRoot RepositoryRoot::from_path(const std::filesystem::path& path) {
  auto normalized = path.lexically_normal();
  auto name = normalized.filename();
  if (name.empty()) name = normalized.parent_path().filename();
  if (name.empty() || name == "." || name == "..")
    name = std::filesystem::absolute(normalized).lexically_normal().filename();
  auto label = name.stem().string();
  return {label.empty() ? std::string("root") : label, path};
}

DiagnosticSummary CorpusRun::summary() const {
  DiagnosticSummary s;
  for (const auto& d : diagnostics) (d.severity == Severity::Info ? s.info : s.warn)++;
  return s;
}

TypeRegistry load_crm_root(const std::filesystem::path& root, Diagnostics& diagnostics) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(root, ec)) throw InputError("input path does not exist: " + root.string());

  std::vector<fs::path> files;
  fs::path base = root;
  if (fs::is_regular_file(root, ec)) {
    files.push_back(root);
    base = root.parent_path();
  } else {
    for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
         !ec && it != end; it.increment(ec))
      if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
    if (ec) diagnostics.push_back({root.generic_string(), 0, Severity::Warn, "directory walk error: " + ec.message()});
  }
  std::sort(files.begin(), files.end());

  TypeRegistry merged;
  for (const auto& file : files) {
    const auto shown = base.empty() ? file.generic_string() : file.lexically_relative(base).generic_string();
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in) {
      diagnostics.push_back({shown, 0, Severity::Warn, "cannot read file; skipped"});
      continue;
    }
    try {
      Diagnostics warnings;
      auto registry = parse_crm(buffer.str(), CrmMode::Strict, &warnings);
      for (auto& w : warnings) {
        w.path = shown;
        diagnostics.push_back(std::move(w));
      }
      for (const auto& [name, type] : registry.types()) {
        if (!merged.add(type))
          diagnostics.push_back({shown, 0, Severity::Warn,
                                 "type '" + name + "' already defined by another document; ignored"});
      }
    } catch (const CrmError& e) {
      diagnostics.push_back({shown, e.line(), Severity::Warn, std::string("invalid CRM document, skipped: ") + e.what()});
    }
  }
  return merged;
}

CorpusRun analyze_registries(const std::vector<std::pair<std::string, TypeRegistry>>& registries,
                             const RunOptions& options) {
  CorpusRun run;
  run.options = options;

  struct Job {
    const std::string* repo;
    const TypeModel* type;
    const TypeRegistry* registry;
  };
  std::vector<Job> jobs;
  for (const auto& [repo, registry] : registries)
    for (const auto& [name, type] : registry.types()) jobs.push_back({&repo, &type, &registry});

  std::vector<TypeRecord> records(jobs.size());
  detail::parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
    const auto& job = jobs[i];
    records[i] = {*job.repo, job.type->qualified_name, job.type->location,
                  compute_all(*job.type, *job.registry, options.metrics)};
  });

  std::stable_sort(records.begin(), records.end(), [](const TypeRecord& a, const TypeRecord& b) {
    return std::tie(a.repo, a.qualified_name) < std::tie(b.repo, b.qualified_name);
  });
  run.records = std::move(records);
  return run;
}

CorpusRun run_corpus(const std::vector<RepositoryRoot>& roots, const RunOptions& options) {
  std::vector<std::pair<std::string, TypeRegistry>> registries;
  Diagnostics diagnostics;
  for (const auto& root : roots) {
    if (options.format == InputFormat::Crm) {
      Diagnostics local;
      auto registry = load_crm_root(root.path, local);
      for (auto& d : local) {
        d.path = root.label + "/" + d.path;
        diagnostics.push_back(std::move(d));
      }
      registries.emplace_back(root.label, std::move(registry));
    } else {
      auto extraction = extract_directory(root.path, {options.merge_nested, options.workers});
      for (auto& d : extraction.diagnostics) {
        d.path = root.label + "/" + d.path;
        diagnostics.push_back(std::move(d));
      }
      registries.emplace_back(root.label, std::move(extraction.registry));
    }
  }
  auto run = analyze_registries(registries, options);
  std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.path, a.line) < std::tie(b.path, b.line);
  });
  run.diagnostics = std::move(diagnostics);
  return run;
}

Partition partition_computable(const CorpusRun& run) {
  Partition partition;
  for (const auto& record : run.records)
    (record.metrics.yalcom.computable() ? partition.computable : partition.not_computable)
        .push_back(record);
  return partition;
}

double not_computable_fraction(const CorpusRun& run) {
  if (run.records.empty()) return 0.0;
  auto count = std::count_if(run.records.begin(), run.records.end(),
                             [](const TypeRecord& r) { return !r.metrics.yalcom.computable(); });
  return static_cast<double>(count) / static_cast<double>(run.records.size());
}

}  // namespace lcom
