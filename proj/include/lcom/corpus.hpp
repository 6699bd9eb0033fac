#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcom/class_model.hpp"
#include "lcom/diagnostics.hpp"
#include "lcom/metrics.hpp"

namespace lcom {

enum class InputFormat { Source, Crm };

std::string_view to_string(InputFormat format);

struct RunOptions {
  InputFormat format = InputFormat::Source;
  MetricOptions metrics;
  bool merge_nested = false;
  unsigned workers = 1;  // 0: hardware concurrency

  friend bool operator==(const RunOptions&, const RunOptions&) = default;
};

/// One repository root. The label defaults to the directory name.
struct RepositoryRoot {
  std::string label;
  std::filesystem::path path;

  static RepositoryRoot from_path(const std::filesystem::path& path);
};

struct TypeRecord {
  std::string repo;
  std::string qualified_name;
  std::optional<SourceLocation> location;
  MetricVector metrics;

  friend bool operator==(const TypeRecord&, const TypeRecord&) = default;
};

struct DiagnosticSummary {
  std::size_t info = 0;
  std::size_t warn = 0;
};

struct CorpusRun {
  std::vector<TypeRecord> records;  // sorted by (repo, qualified_name)
  RunOptions options;
  Diagnostics diagnostics;

  DiagnosticSummary summary() const;
};

/// Extracts every root (source tree or CRM documents, per options.format) and
/// computes the six metrics for every type. Per-file problems become
/// diagnostics; a root without types contributes no records. Throws InputError
/// when a root does not exist.
CorpusRun run_corpus(const std::vector<RepositoryRoot>& roots, const RunOptions& options);

/// Same as run_corpus over already-built registries.
CorpusRun analyze_registries(const std::vector<std::pair<std::string, TypeRegistry>>& registries,
                             const RunOptions& options);

/// Reads a CRM root: a single document or every `.json` document below a
/// directory, merged into one registry.
TypeRegistry load_crm_root(const std::filesystem::path& root, Diagnostics& diagnostics);

struct Partition {
  std::vector<TypeRecord> computable;
  std::vector<TypeRecord> not_computable;
};

/// Splits records by whether YALCOM is computable, keeping run order.
Partition partition_computable(const CorpusRun& run);

// Share of records whose YALCOM is NotComputable; 0 for an empty run.
double not_computable_fraction(const CorpusRun& run);

}  // namespace lcom
