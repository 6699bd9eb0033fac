#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lcom {

enum class Severity { Info, Warn };

std::string_view to_string(Severity severity);

/// A non-fatal finding raised while building or analyzing a model. Diagnostics
/// never abort the analysis of sibling types.
struct Diagnostic {
  std::string path;
  std::size_t line = 0;
  Severity severity = Severity::Warn;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

// Renders `path:line: severity: message`.
std::string format_diagnostic(const Diagnostic& diagnostic);

inline void report(Diagnostics* sink, Diagnostic diagnostic) {
  if (sink != nullptr) sink->push_back(std::move(diagnostic));
}

}  // namespace lcom
