#include "lcom/diagnostics.hpp"

namespace lcom {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "info";
    case Severity::Warn: return "warn";
  }
  return "warn";
}

std::string format_diagnostic(const Diagnostic& diagnostic) {
  std::string out = diagnostic.path.empty() ? std::string("<model>") : diagnostic.path;
  out += ':';
  out += std::to_string(diagnostic.line);
  out += ": ";
  out += to_string(diagnostic.severity);
  out += ": ";
  out += diagnostic.message;
  return out;
}

}  // namespace lcom
