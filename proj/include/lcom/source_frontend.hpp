#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcom/class_model.hpp"
#include "lcom/diagnostics.hpp"

// Extraction of TypeModels from `.java` files of a syntactic subset: package
// and import headers, class and interface declarations (nested included),
// extends/implements clauses, field declarations and method/constructor
// declarations with bodies. Method bodies are scanned, not parsed: identifier
// reads/writes and call sites become access and invocation edges.
//
// Resolution rules inside a body:
//   * `this.f`, `super.f`, `Type.f` (own type) and bare `f` name a field when
//     a declared or inherited field has that name; a bare name declared as a
//     local, parameter or lambda parameter in an enclosing scope shadows it.
//   * `this.m(...)` and bare `m(...)` name an own method with the same name
//     and argument count; `this(...)` names a constructor.
//   * Member selects on anything else (`x.y().z`) contribute nothing.

namespace lcom {

using ExtractionDiagnostic = Diagnostic;

inline constexpr std::string_view kSourceExtension = ".java";

class SourceSyntaxError : public std::runtime_error {
 public:
  SourceSyntaxError(const std::string& path, std::size_t line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
        path_(path),
        line_(line),
        message_(message) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::size_t line_;
  std::string message_;
};

// Raised when an input root does not exist or cannot be listed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtractOptions {
  // Fold nested types into their top-level type; nested members are renamed
  // `Inner.member`.
  bool merge_nested = false;
  // Parallel file parsing; 0 means hardware concurrency.
  unsigned workers = 1;
};

struct Extraction {
  std::vector<TypeModel> types;
  Diagnostics diagnostics;
};

/// One TypeModel per class/interface declared in `source`, in declaration
/// order (outer before nested). Superclasses and inherited fields resolve only
/// against types declared in the same source. Throws SourceSyntaxError when the
/// file cannot be tokenized or its braces do not balance.
Extraction extract_types(std::string_view source, const std::string& path,
                         const ExtractOptions& options = {});

struct DirectoryExtraction {
  TypeRegistry registry;
  Diagnostics diagnostics;
};

struct SourceFile {
  std::string path;
  std::string_view text;
};

/// In-memory counterpart of extract_directory: files are processed in path
/// order and resolved together.
DirectoryExtraction extract_sources(const std::vector<SourceFile>& files,
                                    const ExtractOptions& options = {});

/// All `.java` files below `root` (or `root` itself when it is a file). Files
/// that cannot be read or tokenized become diagnostics. Superclass links and
/// inherited fields resolve across files. Paths in the result are relative to
/// `root`. Throws InputError when `root` does not exist.
DirectoryExtraction extract_directory(const std::filesystem::path& root,
                                      const ExtractOptions& options = {});

}  // namespace lcom
