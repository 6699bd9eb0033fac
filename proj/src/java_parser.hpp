#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcom/class_model.hpp"
#include "lcom/diagnostics.hpp"

// Syntactic pass of the source front-end. Produces unresolved member
// references; source_frontend.cpp resolves them against the registry.

namespace lcom::java {

enum class RefForm {
  Bare,        // f, m(...)
  This,        // this.f, this.m(...), Own.this.f
  Super,       // super.f, super.m(...)
  OwnType,     // Own.f, Own.m(...)
  Constructor  // this(...)
};

struct RawFieldRef {
  RefForm form = RefForm::Bare;
  std::string name;
  std::size_t line = 0;
};

struct RawCall {
  RefForm form = RefForm::Bare;
  std::string name;
  std::size_t arity = 0;
  std::size_t line = 0;
};

struct ParsedField {
  std::string name;
  bool is_static = false;
  Visibility visibility = Visibility::Package;
  std::size_t line = 0;
};

struct ParsedMethod {
  std::string name;
  std::size_t arity = 0;
  bool is_static = false;
  bool is_constructor = false;
  std::size_t line = 0;
  std::vector<RawFieldRef> field_refs;
  std::vector<RawCall> calls;
  // Member-name prefixes tried innermost-first when resolving bare names;
  // only non-trivial after nested types are merged into their outer type.
  std::vector<std::string> scope_prefixes{""};
};

struct ParsedType {
  std::string simple_name;
  std::string qualified_name;  // package + enclosing types + simple name
  TypeKind kind = TypeKind::Class;
  bool is_static = false;
  std::optional<std::string> superclass;  // as written, generic arguments removed
  std::size_t line = 0;
  std::vector<ParsedField> fields;
  std::vector<ParsedMethod> methods;
  std::vector<ParsedType> nested;
};

struct ParsedUnit {
  std::string path;
  std::string package;                        // "" for the default package
  std::vector<std::string> single_imports;    // a.b.C
  std::vector<std::string> wildcard_imports;  // a.b (from a.b.*)
  std::vector<ParsedType> types;
  Diagnostics diagnostics;
};

// Throws SourceSyntaxError for unterminated literals/comments and unbalanced
// braces. Unsupported declarations are skipped with a diagnostic.
ParsedUnit parse_compilation_unit(std::string_view source, const std::string& path);

}  // namespace lcom::java
