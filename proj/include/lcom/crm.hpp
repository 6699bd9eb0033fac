#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcom/class_model.hpp"
#include "lcom/diagnostics.hpp"

// Class Relation Model (CRM): the JSON interchange form of a TypeRegistry.
//
//   {"schema_version": "1",
//    "types": [{"name", "kind", "superclass",
//               "attributes": [{"name", "static", "visibility"}],
//               "methods": [{"name", "arity", "static", "constructor",
//                            "accesses": [...], "invokes": [...]}]}]}
//
// Attribute references are "member" or "Owner#member"; method references
// append the arity, "member/2" or "Owner#member/2".

namespace lcom {

inline constexpr std::string_view kCrmSchemaVersion = "1";

enum class CrmMode {
  Strict,   // unknown keys are errors
  Lenient,  // unknown keys are reported as warnings
};

class CrmError : public std::runtime_error {
 public:
  CrmError(const std::string& message, std::string field, std::size_t line)
      : std::runtime_error(message), field_(std::move(field)), line_(line) {}

  // JSON pointer-like path of the offending value ("" when unknown).
  const std::string& field() const { return field_; }
  // 1-based line for syntax errors, 0 otherwise.
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

// Malformed JSON or a value that does not fit the schema.
class CrmParseError : public CrmError {
 public:
  using CrmError::CrmError;
};

// Well-formed document whose model breaks a class_model invariant.
class CrmValidationError : public CrmError {
 public:
  CrmValidationError(const std::string& message, ValidationReport report)
      : CrmError(message, "", 0), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

TypeRegistry parse_crm(std::string_view text, CrmMode mode = CrmMode::Strict,
                       Diagnostics* warnings = nullptr);

/// Canonical form: types ordered by qualified name, members in declaration
/// order, two-space indentation, trailing newline.
std::string emit_crm(const TypeRegistry& registry);

/// JSON Schema (draft 2020-12) describing CRM v1.
std::string_view crm_schema();

std::string format_ref(const AttributeRef& ref);
std::string format_ref(const MethodRef& ref);
std::optional<AttributeRef> parse_attribute_ref(std::string_view text);
std::optional<MethodRef> parse_method_ref(std::string_view text);

}  // namespace lcom
