#include "lcom/crm.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>

#include "json.hpp"

namespace lcom {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

class Reader {
 public:
  Reader(CrmMode mode, Diagnostics* warnings) : mode_(mode), warnings_(warnings) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw CrmParseError("CRM field '" + field + "': " + what, field, 0);
  }

  const json& object(const json& value, const std::string& field) const {
    if (!value.is_object()) fail(field, "expected an object");
    return value;
  }

  void check_keys(const json& object, const std::string& field,
                  std::initializer_list<std::string_view> known) const {
    for (const auto& [key, value] : object.items()) {
      if (std::find(known.begin(), known.end(), key) != known.end()) continue;
      if (mode_ == CrmMode::Strict) fail(field + "/" + key, "unknown key");
      report(warnings_, {"", 0, Severity::Warn, "CRM: ignoring unknown key '" + field + "/" + key + "'"});
    }
  }

  const json* optional(const json& object, std::string_view key) const {
    auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
  }

  const json& required(const json& object, std::string_view key, const std::string& field) const {
    const auto* value = optional(object, key);
    if (value == nullptr) fail(field + "/" + std::string(key), "missing required key");
    return *value;
  }

  std::string string(const json& value, const std::string& field) const {
    if (!value.is_string()) fail(field, "expected a string");
    return value.get<std::string>();
  }

  bool boolean(const json& object, std::string_view key, const std::string& field) const {
    const auto* value = optional(object, key);
    if (value == nullptr) return false;
    if (!value->is_boolean()) fail(field + "/" + std::string(key), "expected a boolean");
    return value->get<bool>();
  }

  const json* array(const json& object, std::string_view key, const std::string& field) const {
    const auto* value = optional(object, key);
    if (value == nullptr) return nullptr;
    if (!value->is_array()) fail(field + "/" + std::string(key), "expected an array");
    return value;
  }

  AttributeModel attribute(const json& value, const std::string& field) const {
    object(value, field);
    check_keys(value, field, {"name", "static", "visibility"});
    AttributeModel attribute;
    attribute.name = string(required(value, "name", field), field + "/name");
    attribute.is_static = boolean(value, "static", field);
    if (const auto* vis = optional(value, "visibility")) {
      auto parsed = parse_visibility(string(*vis, field + "/visibility"));
      if (!parsed) fail(field + "/visibility", "expected private, package, protected or public");
      attribute.visibility = *parsed;
    }
    return attribute;
  }

  MethodModel method(const json& value, const std::string& field) const {
    object(value, field);
    check_keys(value, field, {"name", "arity", "static", "constructor", "accesses", "invokes"});
    MethodModel method;
    method.name = string(required(value, "name", field), field + "/name");
    if (const auto* arity = optional(value, "arity")) {
      if (!arity->is_number_unsigned()) fail(field + "/arity", "expected a non-negative integer");
      method.arity = arity->get<std::size_t>();
    }
    method.is_static = boolean(value, "static", field);
    method.is_constructor = boolean(value, "constructor", field);
    if (const auto* accesses = array(value, "accesses", field)) {
      for (std::size_t i = 0; i < accesses->size(); ++i) {
        auto ref_field = field + "/accesses/" + std::to_string(i);
        auto ref = parse_attribute_ref(string((*accesses)[i], ref_field));
        if (!ref) fail(ref_field, "malformed attribute reference");
        if (std::find(method.accesses.begin(), method.accesses.end(), *ref) == method.accesses.end())
          method.accesses.push_back(std::move(*ref));
      }
    }
    if (const auto* invokes = array(value, "invokes", field)) {
      for (std::size_t i = 0; i < invokes->size(); ++i) {
        auto ref_field = field + "/invokes/" + std::to_string(i);
        auto ref = parse_method_ref(string((*invokes)[i], ref_field));
        if (!ref) fail(ref_field, "malformed method reference");
        if (std::find(method.invokes.begin(), method.invokes.end(), *ref) == method.invokes.end())
          method.invokes.push_back(std::move(*ref));
      }
    }
    return method;
  }

  TypeModel type(const json& value, const std::string& field) const {
    object(value, field);
    check_keys(value, field, {"name", "kind", "superclass", "attributes", "methods", "location"});
    TypeModel type;
    type.qualified_name = string(required(value, "name", field), field + "/name");
    auto kind = parse_type_kind(string(required(value, "kind", field), field + "/kind"));
    if (!kind) fail(field + "/kind", "expected class or interface");
    type.kind = *kind;
    if (const auto* super = optional(value, "superclass"); super && !super->is_null())
      type.superclass = string(*super, field + "/superclass");
    if (const auto* attributes = array(value, "attributes", field))
      for (std::size_t i = 0; i < attributes->size(); ++i)
        type.attributes.push_back(attribute((*attributes)[i], field + "/attributes/" + std::to_string(i)));
    if (const auto* methods = array(value, "methods", field))
      for (std::size_t i = 0; i < methods->size(); ++i)
        type.methods.push_back(method((*methods)[i], field + "/methods/" + std::to_string(i)));
    if (const auto* location = optional(value, "location")) {
      auto loc_field = field + "/location";
      object(*location, loc_field);
      check_keys(*location, loc_field, {"path", "line"});
      SourceLocation loc;
      loc.path = string(required(*location, "path", loc_field), loc_field + "/path");
      const auto& line = required(*location, "line", loc_field);
      if (!line.is_number_unsigned()) fail(loc_field + "/line", "expected a non-negative integer");
      loc.line = line.get<std::size_t>();
      type.location = std::move(loc);
    }
    return type;
  }

 private:
  CrmMode mode_;
  Diagnostics* warnings_;
};

ordered_json emit_type(const TypeModel& type) {
  ordered_json out;
  out["name"] = type.qualified_name;
  out["kind"] = std::string(to_string(type.kind));
  out["superclass"] = type.superclass ? ordered_json(*type.superclass) : ordered_json(nullptr);
  auto attributes = ordered_json::array();
  for (const auto& a : type.attributes) {
    ordered_json entry;
    entry["name"] = a.name;
    entry["static"] = a.is_static;
    entry["visibility"] = std::string(to_string(a.visibility));
    attributes.push_back(std::move(entry));
  }
  out["attributes"] = std::move(attributes);
  auto methods = ordered_json::array();
  for (const auto& m : type.methods) {
    ordered_json entry;
    entry["name"] = m.name;
    entry["arity"] = m.arity;
    entry["static"] = m.is_static;
    entry["constructor"] = m.is_constructor;
    auto accesses = ordered_json::array();
    for (const auto& ref : m.accesses) accesses.push_back(format_ref(ref));
    entry["accesses"] = std::move(accesses);
    auto invokes = ordered_json::array();
    for (const auto& ref : m.invokes) invokes.push_back(format_ref(ref));
    entry["invokes"] = std::move(invokes);
    methods.push_back(std::move(entry));
  }
  out["methods"] = std::move(methods);
  if (type.location) {
    ordered_json location;
    location["path"] = type.location->path;
    location["line"] = type.location->line;
    out["location"] = std::move(location);
  }
  return out;
}

bool valid_identifier_part(std::string_view part) {
  return !part.empty() && part.find_first_of("#/ \t\n") == std::string_view::npos;
}

}  // namespace

std::string format_ref(const AttributeRef& ref) {
  return ref.owner ? *ref.owner + "#" + ref.member : ref.member;
}

std::string format_ref(const MethodRef& ref) {
  auto text = ref.owner ? *ref.owner + "#" + ref.member : ref.member;
  return text + "/" + std::to_string(ref.arity);
}

std::optional<AttributeRef> parse_attribute_ref(std::string_view text) {
  AttributeRef ref;
  if (auto hash = text.find('#'); hash != std::string_view::npos) {
    auto owner = text.substr(0, hash);
    if (!valid_identifier_part(owner)) return std::nullopt;
    ref.owner = std::string(owner);
    text = text.substr(hash + 1);
  }
  if (!valid_identifier_part(text)) return std::nullopt;
  ref.member = std::string(text);
  return ref;
}

std::optional<MethodRef> parse_method_ref(std::string_view text) {
  MethodRef ref;
  if (auto slash = text.rfind('/'); slash != std::string_view::npos) {
    auto digits = text.substr(slash + 1);
    if (digits.empty()) return std::nullopt;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ref.arity);
    if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
    text = text.substr(0, slash);
  }
  auto attribute = parse_attribute_ref(text);
  if (!attribute) return std::nullopt;
  ref.owner = std::move(attribute->owner);
  ref.member = std::move(attribute->member);
  return ref;
}

TypeRegistry parse_crm(std::string_view text, CrmMode mode, Diagnostics* warnings) {
  json document;
  try {
    document = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw CrmParseError("CRM syntax error at line " + std::to_string(line) + ": " + e.what(), "",
                        line);
  }

  Reader reader(mode, warnings);
  reader.object(document, "");
  reader.check_keys(document, "", {"schema_version", "types"});
  auto version = reader.string(reader.required(document, "schema_version", ""), "/schema_version");
  if (version != kCrmSchemaVersion)
    reader.fail("/schema_version", "unsupported schema version '" + version + "'");

  TypeRegistry registry;
  ValidationReport problems;
  const auto& types = reader.required(document, "types", "");
  if (!types.is_array()) reader.fail("/types", "expected an array");
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto type = reader.type(types[i], "/types/" + std::to_string(i));
    auto name = type.qualified_name;
    if (!registry.add(std::move(type)))
      problems.push_back({name, ViolationKind::DuplicateType, "duplicate type '" + name + "'"});
  }
  auto registry_report = validate_registry(registry);
  problems.insert(problems.end(), registry_report.begin(), registry_report.end());
  if (!problems.empty()) {
    std::string message = "CRM model is invalid:";
    for (const auto& p : problems) message += "\n  " + p.type_name + ": " + p.message;
    throw CrmValidationError(message, std::move(problems));
  }
  return registry;
}

std::string emit_crm(const TypeRegistry& registry) {
  ordered_json document;
  document["schema_version"] = std::string(kCrmSchemaVersion);
  auto types = ordered_json::array();
  for (const auto& [name, type] : registry.types()) types.push_back(emit_type(type));
  document["types"] = std::move(types);
  return document.dump(2) + "\n";
}

std::string_view crm_schema() {
  return R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "Class Relation Model",
  "type": "object",
  "required": ["schema_version", "types"],
  "additionalProperties": false,
  "properties": {
    "schema_version": {"const": "1"},
    "types": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "kind"],
        "additionalProperties": false,
        "properties": {
          "name": {"type": "string", "minLength": 1},
          "kind": {"enum": ["class", "interface"]},
          "superclass": {"type": ["string", "null"]},
          "attributes": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["name"],
              "additionalProperties": false,
              "properties": {
                "name": {"type": "string", "minLength": 1},
                "static": {"type": "boolean", "default": false},
                "visibility": {"enum": ["private", "package", "protected", "public"], "default": "package"}
              }
            }
          },
          "methods": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["name"],
              "additionalProperties": false,
              "properties": {
                "name": {"type": "string", "minLength": 1},
                "arity": {"type": "integer", "minimum": 0, "default": 0},
                "static": {"type": "boolean", "default": false},
                "constructor": {"type": "boolean", "default": false},
                "accesses": {
                  "description": "attribute references: \"member\" or \"Owner#member\"",
                  "type": "array",
                  "items": {"type": "string", "pattern": "^([^#/]+#)?[^#/]+$"}
                },
                "invokes": {
                  "description": "method references: \"member/arity\" or \"Owner#member/arity\"",
                  "type": "array",
                  "items": {"type": "string", "pattern": "^([^#/]+#)?[^#/]+(/[0-9]+)?$"}
                }
              }
            }
          },
          "location": {
            "type": "object",
            "required": ["path", "line"],
            "additionalProperties": false,
            "properties": {
              "path": {"type": "string"},
              "line": {"type": "integer", "minimum": 0}
            }
          }
        }
      }
    }
  }
}
)";
}

}  // namespace lcom
