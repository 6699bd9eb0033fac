#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcom/diagnostics.hpp"

// Language-neutral class-relation model. Every front-end produces it and every
// metric consumes it. Models are plain values; a TypeRegistry is immutable
// once assembled and can be shared between worker threads.

namespace lcom {

enum class Visibility { Private, Package, Protected, Public };
enum class TypeKind { Class, Interface };

std::string_view to_string(Visibility visibility);
std::string_view to_string(TypeKind kind);
std::optional<Visibility> parse_visibility(std::string_view text);
std::optional<TypeKind> parse_type_kind(std::string_view text);

/// Reference to an attribute. Without an owner it is local to the declaring
/// type (or, for attribute lookups, anything visible from it).
struct AttributeRef {
  std::optional<std::string> owner;
  std::string member;

  bool is_local() const { return !owner.has_value(); }
  auto operator<=>(const AttributeRef&) const = default;
};

struct MethodRef {
  std::optional<std::string> owner;
  std::string member;
  std::size_t arity = 0;

  bool is_local() const { return !owner.has_value(); }
  auto operator<=>(const MethodRef&) const = default;
};

struct AttributeModel {
  std::string name;
  bool is_static = false;
  Visibility visibility = Visibility::Package;

  friend bool operator==(const AttributeModel&, const AttributeModel&) = default;
};

struct MethodModel {
  std::string name;
  std::size_t arity = 0;
  bool is_static = false;
  bool is_constructor = false;
  std::vector<AttributeRef> accesses;  // `->` relation, duplicates removed
  std::vector<MethodRef> invokes;      // `=>` relation, duplicates removed

  friend bool operator==(const MethodModel&, const MethodModel&) = default;
};

struct SourceLocation {
  std::string path;
  std::size_t line = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct TypeModel {
  std::string qualified_name;
  TypeKind kind = TypeKind::Class;
  std::optional<std::string> superclass;
  std::vector<AttributeModel> attributes;
  std::vector<MethodModel> methods;
  std::optional<SourceLocation> location;

  bool is_interface() const { return kind == TypeKind::Interface; }
  // Last dot-separated segment of the qualified name.
  std::string_view simple_name() const;
  const AttributeModel* find_attribute(std::string_view name) const;
  const MethodModel* find_method(std::string_view name, std::size_t arity) const;

  friend bool operator==(const TypeModel&, const TypeModel&) = default;
};

class TypeRegistry {
 public:
  using Map = std::map<std::string, TypeModel, std::less<>>;

  TypeRegistry() = default;

  // Returns false (and leaves the registry unchanged) when the qualified name
  // is already taken.
  bool add(TypeModel type);

  const TypeModel* find(std::string_view qualified_name) const;
  bool contains(std::string_view qualified_name) const { return find(qualified_name) != nullptr; }

  // The registered superclass of `type`, or nullptr when it has none or the
  // superclass is external to the registry.
  const TypeModel* superclass_of(const TypeModel& type) const;

  const Map& types() const { return types_; }
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }

  friend bool operator==(const TypeRegistry&, const TypeRegistry&) = default;

 private:
  Map types_;
};

enum class ViolationKind {
  EmptyName,
  DuplicateAttribute,
  DuplicateMethod,
  InterfaceInstanceState,
  SuperclassNotClass,
  SelfInheritance,
  DuplicateType,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  std::string type_name;
  ViolationKind kind;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

/// Structural checks on a single type; empty iff the type is well-formed.
ValidationReport validate_type(const TypeModel& type);

/// validate_type over every entry plus the cross-type rule that a resolvable
/// superclass must be a class.
ValidationReport validate_registry(const TypeRegistry& registry);

struct InheritedAttribute {
  std::string owner;
  AttributeModel attribute;

  friend bool operator==(const InheritedAttribute&, const InheritedAttribute&) = default;
};

/// Non-private attributes reachable through the transitive chain of
/// registered superclasses, nearest ancestor first. An attribute is dropped
/// when a same-named attribute is declared nearer to `type` (including in
/// `type` itself). The walk stops at the first ancestor missing from the
/// registry; that stop, and any inheritance cycle, is reported to `diagnostics`.
std::vector<InheritedAttribute> inherited_attributes(const TypeModel& type,
                                                     const TypeRegistry& registry,
                                                     Diagnostics* diagnostics = nullptr);

}  // namespace lcom
