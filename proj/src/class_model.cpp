#include "lcom/class_model.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lcom {

std::string_view to_string(Visibility visibility) {
  switch (visibility) {
    case Visibility::Private: return "private";
    case Visibility::Package: return "package";
    case Visibility::Protected: return "protected";
    case Visibility::Public: return "public";
  }
  return "package";
}

std::string_view to_string(TypeKind kind) {
  return kind == TypeKind::Interface ? "interface" : "class";
}

std::optional<Visibility> parse_visibility(std::string_view text) {
  if (text == "private") return Visibility::Private;
  if (text == "package") return Visibility::Package;
  if (text == "protected") return Visibility::Protected;
  if (text == "public") return Visibility::Public;
  return std::nullopt;
}

std::optional<TypeKind> parse_type_kind(std::string_view text) {
  if (text == "class") return TypeKind::Class;
  if (text == "interface") return TypeKind::Interface;
  return std::nullopt;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyName: return "empty-name";
    case ViolationKind::DuplicateAttribute: return "duplicate-attribute";
    case ViolationKind::DuplicateMethod: return "duplicate-method";
    case ViolationKind::InterfaceInstanceState: return "interface-instance-state";
    case ViolationKind::SuperclassNotClass: return "superclass-not-class";
    case ViolationKind::SelfInheritance: return "self-inheritance";
    case ViolationKind::DuplicateType: return "duplicate-type";
  }
  return "unknown";
}

std::string_view TypeModel::simple_name() const {
  std::string_view name = qualified_name;
  auto dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

const AttributeModel* TypeModel::find_attribute(std::string_view name) const {
  auto it = std::find_if(attributes.begin(), attributes.end(),
                         [&](const AttributeModel& a) { return a.name == name; });
  return it == attributes.end() ? nullptr : &*it;
}

const MethodModel* TypeModel::find_method(std::string_view name, std::size_t arity) const {
  auto it = std::find_if(methods.begin(), methods.end(), [&](const MethodModel& m) {
    return m.name == name && m.arity == arity;
  });
  return it == methods.end() ? nullptr : &*it;
}

bool TypeRegistry::add(TypeModel type) {
  auto name = type.qualified_name;
  return types_.emplace(std::move(name), std::move(type)).second;
}

const TypeModel* TypeRegistry::find(std::string_view qualified_name) const {
  auto it = types_.find(qualified_name);
  return it == types_.end() ? nullptr : &it->second;
}

const TypeModel* TypeRegistry::superclass_of(const TypeModel& type) const {
  if (!type.superclass) return nullptr;
  return find(*type.superclass);
}

ValidationReport validate_type(const TypeModel& type) {
  ValidationReport report;
  auto violation = [&](ViolationKind kind, std::string message) {
    report.push_back({type.qualified_name, kind, std::move(message)});
  };

  if (type.qualified_name.empty()) violation(ViolationKind::EmptyName, "type has an empty name");
  if (type.superclass && *type.superclass == type.qualified_name)
    violation(ViolationKind::SelfInheritance, "type names itself as superclass");

  std::set<std::string_view> attribute_names;
  for (const auto& attribute : type.attributes) {
    if (attribute.name.empty()) {
      violation(ViolationKind::EmptyName, "attribute with an empty name");
      continue;
    }
    if (!attribute_names.insert(attribute.name).second)
      violation(ViolationKind::DuplicateAttribute, "duplicate attribute '" + attribute.name + "'");
    if (type.is_interface() && !attribute.is_static)
      violation(ViolationKind::InterfaceInstanceState,
                "interface declares instance attribute '" + attribute.name + "'");
  }

  std::set<std::pair<std::string_view, std::size_t>> signatures;
  for (const auto& method : type.methods) {
    if (method.name.empty()) {
      violation(ViolationKind::EmptyName, "method with an empty name");
      continue;
    }
    if (!signatures.emplace(method.name, method.arity).second)
      violation(ViolationKind::DuplicateMethod, "duplicate method '" + method.name + "/" +
                                                    std::to_string(method.arity) + "'");
  }
  return report;
}

ValidationReport validate_registry(const TypeRegistry& registry) {
  ValidationReport report;
  for (const auto& [name, type] : registry.types()) {
    auto own = validate_type(type);
    report.insert(report.end(), own.begin(), own.end());
    if (const auto* super = registry.superclass_of(type); super && super->is_interface()) {
      report.push_back({name, ViolationKind::SuperclassNotClass,
                        "superclass '" + super->qualified_name + "' is an interface"});
    }
  }
  return report;
}

std::vector<InheritedAttribute> inherited_attributes(const TypeModel& type,
                                                     const TypeRegistry& registry,
                                                     Diagnostics* diagnostics) {
  std::vector<InheritedAttribute> result;
  std::set<std::string, std::less<>> hidden;
  for (const auto& attribute : type.attributes) hidden.insert(attribute.name);

  std::set<std::string, std::less<>> visited{type.qualified_name};
  const TypeModel* current = &type;
  while (current->superclass) {
    const auto& super_name = *current->superclass;
    const TypeModel* super = registry.find(super_name);
    if (super == nullptr) {
      report(diagnostics, {type.location ? type.location->path : std::string{},
                           type.location ? type.location->line : 0, Severity::Info,
                           "superclass '" + super_name + "' of '" + current->qualified_name +
                               "' is external; inherited attributes beyond it are unknown"});
      break;
    }
    if (!visited.insert(super->qualified_name).second) {
      report(diagnostics, {type.location ? type.location->path : std::string{},
                           type.location ? type.location->line : 0, Severity::Warn,
                           "inheritance cycle through '" + super->qualified_name + "'"});
      break;
    }
    for (const auto& attribute : super->attributes) {
      // A nearer declaration hides the name whatever its visibility.
      bool shadowed = !hidden.insert(attribute.name).second;
      if (shadowed || attribute.visibility == Visibility::Private) continue;
      result.push_back({super->qualified_name, attribute});
    }
    current = super;
  }
  return result;
}

}  // namespace lcom
