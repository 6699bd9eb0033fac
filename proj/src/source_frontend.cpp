#include "lcom/source_frontend.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "java_parser.hpp"
#include "parallel.hpp"

namespace lcom {

namespace {

using java::ParsedField;
using java::ParsedMethod;
using java::ParsedType;
using java::ParsedUnit;
using java::RefForm;

struct FlatType {
  ParsedType type;  // nested list emptied
  const ParsedUnit* unit = nullptr;
  std::vector<std::string> enclosing;  // qualified names, innermost first
};

ParsedType without_nested(const ParsedType& type) {
  ParsedType copy;
  copy.simple_name = type.simple_name;
  copy.qualified_name = type.qualified_name;
  copy.kind = type.kind;
  copy.is_static = type.is_static;
  copy.superclass = type.superclass;
  copy.line = type.line;
  copy.fields = type.fields;
  copy.methods = type.methods;
  return copy;
}

void flatten(const ParsedType& type, const ParsedUnit& unit, std::vector<std::string> enclosing,
             std::vector<FlatType>& out) {
  out.push_back({without_nested(type), &unit, enclosing});
  enclosing.insert(enclosing.begin(), type.qualified_name);
  for (const auto& nested : type.nested) flatten(nested, unit, enclosing, out);
}

// Folds `nested` into `target`, prefixing member names with the nesting path.
void fold_nested(const ParsedType& nested, const std::string& prefix,
                 const std::vector<std::string>& chain, ParsedType& target) {
  std::vector<std::string> scope{prefix};
  scope.insert(scope.end(), chain.begin(), chain.end());
  for (auto field : nested.fields) {
    field.name = prefix + field.name;
    target.fields.push_back(std::move(field));
  }
  for (auto method : nested.methods) {
    method.name = prefix + method.name;
    method.scope_prefixes = scope;
    target.methods.push_back(std::move(method));
  }
  for (const auto& deeper : nested.nested)
    fold_nested(deeper, prefix + deeper.simple_name + ".", scope, target);
}

ParsedType merge_nested(const ParsedType& top) {
  auto merged = without_nested(top);
  for (const auto& nested : top.nested)
    fold_nested(nested, nested.simple_name + ".", {""}, merged);
  return merged;
}

std::string_view last_segment(std::string_view name) {
  auto dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

class Resolver {
 public:
  Resolver(std::vector<FlatType> types, Diagnostics& diagnostics)
      : types_(std::move(types)), diagnostics_(diagnostics) {
    for (const auto& flat : types_) {
      known_.insert(flat.type.qualified_name);
      by_simple_[std::string(last_segment(flat.type.qualified_name))].push_back(
          flat.type.qualified_name);
    }
  }

  std::vector<TypeModel> resolve() {
    std::vector<TypeModel> skeletons;
    TypeRegistry registry;
    std::vector<bool> kept;
    for (const auto& flat : types_) {
      auto skeleton = skeleton_of(flat);
      bool fresh = registry.add(skeleton);
      if (!fresh)
        diagnostics_.push_back({flat.unit->path, flat.type.line, Severity::Warn,
                                "type '" + flat.type.qualified_name +
                                    "' is declared more than once; later declaration ignored"});
      kept.push_back(fresh);
      skeletons.push_back(std::move(skeleton));
    }

    std::vector<TypeModel> result;
    for (std::size_t i = 0; i < types_.size(); ++i) {
      if (!kept[i]) continue;
      result.push_back(with_relations(types_[i], std::move(skeletons[i]), registry));
    }
    return result;
  }

 private:
  std::optional<std::string> resolve_superclass(const FlatType& flat, const std::string& written) const {
    const auto& unit = *flat.unit;
    const auto dot = written.find('.');
    const std::string head = written.substr(0, dot);
    const std::string rest = dot == std::string::npos ? std::string{} : written.substr(dot);

    std::vector<std::string> candidates;
    for (const auto& outer : flat.enclosing) candidates.push_back(outer + "." + written);
    for (const auto& import : unit.single_imports)
      if (last_segment(import) == head) candidates.push_back(import + rest);
    candidates.push_back(unit.package.empty() ? written : unit.package + "." + written);
    candidates.push_back(written);
    for (const auto& package : unit.wildcard_imports) candidates.push_back(package + "." + written);

    for (const auto& candidate : candidates)
      if (known_.count(candidate)) return candidate;

    if (auto it = by_simple_.find(std::string(last_segment(written)));
        it != by_simple_.end() && it->second.size() == 1)
      return it->second.front();
    return std::nullopt;
  }

  // Best-effort name for a superclass outside the analysed sources.
  static std::string external_name(const FlatType& flat, const std::string& written) {
    const auto dot = written.find('.');
    const std::string head = written.substr(0, dot);
    const std::string rest = dot == std::string::npos ? std::string{} : written.substr(dot);
    for (const auto& import : flat.unit->single_imports)
      if (last_segment(import) == head) return import + rest;
    return written;
  }

  TypeModel skeleton_of(const FlatType& flat) {
    const auto& parsed = flat.type;
    TypeModel model;
    model.qualified_name = parsed.qualified_name;
    model.kind = parsed.kind;
    model.location = SourceLocation{flat.unit->path, parsed.line};
    if (parsed.superclass) {
      auto resolved = resolve_superclass(flat, *parsed.superclass);
      model.superclass = resolved ? *resolved : external_name(flat, *parsed.superclass);
      if (!resolved) unresolved_super_.insert(parsed.qualified_name);
    }
    for (const auto& field : parsed.fields)
      model.attributes.push_back({field.name, field.is_static, field.visibility});
    for (const auto& method : parsed.methods) {
      MethodModel m;
      m.name = method.name;
      m.arity = method.arity;
      m.is_static = method.is_static;
      m.is_constructor = method.is_constructor;
      model.methods.push_back(std::move(m));
    }
    return model;
  }

  TypeModel with_relations(const FlatType& flat, TypeModel model, const TypeRegistry& registry) {
    const auto& path = flat.unit->path;
    const auto inherited = inherited_attributes(model, registry);
    std::set<std::string, std::less<>> own_fields;
    for (const auto& a : model.attributes) own_fields.insert(a.name);
    std::set<std::pair<std::string, std::size_t>, std::less<>> own_methods;
    for (const auto& m : model.methods) own_methods.emplace(m.name, m.arity);

    auto inherited_owner = [&](const std::string& name) -> std::optional<std::string> {
      for (const auto& entry : inherited)
        if (entry.attribute.name == name) return entry.owner;
      return std::nullopt;
    };

    std::vector<std::string> unknown_bare;
    for (std::size_t mi = 0; mi < flat.type.methods.size(); ++mi) {
      const ParsedMethod& parsed = flat.type.methods[mi];
      auto& method = model.methods[mi];
      const auto& innermost = parsed.scope_prefixes.front();

      auto add_access = [&](AttributeRef ref) {
        if (std::find(method.accesses.begin(), method.accesses.end(), ref) == method.accesses.end())
          method.accesses.push_back(std::move(ref));
      };
      auto add_call = [&](MethodRef ref) {
        if (std::find(method.invokes.begin(), method.invokes.end(), ref) == method.invokes.end())
          method.invokes.push_back(std::move(ref));
      };

      for (const auto& ref : parsed.field_refs) {
        std::optional<std::string> local;
        if (ref.form == RefForm::Bare) {
          for (const auto& prefix : parsed.scope_prefixes)
            if (own_fields.count(prefix + ref.name)) {
              local = prefix + ref.name;
              break;
            }
        } else if (ref.form != RefForm::Super && own_fields.count(innermost + ref.name)) {
          local = innermost + ref.name;
        }
        if (local) {
          add_access({std::nullopt, *local});
          continue;
        }
        if (auto owner = inherited_owner(ref.name)) {
          add_access({*owner, ref.name});
          continue;
        }
        if (ref.form == RefForm::Bare) {
          if (std::find(unknown_bare.begin(), unknown_bare.end(), ref.name) == unknown_bare.end())
            unknown_bare.push_back(ref.name);
        } else {
          const char* qualifier = ref.form == RefForm::Super ? "super." : ref.form == RefForm::This ? "this." : "";
          diagnostics_.push_back({path, ref.line, Severity::Warn,
                                  "unresolved field reference '" + std::string(qualifier) + ref.name +
                                      "' in '" + model.qualified_name + "." + parsed.name +
                                      "'; dropped"});
        }
      }

      for (const auto& call : parsed.calls) {
        if (call.form == RefForm::Super) continue;
        if (call.form == RefForm::Bare) {
          for (const auto& prefix : parsed.scope_prefixes)
            if (own_methods.count({prefix + call.name, call.arity})) {
              add_call({std::nullopt, prefix + call.name, call.arity});
              break;
            }
        } else if (own_methods.count({innermost + call.name, call.arity})) {
          add_call({std::nullopt, innermost + call.name, call.arity});
        }
      }
    }

    if (unresolved_super_.count(model.qualified_name)) {
      std::string names;
      for (const auto& name : unknown_bare) {
        if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) continue;
        names += (names.empty() ? "" : ", ") + name;
      }
      if (!names.empty())
        diagnostics_.push_back({path, flat.type.line, Severity::Warn,
                                "superclass '" + *model.superclass + "' of '" + model.qualified_name +
                                    "' is not among the analyzed sources; unresolved identifiers "
                                    "that may be inherited fields: " + names});
    }
    return model;
  }

  std::vector<FlatType> types_;
  Diagnostics& diagnostics_;
  std::set<std::string, std::less<>> known_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_simple_;
  std::set<std::string, std::less<>> unresolved_super_;
};

std::vector<TypeModel> resolve_units(const std::vector<const ParsedUnit*>& units,
                                     const ExtractOptions& options, Diagnostics& diagnostics) {
  std::vector<FlatType> flat;
  for (const auto* unit : units) {
    for (const auto& type : unit->types) {
      if (options.merge_nested)
        flat.push_back({merge_nested(type), unit, {}});
      else
        flatten(type, *unit, {}, flat);
    }
  }
  return Resolver(std::move(flat), diagnostics).resolve();
}

}  // namespace

Extraction extract_types(std::string_view source, const std::string& path,
                         const ExtractOptions& options) {
  auto unit = java::parse_compilation_unit(source, path);
  Extraction result;
  result.diagnostics = unit.diagnostics;
  result.types = resolve_units({&unit}, options, result.diagnostics);
  return result;
}

DirectoryExtraction extract_sources(const std::vector<SourceFile>& files,
                                    const ExtractOptions& options) {
  std::vector<const SourceFile*> sorted;
  for (const auto& file : files) sorted.push_back(&file);
  std::sort(sorted.begin(), sorted.end(),
            [](const SourceFile* a, const SourceFile* b) { return a->path < b->path; });

  DirectoryExtraction result;
  std::vector<std::optional<ParsedUnit>> units(sorted.size());
  std::vector<Diagnostics> failures(sorted.size());
  detail::parallel_for(sorted.size(), options.workers, [&](std::size_t k) {
    try {
      units[k] = java::parse_compilation_unit(sorted[k]->text, sorted[k]->path);
    } catch (const SourceSyntaxError& e) {
      failures[k].push_back({e.path(), e.line(), Severity::Warn, "syntax error, file skipped: " + e.message()});
    }
  });

  std::vector<const ParsedUnit*> parsed;
  for (std::size_t k = 0; k < units.size(); ++k) {
    result.diagnostics.insert(result.diagnostics.end(), failures[k].begin(), failures[k].end());
    if (!units[k]) continue;
    result.diagnostics.insert(result.diagnostics.end(), units[k]->diagnostics.begin(),
                              units[k]->diagnostics.end());
    parsed.push_back(&*units[k]);
  }
  for (auto& type : resolve_units(parsed, options, result.diagnostics))
    result.registry.add(std::move(type));
  return result;
}

DirectoryExtraction extract_directory(const std::filesystem::path& root,
                                      const ExtractOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const auto status = fs::status(root, ec);
  if (ec || !fs::exists(status)) throw InputError("input path does not exist: " + root.string());

  DirectoryExtraction result;
  std::vector<fs::path> files;
  fs::path base = root;
  if (fs::is_regular_file(status)) {
    files.push_back(root);
    base = root.parent_path();
  } else {
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw InputError("cannot list " + root.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) {
        result.diagnostics.push_back({root.generic_string(), 0, Severity::Warn,
                                      "directory walk error: " + ec.message()});
        break;
      }
      if (it->is_regular_file(ec) && it->path().extension() == kSourceExtension)
        files.push_back(it->path());
    }
  }

  std::vector<std::string> relative(files.size());
  for (std::size_t i = 0; i < files.size(); ++i)
    relative[i] = base.empty() ? files[i].generic_string()
                               : files[i].lexically_relative(base).generic_string();
  std::vector<std::size_t> order(files.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return relative[a] < relative[b]; });

  std::vector<std::optional<ParsedUnit>> units(files.size());
  std::vector<Diagnostics> failures(files.size());
  detail::parallel_for(files.size(), options.workers, [&](std::size_t k) {
    const auto i = order[k];
    std::ifstream in(files[i], std::ios::binary);
    std::ostringstream buffer;
    if (!in || !(buffer << in.rdbuf())) {
      if (in && fs::file_size(files[i], ec) == 0 && !ec) {
        units[k] = java::parse_compilation_unit("", relative[i]);
        return;
      }
      failures[k].push_back({relative[i], 0, Severity::Warn, "cannot read file; skipped"});
      return;
    }
    try {
      units[k] = java::parse_compilation_unit(buffer.str(), relative[i]);
    } catch (const SourceSyntaxError& e) {
      failures[k].push_back({e.path(), e.line(), Severity::Warn,
                             "syntax error, file skipped: " + e.message()});
    }
  });

  std::vector<const ParsedUnit*> parsed;
  for (std::size_t k = 0; k < units.size(); ++k) {
    result.diagnostics.insert(result.diagnostics.end(), failures[k].begin(), failures[k].end());
    if (!units[k]) continue;
    result.diagnostics.insert(result.diagnostics.end(), units[k]->diagnostics.begin(),
                              units[k]->diagnostics.end());
    parsed.push_back(&*units[k]);
  }

  for (auto& type : resolve_units(parsed, options, result.diagnostics))
    result.registry.add(std::move(type));
  return result;
}

}  // namespace lcom
