#include "lcom/metrics.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace lcom {

namespace {

bool refers_to_type(const std::optional<std::string>& owner, const TypeModel& type) {
  return !owner || *owner == type.qualified_name;
}

// Attribute sets over a fixed attribute universe, one bit per attribute.
class AttributeSet {
 public:
  explicit AttributeSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool intersects(const AttributeSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Index of each declared attribute selected by `keep`, keyed by name.
template <typename Pred>
std::map<std::string_view, std::size_t> index_attributes(const TypeModel& type, Pred keep) {
  std::map<std::string_view, std::size_t> index;
  for (const auto& attribute : type.attributes)
    if (keep(attribute)) index.emplace(attribute.name, index.size());
  return index;
}

std::map<std::string_view, std::size_t> instance_attribute_index(const TypeModel& type) {
  return index_attributes(type, [](const AttributeModel& a) { return !a.is_static; });
}

std::vector<AttributeSet> instance_access_sets(const TypeModel& type,
                                               const std::vector<const MethodModel*>& methods) {
  const auto index = instance_attribute_index(type);
  std::vector<AttributeSet> sets(methods.size(), AttributeSet(index.size()));
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (const auto& ref : methods[i]->accesses) {
      if (!refers_to_type(ref.owner, type)) continue;
      if (auto it = index.find(ref.member); it != index.end()) sets[i].insert(it->second);
    }
  }
  return sets;
}

// Method/instance-attribute graph used by LCOM3 and LCOM4. Two methods land in
// the same component exactly when a chain of shared attributes (and, with
// invocations, calls) links them.
std::size_t intra_type_components(const TypeModel& type, const MetricOptions& options,
                                  bool with_invocations) {
  const auto methods = considered_methods(type, options);
  const auto index = instance_attribute_index(type);

  MemberGraph graph;
  std::map<std::pair<std::string_view, std::size_t>, std::size_t> method_ids;
  for (const auto* method : methods) {
    auto id = graph.add_vertex({MemberVertex::Kind::Method, method->name, method->arity,
                                type.qualified_name, method->is_static});
    method_ids.emplace(std::pair{std::string_view{method->name}, method->arity}, id);
  }
  std::vector<std::size_t> attribute_ids(index.size());
  for (const auto& [name, slot] : index)
    attribute_ids[slot] = graph.add_vertex(
        {MemberVertex::Kind::Attribute, std::string(name), 0, type.qualified_name, false});

  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (const auto& ref : methods[i]->accesses) {
      if (!refers_to_type(ref.owner, type)) continue;
      if (auto it = index.find(ref.member); it != index.end())
        graph.add_edge(i, attribute_ids[it->second]);
    }
    if (!with_invocations) continue;
    for (const auto& call : methods[i]->invokes) {
      if (!refers_to_type(call.owner, type)) continue;
      if (auto it = method_ids.find({call.member, call.arity}); it != method_ids.end())
        graph.add_edge(i, it->second);
    }
  }
  return method_component_count(graph);
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Lcom1: return "lcom1";
    case Algorithm::Lcom2: return "lcom2";
    case Algorithm::Lcom3: return "lcom3";
    case Algorithm::Lcom4: return "lcom4";
    case Algorithm::Lcom5: return "lcom5";
    case Algorithm::Yalcom: return "yalcom";
  }
  return "yalcom";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (auto algorithm : kAllAlgorithms)
    if (to_string(algorithm) == text) return algorithm;
  return std::nullopt;
}

MetricOutcome MetricVector::get(Algorithm algorithm) const {
  switch (algorithm) {
    case Algorithm::Lcom1: return MetricOutcome::of(static_cast<double>(lcom1));
    case Algorithm::Lcom2: return MetricOutcome::of(static_cast<double>(lcom2));
    case Algorithm::Lcom3: return MetricOutcome::of(static_cast<double>(lcom3));
    case Algorithm::Lcom4: return MetricOutcome::of(static_cast<double>(lcom4));
    case Algorithm::Lcom5: return MetricOutcome::of(lcom5);
    case Algorithm::Yalcom: return yalcom;
  }
  return yalcom;
}

std::vector<const MethodModel*> considered_methods(const TypeModel& type,
                                                   const MetricOptions& options) {
  std::vector<const MethodModel*> methods;
  for (const auto& method : type.methods)
    if (options.include_constructors || !method.is_constructor) methods.push_back(&method);
  return methods;
}

PairCounts shared_pairs(const TypeModel& type, const MetricOptions& options) {
  const auto methods = considered_methods(type, options);
  const auto sets = instance_access_sets(type, methods);
  PairCounts counts;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].intersects(sets[j]))
        ++counts.sharing;
      else
        ++counts.disjoint;
    }
  }
  return counts;
}

std::uint64_t lcom1(const TypeModel& type, const MetricOptions& options) {
  return shared_pairs(type, options).disjoint;
}

std::uint64_t lcom2(const TypeModel& type, const MetricOptions& options) {
  if (instance_attribute_index(type).empty()) return 0;
  auto [p, q] = shared_pairs(type, options);
  return p > q ? p - q : 0;
}

std::uint64_t lcom3(const TypeModel& type, const MetricOptions& options) {
  return intra_type_components(type, options, false);
}

std::uint64_t lcom4(const TypeModel& type, const MetricOptions& options) {
  return intra_type_components(type, options, true);
}

double lcom5(const TypeModel& type, const MetricOptions& options) {
  const auto methods = considered_methods(type, options);
  const auto index = index_attributes(type, [](const AttributeModel&) { return true; });
  const auto m = static_cast<double>(methods.size());
  const auto a = static_cast<double>(index.size());
  if (index.empty() || methods.size() <= 1) return 0.0;

  std::vector<AttributeSet> sets(methods.size(), AttributeSet(index.size()));
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (const auto& ref : methods[i]->accesses) {
      if (!refers_to_type(ref.owner, type)) continue;
      if (auto it = index.find(ref.member); it != index.end()) sets[i].insert(it->second);
    }
  }
  double accessors = 0.0;  // sum over attributes of the number of accessing methods
  for (std::size_t j = 0; j < index.size(); ++j)
    for (const auto& set : sets) accessors += set.contains(j) ? 1.0 : 0.0;

  return (m - accessors / a) / (m - 1.0);
}

MemberGraph build_member_graph(const TypeModel& type, const TypeRegistry& registry,
                               const MetricOptions& options, Diagnostics* diagnostics) {
  MemberGraph graph;
  const auto methods = considered_methods(type, options);
  const std::string path = type.location ? type.location->path : std::string{};
  const std::size_t line = type.location ? type.location->line : 0;

  std::map<std::pair<std::string_view, std::size_t>, std::size_t> method_ids;
  for (const auto* method : methods) {
    auto id = graph.add_vertex({MemberVertex::Kind::Method, method->name, method->arity,
                                type.qualified_name, method->is_static});
    method_ids.emplace(std::pair{std::string_view{method->name}, method->arity}, id);
  }

  std::map<std::string_view, std::size_t> own_ids;
  for (const auto& attribute : type.attributes) {
    own_ids.emplace(attribute.name,
                    graph.add_vertex({MemberVertex::Kind::Attribute, attribute.name, 0,
                                      type.qualified_name, attribute.is_static}));
  }

  const auto inherited = inherited_attributes(type, registry, diagnostics);
  std::map<std::string_view, std::size_t> inherited_by_name;
  std::map<std::pair<std::string_view, std::string_view>, std::size_t> inherited_by_owner;
  for (const auto& entry : inherited) {
    auto id = graph.add_vertex({MemberVertex::Kind::Attribute, entry.attribute.name, 0,
                                entry.owner, entry.attribute.is_static});
    inherited_by_name.emplace(entry.attribute.name, id);  // nearest ancestor wins
    inherited_by_owner.emplace(std::pair{std::string_view{entry.owner},
                                         std::string_view{entry.attribute.name}},
                               id);
  }

  auto unresolved = [&](const MethodModel& method, std::string what) {
    report(diagnostics, {path, line, Severity::Warn,
                         "unresolved " + what + " in '" + type.qualified_name + "." +
                             method.name + "'; reference dropped"});
  };

  for (std::size_t i = 0; i < methods.size(); ++i) {
    const auto& method = *methods[i];
    for (const auto& ref : method.accesses) {
      std::optional<std::size_t> target;
      if (refers_to_type(ref.owner, type)) {
        if (auto it = own_ids.find(ref.member); it != own_ids.end())
          target = it->second;
        else if (auto inh = inherited_by_name.find(ref.member);
                 !ref.owner && inh != inherited_by_name.end())
          target = inh->second;
      } else if (auto it = inherited_by_owner.find({*ref.owner, ref.member});
                 it != inherited_by_owner.end()) {
        target = it->second;
      }
      if (target)
        graph.add_edge(i, *target);
      else
        unresolved(method, "attribute reference '" +
                               (ref.owner ? *ref.owner + "#" : std::string{}) + ref.member + "'");
    }
    for (const auto& call : method.invokes) {
      if (!refers_to_type(call.owner, type)) continue;
      if (auto it = method_ids.find({call.member, call.arity}); it != method_ids.end()) {
        graph.add_edge(i, it->second);
      } else if (type.find_method(call.member, call.arity) == nullptr) {
        unresolved(method, "method reference '" + call.member + "/" +
                               std::to_string(call.arity) + "'");
      }
    }
  }
  return graph;
}

MetricOutcome yalcom(const TypeModel& type, const TypeRegistry& registry,
                     const MetricOptions& options) {
  const auto methods = considered_methods(type, options);
  if (type.is_interface() || methods.empty()) return MetricOutcome::not_computable();

  const auto graph = build_member_graph(type, registry, options);
  if (!options.strict_algorithm1 && graph.attribute_count() == 0)
    return MetricOutcome::not_computable();

  const auto components = method_component_count(graph);
  if (components <= 1) return MetricOutcome::of(0.0);
  return MetricOutcome::of(static_cast<double>(components) / static_cast<double>(methods.size()));
}

MetricVector compute_all(const TypeModel& type, const TypeRegistry& registry,
                         const MetricOptions& options) {
  MetricVector vector;
  const auto pairs = shared_pairs(type, options);
  vector.lcom1 = pairs.disjoint;
  vector.lcom2 = lcom2(type, options);
  vector.lcom3 = lcom3(type, options);
  vector.lcom4 = lcom4(type, options);
  vector.lcom5 = lcom5(type, options);
  vector.yalcom = yalcom(type, registry, options);
  vector.n_methods = considered_methods(type, options).size();
  vector.n_attributes = type.attributes.size();
  vector.kind = type.kind;
  return vector;
}

}  // namespace lcom
