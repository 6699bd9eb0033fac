#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <string>

#include "lcom/class_model.hpp"

namespace lcom::testing {

struct RandomTypeSpec {
  std::size_t max_methods = 10;
  std::size_t max_attributes = 10;
  double interface_probability = 0.05;
  double static_attribute_probability = 0.25;
  double constructor_probability = 0.1;
  // Per type, a density is drawn from [0, max_*_density].
  double max_access_density = 0.6;
  double max_invoke_density = 0.3;
};

/// A valid standalone type with random access and invocation edges.
TypeModel random_type(std::mt19937_64& rng, const std::string& name, const RandomTypeSpec& spec = {});

/// A registry holding `name` and a chain of up to `max_depth` superclasses
/// with random visibilities and name clashes. The subclass accesses its own,
/// bare inherited and owner-qualified inherited attributes.
TypeRegistry random_hierarchy(std::mt19937_64& rng, const std::string& name, std::size_t max_depth = 3,
                              const RandomTypeSpec& spec = {});

struct PlantedCorpus {
  TypeRegistry registry;
  std::set<std::string> not_computable;
};

/// `total` standalone types of which exactly `planted` cannot be measured by
/// YALCOM: interfaces, classes without methods and classes without
/// attributes, in rotation. The rest are classes with methods and attributes.
PlantedCorpus planted_corpus(std::mt19937_64& rng, std::size_t total, std::size_t planted,
                             const std::string& package = "gen");

}  // namespace lcom::testing
