#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lcom/class_model.hpp"
#include "lcom/metrics.hpp"

namespace lcom {

/// Expected values for one reference case, two decimals for LCOM5 and YALCOM
/// (-1 meaning NotComputable), with the hand-assigned cohesion verdict.
struct ExpectedCase {
  std::string_view name;
  std::uint64_t lcom1;
  std::uint64_t lcom2;
  std::uint64_t lcom3;
  std::uint64_t lcom4;
  double lcom5;
  double yalcom;
  std::string_view label;

  double get(Algorithm algorithm) const;
};

const std::array<ExpectedCase, 8>& expected_cases();

// Real-valued cells may differ from the two-decimal reference by this much.
inline constexpr double kCaseTolerance = 0.005;

enum class FixtureRoute { Crm, Source };

std::string_view to_string(FixtureRoute route);

/// Registry for the eight reference cases, built from the compiled-in CRM
/// documents or Java sources.
TypeRegistry fixture_registry(FixtureRoute route);

using MetricFn = std::function<MetricVector(const TypeModel&, const TypeRegistry&)>;

struct CellResult {
  std::string case_name;
  Algorithm algorithm = Algorithm::Lcom1;
  double expected = 0.0;
  double computed = 0.0;  // NotComputable as -1
  bool matches = false;
};

struct CaseCheck {
  FixtureRoute route = FixtureRoute::Crm;
  std::vector<CellResult> cells;  // case-major, algorithm-minor

  std::vector<CellResult> mismatches() const;
  bool all_match() const { return mismatches().empty(); }
};

/// Compares `metric` on every reference case of `registry` against the
/// expected table. A case missing from the registry counts as mismatching on
/// every algorithm.
CaseCheck check_cases(const TypeRegistry& registry, FixtureRoute route, const MetricFn& metric);

// compute_all with default options.
MetricFn default_metric();

}  // namespace lcom
