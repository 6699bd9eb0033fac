#include "lcom/ground_truth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "embedded_fixtures.hpp"
#include "lcom/crm.hpp"
#include "lcom/source_frontend.hpp"

namespace lcom {

namespace {

constexpr std::string_view kCohesive = "Cohesive";
constexpr std::string_view kPartial = "Partially cohesive";
constexpr std::string_view kIncohesive = "Incohesive";
constexpr std::string_view kUndetermined = "Could not be determined";

const std::array<ExpectedCase, 8> kExpected = {{
    {"Case1", 1, 0, 1, 1, 0.67, 0.00, kCohesive},
    {"Case2", 2, 1, 2, 2, 0.67, 0.00, kCohesive},
    {"Case3", 2, 1, 2, 2, 0.67, 0.67, kPartial},
    {"Case4", 2, 1, 2, 2, 0.50, 0.00, kCohesive},
    {"Case5", 3, 3, 3, 3, 1.00, 1.00, kIncohesive},
    {"Case6", 2, 1, 2, 1, 0.83, 0.00, kCohesive},
    {"Case7", 3, 0, 3, 3, 0.00, -1.0, kUndetermined},
    {"Case8", 3, 0, 3, 2, 0.00, -1.0, kUndetermined},
}};

bool integral(Algorithm algorithm) {
  return algorithm != Algorithm::Lcom5 && algorithm != Algorithm::Yalcom;
}

}  // namespace

double ExpectedCase::get(Algorithm algorithm) const {
  switch (algorithm) {
    case Algorithm::Lcom1: return static_cast<double>(lcom1);
    case Algorithm::Lcom2: return static_cast<double>(lcom2);
    case Algorithm::Lcom3: return static_cast<double>(lcom3);
    case Algorithm::Lcom4: return static_cast<double>(lcom4);
    case Algorithm::Lcom5: return lcom5;
    case Algorithm::Yalcom: return yalcom;
  }
  return 0.0;
}

const std::array<ExpectedCase, 8>& expected_cases() { return kExpected; }

std::string_view to_string(FixtureRoute route) {
  return route == FixtureRoute::Crm ? "crm" : "source";
}

TypeRegistry fixture_registry(FixtureRoute route) {
  TypeRegistry registry;
  const std::string_view prefix = route == FixtureRoute::Crm ? "crm/" : "source/";

  if (route == FixtureRoute::Crm) {
    for (const auto& file : detail::embedded_fixtures()) {
      if (!file.name.starts_with(prefix)) continue;
      const auto parsed = parse_crm(file.text);
      for (const auto& [name, type] : parsed.types())
        if (!registry.add(type)) throw std::logic_error("duplicate fixture type " + name);
    }
    return registry;
  }

  std::vector<SourceFile> files;
  for (const auto& file : detail::embedded_fixtures())
    if (file.name.starts_with(prefix)) files.push_back({std::string(file.name.substr(prefix.size())), file.text});
  return extract_sources(files).registry;
}

std::vector<CellResult> CaseCheck::mismatches() const {
  std::vector<CellResult> out;
  for (const auto& cell : cells)
    if (!cell.matches) out.push_back(cell);
  return out;
}

CaseCheck check_cases(const TypeRegistry& registry, FixtureRoute route, const MetricFn& metric) {
  CaseCheck check;
  check.route = route;
  for (const auto& expected : kExpected) {
    const auto* type = registry.find(expected.name);
    std::optional<MetricVector> computed;
    if (type != nullptr) computed = metric(*type, registry);
    for (auto algorithm : kAllAlgorithms) {
      CellResult cell{std::string(expected.name), algorithm, expected.get(algorithm),
                      std::numeric_limits<double>::quiet_NaN(), false};
      if (computed) {
        const auto outcome = computed->get(algorithm);
        cell.computed = outcome.reported();
        if (algorithm == Algorithm::Yalcom && expected.yalcom < 0)
          cell.matches = !outcome.computable();
        else if (!outcome.computable())
          cell.matches = false;
        else if (integral(algorithm))
          cell.matches = cell.computed == cell.expected;
        else
          cell.matches = std::abs(cell.computed - cell.expected) <= kCaseTolerance;
      }
      check.cells.push_back(std::move(cell));
    }
  }
  return check;
}

MetricFn default_metric() {
  return [](const TypeModel& type, const TypeRegistry& registry) { return compute_all(type, registry); };
}

}  // namespace lcom
