#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lcom/class_model.hpp"
#include "lcom/diagnostics.hpp"
#include "lcom/member_graph.hpp"

namespace lcom {

struct MetricOptions {
  // Constructors touch most fields; they are left out unless asked for.
  bool include_constructors = false;
  // Only the interface / no-method guards make YALCOM NotComputable; a class
  // without any attribute is then measured like any other.
  bool strict_algorithm1 = false;

  friend bool operator==(const MetricOptions&, const MetricOptions&) = default;
};

/// Either a real value or the explicit "cannot be measured" outcome. The
/// sentinel is only materialized as -1 at serialization boundaries.
class MetricOutcome {
 public:
  static constexpr double kReportedSentinel = -1.0;

  static MetricOutcome not_computable() { return MetricOutcome{}; }
  static MetricOutcome of(double value) { return MetricOutcome{value}; }

  bool computable() const { return value_.has_value(); }
  // Throws std::bad_optional_access when not computable.
  double value() const { return value_.value(); }
  double reported() const { return value_.value_or(kReportedSentinel); }

  friend bool operator==(const MetricOutcome&, const MetricOutcome&) = default;

 private:
  MetricOutcome() = default;
  explicit MetricOutcome(double value) : value_(value) {}

  std::optional<double> value_;
};

enum class Algorithm { Lcom1, Lcom2, Lcom3, Lcom4, Lcom5, Yalcom };

inline constexpr std::array<Algorithm, 6> kAllAlgorithms = {
    Algorithm::Lcom1, Algorithm::Lcom2, Algorithm::Lcom3,
    Algorithm::Lcom4, Algorithm::Lcom5, Algorithm::Yalcom};

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct MetricVector {
  std::uint64_t lcom1 = 0;
  std::uint64_t lcom2 = 0;
  std::uint64_t lcom3 = 0;
  std::uint64_t lcom4 = 0;
  double lcom5 = 0.0;
  MetricOutcome yalcom = MetricOutcome::not_computable();
  std::size_t n_methods = 0;     // methods considered under the run options
  std::size_t n_attributes = 0;  // attributes declared by the type, statics included
  TypeKind kind = TypeKind::Class;

  MetricOutcome get(Algorithm algorithm) const;

  friend bool operator==(const MetricVector&, const MetricVector&) = default;
};

/// Pairs of considered methods whose instance-attribute sets are disjoint
/// (`disjoint`, P) or overlap (`sharing`, Q).
struct PairCounts {
  std::uint64_t disjoint = 0;
  std::uint64_t sharing = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

// Methods entering every metric: declaration order, constructors dropped
// unless options.include_constructors.
std::vector<const MethodModel*> considered_methods(const TypeModel& type,
                                                   const MetricOptions& options = {});

// LCOM1-5 only look at attributes declared by the type itself. LCOM1-4 ignore
// static attributes; LCOM5 counts them.
PairCounts shared_pairs(const TypeModel& type, const MetricOptions& options = {});
std::uint64_t lcom1(const TypeModel& type, const MetricOptions& options = {});
std::uint64_t lcom2(const TypeModel& type, const MetricOptions& options = {});
std::uint64_t lcom3(const TypeModel& type, const MetricOptions& options = {});
std::uint64_t lcom4(const TypeModel& type, const MetricOptions& options = {});
double lcom5(const TypeModel& type, const MetricOptions& options = {});

/// Vertices: considered methods, declared attributes (statics included), then
/// inherited attributes nearest-first. Edges: accesses to any of those
/// attributes and invocations between considered methods of the type. Calls
/// into other types are ignored; references that should resolve but do not are
/// reported to `diagnostics` and dropped.
MemberGraph build_member_graph(const TypeModel& type, const TypeRegistry& registry,
                               const MetricOptions& options = {},
                               Diagnostics* diagnostics = nullptr);

/// Method-bearing components of the member graph divided by the method count,
/// or 0 when everything is connected. NotComputable for interfaces, types
/// without methods and (unless strict_algorithm1) types whose graph has no
/// attribute vertex.
MetricOutcome yalcom(const TypeModel& type, const TypeRegistry& registry,
                     const MetricOptions& options = {});

MetricVector compute_all(const TypeModel& type, const TypeRegistry& registry,
                         const MetricOptions& options = {});

}  // namespace lcom
