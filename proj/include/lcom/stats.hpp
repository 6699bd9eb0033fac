#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lcom/corpus.hpp"
#include "lcom/metrics.hpp"

namespace lcom {

/// d(u, v) = sqrt(sum (u_i - v_i)^2). Throws std::invalid_argument when the
/// series differ in length.
double euclidean_distance(std::span<const double> u, std::span<const double> v);

/// Rescales each group to [0, 1] using that group's own minimum and maximum.
/// `groups[i]` is the group key of `values[i]`. A constant group maps to 0.
std::vector<double> min_max_normalize(std::span<const double> values,
                                      std::span<const std::string> groups);

struct SummaryStats {
  double maximum = 0.0;
  double minimum = 0.0;
  double median = 0.0;
  double average = 0.0;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

// Throws std::invalid_argument on an empty series.
SummaryStats summarize(std::span<const double> values);

struct AlgorithmDistance {
  Algorithm algorithm = Algorithm::Lcom1;
  double absolute = 0.0;
  double normalized = 0.0;
};

struct RepoDistances {
  std::string repo;
  std::size_t compared = 0;
  std::vector<AlgorithmDistance> distances;
};

/// A type YALCOM cannot measure, with the existing metrics that nevertheless
/// report a "cohesive-looking" value for it.
struct FalseZeroEntry {
  std::string repo;
  std::string qualified_name;
  TypeKind kind = TypeKind::Class;
  MetricVector metrics;
  std::vector<Algorithm> flagged;
};

struct DistanceReport {
  Algorithm baseline = Algorithm::Yalcom;
  std::size_t compared = 0;
  std::size_t excluded = 0;
  std::vector<AlgorithmDistance> distances;  // corpus-wide, all six algorithms
  std::vector<RepoDistances> per_repo;       // sorted by repo label
  std::vector<SummaryStats> summaries;       // per algorithm over compared records; empty when nothing compared
  std::vector<FalseZeroEntry> false_zero_audit;

  bool empty() const { return compared == 0; }
  const AlgorithmDistance& distance(Algorithm algorithm) const;
};

/// Records for which YALCOM is NotComputable are excluded from both distance
/// families and surfaced in the false-zero audit. Absolute distances use raw
/// values; normalized ones use per-repository min-max values of each series.
DistanceReport compare_to_baseline(const CorpusRun& run, Algorithm baseline);

// LCOM1/2/5 at 0 or LCOM3/4 at most 1 on a NotComputable type.
std::vector<Algorithm> false_zero_flags(const MetricVector& metrics);

}  // namespace lcom
