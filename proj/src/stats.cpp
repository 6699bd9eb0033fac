#include "lcom/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace lcom {

double euclidean_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("euclidean_distance: series lengths differ (" +
                                std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<double> min_max_normalize(std::span<const double> values,
                                      std::span<const std::string> groups) {
  if (values.size() != groups.size())
    throw std::invalid_argument("min_max_normalize: one group key per value required");

  struct Range {
    double lo;
    double hi;
  };
  std::unordered_map<std::string_view, Range> ranges;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = ranges.try_emplace(groups[i], Range{values[i], values[i]});
    if (!inserted) {
      it->second.lo = std::min(it->second.lo, values[i]);
      it->second.hi = std::max(it->second.hi, values[i]);
    }
  }

  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto [lo, hi] = ranges.at(groups[i]);
    out[i] = hi > lo ? std::clamp((values[i] - lo) / (hi - lo), 0.0, 1.0) : 0.0;
  }
  return out;
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty series");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  SummaryStats s;
  s.minimum = sorted.front();
  s.maximum = sorted.back();
  s.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.average = sum / static_cast<double>(n);
  return s;
}

const AlgorithmDistance& DistanceReport::distance(Algorithm algorithm) const {
  for (const auto& d : distances)
    if (d.algorithm == algorithm) return d;
  throw std::out_of_range("no distance for algorithm " + std::string(to_string(algorithm)));
}

std::vector<Algorithm> false_zero_flags(const MetricVector& metrics) {
  std::vector<Algorithm> flags;
  if (metrics.lcom1 == 0) flags.push_back(Algorithm::Lcom1);
  if (metrics.lcom2 == 0) flags.push_back(Algorithm::Lcom2);
  if (metrics.lcom3 <= 1) flags.push_back(Algorithm::Lcom3);
  if (metrics.lcom4 <= 1) flags.push_back(Algorithm::Lcom4);
  if (metrics.lcom5 == 0.0) flags.push_back(Algorithm::Lcom5);
  return flags;
}

namespace {

using Series = std::vector<double>;

Series column(const std::vector<const TypeRecord*>& records, Algorithm algorithm) {
  Series out;
  out.reserve(records.size());
  for (const auto* r : records) out.push_back(r->metrics.get(algorithm).value());
  return out;
}

std::vector<AlgorithmDistance> distances_over(const std::vector<const TypeRecord*>& records,
                                              Algorithm baseline) {
  std::vector<std::string> groups;
  groups.reserve(records.size());
  for (const auto* r : records) groups.push_back(r->repo);

  const auto base = column(records, baseline);
  const auto base_norm = min_max_normalize(base, groups);

  std::vector<AlgorithmDistance> out;
  for (auto algorithm : kAllAlgorithms) {
    const auto values = column(records, algorithm);
    const auto norm = min_max_normalize(values, groups);
    out.push_back({algorithm, euclidean_distance(values, base), euclidean_distance(norm, base_norm)});
  }
  return out;
}

}  // namespace

DistanceReport compare_to_baseline(const CorpusRun& run, Algorithm baseline) {
  DistanceReport report;
  report.baseline = baseline;

  std::vector<const TypeRecord*> compared;
  for (const auto& record : run.records) {
    if (record.metrics.yalcom.computable()) {
      compared.push_back(&record);
      continue;
    }
    report.excluded++;
    auto flags = false_zero_flags(record.metrics);
    if (!flags.empty())
      report.false_zero_audit.push_back(
          {record.repo, record.qualified_name, record.metrics.kind, record.metrics, std::move(flags)});
  }
  report.compared = compared.size();
  report.distances = distances_over(compared, baseline);

  if (!compared.empty())
    for (auto algorithm : kAllAlgorithms) report.summaries.push_back(summarize(column(compared, algorithm)));

  std::map<std::string, std::vector<const TypeRecord*>> by_repo;
  for (const auto* r : compared) by_repo[r->repo].push_back(r);
  for (const auto& [repo, records] : by_repo)
    report.per_repo.push_back({repo, records.size(), distances_over(records, baseline)});
  return report;
}

}  // namespace lcom
