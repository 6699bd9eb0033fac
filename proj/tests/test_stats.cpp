#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lcom/corpus.hpp"
#include "lcom/ground_truth.hpp"
#include "lcom/stats.hpp"
#include "random_types.hpp"

namespace lcom {
namespace {

std::vector<double> random_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> value(-50.0, 50.0);
  std::vector<double> out(n);
  for (auto& v : out) v = value(rng);
  return out;
}

TEST(EuclideanDistance, Examples) {
  EXPECT_DOUBLE_EQ(euclidean_distance(std::vector{0.0, 0.0}, std::vector{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(euclidean_distance(std::vector{1.0, 2.0, 3.0}, std::vector{2.0, 4.0, 6.0}), std::sqrt(14.0));
  EXPECT_DOUBLE_EQ(euclidean_distance(std::vector<double>{}, std::vector<double>{}), 0.0);
  EXPECT_THROW(euclidean_distance(std::vector{1.0}, std::vector{1.0, 2.0}), std::invalid_argument);
}

TEST(EuclideanDistance, MetricAxioms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    const auto u = random_series(rng, n);
    const auto v = random_series(rng, n);
    const auto w = random_series(rng, n);
    EXPECT_EQ(euclidean_distance(u, u), 0.0);
    EXPECT_GT(euclidean_distance(u, v), 0.0);
    EXPECT_DOUBLE_EQ(euclidean_distance(u, v), euclidean_distance(v, u));
    EXPECT_LE(euclidean_distance(u, w), euclidean_distance(u, v) + euclidean_distance(v, w) + 1e-9);
  }
}

TEST(MinMaxNormalize, Examples) {
  const std::vector<std::string> one(3, "g");
  EXPECT_EQ(min_max_normalize(std::vector{2.0, 4.0, 6.0}, one), (std::vector{0.0, 0.5, 1.0}));
  EXPECT_EQ(min_max_normalize(std::vector{5.0, 5.0}, std::vector<std::string>(2, "g")), (std::vector{0.0, 0.0}));
  const std::vector<std::string> groups{"A", "B", "A", "B"};
  EXPECT_EQ(min_max_normalize(std::vector{0.0, 1.0, 10.0, 3.0}, groups), (std::vector{0.0, 0.0, 1.0, 1.0}));
  EXPECT_TRUE(min_max_normalize(std::vector<double>{}, std::vector<std::string>{}).empty());
  EXPECT_THROW(min_max_normalize(std::vector{1.0}, std::vector<std::string>{}), std::invalid_argument);
}

TEST(MinMaxNormalize, RangeEndpointsAndIdempotence) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto values = random_series(rng, n);
    std::vector<std::string> groups(n);
    for (auto& g : groups) g = "r" + std::to_string(std::uniform_int_distribution<int>(0, 3)(rng));
    const auto norm = min_max_normalize(values, groups);
    std::map<std::string, std::pair<double, double>> range;
    for (std::size_t k = 0; k < n; ++k) {
      ASSERT_GE(norm[k], 0.0);
      ASSERT_LE(norm[k], 1.0);
      auto [it, fresh] = range.try_emplace(groups[k], norm[k], norm[k]);
      it->second.first = std::min(it->second.first, norm[k]);
      it->second.second = std::max(it->second.second, norm[k]);
    }
    std::map<std::string, std::size_t> sizes;
    for (const auto& g : groups) sizes[g]++;
    for (const auto& [g, r] : range) {
      EXPECT_EQ(r.first, 0.0);
      if (sizes[g] > 1) { EXPECT_EQ(r.second, 1.0); }
    }
    const auto again = min_max_normalize(norm, groups);
    for (std::size_t k = 0; k < n; ++k)
      if (sizes[groups[k]] > 1) { EXPECT_NEAR(again[k], norm[k], 1e-12); }
  }
}

TEST(Summarize, Examples) {
  EXPECT_EQ(summarize(std::vector{0.0, 1.0}), (SummaryStats{1.0, 0.0, 0.5, 0.5}));
  EXPECT_EQ(summarize(std::vector{7.0}), (SummaryStats{7.0, 7.0, 7.0, 7.0}));
  const auto l = summarize(std::vector{0.0, 0.0, 0.67, 0.0, 1.0, 0.0});
  EXPECT_EQ(l.median, 0.0);
  EXPECT_NEAR(l.average, 0.278, 0.0005);
  EXPECT_THROW(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST(Summarize, MatchesSortReference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto values = random_series(rng, std::uniform_int_distribution<std::size_t>(1, 51)(rng));
    const auto s = summarize(values);
    std::sort(values.begin(), values.end());
    const auto n = values.size();
    EXPECT_EQ(s.minimum, values.front());
    EXPECT_EQ(s.maximum, values.back());
    const double median = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
    EXPECT_DOUBLE_EQ(s.median, median);
    double sum = 0;
    for (double v : values) sum += v;
    EXPECT_NEAR(s.average, sum / n, 1e-9);
    EXPECT_LE(s.minimum, s.median);
    EXPECT_LE(s.median, s.maximum);
  }
}

CorpusRun fixtures_run() {
  return analyze_registries({{"cases", fixture_registry(FixtureRoute::Crm)}}, {});
}

TEST(CompareToBaseline, FixturesAgainstYalcom) {
  const auto report = compare_to_baseline(fixtures_run(), Algorithm::Yalcom);
  EXPECT_EQ(report.compared, 6U);
  EXPECT_EQ(report.excluded, 3U);
  // Cases 1-6 with exact LCOM5 (2/3, 2/3, 2/3, 1/2, 1, 5/6) and YALCOM (0, 0, 2/3, 0, 1, 0).
  const double exact = std::sqrt(4.0 / 9 + 4.0 / 9 + 0 + 1.0 / 4 + 0 + 25.0 / 36);
  EXPECT_NEAR(report.distance(Algorithm::Lcom5).absolute, exact, 1e-12);
  // The same expression on two-decimal values.
  const double two_decimals = std::sqrt(0.67 * 0.67 * 2 + 0.5 * 0.5 + 0.83 * 0.83);
  EXPECT_NEAR(report.distance(Algorithm::Lcom5).absolute, two_decimals, 0.01);
  EXPECT_EQ(report.distance(Algorithm::Yalcom).absolute, 0.0);
  EXPECT_EQ(report.distance(Algorithm::Yalcom).normalized, 0.0);
  ASSERT_EQ(report.per_repo.size(), 1U);
  EXPECT_EQ(report.per_repo[0].compared, 6U);
  EXPECT_DOUBLE_EQ(report.per_repo[0].distances[4].absolute, report.distance(Algorithm::Lcom5).absolute);
  ASSERT_EQ(report.summaries.size(), 6U);
  EXPECT_NEAR(report.summaries[5].average, (2.0 / 3 + 1) / 6, 1e-12);
}

TEST(CompareToBaseline, FalseZeroAuditListsMaskedTypes) {
  const auto report = compare_to_baseline(fixtures_run(), Algorithm::Yalcom);
  ASSERT_EQ(report.false_zero_audit.size(), 3U);
  for (const auto& entry : report.false_zero_audit) {
    EXPECT_NE(std::find(entry.flagged.begin(), entry.flagged.end(), Algorithm::Lcom2), entry.flagged.end());
    EXPECT_NE(std::find(entry.flagged.begin(), entry.flagged.end(), Algorithm::Lcom5), entry.flagged.end());
  }
}

TEST(CompareToBaseline, SelfComparisonIsZero) {
  const auto run = fixtures_run();
  for (auto baseline : kAllAlgorithms) {
    const auto report = compare_to_baseline(run, baseline);
    EXPECT_EQ(report.distance(baseline).absolute, 0.0);
    EXPECT_EQ(report.distance(baseline).normalized, 0.0);
    for (const auto& d : report.distances) {
      EXPECT_GE(d.absolute, 0.0);
      EXPECT_GE(d.normalized, 0.0);
    }
  }
}

TEST(CompareToBaseline, ConstantColumnsNormalizeToZero) {
  // Single-method types: LCOM3/4 are 1 and everything else 0 on every record.
  TypeRegistry registry;
  for (int i = 0; i < 4; ++i) {
    TypeModel t;
    t.qualified_name = "C" + std::to_string(i);
    t.attributes = {{"a", false, Visibility::Private}};
    t.methods = {{"only", 0, false, false, {{std::nullopt, "a"}}, {}}};
    registry.add(t);
  }
  const auto run = analyze_registries({{"r", registry}}, {});
  const auto report = compare_to_baseline(run, Algorithm::Lcom1);
  for (const auto& d : report.distances)
    if (d.algorithm != Algorithm::Lcom3 && d.algorithm != Algorithm::Lcom4) { EXPECT_EQ(d.absolute, 0.0); }
  for (const auto& d : report.distances) EXPECT_EQ(d.normalized, 0.0);
}

TEST(CompareToBaseline, AllNotComputableGivesEmptyReport) {
  std::mt19937_64 rng(8);
  const auto corpus = testing::planted_corpus(rng, 12, 12);
  const auto report = compare_to_baseline(analyze_registries({{"r", corpus.registry}}, {}), Algorithm::Yalcom);
  EXPECT_TRUE(report.empty());
  EXPECT_EQ(report.excluded, 12U);
  EXPECT_TRUE(report.summaries.empty());
  for (const auto& d : report.distances) EXPECT_EQ(d.absolute, 0.0);
}

TEST(CompareToBaseline, NormalizationIsPerRepository) {
  std::mt19937_64 rng(9);
  const auto a = testing::planted_corpus(rng, 30, 5, "a");
  const auto b = testing::planted_corpus(rng, 30, 5, "b");
  const auto run = analyze_registries({{"a", a.registry}, {"b", b.registry}}, {});
  const auto report = compare_to_baseline(run, Algorithm::Yalcom);
  ASSERT_EQ(report.per_repo.size(), 2U);
  double squares = 0;
  for (const auto& repo : report.per_repo) squares += std::pow(repo.distances[0].normalized, 2);
  // Per-repo scaling makes the corpus-wide normalized distance the root of
  // the summed per-repo squares.
  EXPECT_NEAR(report.distance(Algorithm::Lcom1).normalized, std::sqrt(squares), 1e-9);
}

}  // namespace
}  // namespace lcom
