#pragma once

// Confusion-matrix construction and the fairness metric catalog:
// nine group-difference metrics plus two individual measures
// (Theil index and kNN consistency).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

enum class MetricId {
  statistical_parity,   // P(Yhat=1)
  base_rate,            // P(Y=1)
  equal_opportunity,    // TPR = tp/(tp+fn)
  false_positive_rate,  // FPR = fp/(fp+tn)
  true_negative_rate,   // TNR = tn/(tn+fp)
  false_omission_rate,  // FOR = fn/(fn+tn)
  predictive_parity,    // PPV = tp/(tp+fp)
  error_rate,           // (fp+fn)/total
  average_odds,         // ((FPR0-FPR1)+(TPR0-TPR1))/2
  theil,
  consistency,
};

std::string_view metric_name(MetricId id);
std::optional<MetricId> metric_from_name(std::string_view name);
bool is_group_metric(MetricId id);
const std::vector<MetricId>& all_metric_ids();
const std::vector<MetricId>& group_metric_ids();

struct ConfusionCounts {
  long long tp = 0, fp = 0, tn = 0, fn = 0;
  long long total() const { return tp + fp + tn + fn; }
  long long actual_positives() const { return tp + fn; }
  long long actual_negatives() const { return fp + tn; }
  long long predicted_positives() const { return tp + fp; }
  long long predicted_negatives() const { return fn + tn; }
};

struct GroupedConfusion {
  std::string attribute;
  ConfusionCounts group0, group1;
};

// One binomial proportion per group with its denominator.
struct BinomialPair {
  double p0 = 0.0;
  long long n0 = 0;
  double p1 = 0.0;
  long long n1 = 0;
  double diff() const { return p0 - p1; }
};

// Point estimate plus the binomial components its interval is built from.
// Group differences carry one pair; average odds carries two (TPR and FPR);
// individual metrics carry none. Differences are oriented group0 - group1
// with group identity taken verbatim from the data.
struct MetricEstimate {
  MetricId metric_id = MetricId::statistical_parity;
  double point = 0.0;
  std::optional<BinomialPair> primary;
  std::optional<BinomialPair> secondary;
  bool estimable = true;
  std::string reason;
};

GroupedConfusion confusion_by_group(const Dataset& data,
                                    const std::string& attribute);
// Same, over an explicit row multiset (bootstrap resamples).
GroupedConfusion confusion_by_group_indexed(const Dataset& data,
                                            std::size_t attribute_idx,
                                            std::span<const std::uint32_t> rows);

// Not-estimable is a value, not an error: degenerate denominators yield
// estimable = false with a reason naming the empty cell.
MetricEstimate group_metric(const GroupedConfusion& gc, MetricId id);

// Generalized entropy (alpha = 1) over benefits b = yhat - y + 1,
// with the 0*ln(0) := 0 convention.
MetricEstimate theil_index(const Dataset& data);
MetricEstimate theil_index_indexed(const Dataset& data,
                                   std::span<const std::uint32_t> rows);

// 1 - mean |yhat_i - mean(yhat over the k nearest neighbours of i)|;
// Euclidean distance on raw features, self excluded, ties broken by index.
// OpenMP-parallel over records; see ref::consistency for the serial oracle.
MetricEstimate consistency(const Dataset& data, int k);
MetricEstimate consistency_indexed(const Dataset& data, int k,
                                   std::span<const std::uint32_t> rows);

}  // namespace fairaudit
