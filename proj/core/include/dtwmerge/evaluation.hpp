#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtwmerge/timeseries.hpp"

namespace dtwmerge {

struct EvaluationReport {
  std::string dataset_name;
  double accuracy = 0.0;
  double error = 0.0;  // 1 - accuracy
  std::size_t n_classes = 0;
  double pce = 0.0;  // error / n_classes
  std::string config_fingerprint;
};

struct ComparisonEntry {
  std::string name;
  double baseline_accuracy = 0.0;
  double augmented_accuracy = 0.0;
};

struct ComparisonSummary {
  std::vector<ComparisonEntry> per_dataset;
  double mpce_baseline = 0.0;
  double mpce_augmented = 0.0;
  // t-test over paired accuracies (augmented - baseline); requires at
  // least two datasets, t_test_valid is false otherwise.
  bool t_test_valid = false;
  double t_value = 0.0;
  double p_value = 1.0;
  double mean_accuracy_delta = 0.0;
};

// Label of the DTW-nearest train series for each test series; distance
// ties go to the lowest train index. `band_radius` switches to the
// Sakoe-Chiba constrained distance. `jobs` parallelizes across test
// items; the result does not depend on scheduling.
std::vector<std::string> nn1_dtw_classify(
    const LabeledDataset& train, const LabeledDataset& test,
    std::optional<std::size_t> band_radius = std::nullopt,
    std::size_t jobs = 1);

double accuracy(const std::vector<std::string>& predicted,
                const std::vector<std::string>& actual);

// Per-class error: test error divided by the class count.
double pce(double error, std::size_t n_classes);

// Mean per-class error across datasets.
double mpce(const std::vector<double>& pces);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
};

// Paired t statistic over d = a - b with sample standard deviation and a
// two-sided p from the t distribution with n-1 degrees of freedom. All
// differences zero yields t = 0, p = 1.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

// Two-sided tail probability of the t distribution (regularized
// incomplete beta).
double student_t_two_sided_p(double t, double dof);

// Classify `test` against `train` and fill a report. Validates that every
// test label exists in the train split.
EvaluationReport evaluate_dataset(const LabeledDataset& train,
                                  const LabeledDataset& test,
                                  std::optional<std::size_t> band_radius,
                                  std::size_t jobs,
                                  const std::string& config_fingerprint);

// Pair reports by dataset name (sorted; the name sets must match) and
// aggregate MPCE, accuracy deltas and the paired t-test.
ComparisonSummary compare_runs(std::vector<EvaluationReport> baseline,
                               std::vector<EvaluationReport> augmented);

}  // namespace dtwmerge
