#include "dtwmerge/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "dtwmerge/dtw.hpp"
#include "dtwmerge/errors.hpp"
#include "parallel.hpp"

namespace dtwmerge {

std::vector<std::string> nn1_dtw_classify(const LabeledDataset& train,
                                          const LabeledDataset& test,
                                          std::optional<std::size_t> band_radius,
                                          std::size_t jobs) {
  if (train.empty() || test.empty())
    throw InvalidDataset("nn1_dtw_classify: empty split");

  std::vector<std::string> predictions(test.size());
  detail::parallel_for(test.size(), jobs, [&](std::size_t i) {
    const TimeSeries& query = test.items[i].series;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t j = 0; j < train.size(); ++j) {
      const double d =
          band_radius ? dtw_banded_distance(query, train.items[j].series,
                                            *band_radius)
                      : dtw_distance(query, train.items[j].series);
      if (d < best) {  // strict: ties keep the lowest train index
        best = d;
        best_index = j;
      }
    }
    predictions[i] = train.items[best_index].label;
  });
  return predictions;
}

double accuracy(const std::vector<std::string>& predicted,
                const std::vector<std::string>& actual) {
  if (predicted.size() != actual.size())
    throw InvalidInput("accuracy: length mismatch");
  if (predicted.empty()) throw InvalidInput("accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == actual[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

double pce(double error, std::size_t n_classes) {
  if (!(error >= 0.0 && error <= 1.0))
    throw InvalidInput("pce: error must be in [0, 1]");
  if (n_classes < 1) throw InvalidInput("pce: class count must be >= 1");
  return error / static_cast<double>(n_classes);
}

double mpce(const std::vector<double>& pces) {
  if (pces.empty()) throw InvalidInput("mpce: empty list");
  double sum = 0.0;
  for (double v : pces) sum += v;
  return sum / static_cast<double>(pces.size());
}

namespace {

// Continued fraction for the regularized incomplete beta (Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

double student_t_two_sided_p(double t, double dof) {
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  const double x = dof / (dof + t * t);
  return regularized_incomplete_beta(dof / 2.0, 0.5, x);
}

TTestResult paired_t_test(std::span<const double> a,
                          std::span<const double> b) {
  if (a.size() != b.size())
    throw InvalidInput("paired_t_test: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) throw InvalidInput("paired_t_test: need at least 2 pairs");

  std::vector<double> d(n);
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a[i] - b[i];
    if (d[i] != 0.0) all_zero = false;
  }
  if (all_zero) return TTestResult{0.0, 1.0};

  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(n);

  double sq = 0.0;
  for (double v : d) {
    const double dev = v - mean;
    sq += dev * dev;
  }
  const double sd = std::sqrt(sq / static_cast<double>(n - 1));

  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  return TTestResult{t, student_t_two_sided_p(t, static_cast<double>(n - 1))};
}

EvaluationReport evaluate_dataset(const LabeledDataset& train,
                                  const LabeledDataset& test,
                                  std::optional<std::size_t> band_radius,
                                  std::size_t jobs,
                                  const std::string& config_fingerprint) {
  if (train.empty() || test.empty())
    throw InvalidDataset("evaluate_dataset: empty split");

  std::unordered_set<std::string> train_labels;
  for (const auto& item : train.items) train_labels.insert(item.label);
  for (const auto& item : test.items) {
    if (!train_labels.contains(item.label))
      throw InvalidDataset("evaluate_dataset: test label '" + item.label +
                           "' absent from train split");
  }

  const std::vector<std::string> predicted =
      nn1_dtw_classify(train, test, band_radius, jobs);
  std::vector<std::string> actual;
  actual.reserve(test.size());
  for (const auto& item : test.items) actual.push_back(item.label);

  EvaluationReport report;
  report.dataset_name = test.name.empty() ? train.name : test.name;
  report.accuracy = accuracy(predicted, actual);
  report.error = 1.0 - report.accuracy;
  report.n_classes = train_labels.size();
  report.pce = pce(report.error, report.n_classes);
  report.config_fingerprint = config_fingerprint;
  return report;
}

ComparisonSummary compare_runs(std::vector<EvaluationReport> baseline,
                               std::vector<EvaluationReport> augmented) {
  if (baseline.size() != augmented.size())
    throw DatasetMismatch("compare_runs: report counts differ (" +
                          std::to_string(baseline.size()) + " vs " +
                          std::to_string(augmented.size()) + ")");
  if (baseline.empty()) throw InvalidInput("compare_runs: no reports");

  auto by_name = [](const EvaluationReport& a, const EvaluationReport& b) {
    return a.dataset_name < b.dataset_name;
  };
  std::sort(baseline.begin(), baseline.end(), by_name);
  std::sort(augmented.begin(), augmented.end(), by_name);

  ComparisonSummary summary;
  std::vector<double> pces_baseline, pces_augmented;
  std::vector<double> accs_baseline, accs_augmented;
  for (std::size_t i = 0; i < baseline.size(); ++i) {
    if (baseline[i].dataset_name != augmented[i].dataset_name)
      throw DatasetMismatch("compare_runs: dataset sets differ ('" +
                            baseline[i].dataset_name + "' vs '" +
                            augmented[i].dataset_name + "')");
    summary.per_dataset.push_back(ComparisonEntry{baseline[i].dataset_name,
                                                  baseline[i].accuracy,
                                                  augmented[i].accuracy});
    pces_baseline.push_back(baseline[i].pce);
    pces_augmented.push_back(augmented[i].pce);
    accs_baseline.push_back(baseline[i].accuracy);
    accs_augmented.push_back(augmented[i].accuracy);
  }

  summary.mpce_baseline = mpce(pces_baseline);
  summary.mpce_augmented = mpce(pces_augmented);

  double delta_sum = 0.0;
  for (std::size_t i = 0; i < accs_baseline.size(); ++i)
    delta_sum += accs_augmented[i] - accs_baseline[i];
  summary.mean_accuracy_delta =
      delta_sum / static_cast<double>(accs_baseline.size());

  if (baseline.size() >= 2) {
    const TTestResult tt = paired_t_test(accs_augmented, accs_baseline);
    summary.t_test_valid = true;
    summary.t_value = tt.t;
    summary.p_value = tt.p;
  }
  return summary;
}

}  // namespace dtwmerge
