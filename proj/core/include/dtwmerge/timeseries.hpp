#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dtwmerge/rng.hpp"

namespace dtwmerge {

// One univariate sequence of real-valued time steps.
class TimeSeries {
public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values) : values_(std::move(values)) {}

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }

  bool all_finite() const noexcept;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const TimeSeries& a, const TimeSeries& b) {
    return a.values_ == b.values_;
  }

private:
  std::vector<double> values_;
};

enum class Split { train, test };

struct LabeledItem {
  TimeSeries series;
  std::string label;
};

// Ordered collection of labeled series, one archive split.
struct LabeledDataset {
  std::string name;
  Split split = Split::train;
  std::vector<LabeledItem> items;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }

  // Distinct labels, in order of first appearance.
  std::vector<std::string> label_set() const;
};

// Rescale to zero mean and unit population variance. A zero-variance
// series maps to all zeros instead of erroring.
TimeSeries z_normalize(const TimeSeries& series);

bool is_z_normalized(const TimeSeries& series, double tol);

// Arithmetic mean of the series lengths, rounded to nearest (half up).
std::size_t mean_length(const LabeledDataset& dataset);

// Bring every series to mean_length(dataset): drop one uniformly random
// time step per iteration while too long; while too short, insert the
// median (mean) of one uniformly random adjacent pair between the pair.
// Labels and item order are preserved. Each item consumes an independent
// stream derived from `rng` and its index, so a fixed seed is
// bit-reproducible regardless of per-item processing order.
LabeledDataset equalize_lengths(const LabeledDataset& dataset, Rng& rng);

}  // namespace dtwmerge
