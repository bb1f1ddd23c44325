#include "dtwmerge/timeseries.hpp"

#include <algorithm>
#include <cmath>

#include "dtwmerge/errors.hpp"

namespace dtwmerge {

bool TimeSeries::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

std::vector<std::string> LabeledDataset::label_set() const {
  std::vector<std::string> labels;
  for (const auto& item : items) {
    if (std::find(labels.begin(), labels.end(), item.label) == labels.end()) {
      labels.push_back(item.label);
    }
  }
  return labels;
}

namespace {

void mean_and_stddev(const std::vector<double>& v, double& mean,
                     double& stddev) {
  double sum = 0.0;
  for (double x : v) sum += x;
  mean = sum / static_cast<double>(v.size());
  double sq = 0.0;
  for (double x : v) {
    const double d = x - mean;
    sq += d * d;
  }
  stddev = std::sqrt(sq / static_cast<double>(v.size()));
}

}  // namespace

TimeSeries z_normalize(const TimeSeries& series) {
  if (series.empty()) throw InvalidSeries("z_normalize: empty series");
  if (!series.all_finite())
    throw InvalidSeries("z_normalize: non-finite value");

  double mean = 0.0, stddev = 0.0;
  mean_and_stddev(series.values(), mean, stddev);

  std::vector<double> out(series.size());
  if (stddev == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
  } else {
    for (std::size_t i = 0; i < series.size(); ++i) {
      out[i] = (series[i] - mean) / stddev;
    }
  }
  return TimeSeries(std::move(out));
}

bool is_z_normalized(const TimeSeries& series, double tol) {
  if (series.empty()) throw InvalidSeries("is_z_normalized: empty series");
  double mean = 0.0, stddev = 0.0;
  mean_and_stddev(series.values(), mean, stddev);
  return std::abs(mean) <= tol && std::abs(stddev - 1.0) <= tol;
}

std::size_t mean_length(const LabeledDataset& dataset) {
  if (dataset.empty()) throw InvalidDataset("mean_length: empty dataset");
  std::uint64_t sum = 0;
  for (const auto& item : dataset.items) sum += item.series.size();
  const std::uint64_t n = dataset.items.size();
  // round(sum / n) with ties rounding half up
  return static_cast<std::size_t>((2 * sum + n) / (2 * n));
}

namespace {

std::vector<double> equalize_one(const std::vector<double>& in,
                                 std::size_t target, Rng& rng) {
  std::vector<double> v = in;
  while (v.size() > target) {
    const std::size_t k = rng.uniform_index(v.size());
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
  }
  while (v.size() < target) {
    if (v.size() == 1) {
      v.push_back(v.front());
      continue;
    }
    const std::size_t k = rng.uniform_index(v.size() - 1);
    const double median = (v[k] + v[k + 1]) / 2.0;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(k) + 1, median);
  }
  return v;
}

}  // namespace

LabeledDataset equalize_lengths(const LabeledDataset& dataset, Rng& rng) {
  if (dataset.empty()) throw InvalidDataset("equalize_lengths: empty dataset");
  for (const auto& item : dataset.items) {
    if (item.series.empty())
      throw InvalidSeries("equalize_lengths: empty series");
  }

  const std::size_t target = mean_length(dataset);

  LabeledDataset out;
  out.name = dataset.name;
  out.split = dataset.split;
  out.items.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& item = dataset.items[i];
    if (item.series.size() == target) {
      out.items.push_back(item);
      continue;
    }
    Rng item_rng = Rng::derive(rng.next_u64(), i);
    out.items.push_back(LabeledItem{
        TimeSeries(equalize_one(item.series.values(), target, item_rng)),
        item.label});
  }
  return out;
}

}  // namespace dtwmerge
