#include "dtwmerge/merge.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dtwmerge/errors.hpp"

namespace dtwmerge {

SplitSample sample_split_index(std::size_t path_length, Rng& rng) {
  if (path_length < 1)
    throw InvalidInput("sample_split_index: path length must be >= 1");
  const double length = static_cast<double>(path_length);
  const double mu = length / 2.0;
  const double sigma_squared = length / 10.0;
  const double draw = rng.gaussian(mu, std::sqrt(sigma_squared));
  long long r = std::llround(draw);
  r = std::clamp<long long>(r, 1, static_cast<long long>(path_length));
  return SplitSample{static_cast<std::size_t>(r), mu, sigma_squared};
}

std::string to_string(PairingPolicy policy) {
  switch (policy) {
    case PairingPolicy::random_same_class:
      return "random";
    case PairingPolicy::round_robin_same_class:
      return "round-robin";
  }
  return "random";
}

PairingPolicy pairing_policy_from_string(const std::string& s) {
  if (s == "random" || s == "random_same_class")
    return PairingPolicy::random_same_class;
  if (s == "round-robin" || s == "round_robin" ||
      s == "round_robin_same_class")
    return PairingPolicy::round_robin_same_class;
  throw InvalidInput("unknown pairing policy: " + s);
}

namespace {

TimeSeries splice(const TimeSeries& x, const TimeSeries& y,
                  const WarpingPath& path, std::size_t r,
                  bool inclusive_suffix) {
  const PathPoint& split = path[r - 1];
  const std::size_t prefix_len = split.xi + 1;
  const std::size_t suffix_begin = inclusive_suffix ? split.yi : split.yi + 1;

  std::vector<double> out;
  out.reserve(prefix_len + (y.size() - std::min(suffix_begin, y.size())));
  out.insert(out.end(), x.values().begin(),
             x.values().begin() + static_cast<std::ptrdiff_t>(prefix_len));
  if (suffix_begin < y.size()) {
    out.insert(out.end(),
               y.values().begin() + static_cast<std::ptrdiff_t>(suffix_begin),
               y.values().end());
  }
  return TimeSeries(std::move(out));
}

}  // namespace

TimeSeries dtw_merge_at(const TimeSeries& x, const TimeSeries& y,
                        std::size_t r, bool inclusive_suffix) {
  const DtwResult aligned = dtw(x, y);
  if (r < 1 || r > aligned.path.size())
    throw InvalidIndex("dtw_merge_at: split position out of range");
  return splice(x, y, aligned.path, r, inclusive_suffix);
}

TimeSeries dtw_merge(const TimeSeries& x, const TimeSeries& y, Rng& rng,
                     bool inclusive_suffix) {
  const DtwResult aligned = dtw(x, y);
  const SplitSample sample = sample_split_index(aligned.path.size(), rng);
  return splice(x, y, aligned.path, sample.r, inclusive_suffix);
}

TimeSeries smooth_junction(const TimeSeries& series,
                           std::size_t junction_index, std::size_t window) {
  if (series.empty()) throw InvalidSeries("smooth_junction: empty series");
  if (junction_index >= series.size())
    throw InvalidIndex("smooth_junction: junction index out of range");
  if (window < 3 || window % 2 == 0)
    throw InvalidInput("smooth_junction: window must be odd and >= 3");

  const std::size_t half = window / 2;
  const std::size_t lo =
      junction_index >= half ? junction_index - half : 0;
  const std::size_t hi = std::min(junction_index + half, series.size() - 1);

  double sum = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) sum += series[i];

  std::vector<double> out = series.values();
  out[junction_index] = sum / static_cast<double>(hi - lo + 1);
  return TimeSeries(std::move(out));
}

namespace {

// Indices of all items sharing each label, in dataset order.
std::unordered_map<std::string, std::vector<std::size_t>> group_by_label(
    const LabeledDataset& dataset) {
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    groups[dataset.items[i].label].push_back(i);
  }
  return groups;
}

}  // namespace

AugmentResult augment_dataset(const LabeledDataset& train,
                              const AugmentationConfig& config) {
  if (train.empty()) throw InvalidDataset("augment_dataset: empty dataset");
  if (config.smooth &&
      (config.smooth_window < 3 || config.smooth_window % 2 == 0))
    throw InvalidInput("augment_dataset: smooth window must be odd and >= 3");

  const auto groups = group_by_label(train);

  AugmentResult result;
  result.dataset.name = train.name;
  result.dataset.split = train.split;
  result.dataset.items = train.items;
  result.dataset.items.reserve(train.size() * (1 + config.factor));

  for (std::size_t replica = 0; replica < config.factor; ++replica) {
    for (std::size_t i = 0; i < train.size(); ++i) {
      const LabeledItem& source = train.items[i];
      Rng rng = Rng::derive(config.seed, i, replica);

      const std::vector<std::size_t>& classmates = groups.at(source.label);
      std::size_t partner = i;
      if (classmates.size() > 1) {
        switch (config.pairing) {
          case PairingPolicy::random_same_class: {
            // uniform over classmates other than the source itself
            std::size_t pick = rng.uniform_index(classmates.size() - 1);
            std::size_t count = 0;
            for (std::size_t idx : classmates) {
              if (idx == i) continue;
              if (count == pick) {
                partner = idx;
                break;
              }
              ++count;
            }
            break;
          }
          case PairingPolicy::round_robin_same_class: {
            std::size_t pos = 0;
            std::vector<std::size_t> others;
            others.reserve(classmates.size() - 1);
            for (std::size_t idx : classmates) {
              if (idx != i) others.push_back(idx);
            }
            pos = replica % others.size();
            partner = others[pos];
            break;
          }
        }
      } else {
        ++result.self_merge_count;
      }

      const DtwResult aligned = dtw(source.series, train.items[partner].series);
      const SplitSample sample = sample_split_index(aligned.path.size(), rng);
      TimeSeries merged = splice(source.series, train.items[partner].series,
                                 aligned.path, sample.r,
                                 config.inclusive_suffix);
      if (config.smooth) {
        const std::size_t prefix_len = aligned.path[sample.r - 1].xi + 1;
        if (prefix_len < merged.size()) {
          merged = smooth_junction(merged, prefix_len - 1, config.smooth_window);
        }
      }
      result.dataset.items.push_back(LabeledItem{std::move(merged), source.label});
    }
  }
  return result;
}

}  // namespace dtwmerge
