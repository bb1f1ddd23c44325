#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "dtwmerge/dtw.hpp"
#include "dtwmerge/rng.hpp"
#include "dtwmerge/timeseries.hpp"

namespace dtwmerge {

// A split point along a warping path of length L. r is the 1-based path
// position, drawn from N(L/2, L/10), rounded to nearest and clamped to
// [1, L].
struct SplitSample {
  std::size_t r;
  double mu;
  double sigma_squared;
};

SplitSample sample_split_index(std::size_t path_length, Rng& rng);

enum class PairingPolicy { random_same_class, round_robin_same_class };

std::string to_string(PairingPolicy policy);
PairingPolicy pairing_policy_from_string(const std::string& s);

struct AugmentationConfig {
  std::size_t factor = 1;
  PairingPolicy pairing = PairingPolicy::random_same_class;
  std::uint64_t seed = 0;
  bool smooth = false;
  std::size_t smooth_window = 3;  // odd, >= 3; used only when smooth is on
  // Start the suffix at the aligned y element itself instead of one past
  // it. Off by default: the exclusive convention makes self-merge an
  // exact identity and never represents the aligned pair twice.
  bool inclusive_suffix = false;
};

// Merge at an explicit path position r in [1, L]: prefix of x up to the
// aligned x element, then the suffix of y after the aligned y element.
TimeSeries dtw_merge_at(const TimeSeries& x, const TimeSeries& y,
                        std::size_t r, bool inclusive_suffix = false);

// DTW-Merge: align x and y, draw the split position from N(L/2, L/10),
// splice prefix of x with suffix of y.
TimeSeries dtw_merge(const TimeSeries& x, const TimeSeries& y, Rng& rng,
                     bool inclusive_suffix = false);

// Replace the sample at junction_index (0-based) with the mean of the
// window centered there; the window truncates at the series edges.
TimeSeries smooth_junction(const TimeSeries& series, std::size_t junction_index,
                           std::size_t window);

struct AugmentResult {
  LabeledDataset dataset;
  // Synthetic items that fell back to self-merge because their class has
  // a single member; these reproduce the original sample.
  std::size_t self_merge_count = 0;
};

// Original items followed by factor * |train| synthetic ones. Each
// synthetic item merges a source series with a same-class partner chosen
// per the pairing policy and carries the shared label. Randomness is
// keyed by (seed, source index, replica index), so the output does not
// depend on processing order.
AugmentResult augment_dataset(const LabeledDataset& train,
                              const AugmentationConfig& config);

}  // namespace dtwmerge
