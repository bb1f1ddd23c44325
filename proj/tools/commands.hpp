#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dtwmerge/merge.hpp"

namespace dtwmerge::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::filesystem::path data_dir;
  std::vector<std::string> dataset_names;  // empty = all discoverable
  std::uint64_t seed = 0;
  std::size_t factor = 1;
  PairingPolicy pairing = PairingPolicy::random_same_class;
  bool smooth = false;
  std::size_t smooth_window = 3;
  bool inclusive_suffix = false;
  std::optional<std::size_t> band_radius;
  bool use_augmented_train = false;
  std::filesystem::path output_dir;
  OutputFormat format = OutputFormat::json;
  std::size_t jobs = 1;
  std::size_t repeats = 1;
  // compare inputs
  std::filesystem::path baseline_dir;
  std::filesystem::path augmented_dir;
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitPartialFailure = 1;
inline constexpr int kExitUsageError = 2;

int cmd_augment(const RunConfig& config);
int cmd_evaluate(const RunConfig& config);
int cmd_compare(const RunConfig& config);
int cmd_summarize(const RunConfig& config);

}  // namespace dtwmerge::cli
