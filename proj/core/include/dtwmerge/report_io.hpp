#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtwmerge/evaluation.hpp"
#include "dtwmerge/ucr_io.hpp"

namespace dtwmerge {

// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(const std::string& text);

// 64-bit FNV-1a, hex encoded; stable run-configuration fingerprint.
std::string fingerprint(const std::string& canonical_config);

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const std::string& json_text);

std::string comparison_to_json(const ComparisonSummary& summary);
std::string comparison_to_csv(const ComparisonSummary& summary);

std::string reports_to_csv(const std::vector<EvaluationReport>& reports);

std::string dataset_summary_to_json(const std::string& name,
                                    const DatasetInfo& info);

struct AugmentManifest {
  std::string dataset;
  std::uint64_t seed = 0;
  std::size_t factor = 0;
  std::string pairing;
  bool smooth = false;
  std::size_t smooth_window = 3;
  bool inclusive_suffix = false;
  std::size_t original_items = 0;
  std::size_t augmented_items = 0;
  std::size_t self_merge_warnings = 0;
  bool equalized = false;
  std::size_t target_length = 0;
  std::string output_file;
  std::string config_fingerprint;
};

std::string manifest_to_json(const AugmentManifest& manifest);

}  // namespace dtwmerge
