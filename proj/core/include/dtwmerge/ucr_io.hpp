#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "dtwmerge/timeseries.hpp"

namespace dtwmerge {

// Descriptive metadata for one train/test pair.
struct DatasetInfo {
  std::size_t train_items = 0;
  std::size_t test_items = 0;
  std::size_t n_classes = 0;  // distinct labels in the train split
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  bool variable_length = false;
  bool z_normalized = false;  // sampled check, see summarize()
};

struct DatasetPair {
  LabeledDataset train;
  LabeledDataset test;
  std::string name;
  DatasetInfo info;
};

// Parse one UCR-format file: one series per row, class label first,
// tab-separated values (comma accepted when the first line has no tab),
// trailing NaN fields stripped per the variable-length convention.
LabeledDataset load_ucr_file(const std::filesystem::path& file,
                             const std::string& dataset_name, Split split);

// Load `<name>_TRAIN.tsv` and `<name>_TEST.tsv` from `dir` (also accepts
// the archive layout `dir/<name>/<name>_*.tsv`).
DatasetPair load_ucr_split(const std::filesystem::path& dir,
                           const std::string& name);

// Write in the same format; shorter rows are padded with NaN up to the
// longest series. Values are formatted with shortest round-trip
// precision. The file is written atomically (temp file + rename).
void write_ucr(const LabeledDataset& dataset,
               const std::filesystem::path& file);

DatasetInfo summarize(const DatasetPair& pair);

// Dataset names discoverable under dir: any `<NAME>_TRAIN.tsv` with a
// matching `<NAME>_TEST.tsv`, either directly in dir or one level down
// in `dir/<NAME>/`. Sorted by name.
std::vector<std::string> discover_datasets(const std::filesystem::path& dir);

}  // namespace dtwmerge
