#include "dtwmerge/ucr_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "dtwmerge/errors.hpp"

namespace dtwmerge {

namespace {

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

double parse_value(const std::string& field, std::size_t row,
                   std::size_t column) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (last[-1] == ' ' || last[-1] == '\t')) --last;
  if (first != last && *first == '+') ++first;  // from_chars rejects '+'
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last)
    throw ParseError("unparsable field '" + field + "'", row, column);
  return value;
}

}  // namespace

LabeledDataset load_ucr_file(const std::filesystem::path& file,
                             const std::string& dataset_name, Split split) {
  std::ifstream in(file);
  if (!in)
    throw FileNotFound("cannot open " + file.string());

  LabeledDataset dataset;
  dataset.name = dataset_name;
  dataset.split = split;

  std::string line;
  std::size_t row = 0;
  char sep = '\t';
  bool sep_decided = false;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!sep_decided) {
      // comma-separated fallback for archive mirrors without tabs
      sep = line.find('\t') != std::string::npos ? '\t' : ',';
      sep_decided = true;
    }

    const std::vector<std::string> fields = split_fields(line, sep);
    if (fields.size() < 2)
      throw EmptySeries("row " + std::to_string(row) + " has no values");

    const std::string& label = fields[0];
    if (label.empty()) throw ParseError("empty label", row, 1);

    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      values.push_back(parse_value(fields[c], row, c + 1));
    }

    // trailing NaN fields encode variable length
    while (!values.empty() && std::isnan(values.back())) values.pop_back();
    if (values.empty())
      throw EmptySeries("row " + std::to_string(row) +
                        " is empty after stripping trailing NaN");
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (std::isnan(values[c]))
        throw MissingValueUnsupported("interior NaN at row " +
                                      std::to_string(row) + ", column " +
                                      std::to_string(c + 2));
      if (!std::isfinite(values[c]))
        throw ParseError("non-finite value", row, c + 2);
    }

    dataset.items.push_back(LabeledItem{TimeSeries(std::move(values)), label});
  }

  if (dataset.empty())
    throw InvalidDataset(file.string() + " contains no rows");
  return dataset;
}

DatasetPair load_ucr_split(const std::filesystem::path& dir,
                           const std::string& name) {
  auto locate = [&](const std::string& suffix) -> std::filesystem::path {
    const std::filesystem::path flat = dir / (name + suffix);
    if (std::filesystem::exists(flat)) return flat;
    const std::filesystem::path nested = dir / name / (name + suffix);
    if (std::filesystem::exists(nested)) return nested;
    throw FileNotFound("no " + name + suffix + " under " + dir.string());
  };

  DatasetPair pair;
  pair.name = name;
  pair.train = load_ucr_file(locate("_TRAIN.tsv"), name, Split::train);
  pair.test = load_ucr_file(locate("_TEST.tsv"), name, Split::test);
  pair.info = summarize(pair);
  return pair;
}

namespace {

std::string format_value(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void write_ucr(const LabeledDataset& dataset,
               const std::filesystem::path& file) {
  if (dataset.empty()) throw InvalidDataset("write_ucr: empty dataset");

  std::size_t max_length = 0;
  for (const auto& item : dataset.items)
    max_length = std::max(max_length, item.series.size());

  std::ostringstream out;
  for (const auto& item : dataset.items) {
    out << item.label;
    for (double v : item.series) out << '\t' << format_value(v);
    for (std::size_t i = item.series.size(); i < max_length; ++i)
      out << "\tNaN";
    out << '\n';
  }

  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << out.str();
    if (!f) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoError("rename to " + file.string() + ": " + ec.message());
}

DatasetInfo summarize(const DatasetPair& pair) {
  DatasetInfo info;
  info.train_items = pair.train.size();
  info.test_items = pair.test.size();
  info.n_classes = pair.train.label_set().size();

  std::size_t min_len = SIZE_MAX, max_len = 0;
  for (const LabeledDataset* split : {&pair.train, &pair.test}) {
    for (const auto& item : split->items) {
      min_len = std::min(min_len, item.series.size());
      max_len = std::max(max_len, item.series.size());
    }
  }
  info.min_length = min_len;
  info.max_length = max_len;
  info.variable_length = min_len != max_len;

  const std::size_t sample = std::min<std::size_t>(pair.train.size(), 10);
  info.z_normalized = sample > 0;
  for (std::size_t i = 0; i < sample; ++i) {
    if (!is_z_normalized(pair.train.items[i].series, 1e-4)) {
      info.z_normalized = false;
      break;
    }
  }
  return info;
}

std::vector<std::string> discover_datasets(const std::filesystem::path& dir) {
  std::set<std::string> names;
  if (!std::filesystem::is_directory(dir)) return {};

  const std::string suffix = "_TRAIN.tsv";
  auto consider = [&](const std::filesystem::path& p) {
    const std::string fname = p.filename().string();
    if (fname.size() <= suffix.size()) return;
    if (fname.compare(fname.size() - suffix.size(), suffix.size(), suffix) !=
        0)
      return;
    const std::string name = fname.substr(0, fname.size() - suffix.size());
    const std::filesystem::path test =
        p.parent_path() / (name + "_TEST.tsv");
    if (std::filesystem::exists(test)) names.insert(name);
  };

  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) {
      consider(entry.path());
    } else if (entry.is_directory()) {
      for (const auto& sub : std::filesystem::directory_iterator(entry.path())) {
        if (sub.is_regular_file()) consider(sub.path());
      }
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace dtwmerge
