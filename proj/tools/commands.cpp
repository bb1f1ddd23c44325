#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dtwmerge/errors.hpp"
#include "dtwmerge/evaluation.hpp"
#include "dtwmerge/report_io.hpp"
#include "dtwmerge/rng.hpp"
#include "dtwmerge/timeseries.hpp"
#include "dtwmerge/ucr_io.hpp"
#include "json.hpp"

namespace dtwmerge::cli {

namespace {

using nlohmann::json;

// Per-dataset randomness is keyed by name, not list position, so partial
// runs with --datasets reproduce the full run's outputs.
std::uint64_t dataset_seed(std::uint64_t master, const std::string& name) {
  return splitmix64(master ^ fnv1a64(name));
}

std::vector<std::string> resolve_names(const RunConfig& config) {
  if (!config.dataset_names.empty()) return config.dataset_names;
  return discover_datasets(config.data_dir);
}

void write_text_atomic(const std::filesystem::path& file,
                       const std::string& text) {
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoError("rename to " + file.string() + ": " + ec.message());
}

struct Failure {
  std::string dataset;
  std::string error;
};

json failures_to_json(const std::vector<Failure>& failures) {
  json arr = json::array();
  for (const auto& f : failures) {
    arr.push_back({{"dataset", f.dataset}, {"error", f.error}});
  }
  return arr;
}

bool has_variable_lengths(const LabeledDataset& dataset) {
  for (const auto& item : dataset.items) {
    if (item.series.size() != dataset.items.front().series.size()) return true;
  }
  return false;
}

int finish(const RunConfig& config, const std::string& summary_name,
           json summary, const std::vector<Failure>& failures) {
  summary["failures"] = failures_to_json(failures);
  write_text_atomic(config.output_dir / summary_name, summary.dump(2) + "\n");
  for (const auto& f : failures) {
    std::cerr << "error: " << f.dataset << ": " << f.error << "\n";
  }
  return failures.empty() ? kExitSuccess : kExitPartialFailure;
}

std::string augment_fingerprint(const RunConfig& config,
                                const std::string& name) {
  std::ostringstream canon;
  canon << "augment|dataset=" << name << "|seed=" << config.seed
        << "|factor=" << config.factor
        << "|pairing=" << to_string(config.pairing)
        << "|smooth=" << config.smooth << "|window=" << config.smooth_window
        << "|inclusive=" << config.inclusive_suffix;
  return fingerprint(canon.str());
}

std::string evaluate_fingerprint(const RunConfig& config,
                                 const std::string& name) {
  std::ostringstream canon;
  canon << "evaluate|dataset=" << name << "|seed=" << config.seed << "|band=";
  if (config.band_radius) canon << *config.band_radius;
  canon << "|augmented=" << config.use_augmented_train
        << "|repeats=" << config.repeats;
  return fingerprint(canon.str());
}

// Report JSON with the run seed made explicit.
std::string report_with_seed(const EvaluationReport& report,
                             std::uint64_t seed) {
  json j = json::parse(report_to_json(report));
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

}  // namespace

int cmd_augment(const RunConfig& config) {
  const std::vector<std::string> names = resolve_names(config);
  if (names.empty()) {
    std::cerr << "error: no datasets found under " << config.data_dir << "\n";
    return kExitUsageError;
  }
  std::filesystem::create_directories(config.output_dir);

  std::vector<Failure> failures;
  json done = json::array();
  for (const std::string& name : names) {
    try {
      const DatasetPair pair = load_ucr_split(config.data_dir, name);

      LabeledDataset train = pair.train;
      AugmentManifest manifest;
      manifest.dataset = name;
      manifest.seed = config.seed;
      manifest.factor = config.factor;
      manifest.pairing = to_string(config.pairing);
      manifest.smooth = config.smooth;
      manifest.smooth_window = config.smooth_window;
      manifest.inclusive_suffix = config.inclusive_suffix;
      manifest.original_items = train.size();
      manifest.config_fingerprint = augment_fingerprint(config, name);

      if (has_variable_lengths(train)) {
        Rng rng = Rng::derive(config.seed, fnv1a64(name), 1);
        manifest.target_length = mean_length(train);
        train = equalize_lengths(train, rng);
        manifest.equalized = true;
      }

      AugmentationConfig aug;
      aug.factor = config.factor;
      aug.pairing = config.pairing;
      aug.seed = dataset_seed(config.seed, name);
      aug.smooth = config.smooth;
      aug.smooth_window = config.smooth_window;
      aug.inclusive_suffix = config.inclusive_suffix;

      AugmentResult result = augment_dataset(train, aug);
      manifest.augmented_items = result.dataset.size();
      manifest.self_merge_warnings = result.self_merge_count;

      const std::filesystem::path out_file =
          config.output_dir / (name + "_TRAIN_AUG.tsv");
      write_ucr(result.dataset, out_file);
      manifest.output_file = out_file.filename().string();
      write_text_atomic(config.output_dir / (name + "_AUG_manifest.json"),
                        manifest_to_json(manifest));
      done.push_back(name);
    } catch (const Error& e) {
      failures.push_back(Failure{name, e.what()});
    }
  }

  json summary;
  summary["command"] = "augment";
  summary["seed"] = config.seed;
  summary["factor"] = config.factor;
  summary["pairing"] = to_string(config.pairing);
  summary["config_fingerprint"] = augment_fingerprint(config, "");
  summary["succeeded"] = done;
  return finish(config, "augment_summary.json", std::move(summary), failures);
}

namespace {

std::filesystem::path find_augmented_train(const RunConfig& config,
                                           const std::string& name) {
  const std::string fname = name + "_TRAIN_AUG.tsv";
  for (const std::filesystem::path& dir :
       {config.output_dir, config.output_dir.parent_path(), config.data_dir,
        config.data_dir / name}) {
    const std::filesystem::path candidate = dir / fname;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw FileNotFound("no " + fname + " next to outputs or data; run augment first");
}

}  // namespace

int cmd_evaluate(const RunConfig& config) {
  const std::vector<std::string> names = resolve_names(config);
  if (names.empty()) {
    std::cerr << "error: no datasets found under " << config.data_dir << "\n";
    return kExitUsageError;
  }
  std::filesystem::create_directories(config.output_dir);

  std::vector<Failure> failures;
  std::vector<EvaluationReport> reports;
  for (const std::string& name : names) {
    try {
      const DatasetPair pair = load_ucr_split(config.data_dir, name);
      LabeledDataset train = pair.train;
      if (config.use_augmented_train) {
        train = load_ucr_file(find_augmented_train(config, name), name,
                              Split::train);
      }

      const std::string fp = evaluate_fingerprint(config, name);
      EvaluationReport report;
      double accuracy_sum = 0.0;
      for (std::size_t rep = 0; rep < std::max<std::size_t>(config.repeats, 1);
           ++rep) {
        report = evaluate_dataset(train, pair.test, config.band_radius,
                                  config.jobs, fp);
        accuracy_sum += report.accuracy;
      }
      // 1NN-DTW is deterministic; the mean matters only for stochastic
      // pipelines layered on top.
      report.accuracy =
          accuracy_sum / static_cast<double>(std::max<std::size_t>(config.repeats, 1));
      report.error = 1.0 - report.accuracy;
      report.pce = pce(report.error, report.n_classes);

      write_text_atomic(config.output_dir / (name + "_report.json"),
                        report_with_seed(report, config.seed));
      reports.push_back(report);
    } catch (const Error& e) {
      failures.push_back(Failure{name, e.what()});
    }
  }

  json summary;
  summary["command"] = "evaluate";
  summary["seed"] = config.seed;
  summary["config_fingerprint"] = evaluate_fingerprint(config, "");
  summary["augmented"] = config.use_augmented_train;
  if (config.band_radius)
    summary["band_radius"] = *config.band_radius;
  else
    summary["band_radius"] = nullptr;
  json report_list = json::array();
  std::vector<double> pces;
  for (const auto& r : reports) {
    report_list.push_back(json::parse(report_to_json(r)));
    pces.push_back(r.pce);
  }
  summary["reports"] = report_list;
  if (!pces.empty()) summary["mpce"] = mpce(pces);

  if (config.format == OutputFormat::csv && !reports.empty()) {
    write_text_atomic(config.output_dir / "evaluation_summary.csv",
                      reports_to_csv(reports));
  }
  return finish(config, "evaluation_summary.json", std::move(summary),
                failures);
}

namespace {

std::vector<EvaluationReport> load_reports(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw FileNotFound("report directory " + dir.string() + " does not exist");
  std::vector<EvaluationReport> reports;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string fname = entry.path().filename().string();
    if (fname.size() > 12 &&
        fname.compare(fname.size() - 12, 12, "_report.json") == 0) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    reports.push_back(report_from_json(buf.str()));
  }
  if (reports.empty())
    throw InvalidInput("no *_report.json files in " + dir.string());
  return reports;
}

}  // namespace

int cmd_compare(const RunConfig& config) {
  try {
    const std::vector<EvaluationReport> baseline =
        load_reports(config.baseline_dir);
    const std::vector<EvaluationReport> augmented =
        load_reports(config.augmented_dir);
    const ComparisonSummary summary = compare_runs(baseline, augmented);

    const std::string json_text = comparison_to_json(summary);
    if (config.output_dir.empty()) {
      std::cout << json_text;
    } else {
      std::filesystem::create_directories(config.output_dir);
      write_text_atomic(config.output_dir / "comparison.json", json_text);
      if (config.format == OutputFormat::csv) {
        write_text_atomic(config.output_dir / "comparison.csv",
                          comparison_to_csv(summary));
      }
    }
    return kExitSuccess;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
}

int cmd_summarize(const RunConfig& config) {
  const std::vector<std::string> names = resolve_names(config);
  if (names.empty()) {
    std::cerr << "error: no datasets found under " << config.data_dir << "\n";
    return kExitUsageError;
  }

  std::vector<Failure> failures;
  json summaries = json::array();
  for (const std::string& name : names) {
    try {
      const DatasetPair pair = load_ucr_split(config.data_dir, name);
      summaries.push_back(json::parse(dataset_summary_to_json(name, pair.info)));
    } catch (const Error& e) {
      failures.push_back(Failure{name, e.what()});
    }
  }

  const std::string text = summaries.dump(2) + "\n";
  if (config.output_dir.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(config.output_dir);
    write_text_atomic(config.output_dir / "summary.json", text);
  }
  for (const auto& f : failures) {
    std::cerr << "error: " << f.dataset << ": " << f.error << "\n";
  }
  return failures.empty() ? kExitSuccess : kExitPartialFailure;
}

}  // namespace dtwmerge::cli
