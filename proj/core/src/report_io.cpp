#include "dtwmerge/report_io.hpp"

#include <cmath>
#include <sstream>

#include "dtwmerge/errors.hpp"
#include "json.hpp"

namespace dtwmerge {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string fingerprint(const std::string& canonical_config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_config)));
  return std::string(buf);
}

std::string report_to_json(const EvaluationReport& report) {
  json j;
  j["dataset"] = report.dataset_name;
  j["accuracy"] = report.accuracy;
  j["error"] = report.error;
  j["n_classes"] = report.n_classes;
  j["pce"] = report.pce;
  j["config_fingerprint"] = report.config_fingerprint;
  return j.dump(2) + "\n";
}

EvaluationReport report_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 1, 1);
  }
  EvaluationReport report;
  try {
    report.dataset_name = j.at("dataset").get<std::string>();
    report.accuracy = j.at("accuracy").get<double>();
    report.error = j.at("error").get<double>();
    report.n_classes = j.at("n_classes").get<std::size_t>();
    report.pce = j.at("pce").get<double>();
    report.config_fingerprint =
        j.value("config_fingerprint", std::string());
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what(), 1, 1);
  }
  return report;
}

std::string comparison_to_json(const ComparisonSummary& summary) {
  json j;
  json datasets = json::array();
  for (const auto& entry : summary.per_dataset) {
    json d;
    d["dataset"] = entry.name;
    d["baseline_accuracy"] = entry.baseline_accuracy;
    d["augmented_accuracy"] = entry.augmented_accuracy;
    d["accuracy_delta"] = entry.augmented_accuracy - entry.baseline_accuracy;
    datasets.push_back(d);
  }
  j["per_dataset"] = datasets;
  j["mpce_baseline"] = summary.mpce_baseline;
  j["mpce_augmented"] = summary.mpce_augmented;
  j["mean_accuracy_delta"] = summary.mean_accuracy_delta;
  if (summary.t_test_valid) {
    j["t_value"] = summary.t_value;
    j["p_value"] = summary.p_value;
  } else {
    j["t_value"] = nullptr;
    j["p_value"] = nullptr;
  }
  return j.dump(2) + "\n";
}

namespace {

std::string csv_number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::string comparison_to_csv(const ComparisonSummary& summary) {
  std::ostringstream out;
  out << "dataset,baseline_accuracy,augmented_accuracy,accuracy_delta\n";
  for (const auto& entry : summary.per_dataset) {
    out << entry.name << ',' << csv_number(entry.baseline_accuracy) << ','
        << csv_number(entry.augmented_accuracy) << ','
        << csv_number(entry.augmented_accuracy - entry.baseline_accuracy)
        << '\n';
  }
  return out.str();
}

std::string reports_to_csv(const std::vector<EvaluationReport>& reports) {
  std::ostringstream out;
  out << "dataset,accuracy,error,n_classes,pce,config_fingerprint\n";
  for (const auto& r : reports) {
    out << r.dataset_name << ',' << csv_number(r.accuracy) << ','
        << csv_number(r.error) << ',' << r.n_classes << ','
        << csv_number(r.pce) << ',' << r.config_fingerprint << '\n';
  }
  return out.str();
}

std::string dataset_summary_to_json(const std::string& name,
                                    const DatasetInfo& info) {
  json j;
  j["dataset"] = name;
  j["train_items"] = info.train_items;
  j["test_items"] = info.test_items;
  j["n_classes"] = info.n_classes;
  if (info.variable_length) {
    j["length"] =
        std::to_string(info.min_length) + "-" + std::to_string(info.max_length);
  } else {
    j["length"] = info.min_length;
  }
  j["variable_length"] = info.variable_length;
  j["z_normalized"] = info.z_normalized;
  return j.dump(2) + "\n";
}

std::string manifest_to_json(const AugmentManifest& m) {
  json j;
  j["dataset"] = m.dataset;
  j["seed"] = m.seed;
  j["factor"] = m.factor;
  j["pairing"] = m.pairing;
  j["smooth"] = m.smooth;
  j["smooth_window"] = m.smooth_window;
  j["inclusive_suffix"] = m.inclusive_suffix;
  j["original_items"] = m.original_items;
  j["augmented_items"] = m.augmented_items;
  j["self_merge_warnings"] = m.self_merge_warnings;
  j["equalized"] = m.equalized;
  if (m.equalized) j["target_length"] = m.target_length;
  j["output_file"] = m.output_file;
  j["config_fingerprint"] = m.config_fingerprint;
  return j.dump(2) + "\n";
}

}  // namespace dtwmerge
