#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dtwmerge/errors.hpp"
#include "dtwmerge/merge.hpp"

namespace {

using dtwmerge::cli::OutputFormat;
using dtwmerge::cli::RunConfig;

// --seed wins over the DTWMERGE_SEED environment variable; default 0.
bool apply_default_seed(RunConfig& config, bool seed_given) {
  if (seed_given) return true;
  const char* env = std::getenv("DTWMERGE_SEED");
  if (env == nullptr) return true;
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    std::cerr << "error: DTWMERGE_SEED is not a valid unsigned integer: '"
              << env << "'\n";
    return false;
  }
  config.seed = value;
  return true;
}

void add_common_options(CLI::App* cmd, RunConfig& config, bool& seed_given) {
  cmd->add_option("--datasets", config.dataset_names,
                  "Comma-separated dataset names (default: all discoverable)")
      ->delimiter(',');
  cmd->add_option("--seed", config.seed, "Master RNG seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  cmd->add_option("--jobs", config.jobs, "Worker threads within a dataset")
      ->check(CLI::PositiveNumber);
}

void add_format_option(CLI::App* cmd, RunConfig& config) {
  cmd->add_option_function<std::string>(
         "--format",
         [&config](const std::string& v) {
           config.format =
               v == "csv" ? OutputFormat::csv : OutputFormat::json;
         },
         "Report format: json or csv (csv adds a table next to the JSON)")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DTW-Merge: warping-path-based augmentation and 1NN-DTW "
               "evaluation for univariate time series"};
  app.require_subcommand(1);

  RunConfig config;
  bool seed_given = false;
  std::string pairing_name = "random";

  CLI::App* augment = app.add_subcommand(
      "augment", "Generate merged training samples and write *_TRAIN_AUG.tsv");
  augment->add_option("--data-dir", config.data_dir, "Dataset directory")
      ->required();
  augment->add_option("--out", config.output_dir, "Output directory")
      ->required();
  augment->add_option("--factor", config.factor,
                      "Synthetic samples per original sample");
  augment
      ->add_option("--pairing", pairing_name,
                   "Partner selection: random or round-robin")
      ->check(CLI::IsMember({"random", "round-robin"}));
  augment->add_flag("--smooth", config.smooth,
                    "Smooth the splice junction with a moving average");
  augment->add_option("--smooth-window", config.smooth_window,
                      "Odd moving-average window (with --smooth)");
  augment->add_flag("--inclusive-suffix", config.inclusive_suffix,
                    "Start the suffix at the aligned sample itself");
  add_common_options(augment, config, seed_given);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "1NN-DTW accuracy per dataset, reports as JSON");
  evaluate->add_option("--data-dir", config.data_dir, "Dataset directory")
      ->required();
  evaluate->add_option("--out", config.output_dir, "Output directory")
      ->required();
  evaluate->add_flag("--augmented", config.use_augmented_train,
                     "Evaluate on *_TRAIN_AUG.tsv instead of the train split");
  evaluate->add_option_function<std::size_t>(
      "--band",
      [&config](std::size_t v) { config.band_radius = v; },
      "Sakoe-Chiba band radius (default: unconstrained)");
  evaluate->add_option("--repeats", config.repeats,
                       "Repetitions averaged into the reported accuracy");
  add_common_options(evaluate, config, seed_given);
  add_format_option(evaluate, config);

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare two report directories (baseline vs augmented)");
  compare->add_option("baseline_dir", config.baseline_dir,
                      "Directory of baseline *_report.json")
      ->required();
  compare->add_option("augmented_dir", config.augmented_dir,
                      "Directory of augmented *_report.json")
      ->required();
  compare->add_option("--out", config.output_dir,
                      "Write comparison.json here instead of stdout");
  add_format_option(compare, config);

  CLI::App* summarize = app.add_subcommand(
      "summarize", "Dataset catalog summary (items, classes, lengths)");
  summarize->add_option("--data-dir", config.data_dir, "Dataset directory")
      ->required();
  summarize->add_option("--out", config.output_dir,
                        "Write summary.json here instead of stdout");
  summarize->add_option("--datasets", config.dataset_names,
                        "Comma-separated dataset names")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dtwmerge::cli::kExitUsageError;
  }

  if (!apply_default_seed(config, seed_given))
    return dtwmerge::cli::kExitUsageError;

  try {
    config.pairing = dtwmerge::pairing_policy_from_string(pairing_name);
    if (augment->parsed()) return dtwmerge::cli::cmd_augment(config);
    if (evaluate->parsed()) return dtwmerge::cli::cmd_evaluate(config);
    if (compare->parsed()) return dtwmerge::cli::cmd_compare(config);
    if (summarize->parsed()) return dtwmerge::cli::cmd_summarize(config);
  } catch (const dtwmerge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dtwmerge::cli::kExitUsageError;
  }
  return dtwmerge::cli::kExitUsageError;
}
