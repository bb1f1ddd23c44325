#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dtwmerge/ucr_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("dtwmerge_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path base = fs::temp_directory_path() /
                        ("dtwmerge_cli_io_" + std::to_string(::getpid()) +
                         "_" + std::to_string(counter++));
  const fs::path out_file = base.string() + ".out";
  const fs::path err_file = base.string() + ".err";
  const std::string cmd = env + (env.empty() ? "" : " ") +
                          std::string(DTWMERGE_CLI_BIN) + " " + args + " > " +
                          out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_file);
  result.err = read_file(err_file);
  fs::remove(out_file);
  fs::remove(err_file);
  return result;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

const std::string kFixtures = DTWMERGE_FIXTURES_DIR;

}  // namespace

TEST_CASE("augment with factor 0 reproduces the train file") {
  TempDir out;
  const CliResult r = run_cli("augment --data-dir " + kFixtures +
                              " --datasets BumpCount --out " +
                              out.path.string() + " --seed 1 --factor 0");
  REQUIRE(r.exit_code == 0);

  // byte-equal modulo numeric formatting: rewrite the input with the
  // same writer and compare
  using namespace dtwmerge;
  const LabeledDataset original = load_ucr_file(
      fs::path(kFixtures) / "BumpCount_TRAIN.tsv", "BumpCount", Split::train);
  write_ucr(original, out.path / "expected.tsv");
  CHECK(read_file(out.path / "BumpCount_TRAIN_AUG.tsv") ==
        read_file(out.path / "expected.tsv"));
}

TEST_CASE("augment with factor 1 doubles the row count") {
  TempDir out;
  const CliResult r = run_cli("augment --data-dir " + kFixtures +
                              " --datasets BumpCount --out " +
                              out.path.string() + " --seed 1 --factor 1");
  REQUIRE(r.exit_code == 0);
  const std::string text = read_file(out.path / "BumpCount_TRAIN_AUG.tsv");
  const std::size_t rows =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(rows == 80);
  CHECK(fs::exists(out.path / "BumpCount_AUG_manifest.json"));
  CHECK(fs::exists(out.path / "augment_summary.json"));
}

TEST_CASE("same seed gives byte-identical augment outputs") {
  TempDir a, b;
  for (const TempDir* dir : {&a, &b}) {
    const CliResult r = run_cli(
        "augment --data-dir " + kFixtures +
        " --datasets VarLenBeats --out " + dir->path.string() +
        " --seed 77 --factor 2");
    REQUIRE(r.exit_code == 0);
  }
  CHECK(read_file(a.path / "VarLenBeats_TRAIN_AUG.tsv") ==
        read_file(b.path / "VarLenBeats_TRAIN_AUG.tsv"));
  CHECK(read_file(a.path / "VarLenBeats_AUG_manifest.json") ==
        read_file(b.path / "VarLenBeats_AUG_manifest.json"));
}

TEST_CASE("evaluate scores a test split that duplicates its train split") {
  TempDir data, out;
  const std::string rows = "1\t0\t0\t1\n2\t5\t5\t4\n1\t0\t1\t0\n";
  write_file(data.path / "Dup_TRAIN.tsv", rows);
  write_file(data.path / "Dup_TEST.tsv", rows);
  const CliResult r =
      run_cli("evaluate --data-dir " + data.path.string() + " --out " +
              out.path.string() + " --seed 3");
  REQUIRE(r.exit_code == 0);
  const std::string report = read_file(out.path / "Dup_report.json");
  CHECK(report.find("\"accuracy\": 1.0") != std::string::npos);
  CHECK(report.find("\"error\": 0.0") != std::string::npos);
}

TEST_CASE("evaluate is reproducible") {
  TempDir out1, out2;
  for (const TempDir* dir : {&out1, &out2}) {
    const CliResult r = run_cli("evaluate --data-dir " + kFixtures +
                                " --datasets WaveShapes --out " +
                                dir->path.string() + " --seed 9 --jobs 3");
    REQUIRE(r.exit_code == 0);
  }
  CHECK(read_file(out1.path / "WaveShapes_report.json") ==
        read_file(out2.path / "WaveShapes_report.json"));
  CHECK(read_file(out1.path / "evaluation_summary.json") ==
        read_file(out2.path / "evaluation_summary.json"));
}

TEST_CASE("comparing a report directory with itself is all zeros") {
  TempDir data, out;
  const std::string rows = "1\t0\t0\n2\t9\t9\n";
  write_file(data.path / "Tiny_TRAIN.tsv", rows);
  write_file(data.path / "Tiny_TEST.tsv", "1\t0\t1\n2\t8\t9\n");
  write_file(data.path / "Tiny2_TRAIN.tsv", rows);
  write_file(data.path / "Tiny2_TEST.tsv", "1\t1\t0\n2\t9\t8\n");
  REQUIRE(run_cli("evaluate --data-dir " + data.path.string() + " --out " +
                  out.path.string() + " --seed 3")
              .exit_code == 0);
  const CliResult r =
      run_cli("compare " + out.path.string() + " " + out.path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"mean_accuracy_delta\": 0.0") != std::string::npos);
  CHECK(r.out.find("\"t_value\": 0.0") != std::string::npos);
  CHECK(r.out.find("\"p_value\": 1.0") != std::string::npos);
}

TEST_CASE("comparing disjoint dataset sets fails with exit code 2") {
  TempDir a, b;
  write_file(a.path / "One_report.json",
             "{\"dataset\":\"One\",\"accuracy\":1.0,\"error\":0.0,"
             "\"n_classes\":2,\"pce\":0.0}");
  write_file(b.path / "Two_report.json",
             "{\"dataset\":\"Two\",\"accuracy\":1.0,\"error\":0.0,"
             "\"n_classes\":2,\"pce\":0.0}");
  const CliResult r = run_cli("compare " + a.path.string() + " " +
                              b.path.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2, help with 0") {
  CHECK(run_cli("augment").exit_code == 2);          // missing required
  CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("augment --help").exit_code == 0);
  TempDir out;
  CHECK(run_cli("evaluate --data-dir /nonexistent_dir_42 --out " +
                out.path.string())
            .exit_code == 2);  // nothing discoverable
}

TEST_CASE("DTWMERGE_SEED provides the default seed; --seed overrides") {
  TempDir out1, out2;
  const std::string common = " --datasets BumpCount --factor 0 ";
  REQUIRE(run_cli("augment --data-dir " + kFixtures + common + "--out " +
                      out1.path.string(),
                  "DTWMERGE_SEED=123")
              .exit_code == 0);
  CHECK(read_file(out1.path / "BumpCount_AUG_manifest.json")
            .find("\"seed\": 123") != std::string::npos);

  REQUIRE(run_cli("augment --data-dir " + kFixtures + common + "--out " +
                      out2.path.string() + " --seed 5",
                  "DTWMERGE_SEED=123")
              .exit_code == 0);
  CHECK(read_file(out2.path / "BumpCount_AUG_manifest.json")
            .find("\"seed\": 5") != std::string::npos);

  CHECK(run_cli("augment --data-dir " + kFixtures + common + "--out " +
                    out2.path.string(),
                "DTWMERGE_SEED=banana")
            .exit_code == 2);
}

TEST_CASE("one bad dataset does not poison the others") {
  TempDir data, out;
  write_file(data.path / "Good_TRAIN.tsv", "1\t0\t0\n2\t9\t9\n");
  write_file(data.path / "Good_TEST.tsv", "1\t0\t1\n");
  write_file(data.path / "Bad_TRAIN.tsv", "1\t0.5\tzap\n");
  write_file(data.path / "Bad_TEST.tsv", "1\t0.5\t0.5\n");

  const CliResult r =
      run_cli("augment --data-dir " + data.path.string() + " --out " +
              out.path.string() + " --seed 4 --factor 1");
  CHECK(r.exit_code == 1);
  CHECK(fs::exists(out.path / "Good_TRAIN_AUG.tsv"));
  CHECK_FALSE(fs::exists(out.path / "Bad_TRAIN_AUG.tsv"));
  const std::string summary = read_file(out.path / "augment_summary.json");
  CHECK(summary.find("\"Bad\"") != std::string::npos);
  CHECK(summary.find("zap") != std::string::npos);
  CHECK(r.err.find("Bad") != std::string::npos);
}

TEST_CASE("csv format adds tables next to the JSON reports") {
  TempDir data, out, cmp;
  write_file(data.path / "A_TRAIN.tsv", "1\t0\t0\n2\t9\t9\n");
  write_file(data.path / "A_TEST.tsv", "1\t0\t1\n2\t8\t9\n");
  REQUIRE(run_cli("evaluate --data-dir " + data.path.string() + " --out " +
                  out.path.string() + " --format csv")
              .exit_code == 0);
  const std::string table = read_file(out.path / "evaluation_summary.csv");
  CHECK(table.find("dataset,accuracy,error,n_classes,pce") !=
        std::string::npos);
  CHECK(table.find("A,1,0,2,0,") != std::string::npos);
  CHECK(read_file(out.path / "A_report.json").find("\"seed\": 0") !=
        std::string::npos);

  REQUIRE(run_cli("compare " + out.path.string() + " " + out.path.string() +
                  " --out " + cmp.path.string() + " --format csv")
              .exit_code == 0);
  CHECK(fs::exists(cmp.path / "comparison.json"));
  const std::string comparison = read_file(cmp.path / "comparison.csv");
  CHECK(comparison.find(
            "dataset,baseline_accuracy,augmented_accuracy,accuracy_delta") !=
        std::string::npos);
  CHECK(comparison.find("A,1,1,0") != std::string::npos);
}

TEST_CASE("summarize prints a catalog of the fixtures") {
  const CliResult r = run_cli("summarize --data-dir " + kFixtures +
                              " --datasets VarLenBeats,WaveShapes");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"dataset\": \"VarLenBeats\"") != std::string::npos);
  CHECK(r.out.find("\"variable_length\": true") != std::string::npos);
  CHECK(r.out.find("\"dataset\": \"WaveShapes\"") != std::string::npos);
  CHECK(r.out.find("\"n_classes\": 3") != std::string::npos);
}
