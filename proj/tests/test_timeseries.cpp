#include <cmath>
#include <vector>

#include "doctest.h"
#include "dtwmerge/errors.hpp"
#include "dtwmerge/timeseries.hpp"
#include "support/generators.hpp"

using namespace dtwmerge;

namespace {

LabeledDataset dataset_of(std::vector<std::vector<double>> series,
                          std::vector<std::string> labels = {}) {
  LabeledDataset ds;
  ds.name = "test";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string label = labels.empty() ? "1" : labels[i];
    ds.items.push_back(LabeledItem{TimeSeries(std::move(series[i])), label});
  }
  return ds;
}

void check_stats(const TimeSeries& s, double tol) {
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= static_cast<double>(s.size());
  double sq = 0.0;
  for (double v : s) sq += (v - mean) * (v - mean);
  const double sd = std::sqrt(sq / static_cast<double>(s.size()));
  CHECK(std::fabs(mean) <= tol);
  CHECK(std::fabs(sd - 1.0) <= tol);
}

// true iff `sub` can be read off `super` left to right
bool is_subsequence(const std::vector<double>& sub,
                    const std::vector<double>& super) {
  std::size_t i = 0;
  for (double v : super) {
    if (i < sub.size() && sub[i] == v) ++i;
  }
  return i == sub.size();
}

}  // namespace

TEST_CASE("z_normalize maps [1,2,3] to +-sqrt(3/2)") {
  const TimeSeries out = z_normalize(TimeSeries({1.0, 2.0, 3.0}));
  REQUIRE(out.size() == 3);
  CHECK(out[0] == doctest::Approx(-1.224744871391589).epsilon(1e-12));
  CHECK(out[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(out[2] == doctest::Approx(1.224744871391589).epsilon(1e-12));
}

TEST_CASE("z_normalize zero-variance series becomes all zeros") {
  const TimeSeries out = z_normalize(TimeSeries({5.0, 5.0, 5.0}));
  for (double v : out) CHECK(v == 0.0);
}

TEST_CASE("z_normalize postconditions and idempotence on random input") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const auto s = testing::random_series(rng, 1 + rng.uniform_index(200),
                                          -50.0, 50.0);
    const TimeSeries once = z_normalize(s);
    REQUIRE(once.size() == s.size());
    if (once.size() > 1) check_stats(once, 1e-9);
    const TimeSeries twice = z_normalize(once);
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(std::fabs(twice[i] - once[i]) <= 1e-9);
    }
  }
}

TEST_CASE("z_normalize rejects bad input") {
  CHECK_THROWS_AS(z_normalize(TimeSeries()), InvalidSeries);
  CHECK_THROWS_AS(z_normalize(TimeSeries({1.0, std::nan("")})), InvalidSeries);
}

TEST_CASE("is_z_normalized") {
  CHECK(is_z_normalized(z_normalize(TimeSeries({3.0, -1.0, 7.5, 2.0})), 1e-6));
  CHECK_FALSE(is_z_normalized(TimeSeries({0.0, 10.0, 20.0}), 1e-6));
  CHECK(is_z_normalized(TimeSeries({-1.0, 1.0}), 1e-6));
  CHECK_THROWS_AS(is_z_normalized(TimeSeries(), 1e-6), InvalidSeries);
}

TEST_CASE("mean_length rounds half up") {
  CHECK(mean_length(dataset_of({{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}})) == 5);
  CHECK(mean_length(dataset_of({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})) == 3);
  CHECK(mean_length(dataset_of({{1, 2, 3}, {1, 2, 3, 4}})) == 4);
  CHECK_THROWS_AS(mean_length(LabeledDataset{}), InvalidDataset);
}

TEST_CASE("equalize_lengths brings every series to the mean length") {
  auto ds = dataset_of({{1, 2, 3, 4, 5, 6}, {1, 3, 5, 7}}, {"a", "b"});
  Rng rng(7);
  const LabeledDataset out = equalize_lengths(ds, rng);
  REQUIRE(out.size() == 2);
  CHECK(out.items[0].series.size() == 5);
  CHECK(out.items[1].series.size() == 5);
  CHECK(out.items[0].label == "a");
  CHECK(out.items[1].label == "b");

  // single insertion: the new value is the mean of an adjacent input pair
  const std::vector<double>& in = ds.items[1].series.values();
  const std::vector<double>& grown = out.items[1].series.values();
  CHECK(is_subsequence(in, grown));
  bool found = false;
  for (std::size_t k = 0; k + 1 < in.size() && !found; ++k) {
    const double mid = (in[k] + in[k + 1]) / 2.0;
    for (double v : grown) {
      if (v == mid) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("equalize_lengths is a no-op on equal-length datasets") {
  auto ds = dataset_of({{1, 2, 3}, {4, 5, 6}});
  Rng rng(3);
  const LabeledDataset out = equalize_lengths(ds, rng);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(out.items[i].series == ds.items[i].series);
  }
}

TEST_CASE("single insertion into [2,4] yields [2,3,4]") {
  // mean length 3 forces exactly one insertion into the only adjacent pair
  auto ds = dataset_of({{2, 4}, {1, 2, 3}, {9, 8, 7}});
  Rng rng(99);
  const LabeledDataset out = equalize_lengths(ds, rng);
  CHECK(out.items[0].series == TimeSeries({2.0, 3.0, 4.0}));
  CHECK(out.items[1].series == TimeSeries({1.0, 2.0, 3.0}));
  CHECK(out.items[2].series == TimeSeries({9.0, 8.0, 7.0}));
}

TEST_CASE("length-1 series lengthens by duplicating its value") {
  auto ds = dataset_of({{7}, {1, 2, 3}});
  Rng rng(5);
  const LabeledDataset out = equalize_lengths(ds, rng);
  CHECK(out.items[0].series == TimeSeries({7.0, 7.0}));
  CHECK(out.items[1].series.size() == 2);
}

TEST_CASE("equalize_lengths properties on random datasets") {
  Rng rng(1234);
  for (int it = 0; it < 25; ++it) {
    LabeledDataset ds =
        testing::random_dataset(rng, 2 + rng.uniform_index(10), 3, 1, 30);
    Rng op_rng(rng.next_u64());
    const std::size_t target = mean_length(ds);
    const LabeledDataset out = equalize_lengths(ds, op_rng);

    REQUIRE(out.size() == ds.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out.items[i].label == ds.items[i].label);
      CHECK(out.items[i].series.size() == target);
      const auto& in_v = ds.items[i].series.values();
      const auto& out_v = out.items[i].series.values();
      if (in_v.size() >= target) {
        CHECK(is_subsequence(out_v, in_v));
      } else if (in_v.size() > 1) {
        CHECK(is_subsequence(in_v, out_v));
      }
    }
  }
}

TEST_CASE("equalize_lengths is reproducible for a fixed seed") {
  Rng gen(42);
  LabeledDataset ds = testing::random_dataset(gen, 8, 2, 3, 20);
  Rng r1(777), r2(777);
  const LabeledDataset a = equalize_lengths(ds, r1);
  const LabeledDataset b = equalize_lengths(ds, r2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.items[i].series == b.items[i].series);
  }
}

TEST_CASE("equalize_lengths rejects empty input") {
  Rng rng(1);
  CHECK_THROWS_AS(equalize_lengths(LabeledDataset{}, rng), InvalidDataset);
  auto ds = dataset_of({{1, 2}, {}});
  CHECK_THROWS_AS(equalize_lengths(ds, rng), InvalidSeries);
}

TEST_CASE("label_set preserves first-appearance order") {
  auto ds = dataset_of({{1}, {2}, {3}, {4}}, {"b", "a", "b", "c"});
  const auto labels = ds.label_set();
  REQUIRE(labels.size() == 3);
  CHECK(labels[0] == "b");
  CHECK(labels[1] == "a");
  CHECK(labels[2] == "c");
}
