#include "dtwmerge/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtwmerge/errors.hpp"

namespace dtwmerge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_valid_pair(const TimeSeries& x, const TimeSeries& y,
                        const char* op) {
  if (x.empty() || y.empty())
    throw InvalidSeries(std::string(op) + ": empty series");
  if (!x.all_finite() || !y.all_finite())
    throw InvalidSeries(std::string(op) + ": non-finite value");
}

inline double local_cost(double a, double b) { return std::fabs(a - b); }

// Backtracks an accumulated-cost matrix (row-major, kInf = unreachable).
// Among equal-cost predecessors: diagonal, then (i, j-1), then (i-1, j).
WarpingPath backtrack(const std::vector<double>& acc, std::size_t m,
                      std::size_t n) {
  WarpingPath reversed;
  std::size_t i = m - 1;
  std::size_t j = n - 1;
  reversed.push_back({i, j});
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = acc[(i - 1) * n + (j - 1)];
      const double left = acc[i * n + (j - 1)];
      const double up = acc[(i - 1) * n + j];
      if (diag <= left && diag <= up) {
        --i;
        --j;
      } else if (left <= up) {
        --j;
      } else {
        --i;
      }
    }
    reversed.push_back({i, j});
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace

DtwResult dtw(const TimeSeries& x, const TimeSeries& y) {
  require_valid_pair(x, y, "dtw");
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const std::vector<double>& xv = x.values();
  const std::vector<double>& yv = y.values();

  std::vector<double> acc(m * n);
  acc[0] = local_cost(xv[0], yv[0]);
  for (std::size_t j = 1; j < n; ++j) {
    acc[j] = acc[j - 1] + local_cost(xv[0], yv[j]);
  }
  for (std::size_t i = 1; i < m; ++i) {
    double* row = acc.data() + i * n;
    const double* prev = row - n;
    row[0] = prev[0] + local_cost(xv[i], yv[0]);
    for (std::size_t j = 1; j < n; ++j) {
      const double best = std::min(std::min(prev[j - 1], prev[j]), row[j - 1]);
      row[j] = best + local_cost(xv[i], yv[j]);
    }
  }

  return DtwResult{acc[m * n - 1], backtrack(acc, m, n)};
}

double dtw_distance(const TimeSeries& x, const TimeSeries& y) {
  require_valid_pair(x, y, "dtw_distance");
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  const std::vector<double>& xv = x.values();
  const std::vector<double>& yv = y.values();

  std::vector<double> prev(n);
  std::vector<double> cur(n);
  prev[0] = local_cost(xv[0], yv[0]);
  for (std::size_t j = 1; j < n; ++j) {
    prev[j] = prev[j - 1] + local_cost(xv[0], yv[j]);
  }
  for (std::size_t i = 1; i < m; ++i) {
    cur[0] = prev[0] + local_cost(xv[i], yv[0]);
    for (std::size_t j = 1; j < n; ++j) {
      const double best = std::min(std::min(prev[j - 1], prev[j]), cur[j - 1]);
      cur[j] = best + local_cost(xv[i], yv[j]);
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

namespace {

void oracle_visit(const std::vector<double>& xv, const std::vector<double>& yv,
                  std::size_t i, std::size_t j, double acc, double& best) {
  acc += local_cost(xv[i], yv[j]);
  if (acc >= best) return;  // cannot improve, costs are non-negative
  const bool at_m = (i + 1 == xv.size());
  const bool at_n = (j + 1 == yv.size());
  if (at_m && at_n) {
    best = acc;
    return;
  }
  if (!at_m && !at_n) oracle_visit(xv, yv, i + 1, j + 1, acc, best);
  if (!at_m) oracle_visit(xv, yv, i + 1, j, acc, best);
  if (!at_n) oracle_visit(xv, yv, i, j + 1, acc, best);
}

}  // namespace

double oracle_dtw(const TimeSeries& x, const TimeSeries& y) {
  require_valid_pair(x, y, "oracle_dtw");
  if (x.size() > kOracleMaxLength || y.size() > kOracleMaxLength)
    throw OracleTooLarge("oracle_dtw: series longer than " +
                         std::to_string(kOracleMaxLength));
  double best = kInf;
  oracle_visit(x.values(), y.values(), 0, 0, 0.0, best);
  return best;
}

namespace {

struct Band {
  double scale;   // M / N
  double radius;  // band_radius + tolerance slack
  std::size_t m, n;

  // 0-based cell test for the |p - q*M/N| <= radius window rule.
  bool admissible(std::size_t i, std::size_t j) const {
    if ((i == 0 && j == 0) || (i == m - 1 && j == n - 1)) return true;
    const double p = static_cast<double>(i + 1);
    const double q = static_cast<double>(j + 1);
    return std::fabs(p - q * scale) <= radius;
  }

  // Column range that conservatively covers the admissible cells of row
  // i; the per-cell predicate stays the source of truth inside it.
  std::pair<std::size_t, std::size_t> row_range(std::size_t i) const {
    const double p = static_cast<double>(i + 1);
    const double lo_q = (p - radius) / scale;
    const double hi_q = (p + radius) / scale;
    std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(std::floor(lo_q)) - 2;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(std::ceil(hi_q));
    if (i == 0) lo = 0;  // endpoints are always admissible
    if (i == m - 1) hi = static_cast<std::ptrdiff_t>(n);
    lo = std::max<std::ptrdiff_t>(lo, 0);
    hi = std::min<std::ptrdiff_t>(hi, static_cast<std::ptrdiff_t>(n) - 1);
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
  }
};

std::vector<double> banded_matrix(const TimeSeries& x, const TimeSeries& y,
                                  const Band& band) {
  const std::size_t m = band.m;
  const std::size_t n = band.n;
  const std::vector<double>& xv = x.values();
  const std::vector<double>& yv = y.values();

  std::vector<double> acc(m * n, kInf);
  for (std::size_t i = 0; i < m; ++i) {
    double* row = acc.data() + i * n;
    const double* prev = (i > 0) ? row - n : nullptr;
    const auto [lo, hi] = band.row_range(i);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (!band.admissible(i, j)) continue;
      if (i == 0 && j == 0) {
        row[0] = local_cost(xv[0], yv[0]);
        continue;
      }
      double best = kInf;
      if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
      if (i > 0) best = std::min(best, prev[j]);
      if (j > 0) best = std::min(best, row[j - 1]);
      if (best < kInf) row[j] = best + local_cost(xv[i], yv[j]);
    }
  }
  return acc;
}

Band make_band(const TimeSeries& x, const TimeSeries& y,
               std::size_t band_radius) {
  return Band{static_cast<double>(x.size()) / static_cast<double>(y.size()),
              static_cast<double>(band_radius) + 1e-9, x.size(), y.size()};
}

}  // namespace

DtwResult dtw_banded(const TimeSeries& x, const TimeSeries& y,
                     std::size_t band_radius) {
  require_valid_pair(x, y, "dtw_banded");
  const Band band = make_band(x, y, band_radius);
  const std::vector<double> acc = banded_matrix(x, y, band);
  const double dist = acc[band.m * band.n - 1];
  if (!(dist < kInf))
    throw BandInfeasible("dtw_banded: no path within band radius " +
                         std::to_string(band_radius));
  return DtwResult{dist, backtrack(acc, band.m, band.n)};
}

double dtw_banded_distance(const TimeSeries& x, const TimeSeries& y,
                           std::size_t band_radius) {
  require_valid_pair(x, y, "dtw_banded_distance");
  const Band band = make_band(x, y, band_radius);
  const std::size_t m = band.m;
  const std::size_t n = band.n;
  const std::vector<double>& xv = x.values();
  const std::vector<double>& yv = y.values();

  std::vector<double> prev(n, kInf);
  std::vector<double> cur(n, kInf);
  // inclusive ranges of possibly-written cells per buffer; clearing the
  // incoming buffer's dirty range restores it to all-kInf before reuse
  std::pair<std::size_t, std::size_t> dirty_prev{1, 0};
  std::pair<std::size_t, std::size_t> dirty_cur{1, 0};
  for (std::size_t i = 0; i < m; ++i) {
    if (dirty_cur.first <= dirty_cur.second) {
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(dirty_cur.first),
                cur.begin() + static_cast<std::ptrdiff_t>(dirty_cur.second) + 1,
                kInf);
    }
    const auto [lo, hi] = band.row_range(i);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (!band.admissible(i, j)) continue;
      if (i == 0 && j == 0) {
        cur[0] = local_cost(xv[0], yv[0]);
        continue;
      }
      double best = kInf;
      if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
      if (i > 0) best = std::min(best, prev[j]);
      if (j > 0) best = std::min(best, cur[j - 1]);
      if (best < kInf) cur[j] = best + local_cost(xv[i], yv[j]);
    }
    dirty_cur = {lo, hi};
    std::swap(prev, cur);
    std::swap(dirty_prev, dirty_cur);
  }
  const double dist = prev[n - 1];
  if (!(dist < kInf))
    throw BandInfeasible("dtw_banded_distance: no path within band radius " +
                         std::to_string(band_radius));
  return dist;
}

bool is_valid_warping_path(const WarpingPath& path, std::size_t m,
                           std::size_t n) {
  if (path.empty()) return false;
  if (path.front() != PathPoint{0, 0}) return false;
  if (path.back() != PathPoint{m - 1, n - 1}) return false;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const std::size_t dx = path[k].xi - path[k - 1].xi;
    const std::size_t dy = path[k].yi - path[k - 1].yi;
    if (path[k].xi < path[k - 1].xi || path[k].yi < path[k - 1].yi)
      return false;
    if (dx > 1 || dy > 1 || (dx == 0 && dy == 0)) return false;
  }
  return true;
}

double path_cost(const WarpingPath& path, const TimeSeries& x,
                 const TimeSeries& y) {
  double sum = 0.0;
  for (const PathPoint& p : path) {
    sum += local_cost(x[p.xi], y[p.yi]);
  }
  return sum;
}

}  // namespace dtwmerge
