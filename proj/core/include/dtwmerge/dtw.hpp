#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dtwmerge/timeseries.hpp"

namespace dtwmerge {

// One aligned index pair (0-based: x[xi] matched with y[yi]).
struct PathPoint {
  std::size_t xi;
  std::size_t yi;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

// Ordered alignment from (0,0) to (M-1,N-1); steps are (1,0), (0,1) or
// (1,1) in (xi, yi).
using WarpingPath = std::vector<PathPoint>;

struct DtwResult {
  double distance = 0.0;
  WarpingPath path;
};

// Exact DTW with local cost |x_i - y_j| and the symmetric step set.
// Backtracking tie-break prefers the diagonal predecessor, then the one
// that decreases yi, then the one that decreases xi; dtw(x, x) therefore
// returns the main diagonal.
DtwResult dtw(const TimeSeries& x, const TimeSeries& y);

// Distance only, rolling two-row DP. Equals dtw(x, y).distance exactly.
double dtw_distance(const TimeSeries& x, const TimeSeries& y);

// Minimal cost by exhaustive enumeration of every monotone path; test
// oracle, lengths capped at 10.
double oracle_dtw(const TimeSeries& x, const TimeSeries& y);

inline constexpr std::size_t kOracleMaxLength = 10;

// Sakoe-Chiba-style constrained DTW: cell (p,q) (1-based) is admissible
// iff |p - q*M/N| <= band_radius; both endpoints are always admissible.
// band_radius >= max(M,N) makes every cell admissible. Throws
// BandInfeasible when no monotone path fits in the window.
DtwResult dtw_banded(const TimeSeries& x, const TimeSeries& y,
                     std::size_t band_radius);

// Distance-only counterpart of dtw_banded (same window, rolling rows).
double dtw_banded_distance(const TimeSeries& x, const TimeSeries& y,
                           std::size_t band_radius);

// Checks the warping-path invariants against series lengths m and n.
bool is_valid_warping_path(const WarpingPath& path, std::size_t m,
                           std::size_t n);

// Sum of |x - y| over the path pairs.
double path_cost(const WarpingPath& path, const TimeSeries& x,
                 const TimeSeries& y);

}  // namespace dtwmerge
