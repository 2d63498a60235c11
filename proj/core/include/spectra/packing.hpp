#pragma once

#include <string>

#include "spectra/pointset.hpp"
#include "spectra/region.hpp"

namespace spectra {

/// Jittered sampling grid. Samples sit strictly inside their cells; the
/// jitter stream is a fixed function of the seed, so reports are reproducible
/// byte for byte.
struct GridSpec {
  BoxN box;
  std::vector<int> steps;
  std::uint64_t jitter_seed = 1;
  double jitter = 0.9;

  std::size_t total() const {
    std::size_t t = 1;
    for (int s : steps) t *= (std::size_t)s;
    return t;
  }
  std::vector<VecXd> samples() const;
};

enum class SumKind { Packing, Tiling };

struct TilingReport {
  SumKind kind = SumKind::Packing;
  bool ok = false;
  double max_sum = 0;
  double min_interior_sum = 0;
  double max_abs_dev_from_1 = 0;
  double dev_beyond_tail = 0;   // deviation not explained by the truncation allowance
  double tail_bound = 0;        // allowance for the neglected lattice tail
  bool tail_certified = true;
  double tol = 0;
  double truncation_radius = 0;
  std::size_t samples = 0;
  std::size_t points_used = 0;
  GridSpec grid;
  std::string note;
};

/// Sum of translated normalized powers must stay <= 1 (+tol). Uses every
/// supplied point; truncation never weakens a packing verdict.
TilingReport packing_check(const Domain& omega, const PointSet& lambda, const GridSpec& grid,
                           double tol = 1e-3);

/// Indicator variant: counts overlapping translates of the open region.
TilingReport packing_check(const Region& w, const PointSet& lambda, const GridSpec& grid,
                           double tol = 1e-6);

struct TilingOptions {
  double trunc_radius = -1;  // <0: use everything the validity box supports
  double tol = 5e-3;
};

/// Sum of translated powers must equal 1 up to tol after accounting for the
/// truncated tail. Requires the validity box to exceed the grid box inflated
/// by the truncation radius.
TilingReport tiling_check(const Domain& omega, const PointSet& lambda, const GridSpec& grid,
                          TilingOptions opt = {});

/// Certified bound on a one-dimensional sinc^2 lattice tail: points spaced at
/// least `separation` apart, all at distance > r, interval of length `length`.
double interval_tail_bound(double length, double separation, double r);

}  // namespace spectra
