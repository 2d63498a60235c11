#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectra/domain.hpp"

namespace spectra {

/// Finite window of a (conceptually infinite) point configuration. The set is
/// only asserted correct inside its validity box; operations record it so
/// truncation effects stay attributable.
class PointSet {
 public:
  PointSet() : dim_(0) {}
  explicit PointSet(int dim) : dim_(dim) {}

  static PointSet from_rows(int dim, const std::vector<VecXd>& rows, BoxN box);
  static PointSet from_exact_rows(int dim, const std::vector<VecXq>& rows, BoxN box);

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ ? flat_.size() / dim_ : 0; }
  bool empty() const { return flat_.empty(); }
  bool exact() const { return exact_.has_value(); }

  std::span<const double> point(std::size_t i) const { return {flat_.data() + i * dim_, (size_t)dim_}; }
  std::span<const Rat> exact_point(std::size_t i) const {
    return {exact_->data() + i * dim_, (size_t)dim_};
  }

  const BoxN& box() const { return box_; }

  PointSet translated(std::span<const double> shift) const;
  PointSet translated_exact(std::span<const Rat> shift) const;
  /// Applies an exact 2x2 matrix to coordinate block [offset, offset+2).
  PointSet block_map2(const Mat2q& m, int offset) const;

 private:
  int dim_;
  std::vector<double> flat_;
  std::optional<std::vector<Rat>> exact_;
  BoxN box_;

  friend PointSet product_pointset(const PointSet&, const PointSet&);
  friend PointSet difference_set(const PointSet&);
};

/// Minimum pairwise distance. Exact-mode arg pairs are compared exactly.
double separation(const PointSet& ps);

/// Upper-bound estimate of the covering radius over `region`: max over a
/// probe grid of the distance to the nearest point, plus the grid slack.
double covering_radius(const PointSet& ps, const BoxN& region, double probe_step);

/// All nonzero pairwise differences, deduplicated (exactly in rational mode,
/// 1e-10 merge in float mode). Validity box is the difference of boxes.
PointSet difference_set(const PointSet& ps);

PointSet product_pointset(const PointSet& u, const PointSet& v);

struct OrthogonalityReport {
  bool ok = false;
  VecXd worst_a, worst_b;   // pair realizing the worst |ft| value
  double worst_abs = 0;
  std::size_t pairs_checked = 0;
  double tol_abs = 0;       // tol * |Omega|
};

/// Zero-set orthogonality criterion: every nonzero difference of points must
/// be a zero of the transform, up to tol * |Omega|.
OrthogonalityReport check_orthogonality(const Domain& omega, const PointSet& lambda, double tol);

}  // namespace spectra
