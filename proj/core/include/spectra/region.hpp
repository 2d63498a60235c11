#pragma once

#include <span>
#include <vector>

#include "spectra/domain.hpp"

namespace spectra {

/// Open axis-aligned box (boundary excluded).
struct OpenBox {
  std::vector<Scalar> lo, hi;

  int dim() const { return (int)lo.size(); }
  Scalar volume() const {
    Scalar v(1);
    for (int i = 0; i < dim(); ++i) v = v * (hi[i] - lo[i]);
    return v;
  }
  bool contains(std::span<const double> x, double shrink) const {
    for (int i = 0; i < dim(); ++i)
      if (!(x[i] > lo[i].value() + shrink && x[i] < hi[i].value() - shrink)) return false;
    return true;
  }
  bool contains_exact(std::span<const Rat> x) const {
    for (int i = 0; i < dim(); ++i)
      if (!(x[i] > lo[i].rat() && x[i] < hi[i].rat())) return false;
    return true;
  }
  friend bool operator==(const OpenBox& a, const OpenBox& b);
};

/// Bounded open region: a finite union of open boxes or the interior of a
/// convex polygon. Difference sets of box unions may carry overlapping boxes;
/// membership is the union of the open boxes, which keeps interior seams.
class Region {
 public:
  enum class Kind { BoxUnion, OpenPolygon };

  static Region box(OpenBox b);
  static Region box_union(std::vector<OpenBox> boxes);
  static Region open_polygon(Polygon p);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<OpenBox>& boxes() const { return boxes_; }
  const Polygon& polygon() const { return poly_; }

  bool contains(std::span<const double> x, const Tol& tol) const;
  bool contains_exact(std::span<const Rat> x) const;
  /// Membership of (p - shift) with both given as doubles.
  bool contains_shifted(std::span<const double> p, std::span<const double> shift,
                        const Tol& tol) const;

  BoxN bounding_box() const;
  double circumradius() const;  // max |x| over the closure

 private:
  Kind kind_ = Kind::BoxUnion;
  int dim_ = 0;
  std::vector<OpenBox> boxes_;
  Polygon poly_;
};

/// Delta(W) = W - W for open W, computed exactly: pairwise box differences,
/// or the dilate 2(W - c) for a centrally symmetric polygon.
Region delta_set(const Region& w);

/// Exact membership of x in Delta(W), evaluated from W directly (float mode
/// shrinks every open test by the tolerance).
bool delta_membership(const Region& w, std::span<const double> x, const Tol& tol = {});
bool delta_membership_exact(const Region& w, std::span<const Rat> x);

/// Point reflection through the origin, -W.
Region reflected(const Region& w);

}  // namespace spectra
