#pragma once

#include <memory>
#include <span>
#include <vector>

#include "spectra/geometry.hpp"

namespace spectra {

/// Axis-aligned box given by per-axis bounds.
struct BoxN {
  std::vector<Scalar> lo, hi;

  int dim() const { return (int)lo.size(); }
  Scalar volume() const {
    Scalar v(1);
    for (int i = 0; i < dim(); ++i) v = v * (hi[i] - lo[i]);
    return v;
  }
  bool contains(std::span<const double> x, double shrink = 0.0) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < lo[i].value() + shrink || x[i] > hi[i].value() - shrink) return false;
    return true;
  }
};

BoxN product_box(const BoxN& a, const BoxN& b);

/// A measurable set with a closed-form Fourier transform: interval, finite
/// disjoint box union, convex polygon, or a cartesian product of such.
class Domain {
 public:
  enum class Kind { Interval, BoxUnion, Polygon, Product };

  static Domain interval(Scalar lo, Scalar hi);
  static Domain box_union(std::vector<BoxN> boxes);
  static Domain polygon(Polygon p);
  static Domain polygon_float(PolygonF p);
  static Domain product(Domain a, Domain b);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  Scalar measure() const { return measure_; }

  const std::vector<BoxN>& boxes() const { return boxes_; }               // Interval/BoxUnion
  const std::optional<Polygon>& exact_polygon() const { return poly_; }   // Polygon
  const PolygonF& approx_polygon() const { return polyf_; }               // Polygon
  const Domain& factor(int i) const;                                      // Product

  /// Measure-weighted centroid (doubles).
  std::vector<double> centroid() const;

  // Precomputed polygon evaluation data (Polygon kind).
  struct EdgeData {
    V2d mid;   // edge midpoint
    V2d vec;   // CCW edge vector
    V2d rot;   // (vec.y, -vec.x): outward normal scaled by edge length
  };
  const std::vector<EdgeData>& edges() const { return edges_; }
  const std::array<double, 6>& poly_moments() const { return moments_; }  // A,Mx,My,Ixx,Ixy,Iyy

 private:
  Kind kind_ = Kind::Interval;
  int dim_ = 1;
  Scalar measure_;
  std::vector<BoxN> boxes_;
  std::optional<Polygon> poly_;
  PolygonF polyf_;
  std::vector<EdgeData> edges_;
  std::array<double, 6> moments_{};
  std::vector<std::shared_ptr<const Domain>> factors_;

  void init_polygon_eval();
};

}  // namespace spectra
