#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectra/vec.hpp"

namespace spectra {

/// Strictly convex polygon with exact rational vertices, counter-clockwise.
/// `center` is set iff the vertex set is invariant under point reflection
/// through it (for convex polygons only the vertex average can qualify).
struct Polygon {
  std::vector<V2q> v;
  std::optional<V2q> center;

  int size() const { return (int)v.size(); }
  bool symmetric() const { return center.has_value(); }
};

/// Float-mode polygon; all predicates during validation used the tolerance
/// context it was built with. Non-certifying.
struct PolygonF {
  std::vector<V2d> v;
  std::optional<V2d> center;
  Tol tol;

  int size() const { return (int)v.size(); }
  bool symmetric() const { return center.has_value(); }
};

/// Validate raw vertices: enforce CCW, merge collinear runs, reject
/// non-convex or degenerate input, detect the symmetry center.
Polygon validate_polygon(std::span<const V2q> vertices);
PolygonF validate_polygon(std::span<const V2d> vertices, Tol tol);

/// One pair of opposite parallel edges of a centrally symmetric polygon.
/// `e` is the CCW direction vector of the representative (lower-index) edge;
/// `tau` carries the midpoint of the opposite edge onto the midpoint of the
/// representative one, canonicalized to lexicographically positive sign.
struct EdgePair {
  V2q e;
  V2q tau;
  int edge_index;           // representative edge i: from v[i] to v[i+1]
  int opposite_index;       // i + n/2
};

std::vector<EdgePair> edge_pairs(const Polygon& p);

/// Invertible affine map x -> M x + shift with exact entries.
struct Affine2 {
  Mat2q m = Mat2q::identity();
  V2q shift{};

  V2q operator()(const V2q& x) const { return m.apply(x) + shift; }
  Affine2 inverse() const {
    Mat2q mi = m.inverse();
    return {mi, -mi.apply(shift)};
  }
  friend Affine2 operator*(const Affine2& f, const Affine2& g) {  // f after g
    return {f.m * g.m, f.m.apply(g.shift) + f.shift};
  }
  bool is_identity() const {
    return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1 && shift.x == 0 && shift.y == 0;
  }
};

/// Move the polygon into the canonical frame of the chosen edge: symmetric
/// about the origin, edge mapped onto the segment (1/2,-1/2)..(1/2,1/2).
/// Returns the map and its image. The vertex following the mapped edge lands
/// at (a,b) with b >= 1/2.
std::pair<Affine2, Polygon> normalize(const Polygon& p, int edge_index);

/// (a,b) read off a polygon already in canonical position.
V2q adjacent_vertex(const Polygon& normalized);

Rat area(const Polygon& p);
double area(const PolygonF& p);

enum class ShapeClass { Parallelogram, SymmetricHexagon, OtherSymmetric, NonSymmetric };
const char* to_string(ShapeClass c);

ShapeClass classify_shape(const Polygon& p);
ShapeClass classify_shape(const PolygonF& p);

Polygon apply_affine(const Affine2& t, const Polygon& p);

/// True when the polygon is in the canonical frame some edge normalization
/// produces: origin-symmetric with an edge (1/2,-1/2)..(1/2,1/2).
bool is_normalized(const Polygon& p);

}  // namespace spectra
