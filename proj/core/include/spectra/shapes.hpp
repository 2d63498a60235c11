#pragma once

#include "spectra/pointset.hpp"
#include "spectra/polytope3.hpp"

namespace spectra {
namespace shapes {

/// [-1/2,1/2]^2.
Polygon unit_square();

/// Hexagon with vertices (1/2,-1/2),(1/2,1/2),(a,b),(-1/2,1/2),(-1/2,-1/2),(-a,-b).
/// The default (a,b) = (0,1) has measure 3/2 and tiles by the lattice
/// spanned by (1,0) and (1/2,3/2).
Polygon hexagon(const Rat& a = 0, const Rat& b = 1);

/// Centrally symmetric octagon (+-3/4,0),(0,+-3/4),(+-1/2,+-1/2): strictly
/// convex, rational, neither a parallelogram nor a hexagon.
Polygon octagon();

Polytope3 cube();           // [-1/2,1/2]^3
Polytope3 tetrahedron();    // not centrally symmetric
Polytope3 truncated_octahedron();  // vertices: permutations of (0,+-1,+-2)
Polytope3 prism(const Polygon& base, const Rat& lo, const Rat& hi);

/// Z^d restricted to [-halfwidth, halfwidth]^d.
PointSet integer_lattice(int dim, long halfwidth);

/// {m b1 + n b2} restricted to [-halfwidth, halfwidth]^2; basis columns b1,b2.
PointSet lattice_window(const Mat2q& basis, const Rat& halfwidth);

/// (B^{-1})^T: the basis whose lattice is dual to the one spanned by B.
Mat2q dual_basis(const Mat2q& basis);

/// Tiling lattice of the default hexagon: columns (1,0) and (1/2,3/2).
Mat2q hexagon_tiling_basis();

}  // namespace shapes
}  // namespace spectra
