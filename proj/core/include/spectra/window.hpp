#pragma once

#include "spectra/hset.hpp"
#include "spectra/region.hpp"

namespace spectra {

/// Candidate window for a polygon: an open origin-symmetric rectangle in the
/// canonical frame of one edge, plus the exact transport back to the original
/// frequency coordinates (inverse-transpose rule).
struct Window {
  std::array<Rat, 2> half;  // open rectangle (-half[0],half[0]) x (-half[1],half[1])
  Affine2 back_map;         // canonical frame -> original frequency frame
  Scalar measure;           // rectangle measure; invariant under normalization
  int edge_index = 0;
  Polygon normalized;       // the polygon in this edge's canonical frame
  Affine2 normalization;    // original -> canonical (space side)

  Region canonical_region() const;
  Region original_region() const;  // back-mapped rectangle (a parallelogram)
};

/// The proof construction: |u| < 1/2, |v| < (1/2)(b+1/2)^{-1} with (a,b) the
/// vertex adjacent to the normalized edge. Measure (b+1/2)^{-1} exactly.
Window canonical_window(const Polygon& a, int edge_index);

/// Same frame and transport, caller-chosen half-widths.
Window custom_window(const Polygon& a, int edge_index, const Rat& half_u, const Rat& half_v);

struct WindowCheck {
  bool ok = false;
  std::optional<V2q> witness;  // a point of H(A) inside Delta(W), canonical frame
};

/// Exact decision of Delta(W) disjointness from H(A): analytic line-family
/// ranges for parallelograms, exhaustive enumeration within the circumradius
/// of Delta(W) otherwise.
WindowCheck is_window(const Polygon& a, const Window& w);

/// Arbitrary region in the original frequency coordinates (box-union path).
WindowCheck is_window_region(const Polygon& a, const Region& w);

struct ClassificationResult {
  ShapeClass shape = ShapeClass::NonSymmetric;
  bool spectral = false;
  std::optional<Window> window;
  Scalar ratio;  // |W| * |A|, exact; 1 iff spectral shape
  std::string justification;
};

/// Spectral iff parallelogram or centrally symmetric hexagon; the window is
/// the canonical one on the edge maximizing the ratio (lowest index on ties).
ClassificationResult classify_spectral(const Polygon& a);

struct BoundAuditReport {
  Scalar ratio;       // |W| * |A|
  bool asserted;      // bound claimed (spectral shape)
  bool bound_ok;      // ratio <= 1 when asserted
};

/// Measure bound: a window of a spectral polygon has |W| <= |A|^{-1}.
/// Fails with NotAWindow when the candidate is not a window at all.
BoundAuditReport window_bound_audit(const Polygon& a, const Window& w);

}  // namespace spectra
