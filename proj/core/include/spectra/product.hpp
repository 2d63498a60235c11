#pragma once

#include "spectra/packing.hpp"
#include "spectra/window.hpp"

namespace spectra {

struct CompatReport {
  bool ok = false;
  std::size_t differences_checked = 0;
  std::vector<VecXd> violators;  // capped sample of offending differences
  std::size_t violator_count = 0;
};

/// W-compatibility of a product-space spectrum: every nonzero difference
/// (s,w) must have s outside Delta(W) or w a zero of ft of B (tolerance tol).
/// W lives in the first block, B in the second.
CompatReport w_compatible(const PointSet& lambda, const Region& w, const Domain& b, double tol);

struct CutProjectResult {
  VecXd x;
  bool injective = true;
  PointSet gamma;                                  // deduplicated projections
  std::vector<std::pair<VecXd, VecXd>> collisions; // distinct points sharing a projection
  std::size_t selected = 0;
};

/// Points of Lambda whose first block lies in the open set W + x, projected
/// to the second block. Exact selection when Lambda, W and x are exact.
CutProjectResult cut_project(const PointSet& lambda, const Region& w, std::span<const double> x);
CutProjectResult cut_project_exact(const PointSet& lambda, const Region& w,
                                   std::span<const Rat> x);

struct ProductSpectrumJob {
  Domain a;                      // first factor (the polytope side)
  Domain b;                      // second factor
  PointSet lambda;               // spectrum window in the product space
  Region w;                      // window region, first-block coordinates
  std::optional<Scalar> w_measure;  // exact measure when known
  int samples = 20;
  std::uint64_t seed = 1;
  BoxN sample_box;               // x samples drawn here (exact bounds)
  double orth_tol = 1e-9;
  GridSpec gamma_grid;           // grid for the per-gamma tiling check
  double tile_tol = 5e-3;
};

struct ExtractRow {
  VecXd x;
  CutProjectResult cut;
  OrthogonalityReport orth;
  TilingReport tiling;
  bool insufficient_window = false;
  bool pass = false;
};

/// The full pipeline: sample x, cut-and-project, then verify that each gamma
/// is orthogonal and tiles for B at desk scale.
std::vector<ExtractRow> extract_factor_spectrum(const ProductSpectrumJob& job);

struct AuditStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct AuditReport {
  CompatReport compat;
  TilingReport step2_packing;               // (1_{-W} (x) f_B) + Lambda is a packing
  TilingReport step3_tiling;                // (f_A (x) f_B) + Lambda is a tiling
  bool measures_comparable = false;         // both sides exact
  bool measure_equal = false;               // |W| = |A|^{-1}
  bool measure_bounded = false;             // |W| <= |A|^{-1}
  Scalar w_measure, a_measure_inv;
  std::optional<TilingReport> step5_tiling; // (1_{-W} (x) f_B) + Lambda is a tiling
  std::vector<AuditStep> steps;
  bool all_ok = false;
};

/// Numeric audit of the product-spectrum argument on a concrete job:
/// packing, tiling, the measure identity, and the induced tiling.
AuditReport theorem4_audit(const ProductSpectrumJob& job, const GridSpec& product_grid);

}  // namespace spectra
