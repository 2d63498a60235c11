#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectra/vec.hpp"

namespace spectra {

/// Convex polytope in R^3 with exact vertices. Facets are vertex-index
/// cycles, oriented so their normals point outward.
struct Polytope3 {
  std::vector<V3q> v;
  std::vector<std::vector<int>> facets;
  std::optional<V3q> center;

  int size() const { return (int)v.size(); }
  bool symmetric() const { return center.has_value(); }
};

/// Check planarity, facet convexity, closedness (each edge shared by exactly
/// two facets) and the hull property; fixes facet orientation when a facet is
/// consistently inward. Detects the symmetry center.
Polytope3 validate_polytope(std::span<const V3q> vertices,
                            const std::vector<std::vector<int>>& facets);

struct FacetPair {
  int facet;           // representative facet
  int opposite;        // its point-reflected partner
  V3q tau;             // carries the opposite facet onto the representative
};

struct SymmetryAudit3 {
  bool body_symmetric = false;
  bool all_facets_symmetric = false;
  std::vector<bool> facet_symmetric;    // per facet
  std::vector<FacetPair> facet_pairs;   // populated when body_symmetric
};

/// Per-facet central-symmetry verdicts. Failures are verdicts, not errors.
SymmetryAudit3 symmetry_audit_3d(const Polytope3& p);

/// Decomposable case: some opposite facet pair whose complement is a band of
/// parallelograms with mutually parallel side edges.
bool is_prism(const Polytope3& p);

struct Affine3 {
  Mat3q m = Mat3q::identity();
  V3q shift{};
  V3q operator()(const V3q& x) const { return m.apply(x) + shift; }
};

Polytope3 apply_affine(const Affine3& t, const Polytope3& p);

Rat volume(const Polytope3& p);

}  // namespace spectra
