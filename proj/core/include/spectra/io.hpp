#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>

#include "spectra/hset.hpp"
#include "spectra/hset3.hpp"
#include "spectra/product.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

// Numbers: JSON numbers are snapped to small rationals when within 1e-12;
// strings "p/q" parse exactly; exact values serialize as strings.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);

/// {"dim":2|3, "vertices":[[x,y(,z)],...], "facets":[[i,...],...] (3D)}
struct ParsedPolytope {
  std::optional<Polygon> polygon2;    // exact coordinates
  std::optional<PolygonF> polygon2f;  // float fallback
  std::optional<Polytope3> polytope3;
  int dim = 0;
};
ParsedPolytope parse_polytope_json(const Json& j);
Polygon require_exact_polygon(const ParsedPolytope& p);

Json polygon_to_json(const Polygon& p);
Json polytope_to_json(const Polytope3& p);

/// {"type":"interval"|"box_union"|"polygon"|"product", ...}
Domain parse_domain_json(const Json& j);
Json domain_to_json(const Domain& d);

BoxN parse_box_json(const Json& j);
Json box_to_json(const BoxN& b);

/// {"dim":d, "points":[[...],...], "box":[[lo,hi],...]}; box defaults to the
/// bounding box. CSV: one point per row, d columns, '#' comments.
PointSet parse_pointset_json(const Json& j);
PointSet parse_pointset_csv(std::istream& in, const std::optional<BoxN>& box = std::nullopt);
Json pointset_to_json(const PointSet& ps);
void write_pointset_csv(std::ostream& out, const PointSet& ps, bool exact = false);

Json region_to_json(const Region& r);
Region parse_region_json(const Json& j);

Json grid_to_json(const GridSpec& g);
GridSpec parse_grid_json(const Json& j);

Json to_json(const OrthogonalityReport& r);
OrthogonalityReport orthogonality_from_json(const Json& j);

Json to_json(const TilingReport& r);
TilingReport tiling_from_json(const Json& j);

Json window_to_json(const Window& w);

Json to_json(const ClassificationResult& r, const std::optional<V2q>& witness = std::nullopt);

Json to_json(const CompatReport& r);
CompatReport compat_from_json(const Json& j);

Json to_json(const CutProjectResult& r);
Json to_json(const ExtractRow& r);
Json to_json(const AuditReport& r);
Json to_json(const GammaReport& r);
Json to_json(const SymmetryAudit3& r, const Polytope3& p);

}  // namespace spectra
