#include "spectra/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace spectra {

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(rat_from_string(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rat(j.get<long long>()));
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (auto q = snap_rational(v)) return Scalar(*q);
    return Scalar(v);
  }
  raise(Err::BadInput, "expected a number or rational string");
}

Json scalar_to_json(const Scalar& s) {
  if (s.exact()) return Json(rat_to_string(s.rat()));
  return Json(s.value());
}

ParsedPolytope parse_polytope_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    raise(Err::BadInput, "polytope JSON needs dim and vertices");
  ParsedPolytope out;
  out.dim = j.at("dim").get<int>();
  const Json& vs = j.at("vertices");
  if (!vs.is_array() || vs.empty()) raise(Err::BadInput, "vertices must be a non-empty array");

  if (out.dim == 2) {
    std::vector<V2q> exact;
    std::vector<V2d> approx;
    bool all_exact = true;
    for (const auto& row : vs) {
      if (!row.is_array() || row.size() != 2) raise(Err::BadInput, "2d vertex needs 2 entries");
      Scalar x = scalar_from_json(row[0]), y = scalar_from_json(row[1]);
      all_exact = all_exact && x.exact() && y.exact();
      if (all_exact) exact.push_back({x.rat(), y.rat()});
      approx.push_back({x.value(), y.value()});
    }
    if (all_exact) {
      out.polygon2 = validate_polygon(exact);
    } else {
      out.polygon2f = validate_polygon(approx, Tol{});
    }
    return out;
  }
  if (out.dim == 3) {
    if (!j.contains("facets")) raise(Err::BadInput, "3d polytope JSON needs facets");
    std::vector<V3q> verts;
    for (const auto& row : vs) {
      if (!row.is_array() || row.size() != 3) raise(Err::BadInput, "3d vertex needs 3 entries");
      Scalar x = scalar_from_json(row[0]), y = scalar_from_json(row[1]), z = scalar_from_json(row[2]);
      if (!x.exact() || !y.exact() || !z.exact())
        raise(Err::ExactRequired, "3d polytopes need exact coordinates");
      verts.push_back({x.rat(), y.rat(), z.rat()});
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    out.polytope3 = validate_polytope(verts, facets);
    return out;
  }
  raise(Err::BadInput, "dim must be 2 or 3");
}

Polygon require_exact_polygon(const ParsedPolytope& p) {
  if (!p.polygon2)
    raise(Err::ExactRequired,
          "operation needs exact vertex coordinates (integers, rationals \"p/q\", or decimals "
          "within 1e-12 of a small rational)");
  return *p.polygon2;
}

Json polygon_to_json(const Polygon& p) {
  Json vs = Json::array();
  for (const auto& v : p.v) vs.push_back({rat_to_string(v.x), rat_to_string(v.y)});
  Json j;
  j["dim"] = 2;
  j["vertices"] = vs;
  if (p.center)
    j["symmetry_center"] = {rat_to_string(p.center->x), rat_to_string(p.center->y)};
  return j;
}

Json polytope_to_json(const Polytope3& p) {
  Json vs = Json::array();
  for (const auto& v : p.v)
    vs.push_back({rat_to_string(v.x), rat_to_string(v.y), rat_to_string(v.z)});
  Json j;
  j["dim"] = 3;
  j["vertices"] = vs;
  j["facets"] = p.facets;
  if (p.center)
    j["symmetry_center"] = {rat_to_string(p.center->x), rat_to_string(p.center->y),
                            rat_to_string(p.center->z)};
  return j;
}

BoxN parse_box_json(const Json& j) {
  BoxN b;
  for (const auto& side : j) {
    if (!side.is_array() || side.size() != 2) raise(Err::BadInput, "box side needs [lo,hi]");
    b.lo.push_back(scalar_from_json(side[0]));
    b.hi.push_back(scalar_from_json(side[1]));
  }
  if (b.dim() == 0) raise(Err::BadInput, "empty box");
  return b;
}

Json box_to_json(const BoxN& b) {
  Json j = Json::array();
  for (int i = 0; i < b.dim(); ++i) j.push_back({scalar_to_json(b.lo[i]), scalar_to_json(b.hi[i])});
  return j;
}

Domain parse_domain_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "interval") {
    return Domain::interval(scalar_from_json(j.at("lo")), scalar_from_json(j.at("hi")));
  }
  if (type == "box_union") {
    std::vector<BoxN> boxes;
    for (const auto& bj : j.at("boxes")) boxes.push_back(parse_box_json(bj));
    return Domain::box_union(std::move(boxes));
  }
  if (type == "polygon") {
    Json pj;
    pj["dim"] = 2;
    pj["vertices"] = j.at("vertices");
    auto parsed = parse_polytope_json(pj);
    if (parsed.polygon2) return Domain::polygon(*parsed.polygon2);
    return Domain::polygon_float(*parsed.polygon2f);
  }
  if (type == "product") {
    const Json& f = j.at("factors");
    if (!f.is_array() || f.size() != 2) raise(Err::BadInput, "product needs two factors");
    return Domain::product(parse_domain_json(f[0]), parse_domain_json(f[1]));
  }
  raise(Err::BadInput, "unknown domain type '" + type + "'");
}

Json domain_to_json(const Domain& d) {
  Json j;
  switch (d.kind()) {
    case Domain::Kind::Interval:
      j["type"] = "interval";
      j["lo"] = scalar_to_json(d.boxes()[0].lo[0]);
      j["hi"] = scalar_to_json(d.boxes()[0].hi[0]);
      return j;
    case Domain::Kind::BoxUnion: {
      j["type"] = "box_union";
      Json boxes = Json::array();
      for (const auto& b : d.boxes()) boxes.push_back(box_to_json(b));
      j["boxes"] = boxes;
      return j;
    }
    case Domain::Kind::Polygon: {
      j["type"] = "polygon";
      if (d.exact_polygon()) {
        j["vertices"] = polygon_to_json(*d.exact_polygon())["vertices"];
      } else {
        Json vs = Json::array();
        for (const auto& v : d.approx_polygon().v) vs.push_back({v.x, v.y});
        j["vertices"] = vs;
      }
      return j;
    }
    case Domain::Kind::Product:
      j["type"] = "product";
      j["factors"] = Json::array({domain_to_json(d.factor(0)), domain_to_json(d.factor(1))});
      return j;
  }
  raise(Err::Internal, "unreachable domain kind");
}

PointSet parse_pointset_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j.at("points")) {
    if ((int)row.size() != dim) raise(Err::DimensionMismatch, "point width vs dim");
    std::vector<Scalar> r;
    for (const auto& c : row) r.push_back(scalar_from_json(c));
    rows.push_back(std::move(r));
  }
  std::optional<BoxN> box;
  if (j.contains("box")) box = parse_box_json(j.at("box"));

  bool all_exact = true;
  for (const auto& r : rows)
    for (const auto& s : r) all_exact = all_exact && s.exact();

  if (!box) {
    BoxN b;
    b.lo.resize(dim, Scalar(0));
    b.hi.resize(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
      for (size_t k = 0; k < rows.size(); ++k) {
        if (k == 0 || rows[k][i] < b.lo[i]) b.lo[i] = rows[k][i];
        if (k == 0 || b.hi[i] < rows[k][i]) b.hi[i] = rows[k][i];
      }
    }
    box = b;
  }
  if (all_exact) {
    std::vector<VecXq> q;
    for (const auto& r : rows) {
      VecXq row;
      for (const auto& s : r) row.push_back(s.rat());
      q.push_back(std::move(row));
    }
    return PointSet::from_exact_rows(dim, q, *box);
  }
  std::vector<VecXd> dpts;
  for (const auto& r : rows) {
    VecXd row;
    for (const auto& s : r) row.push_back(s.value());
    dpts.push_back(std::move(row));
  }
  return PointSet::from_rows(dim, dpts, *box);
}

PointSet parse_pointset_csv(std::istream& in, const std::optional<BoxN>& box_opt) {
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  int dim = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    for (auto& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(scalar_from_token(tok));
    if (row.empty()) continue;
    if (dim < 0) dim = (int)row.size();
    if ((int)row.size() != dim) raise(Err::BadInput, "inconsistent column count in CSV");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) raise(Err::BadInput, "empty point CSV");

  Json j;
  j["dim"] = dim;
  Json pts = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& s : r) row.push_back(scalar_to_json(s));
    pts.push_back(row);
  }
  j["points"] = pts;
  if (box_opt) j["box"] = box_to_json(*box_opt);
  return parse_pointset_json(j);
}

Json pointset_to_json(const PointSet& ps) {
  Json j;
  j["dim"] = ps.dim();
  Json pts = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Json row = Json::array();
    if (ps.exact()) {
      auto p = ps.exact_point(i);
      for (const auto& c : p) row.push_back(rat_to_string(c));
    } else {
      auto p = ps.point(i);
      for (double c : p) row.push_back(c);
    }
    pts.push_back(row);
  }
  j["points"] = pts;
  j["box"] = box_to_json(ps.box());
  return j;
}

void write_pointset_csv(std::ostream& out, const PointSet& ps, bool exact) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (exact && ps.exact()) {
      auto p = ps.exact_point(i);
      for (int k = 0; k < ps.dim(); ++k) out << (k ? "," : "") << rat_to_string(p[k]);
    } else {
      auto p = ps.point(i);
      out.precision(17);
      for (int k = 0; k < ps.dim(); ++k) out << (k ? "," : "") << p[k];
    }
    out << "\n";
  }
}

Json region_to_json(const Region& r) {
  Json j;
  if (r.kind() == Region::Kind::BoxUnion) {
    j["type"] = "box_union";
    Json boxes = Json::array();
    for (const auto& b : r.boxes()) {
      Json side = Json::array();
      for (int i = 0; i < b.dim(); ++i)
        side.push_back({scalar_to_json(b.lo[i]), scalar_to_json(b.hi[i])});
      boxes.push_back(side);
    }
    j["boxes"] = boxes;
    return j;
  }
  j["type"] = "open_polygon";
  j["vertices"] = polygon_to_json(r.polygon())["vertices"];
  return j;
}

Region parse_region_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "box_union") {
    std::vector<OpenBox> boxes;
    for (const auto& bj : j.at("boxes")) {
      OpenBox b;
      for (const auto& side : bj) {
        b.lo.push_back(scalar_from_json(side[0]));
        b.hi.push_back(scalar_from_json(side[1]));
      }
      boxes.push_back(std::move(b));
    }
    return Region::box_union(std::move(boxes));
  }
  if (type == "rect") {
    // {"type":"rect","half_widths":[h1,...,hd]} centered at the origin
    OpenBox b;
    for (const auto& h : j.at("half_widths")) {
      Scalar s = scalar_from_json(h);
      b.lo.push_back(Scalar(0) - s);
      b.hi.push_back(s);
    }
    return Region::box(std::move(b));
  }
  if (type == "open_polygon") {
    Json pj;
    pj["dim"] = 2;
    pj["vertices"] = j.at("vertices");
    return Region::open_polygon(require_exact_polygon(parse_polytope_json(pj)));
  }
  raise(Err::BadInput, "unknown region type '" + type + "'");
}

Json grid_to_json(const GridSpec& g) {
  Json j;
  j["box"] = box_to_json(g.box);
  j["steps"] = g.steps;
  j["jitter_seed"] = g.jitter_seed;
  j["jitter"] = g.jitter;
  return j;
}

GridSpec parse_grid_json(const Json& j) {
  GridSpec g;
  g.box = parse_box_json(j.at("box"));
  g.steps = j.at("steps").get<std::vector<int>>();
  if (j.contains("jitter_seed")) g.jitter_seed = j.at("jitter_seed").get<std::uint64_t>();
  if (j.contains("jitter")) g.jitter = j.at("jitter").get<double>();
  return g;
}

Json to_json(const OrthogonalityReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["worst_abs"] = r.worst_abs;
  j["worst_pair"] = Json::array({r.worst_a, r.worst_b});
  j["pairs_checked"] = r.pairs_checked;
  j["tol_abs"] = r.tol_abs;
  return j;
}

OrthogonalityReport orthogonality_from_json(const Json& j) {
  OrthogonalityReport r;
  r.ok = j.at("ok").get<bool>();
  r.worst_abs = j.at("worst_abs").get<double>();
  r.worst_a = j.at("worst_pair")[0].get<VecXd>();
  r.worst_b = j.at("worst_pair")[1].get<VecXd>();
  r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  r.tol_abs = j.at("tol_abs").get<double>();
  return r;
}

Json to_json(const TilingReport& r) {
  Json j;
  j["kind"] = r.kind == SumKind::Packing ? "packing" : "tiling";
  j["ok"] = r.ok;
  j["max_sum"] = r.max_sum;
  j["min_interior_sum"] = r.min_interior_sum;
  j["max_abs_dev_from_1"] = r.max_abs_dev_from_1;
  j["dev_beyond_tail"] = r.dev_beyond_tail;
  j["tail_bound"] = r.tail_bound;
  j["tail_certified"] = r.tail_certified;
  j["tol"] = r.tol;
  j["truncation_radius"] = r.truncation_radius;
  j["samples"] = r.samples;
  j["points_used"] = r.points_used;
  j["grid"] = grid_to_json(r.grid);
  j["note"] = r.note;
  return j;
}

TilingReport tiling_from_json(const Json& j) {
  TilingReport r;
  r.kind = j.at("kind").get<std::string>() == "packing" ? SumKind::Packing : SumKind::Tiling;
  r.ok = j.at("ok").get<bool>();
  r.max_sum = j.at("max_sum").get<double>();
  r.min_interior_sum = j.at("min_interior_sum").get<double>();
  r.max_abs_dev_from_1 = j.at("max_abs_dev_from_1").get<double>();
  r.dev_beyond_tail = j.at("dev_beyond_tail").get<double>();
  r.tail_bound = j.at("tail_bound").get<double>();
  r.tail_certified = j.at("tail_certified").get<bool>();
  r.tol = j.at("tol").get<double>();
  r.truncation_radius = j.at("truncation_radius").get<double>();
  r.samples = j.at("samples").get<std::size_t>();
  r.points_used = j.at("points_used").get<std::size_t>();
  r.grid = parse_grid_json(j.at("grid"));
  r.note = j.at("note").get<std::string>();
  return r;
}

Json window_to_json(const Window& w) {
  Json j;
  j["half_widths"] = {rat_to_string(w.half[0]), rat_to_string(w.half[1])};
  j["measure"] = scalar_to_json(w.measure);
  j["edge_index"] = w.edge_index;
  Json m = Json::array();
  m.push_back({rat_to_string(w.back_map.m.a), rat_to_string(w.back_map.m.b)});
  m.push_back({rat_to_string(w.back_map.m.c), rat_to_string(w.back_map.m.d)});
  j["back_map"] = {{"matrix", m},
                   {"shift", {rat_to_string(w.back_map.shift.x), rat_to_string(w.back_map.shift.y)}}};
  return j;
}

Json to_json(const ClassificationResult& r, const std::optional<V2q>& witness) {
  Json j;
  j["shape"] = to_string(r.shape);
  j["spectral"] = r.spectral;
  j["ratio"] = scalar_to_json(r.ratio);
  j["window"] = r.window ? window_to_json(*r.window) : Json(nullptr);
  if (witness) j["witness"] = {rat_to_string(witness->x), rat_to_string(witness->y)};
  j["justification"] = r.justification;
  return j;
}

Json to_json(const CompatReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["differences_checked"] = r.differences_checked;
  j["violator_count"] = r.violator_count;
  j["violators"] = r.violators;
  return j;
}

CompatReport compat_from_json(const Json& j) {
  CompatReport r;
  r.ok = j.at("ok").get<bool>();
  r.differences_checked = j.at("differences_checked").get<std::size_t>();
  r.violator_count = j.at("violator_count").get<std::size_t>();
  r.violators = j.at("violators").get<std::vector<VecXd>>();
  return r;
}

Json to_json(const CutProjectResult& r) {
  Json j;
  j["x"] = r.x;
  j["injective"] = r.injective;
  j["selected"] = r.selected;
  j["gamma_size"] = r.gamma.size();
  Json cols = Json::array();
  for (const auto& [a, b] : r.collisions) cols.push_back(Json::array({a, b}));
  j["collisions"] = cols;
  return j;
}

Json to_json(const ExtractRow& r) {
  Json j;
  j["x"] = r.x;
  j["cut"] = to_json(r.cut);
  j["orthogonality"] = to_json(r.orth);
  j["tiling"] = to_json(r.tiling);
  j["insufficient_window"] = r.insufficient_window;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["w_compatible"] = to_json(r.compat);
  j["step2_packing"] = to_json(r.step2_packing);
  j["step3_tiling"] = to_json(r.step3_tiling);
  j["measures_comparable"] = r.measures_comparable;
  j["measure_equal"] = r.measure_equal;
  j["measure_bounded"] = r.measure_bounded;
  j["w_measure"] = scalar_to_json(r.w_measure);
  j["a_measure_inv"] = scalar_to_json(r.a_measure_inv);
  j["step5_tiling"] = r.step5_tiling ? to_json(*r.step5_tiling) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  j["steps"] = steps;
  j["all_ok"] = r.all_ok;
  return j;
}

Json to_json(const GammaReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["differences_checked"] = r.differences_checked;
  j["violator_count"] = r.violator_count;
  Json v = Json::array();
  for (const auto& p : r.violators) v.push_back({p.x, p.y});
  j["violators"] = v;
  return j;
}

Json to_json(const SymmetryAudit3& r, const Polytope3& p) {
  Json j;
  j["body_symmetric"] = r.body_symmetric;
  j["all_facets_symmetric"] = r.all_facets_symmetric;
  j["facet_symmetric"] = r.facet_symmetric;
  Json pairs = Json::array();
  for (const auto& fp : r.facet_pairs) {
    pairs.push_back({{"facet", fp.facet},
                     {"opposite", fp.opposite},
                     {"tau", {rat_to_string(fp.tau.x), rat_to_string(fp.tau.y),
                              rat_to_string(fp.tau.z)}}});
  }
  j["facet_pairs"] = pairs;
  return j;
}

}  // namespace spectra
