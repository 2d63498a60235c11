#include "spectra/window.hpp"

#include <cmath>

namespace spectra {

Region Window::canonical_region() const {
  OpenBox b;
  b.lo = {Scalar(-half[0]), Scalar(-half[1])};
  b.hi = {Scalar(half[0]), Scalar(half[1])};
  return Region::box(std::move(b));
}

Region Window::original_region() const {
  std::vector<V2q> corners = {{half[0], half[1]},
                              {-half[0], half[1]},
                              {-half[0], -half[1]},
                              {half[0], -half[1]}};
  for (auto& c : corners) c = back_map(c);
  Polygon p = validate_polygon(corners);
  return Region::open_polygon(std::move(p));
}

Window custom_window(const Polygon& a, int edge_index, const Rat& half_u, const Rat& half_v) {
  if (half_u <= 0 || half_v <= 0) raise(Err::BadInput, "window half-widths must be positive");
  auto [t, norm] = normalize(a, edge_index);
  Window w;
  w.half = {half_u, half_v};
  w.back_map = {t.m.transpose(), V2q{Rat(0), Rat(0)}};
  w.measure = Scalar(Rat(4) * half_u * half_v);
  w.edge_index = edge_index;
  w.normalized = std::move(norm);
  w.normalization = t;
  return w;
}

Window canonical_window(const Polygon& a, int edge_index) {
  auto [t, norm] = normalize(a, edge_index);
  Rat b = adjacent_vertex(norm).y;
  Window w;
  w.half = {Rat(1, 2), Rat(1) / (Rat(2) * b + 1)};  // (1/2)(b+1/2)^{-1}
  w.back_map = {t.m.transpose(), V2q{Rat(0), Rat(0)}};
  w.measure = Scalar(Rat(1) / (b + Rat(1, 2)));
  w.edge_index = edge_index;
  w.normalized = std::move(norm);
  w.normalization = t;
  return w;
}

namespace {

// Range of <t,n> over the open symmetric rectangle (+-du, +-dv) is (-s,s).
Rat rect_support(const Rat& du, const Rat& dv, const V2q& n) {
  Rat ax = n.x < 0 ? -n.x : n.x;
  Rat ay = n.y < 0 ? -n.y : n.y;
  return du * ax + dv * ay;
}

// A nonzero-offset line family meets the open rectangle iff its support
// exceeds 1; the scaled support-attaining corner is then a witness.
std::optional<V2q> family_hits_rect(const LineFamily& fam, const Rat& du, const Rat& dv) {
  Rat s = rect_support(du, dv, fam.normal);
  if (!(s > 1)) return std::nullopt;
  V2q corner{fam.normal.x >= 0 ? du : -du, fam.normal.y >= 0 ? dv : -dv};
  return V2q{corner.x / s, corner.y / s};  // <witness, n> = 1, strictly inside
}

WindowCheck check_canonical(const HSet& h, const Rat& two_hu, const Rat& two_hv) {
  WindowCheck res;
  if (h.kind() == HSet::Kind::LineFamilies) {
    for (const auto& fam : h.closed_form()) {
      if (auto wit = family_hits_rect(fam, two_hu, two_hv)) {
        res.witness = wit;
        return res;
      }
    }
    res.ok = true;
    return res;
  }
  double radius =
      std::sqrt(std::pow(to_double(two_hu), 2) + std::pow(to_double(two_hv), 2)) + 1e-6;
  PointSet pts = h_enumerate(h, radius);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts.exact_point(i);
    Rat ax = p[0] < 0 ? -p[0] : p[0];
    Rat ay = p[1] < 0 ? -p[1] : p[1];
    if (ax < two_hu && ay < two_hv) {
      res.witness = V2q{p[0], p[1]};
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace

WindowCheck is_window(const Polygon& a, const Window& w) {
  if (!a.symmetric()) raise(Err::NotSymmetric, "windows are defined for symmetric polygons");
  HSet h = h_set(w.normalized);
  return check_canonical(h, Rat(2) * w.half[0], Rat(2) * w.half[1]);
}

WindowCheck is_window_region(const Polygon& a, const Region& w) {
  if (!a.symmetric()) raise(Err::NotSymmetric, "windows are defined for symmetric polygons");
  HSet h = h_set(a);
  WindowCheck res;

  if (h.kind() == HSet::Kind::LineFamilies) {
    if (w.kind() == Region::Kind::BoxUnion) {
      for (const auto& fam : h.closed_form()) {
        for (const auto& bi : w.boxes()) {
          for (const auto& bj : w.boxes()) {
            // Difference box: center c, half-widths e (open).
            V2q c{(bi.lo[0].rat() + bi.hi[0].rat() - bj.lo[0].rat() - bj.hi[0].rat()) / 2,
                  (bi.lo[1].rat() + bi.hi[1].rat() - bj.lo[1].rat() - bj.hi[1].rat()) / 2};
            V2q e{(bi.hi[0].rat() - bi.lo[0].rat() + bj.hi[0].rat() - bj.lo[0].rat()) / 2,
                  (bi.hi[1].rat() - bi.lo[1].rat() + bj.hi[1].rat() - bj.lo[1].rat()) / 2};
            Rat mid = dot(c, fam.normal);
            Rat wdt = rect_support(e.x, e.y, fam.normal);
            // Nonzero integers k in the open interval (mid-wdt, mid+wdt).
            Rat lo = mid - wdt, hi = mid + wdt;
            for (Int k = rat_floor(lo) + 1; Rat(k) < hi; ++k) {
              if (k == 0) continue;
              // Witness inside the open box on the line <t,n> = k: move from
              // the center by the fraction of the support the residual needs.
              Rat rho = Rat(k) - mid;
              V2q t = c;
              if (wdt != 0) {
                Rat f = rho / wdt;
                t.x += f * e.x * (fam.normal.x >= 0 ? 1 : -1);
                t.y += f * e.y * (fam.normal.y >= 0 ? 1 : -1);
              }
              res.witness = t;
              return res;
            }
          }
        }
      }
      res.ok = true;
      return res;
    }
    // Symmetric polygon region: support-scaled vertex witness.
    Region delta = delta_set(w);
    const Polygon& dp = delta.polygon();
    for (const auto& fam : h.closed_form()) {
      Rat s = 0;
      V2q arg{};
      for (const auto& vtx : dp.v) {
        Rat val = dot(vtx, fam.normal);
        if (val > s) {
          s = val;
          arg = vtx;
        }
      }
      if (s > 1) {
        res.witness = V2q{arg.x / s, arg.y / s};
        return res;
      }
    }
    res.ok = true;
    return res;
  }

  Region delta = delta_set(w);
  PointSet pts = h_enumerate(h, delta.circumradius() + 1e-6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts.exact_point(i);
    std::array<Rat, 2> x{p[0], p[1]};
    if (delta_membership_exact(w, x)) {
      res.witness = V2q{p[0], p[1]};
      return res;
    }
  }
  res.ok = true;
  return res;
}

ClassificationResult classify_spectral(const Polygon& a) {
  ClassificationResult r;
  r.shape = classify_shape(a);
  if (r.shape == ShapeClass::NonSymmetric) {
    r.spectral = false;
    r.ratio = Scalar(0);
    r.justification =
        "not centrally symmetric: a spectral convex polygon must be centrally symmetric";
    return r;
  }

  int pairs = a.size() / 2;
  std::optional<Window> best;
  Rat best_ratio = 0;
  for (int k = 0; k < pairs; ++k) {
    Window w = canonical_window(a, k);
    Rat ratio = area(w.normalized) * w.measure.rat();
    if (!best || ratio > best_ratio) {
      best = std::move(w);
      best_ratio = ratio;
    }
  }

  auto chk = is_window(a, *best);
  if (!chk.ok) raise(Err::Internal, "canonical rectangle failed its own window check");

  r.window = std::move(best);
  r.ratio = Scalar(best_ratio);
  r.spectral =
      r.shape == ShapeClass::Parallelogram || r.shape == ShapeClass::SymmetricHexagon;
  bool ratio_one = best_ratio == 1;
  if (ratio_one != r.spectral)
    raise(Err::Internal, "window ratio contradicts the shape classification");
  r.justification = r.spectral ? "parallelograms and symmetric hexagons tile by translations"
                               : "canonical window exceeds the measure bound";
  return r;
}

BoundAuditReport window_bound_audit(const Polygon& a, const Window& w) {
  auto chk = is_window(a, w);
  if (!chk.ok) raise(Err::NotAWindow, "candidate fails the disjointness condition");
  BoundAuditReport rep;
  rep.ratio = Scalar(area(w.normalized) * w.measure.rat());
  auto cls = classify_shape(a);
  rep.asserted =
      cls == ShapeClass::Parallelogram || cls == ShapeClass::SymmetricHexagon;
  rep.bound_ok = !rep.asserted || rep.ratio.rat() <= 1;
  return rep;
}

}  // namespace spectra
