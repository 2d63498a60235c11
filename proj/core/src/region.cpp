#include "spectra/region.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {

bool operator==(const OpenBox& a, const OpenBox& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (!(a.lo[i] == b.lo[i]) || !(a.hi[i] == b.hi[i])) return false;
  }
  return true;
}

Region Region::box(OpenBox b) { return box_union({std::move(b)}); }

Region Region::box_union(std::vector<OpenBox> boxes) {
  if (boxes.empty()) raise(Err::BadInput, "empty region");
  Region r;
  r.kind_ = Kind::BoxUnion;
  r.dim_ = boxes[0].dim();
  for (const auto& b : boxes) {
    if (b.dim() != r.dim_ || (int)b.hi.size() != r.dim_)
      raise(Err::DimensionMismatch, "box dims differ");
    for (int i = 0; i < r.dim_; ++i)
      if (!(b.lo[i] < b.hi[i])) raise(Err::BadInput, "open box needs lo < hi");
  }
  r.boxes_ = std::move(boxes);
  return r;
}

Region Region::open_polygon(Polygon p) {
  Region r;
  r.kind_ = Kind::OpenPolygon;
  r.dim_ = 2;
  r.poly_ = std::move(p);
  return r;
}

bool Region::contains(std::span<const double> x, const Tol& tol) const {
  if ((int)x.size() != dim_) raise(Err::DimensionMismatch, "membership point dimension");
  if (kind_ == Kind::BoxUnion) {
    for (const auto& b : boxes_)
      if (b.contains(x, tol.abs)) return true;
    return false;
  }
  int n = poly_.size();
  for (int i = 0; i < n; ++i) {
    V2d a = to_d(poly_.v[i]);
    V2d v = to_d(poly_.v[(i + 1) % n]) - a;
    double len = std::sqrt(v.x * v.x + v.y * v.y);
    double c = v.x * (x[1] - a.y) - v.y * (x[0] - a.x);
    if (!(c > tol.abs * len)) return false;  // signed distance above tol
  }
  return true;
}

bool Region::contains_exact(std::span<const Rat> x) const {
  if ((int)x.size() != dim_) raise(Err::DimensionMismatch, "membership point dimension");
  if (kind_ == Kind::BoxUnion) {
    for (const auto& b : boxes_)
      if (b.contains_exact(x)) return true;
    return false;
  }
  int n = poly_.size();
  for (int i = 0; i < n; ++i) {
    const V2q& a = poly_.v[i];
    V2q v = poly_.v[(i + 1) % n] - a;
    Rat c = v.x * (x[1] - a.y) - v.y * (x[0] - a.x);
    if (!(c > 0)) return false;
  }
  return true;
}

bool Region::contains_shifted(std::span<const double> p, std::span<const double> shift,
                              const Tol& tol) const {
  std::vector<double> y(p.size());
  for (size_t i = 0; i < p.size(); ++i) y[i] = p[i] - shift[i];
  return contains(y, tol);
}

BoxN Region::bounding_box() const {
  BoxN out;
  if (kind_ == Kind::BoxUnion) {
    out = {boxes_[0].lo, boxes_[0].hi};
    for (const auto& b : boxes_) {
      for (int i = 0; i < dim_; ++i) {
        if (b.lo[i] < out.lo[i]) out.lo[i] = b.lo[i];
        if (out.hi[i] < b.hi[i]) out.hi[i] = b.hi[i];
      }
    }
    return out;
  }
  Scalar xlo(poly_.v[0].x), xhi(poly_.v[0].x), ylo(poly_.v[0].y), yhi(poly_.v[0].y);
  for (const auto& q : poly_.v) {
    if (Scalar(q.x) < xlo) xlo = Scalar(q.x);
    if (xhi < Scalar(q.x)) xhi = Scalar(q.x);
    if (Scalar(q.y) < ylo) ylo = Scalar(q.y);
    if (yhi < Scalar(q.y)) yhi = Scalar(q.y);
  }
  out.lo = {xlo, ylo};
  out.hi = {xhi, yhi};
  return out;
}

double Region::circumradius() const {
  double best = 0;
  if (kind_ == Kind::BoxUnion) {
    for (const auto& b : boxes_) {
      double r2 = 0;
      for (int i = 0; i < dim_; ++i)
        r2 += std::pow(std::max(std::abs(b.lo[i].value()), std::abs(b.hi[i].value())), 2);
      best = std::max(best, std::sqrt(r2));
    }
    return best;
  }
  for (const auto& q : poly_.v) {
    V2d p = to_d(q);
    best = std::max(best, std::sqrt(p.x * p.x + p.y * p.y));
  }
  return best;
}

Region delta_set(const Region& w) {
  if (w.kind() == Region::Kind::BoxUnion) {
    std::vector<OpenBox> out;
    for (const auto& bi : w.boxes()) {
      for (const auto& bj : w.boxes()) {
        OpenBox d;
        d.lo.resize(w.dim());
        d.hi.resize(w.dim());
        for (int k = 0; k < w.dim(); ++k) {
          d.lo[k] = bi.lo[k] - bj.hi[k];
          d.hi[k] = bi.hi[k] - bj.lo[k];
        }
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
      }
    }
    return Region::box_union(std::move(out));
  }
  const Polygon& p = w.polygon();
  if (!p.symmetric())
    raise(Err::Unsupported, "delta set of a non-symmetric polygon region; use a box cover");
  std::vector<V2q> doubled(p.v.size());
  for (size_t i = 0; i < p.v.size(); ++i) doubled[i] = Rat(2) * (p.v[i] - *p.center);
  Polygon q;
  q.v = std::move(doubled);
  q.center = V2q{Rat(0), Rat(0)};
  return Region::open_polygon(std::move(q));
}

bool delta_membership(const Region& w, std::span<const double> x, const Tol& tol) {
  if ((int)x.size() != w.dim()) raise(Err::DimensionMismatch, "membership point dimension");
  if (w.kind() == Region::Kind::BoxUnion) {
    for (const auto& bi : w.boxes()) {
      for (const auto& bj : w.boxes()) {
        bool in = true;
        for (int k = 0; k < w.dim() && in; ++k) {
          double lo = bi.lo[k].value() - bj.hi[k].value();
          double hi = bi.hi[k].value() - bj.lo[k].value();
          in = x[k] > lo + tol.abs && x[k] < hi - tol.abs;
        }
        if (in) return true;
      }
    }
    return false;
  }
  return delta_set(w).contains(x, tol);
}

Region reflected(const Region& w) {
  if (w.kind() == Region::Kind::BoxUnion) {
    std::vector<OpenBox> out;
    for (const auto& b : w.boxes()) {
      OpenBox r;
      r.lo.resize(b.dim());
      r.hi.resize(b.dim());
      for (int i = 0; i < b.dim(); ++i) {
        r.lo[i] = -b.hi[i];
        r.hi[i] = -b.lo[i];
      }
      out.push_back(std::move(r));
    }
    return Region::box_union(std::move(out));
  }
  const Polygon& p = w.polygon();
  std::vector<V2q> neg(p.v.size());
  for (size_t i = 0; i < p.v.size(); ++i) neg[i] = -p.v[i];  // rotation by pi keeps CCW
  Polygon q;
  q.v = std::move(neg);
  if (p.center) q.center = -*p.center;
  return Region::open_polygon(std::move(q));
}

bool delta_membership_exact(const Region& w, std::span<const Rat> x) {
  if ((int)x.size() != w.dim()) raise(Err::DimensionMismatch, "membership point dimension");
  if (w.kind() == Region::Kind::BoxUnion) {
    for (const auto& bi : w.boxes()) {
      for (const auto& bj : w.boxes()) {
        bool in = true;
        for (int k = 0; k < w.dim() && in; ++k) {
          in = x[k] > bi.lo[k].rat() - bj.hi[k].rat() && x[k] < bi.hi[k].rat() - bj.lo[k].rat();
        }
        if (in) return true;
      }
    }
    return false;
  }
  return delta_set(w).contains_exact(x);
}

}  // namespace spectra
