#include "spectra/geometry.hpp"

#include <algorithm>

namespace spectra {

namespace {

// Shoelace sum (twice the signed area).
template <class T>
T shoelace2(const std::vector<V2<T>>& v) {
  T s{};
  int n = (int)v.size();
  for (int i = 0; i < n; ++i) s = s + cross(v[i], v[(i + 1) % n]);
  return s;
}

// Strict CCW angular order on nonzero direction vectors, starting at +x axis.
template <class T>
int half_plane(const V2<T>& u) {
  if (u.y > 0) return 0;
  if (u.y < 0) return 1;
  return u.x > 0 ? 0 : 1;
}
template <class T>
bool angle_less(const V2<T>& u, const V2<T>& w) {
  int hu = half_plane(u), hw = half_plane(w);
  if (hu != hw) return hu < hw;
  return cross(u, w) > 0;
}

template <class S, class IsZero, class IsNeg>
std::vector<V2<S>> clean_vertices(std::vector<V2<S>> v, IsZero near_zero, IsNeg negative) {
  if ((int)v.size() < 3) raise(Err::Degenerate, "polygon needs at least 3 vertices");

  S two_area = shoelace2(v);
  if (near_zero(two_area)) raise(Err::Degenerate, "zero-area polygon");
  if (negative(two_area)) std::reverse(v.begin(), v.end());

  // Drop consecutive duplicates, then interior collinear vertices. A reflex
  // collinear triple (backtracking edge) is not mergeable and means the input
  // is not convex.
  bool changed = true;
  while (changed) {
    changed = false;
    int n = (int)v.size();
    if (n < 3) raise(Err::Degenerate, "polygon collapsed during cleaning");
    for (int i = 0; i < n; ++i) {
      const V2<S>& a = v[i];
      const V2<S>& b = v[(i + 1) % n];
      const V2<S>& c = v[(i + 2) % n];
      V2<S> ab = b - a, bc = c - b;
      if (near_zero(ab.x) && near_zero(ab.y)) {
        v.erase(v.begin() + (i + 1) % n);
        changed = true;
        break;
      }
      if (near_zero(cross(ab, bc))) {
        if (negative(dot(ab, bc))) raise(Err::NotConvex, "backtracking collinear vertices");
        v.erase(v.begin() + (i + 1) % n);
        changed = true;
        break;
      }
    }
  }
  if ((int)v.size() < 3) raise(Err::Degenerate, "polygon collapsed during cleaning");

  int n = (int)v.size();
  for (int i = 0; i < n; ++i) {
    V2<S> ab = v[(i + 1) % n] - v[i];
    V2<S> bc = v[(i + 2) % n] - v[(i + 1) % n];
    if (!(cross(ab, bc) > S(0))) raise(Err::NotConvex, "right turn at vertex");
  }

  // All-left-turn vertex chains can still wind more than once around
  // (a star polygon); a convex boundary wraps the direction vector exactly once.
  int wraps = 0;
  for (int i = 0; i < n; ++i) {
    V2<S> d0 = v[(i + 1) % n] - v[i];
    V2<S> d1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (!angle_less(d0, d1)) ++wraps;
  }
  if (wraps != 1) raise(Err::NotConvex, "self-intersecting vertex chain");

  return v;
}

template <class S, class Eq>
std::optional<V2<S>> detect_center(const std::vector<V2<S>>& v, const S& n_scalar, Eq eq) {
  int n = (int)v.size();
  if (n % 2 != 0) return std::nullopt;
  V2<S> sum{};
  for (const auto& p : v) sum = sum + p;
  V2<S> c2 = {sum.x / n_scalar * S(2), sum.y / n_scalar * S(2)};  // 2*center
  for (int i = 0; i < n / 2; ++i) {
    V2<S> s = v[i] + v[i + n / 2];
    if (!eq(s.x, c2.x) || !eq(s.y, c2.y)) return std::nullopt;
  }
  return V2<S>{c2.x / S(2), c2.y / S(2)};
}

}  // namespace

Polygon validate_polygon(std::span<const V2q> vertices) {
  std::vector<V2q> v(vertices.begin(), vertices.end());
  v = clean_vertices<Rat>(
      std::move(v), [](const Rat& x) { return x == 0; }, [](const Rat& x) { return x < 0; });
  Polygon p;
  p.center = detect_center<Rat>(v, Rat((int)v.size()), [](const Rat& a, const Rat& b) { return a == b; });
  p.v = std::move(v);
  return p;
}

PolygonF validate_polygon(std::span<const V2d> vertices, Tol tol) {
  std::vector<V2d> v(vertices.begin(), vertices.end());
  double t = tol.abs;
  v = clean_vertices<double>(
      std::move(v), [t](double x) { return std::abs(x) <= t; }, [t](double x) { return x < -t; });
  PolygonF p;
  p.tol = tol;
  p.center = detect_center<double>(v, double(v.size()),
                                   [t](double a, double b) { return std::abs(a - b) <= 2 * t; });
  p.v = std::move(v);
  return p;
}

std::vector<EdgePair> edge_pairs(const Polygon& p) {
  if (!p.symmetric()) raise(Err::NotSymmetric, "edge pairing needs a centrally symmetric polygon");
  int n = p.size();
  std::vector<EdgePair> out;
  out.reserve(n / 2);
  for (int i = 0; i < n / 2; ++i) {
    int j = i + n / 2;
    V2q e = p.v[(i + 1) % n] - p.v[i];
    V2q eo = p.v[(j + 1) % n] - p.v[j];
    if (!(eo == -e)) raise(Err::Internal, "opposite edge is not the reflected edge");
    V2q mid_e = Rat(1, 2) * (p.v[i] + p.v[(i + 1) % n]);
    V2q mid_o = Rat(1, 2) * (p.v[j] + p.v[(j + 1) % n]);
    V2q tau = mid_e - mid_o;
    if (tau.x < 0 || (tau.x == 0 && tau.y < 0)) tau = -tau;
    if (cross(e, tau) == 0) raise(Err::Internal, "edge and pairing translation are parallel");
    out.push_back({e, tau, i, j});
  }
  return out;
}

std::pair<Affine2, Polygon> normalize(const Polygon& p, int edge_index) {
  if (!p.symmetric()) raise(Err::NotSymmetric, "normalization needs a centrally symmetric polygon");
  int n = p.size();
  if (edge_index < 0 || edge_index >= n) raise(Err::BadIndex, "edge index out of range");

  const V2q& c = *p.center;
  V2q a = p.v[edge_index] - c;
  V2q b = p.v[(edge_index + 1) % n] - c;
  // Solve M a = (1/2,-1/2), M b = (1/2,1/2).
  Mat2q pm{a.x, b.x, a.y, b.y};  // columns a, b
  Mat2q pinv = pm.inverse();
  Mat2q targets{Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)};  // columns (1/2,-1/2), (1/2,1/2)
  Mat2q m = targets * pinv;
  Affine2 t{m, -m.apply(c)};

  std::vector<V2q> img(n);
  for (int i = 0; i < n; ++i) img[i] = t(p.v[(edge_index + i) % n]);
  Polygon q;
  q.v = std::move(img);
  q.center = V2q{Rat(0), Rat(0)};
  if (!(q.v[2].y >= Rat(1, 2))) raise(Err::Internal, "normalized adjacent vertex below b=1/2");
  return {t, q};
}

V2q adjacent_vertex(const Polygon& normalized) {
  int n = normalized.size();
  V2q lo{Rat(1, 2), Rat(-1, 2)}, hi{Rat(1, 2), Rat(1, 2)};
  for (int i = 0; i < n; ++i) {
    if (normalized.v[i] == lo && normalized.v[(i + 1) % n] == hi) return normalized.v[(i + 2) % n];
  }
  raise(Err::NotNormalized, "polygon is not in canonical edge position");
}

bool is_normalized(const Polygon& p) {
  if (!p.symmetric() || !(p.center->x == 0 && p.center->y == 0)) return false;
  int n = p.size();
  V2q lo{Rat(1, 2), Rat(-1, 2)}, hi{Rat(1, 2), Rat(1, 2)};
  for (int i = 0; i < n; ++i) {
    if (p.v[i] == lo && p.v[(i + 1) % n] == hi) return true;
  }
  return false;
}

Rat area(const Polygon& p) { return shoelace2(p.v) / 2; }
double area(const PolygonF& p) { return shoelace2(p.v) / 2.0; }

const char* to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::Parallelogram: return "parallelogram";
    case ShapeClass::SymmetricHexagon: return "symmetric_hexagon";
    case ShapeClass::OtherSymmetric: return "other_symmetric";
    case ShapeClass::NonSymmetric: return "non_symmetric";
  }
  return "?";
}

ShapeClass classify_shape(const Polygon& p) {
  if (!p.symmetric()) return ShapeClass::NonSymmetric;
  if (p.size() == 4) return ShapeClass::Parallelogram;
  if (p.size() == 6) return ShapeClass::SymmetricHexagon;
  return ShapeClass::OtherSymmetric;
}

ShapeClass classify_shape(const PolygonF& p) {
  if (!p.symmetric()) return ShapeClass::NonSymmetric;
  if (p.size() == 4) return ShapeClass::Parallelogram;
  if (p.size() == 6) return ShapeClass::SymmetricHexagon;
  return ShapeClass::OtherSymmetric;
}

Polygon apply_affine(const Affine2& t, const Polygon& p) {
  Polygon q;
  q.v.resize(p.size());
  for (int i = 0; i < p.size(); ++i) q.v[i] = t(p.v[i]);
  if (t.m.det() < 0) std::reverse(q.v.begin(), q.v.end());
  if (p.center) q.center = t(*p.center);
  return q;
}

}  // namespace spectra
