#include "spectra/shapes.hpp"

#include <algorithm>
#include <map>

namespace spectra {
namespace shapes {

Polygon unit_square() {
  std::vector<V2q> v = {{Rat(-1, 2), Rat(-1, 2)},
                        {Rat(1, 2), Rat(-1, 2)},
                        {Rat(1, 2), Rat(1, 2)},
                        {Rat(-1, 2), Rat(1, 2)}};
  return validate_polygon(v);
}

Polygon hexagon(const Rat& a, const Rat& b) {
  std::vector<V2q> v = {{Rat(1, 2), Rat(-1, 2)}, {Rat(1, 2), Rat(1, 2)}, {a, b},
                        {Rat(-1, 2), Rat(1, 2)}, {Rat(-1, 2), Rat(-1, 2)}, {-a, -b}};
  return validate_polygon(v);
}

Polygon octagon() {
  std::vector<V2q> v = {{Rat(3, 4), Rat(0)},  {Rat(1, 2), Rat(1, 2)},  {Rat(0), Rat(3, 4)},
                        {Rat(-1, 2), Rat(1, 2)}, {Rat(-3, 4), Rat(0)}, {Rat(-1, 2), Rat(-1, 2)},
                        {Rat(0), Rat(-3, 4)}, {Rat(1, 2), Rat(-1, 2)}};
  return validate_polygon(v);
}

namespace {

// Facets recovered from supporting planes: vertices maximizing <n,v> per
// plane, ordered CCW around the outward normal.
Polytope3 from_planes(const std::vector<V3q>& verts,
                      const std::vector<std::pair<V3q, Rat>>& planes) {
  std::vector<std::vector<int>> facets;
  for (const auto& [n, d] : planes) {
    std::vector<int> on;
    for (int i = 0; i < (int)verts.size(); ++i) {
      Rat s = dot(n, verts[i]);
      if (s == d) on.push_back(i);
      if (s > d) raise(Err::BadInput, "vertex beyond supporting plane");
    }
    if (on.size() < 3) raise(Err::BadInput, "supporting plane misses a facet");
    // In-plane CCW order via an exact angular sort around the centroid.
    V3q c{};
    for (int i : on) c = c + verts[i];
    Rat inv = Rat(1, (long)on.size());
    c = {c.x * inv, c.y * inv, c.z * inv};
    V3q u1 = verts[on[0]] - c;
    V3q u2 = cross(n, u1);
    auto half = [&](int i) {
      Rat y = dot(verts[i] - c, u2);
      if (y > 0) return 0;
      if (y < 0) return 1;
      return dot(verts[i] - c, u1) > 0 ? 0 : 1;
    };
    std::sort(on.begin(), on.end(), [&](int i, int j) {
      int hi = half(i), hj = half(j);
      if (hi != hj) return hi < hj;
      V3q a = verts[i] - c, b = verts[j] - c;
      Rat crossn = dot(cross(a, b), n);
      return crossn > 0;
    });
    facets.push_back(on);
  }
  return validate_polytope(verts, facets);
}

}  // namespace

Polytope3 cube() {
  std::vector<V3q> v;
  for (int i = 0; i < 8; ++i)
    v.push_back({Rat(i & 1 ? 1 : -1, 2), Rat(i & 2 ? 1 : -1, 2), Rat(i & 4 ? 1 : -1, 2)});
  std::vector<std::pair<V3q, Rat>> planes;
  for (int axis = 0; axis < 3; ++axis) {
    for (int s : {-1, 1}) {
      V3q n{};
      (axis == 0 ? n.x : axis == 1 ? n.y : n.z) = s;
      planes.push_back({n, Rat(1, 2)});
    }
  }
  return from_planes(v, planes);
}

Polytope3 tetrahedron() {
  std::vector<V3q> v = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<int>> f = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return validate_polytope(v, f);
}

Polytope3 truncated_octahedron() {
  std::vector<V3q> v;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms) {
    for (int s1 : {-1, 1}) {
      for (int s2 : {-1, 1}) {
        Rat c[3];
        c[p[0]] = 0;
        c[p[1]] = s1;
        c[p[2]] = 2 * s2;
        V3q q{c[0], c[1], c[2]};
        bool dup = false;
        for (const auto& w : v)
          if (w == q) dup = true;
        if (!dup) v.push_back(q);
      }
    }
  }
  std::vector<std::pair<V3q, Rat>> planes;
  for (int axis = 0; axis < 3; ++axis) {
    for (int s : {-1, 1}) {
      V3q n{};
      (axis == 0 ? n.x : axis == 1 ? n.y : n.z) = s;
      planes.push_back({n, Rat(2)});
    }
  }
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) planes.push_back({V3q{Rat(sx), Rat(sy), Rat(sz)}, Rat(3)});
  return from_planes(v, planes);
}

Polytope3 prism(const Polygon& base, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) raise(Err::BadInput, "prism needs lo < hi");
  int n = base.size();
  std::vector<V3q> v;
  v.reserve(2 * n);
  for (const auto& p : base.v) v.push_back({p.x, p.y, lo});
  for (const auto& p : base.v) v.push_back({p.x, p.y, hi});
  std::vector<std::vector<int>> f;
  std::vector<int> bottom(n), top(n);
  for (int i = 0; i < n; ++i) {
    bottom[i] = n - 1 - i;  // reversed: outward normal points down
    top[i] = n + i;
  }
  f.push_back(bottom);
  f.push_back(top);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    f.push_back({i, j, n + j, n + i});
  }
  return validate_polytope(v, f);
}

PointSet integer_lattice(int dim, long halfwidth) {
  if (dim < 1 || halfwidth < 0) raise(Err::BadInput, "integer lattice parameters");
  std::vector<VecXq> rows;
  std::vector<long> idx(dim, -halfwidth);
  for (;;) {
    VecXq p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Rat(idx[i]);
    rows.push_back(std::move(p));
    int k = dim - 1;
    while (k >= 0 && ++idx[k] > halfwidth) idx[k--] = -halfwidth;
    if (k < 0) break;
  }
  BoxN box;
  for (int i = 0; i < dim; ++i) {
    box.lo.push_back(Scalar(Rat(-halfwidth)));
    box.hi.push_back(Scalar(Rat(halfwidth)));
  }
  return PointSet::from_exact_rows(dim, rows, box);
}

PointSet lattice_window(const Mat2q& basis, const Rat& halfwidth) {
  Mat2q inv = basis.inverse();
  // |m| and |n| are bounded by the l1 norms of the rows of the inverse.
  auto absr = [](const Rat& x) { return x < 0 ? -x : x; };
  Rat m_bound = halfwidth * (absr(inv.a) + absr(inv.b));
  Rat n_bound = halfwidth * (absr(inv.c) + absr(inv.d));
  long mmax = rat_floor(m_bound).convert_to<long>() + 1;
  long nmax = rat_floor(n_bound).convert_to<long>() + 1;
  std::vector<VecXq> rows;
  for (long m = -mmax; m <= mmax; ++m) {
    for (long n = -nmax; n <= nmax; ++n) {
      V2q t = basis.apply({Rat(m), Rat(n)});
      if (absr(t.x) > halfwidth || absr(t.y) > halfwidth) continue;
      rows.push_back({t.x, t.y});
    }
  }
  BoxN box;
  box.lo = {Scalar(-halfwidth), Scalar(-halfwidth)};
  box.hi = {Scalar(halfwidth), Scalar(halfwidth)};
  return PointSet::from_exact_rows(2, rows, box);
}

Mat2q dual_basis(const Mat2q& basis) { return basis.inverse().transpose(); }

Mat2q hexagon_tiling_basis() { return Mat2q{1, Rat(1, 2), 0, Rat(3, 2)}; }

}  // namespace shapes
}  // namespace spectra
