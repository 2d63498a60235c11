#include "spectra/polytope3.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spectra {

namespace {

V3q facet_normal(const Polytope3& p, const std::vector<int>& f) {
  // Newell's formula; exact and independent of the starting vertex.
  V3q n{};
  for (size_t i = 0; i < f.size(); ++i) {
    const V3q& a = p.v[f[i]];
    const V3q& b = p.v[f[(i + 1) % f.size()]];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

V3q centroid(const Polytope3& p, const std::vector<int>& f) {
  V3q s{};
  for (int i : f) s = s + p.v[i];
  Rat inv = Rat(1, (long)f.size());
  return {s.x * inv, s.y * inv, s.z * inv};
}

bool same_point_set(std::vector<V3q> a, std::vector<V3q> b) {
  auto lt = [](const V3q& u, const V3q& w) {
    if (u.x != w.x) return u.x < w.x;
    if (u.y != w.y) return u.y < w.y;
    return u.z < w.z;
  };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

}  // namespace

Polytope3 validate_polytope(std::span<const V3q> vertices,
                            const std::vector<std::vector<int>>& facets) {
  Polytope3 p;
  p.v.assign(vertices.begin(), vertices.end());
  p.facets = facets;
  if (p.size() < 4) raise(Err::Degenerate, "polytope needs at least 4 vertices");
  if (p.facets.size() < 4) raise(Err::Degenerate, "polytope needs at least 4 facets");

  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.v[i] == p.v[j]) raise(Err::BadInput, "duplicate vertices");

  std::vector<bool> used(p.size(), false);
  for (auto& f : p.facets) {
    if (f.size() < 3) raise(Err::BadInput, "facet with fewer than 3 vertices");
    for (int idx : f) {
      if (idx < 0 || idx >= p.size()) raise(Err::BadIndex, "facet vertex index out of range");
      used[idx] = true;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    raise(Err::BadInput, "vertex not on any facet");

  for (auto& f : p.facets) {
    V3q n = facet_normal(p, f);
    if (n == V3q{}) raise(Err::Degenerate, "degenerate facet");
    Rat d = dot(n, p.v[f[0]]);
    for (int idx : f)
      if (dot(n, p.v[idx]) != d) raise(Err::BadInput, "facet vertices not coplanar");

    // Hull property wrt this facet plane; flip inward facets.
    bool above = false, below = false;
    for (int i = 0; i < p.size(); ++i) {
      Rat s = dot(n, p.v[i]) - d;
      if (s > 0) above = true;
      if (s < 0) below = true;
    }
    if (above && below) raise(Err::NotConvex, "vertices on both sides of a facet plane");
    if (above) {
      std::reverse(f.begin(), f.end());
      n = -n;
    }

    // Convex facet cycle: consecutive turns consistent with the outward normal.
    for (size_t i = 0; i < f.size(); ++i) {
      V3q ab = p.v[f[(i + 1) % f.size()]] - p.v[f[i]];
      V3q bc = p.v[f[(i + 2) % f.size()]] - p.v[f[(i + 1) % f.size()]];
      Rat turn = dot(cross(ab, bc), n);
      if (turn == 0) raise(Err::BadInput, "collinear vertices in facet cycle");
      if (turn < 0) raise(Err::NotConvex, "reflex turn in facet cycle");
    }
  }

  // Closed surface: every undirected edge in exactly two facets, once per direction.
  std::map<std::pair<int, int>, int> directed;
  for (auto& f : p.facets) {
    for (size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      if (++directed[{a, b}] > 1) raise(Err::BadInput, "edge traversed twice in same direction");
    }
  }
  for (auto& [e, cnt] : directed) {
    if (!directed.count({e.second, e.first})) raise(Err::BadInput, "boundary edge (surface not closed)");
  }
  long edges = (long)directed.size() / 2;
  if ((long)p.size() - edges + (long)p.facets.size() != 2)
    raise(Err::BadInput, "Euler characteristic violated");

  // Symmetry center: only the vertex average can work for a convex polytope.
  V3q s{};
  for (const auto& q : p.v) s = s + q;
  Rat inv = Rat(1, (long)p.size());
  V3q c = {s.x * inv, s.y * inv, s.z * inv};
  std::vector<V3q> refl(p.size());
  for (int i = 0; i < p.size(); ++i) refl[i] = Rat(2) * c - p.v[i];
  if (same_point_set(p.v, refl)) p.center = c;

  return p;
}

SymmetryAudit3 symmetry_audit_3d(const Polytope3& p) {
  SymmetryAudit3 r;
  r.body_symmetric = p.symmetric();
  r.facet_symmetric.resize(p.facets.size());
  r.all_facets_symmetric = true;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    V3q fc = centroid(p, f);
    std::vector<V3q> pts, refl;
    for (int i : f) {
      pts.push_back(p.v[i]);
      refl.push_back(Rat(2) * fc - p.v[i]);
    }
    r.facet_symmetric[fi] = same_point_set(pts, refl);
    if (!r.facet_symmetric[fi]) r.all_facets_symmetric = false;
  }

  if (r.body_symmetric) {
    const V3q& c = *p.center;
    std::vector<bool> done(p.facets.size(), false);
    for (size_t fi = 0; fi < p.facets.size(); ++fi) {
      if (done[fi]) continue;
      std::vector<V3q> img;
      for (int i : p.facets[fi]) img.push_back(Rat(2) * c - p.v[i]);
      for (size_t fj = 0; fj < p.facets.size(); ++fj) {
        if (fj == fi || done[fj]) continue;
        std::vector<V3q> pts;
        for (int i : p.facets[fj]) pts.push_back(p.v[i]);
        if (same_point_set(img, pts)) {
          V3q tau = centroid(p, p.facets[fi]) - centroid(p, p.facets[fj]);
          r.facet_pairs.push_back({(int)fi, (int)fj, tau});
          done[fi] = done[fj] = true;
          break;
        }
      }
    }
  }
  return r;
}

bool is_prism(const Polytope3& p) {
  auto audit = symmetry_audit_3d(p);
  std::set<std::pair<int, int>> in_facet_edges;
  auto edges_of = [&](int fi, std::set<std::pair<int, int>>& out) {
    const auto& f = p.facets[fi];
    for (size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      out.insert({std::min(a, b), std::max(a, b)});
    }
  };

  // Candidate top/bottom pairs: any two facets that are translates of each other.
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    for (size_t fj = fi + 1; fj < p.facets.size(); ++fj) {
      V3q tau = centroid(p, p.facets[fi]) - centroid(p, p.facets[fj]);
      std::vector<V3q> shifted, pts;
      for (int i : p.facets[fj]) shifted.push_back(p.v[i] + tau);
      for (int i : p.facets[fi]) pts.push_back(p.v[i]);
      if (!same_point_set(shifted, pts)) continue;

      std::set<std::pair<int, int>> cap_edges;
      edges_of((int)fi, cap_edges);
      edges_of((int)fj, cap_edges);

      bool ok = true;
      std::optional<V3q> dir;
      std::set<int> cap_verts(p.facets[fi].begin(), p.facets[fi].end());
      std::set<int> cap_verts2(p.facets[fj].begin(), p.facets[fj].end());
      for (size_t fk = 0; fk < p.facets.size() && ok; ++fk) {
        if (fk == fi || fk == fj) continue;
        if (p.facets[fk].size() != 4) { ok = false; break; }
        const auto& f = p.facets[fk];
        for (size_t i = 0; i < 4 && ok; ++i) {
          int a = f[i], b = f[(i + 1) % 4];
          if (cap_edges.count({std::min(a, b), std::max(a, b)})) continue;
          // Side edge: must join the two caps and share one common direction.
          bool joins = (cap_verts.count(a) && cap_verts2.count(b)) ||
                       (cap_verts.count(b) && cap_verts2.count(a));
          if (!joins) { ok = false; break; }
          V3q d = p.v[b] - p.v[a];
          if (!dir) {
            dir = d;
          } else if (!(cross(*dir, d) == V3q{})) {
            ok = false;
          }
        }
      }
      if (ok && dir) return true;
    }
  }
  return false;
}

Polytope3 apply_affine(const Affine3& t, const Polytope3& p) {
  Polytope3 q = p;
  for (auto& x : q.v) x = t(x);
  if (t.m.det() < 0)
    for (auto& f : q.facets) std::reverse(f.begin(), f.end());
  if (p.center) q.center = t(*p.center);
  return q;
}

Rat volume(const Polytope3& p) {
  // (1/6) * sum of det(a,b,c) over facet fan triangles, outward orientation.
  Rat vol = 0;
  for (const auto& f : p.facets) {
    const V3q& a = p.v[f[0]];
    for (size_t i = 1; i + 1 < f.size(); ++i) {
      const V3q& b = p.v[f[i]];
      const V3q& c = p.v[f[i + 1]];
      vol += dot(a, cross(b, c));
    }
  }
  return vol / 6;
}

}  // namespace spectra
