#include "spectra/hset3.hpp"

namespace spectra {

HSet3 h3_set(const Polytope3& a) {
  auto audit = symmetry_audit_3d(a);
  if (!audit.body_symmetric) raise(Err::NotSymmetric, "polytope is not centrally symmetric");
  if (!audit.all_facets_symmetric)
    raise(Err::FacetNotSymmetric, "some facet is not centrally symmetric");
  if (is_prism(a)) raise(Err::IsPrism, "prisms are decomposable; constraint set undefined");

  std::vector<V3q> tau_by_facet(a.facets.size());
  std::vector<bool> have(a.facets.size(), false);
  for (const auto& fp : audit.facet_pairs) {
    tau_by_facet[fp.facet] = fp.tau;
    tau_by_facet[fp.opposite] = -fp.tau;
    have[fp.facet] = have[fp.opposite] = true;
  }
  for (bool h : have)
    if (!h) raise(Err::Internal, "missing facet pairing on a symmetric polytope");

  HSet3 h;
  h.a_ = a;
  for (size_t fi = 0; fi < a.facets.size(); ++fi) {
    const auto& f = a.facets[fi];
    int n = (int)f.size();
    V3q fc{};
    for (int idx : f) fc = fc + a.v[idx];
    Rat inv = Rat(1, (long)n);
    fc = {fc.x * inv, fc.y * inv, fc.z * inv};

    for (int i = 0; i < n; ++i) {
      const V3q& p = a.v[f[i]];
      const V3q& q = a.v[f[(i + 1) % n]];
      // tau_fe = mid(e) - mid(e'), with e' the reflection of e through the
      // facet center: mid(e') = 2*fc - mid(e).
      V3q mid = Rat(1, 2) * (p + q);
      V3q tau_fe = Rat(2) * mid - Rat(2) * fc;
      FacetEdgeClause c;
      c.tau_f = tau_by_facet[fi];
      c.tau_fe = tau_fe;
      c.e = q - p;
      c.quad_facet = (n == 4);
      c.facet = (int)fi;
      h.clauses_.push_back(std::move(c));
    }
  }
  return h;
}

namespace {

bool clause_member(const FacetEdgeClause& c, const V3q& t) {
  Rat a = dot(t, c.tau_f);
  if (is_integer(a)) return true;
  Rat b = dot(t, c.tau_fe);
  if (c.quad_facet ? is_nonzero_integer(b) : is_integer(b)) return true;
  return is_nonzero_integer(dot(t, c.e));
}

bool clause_member(const FacetEdgeClause& c, const V3d& t, const Tol& tol) {
  auto dotd = [&](const V3q& n) {
    return to_double(n.x) * t.x + to_double(n.y) * t.y + to_double(n.z) * t.z;
  };
  double a = dotd(c.tau_f);
  if (is_integer(a, tol.abs)) return true;
  double b = dotd(c.tau_fe);
  if (c.quad_facet ? is_nonzero_integer(b, tol.abs) : is_integer(b, tol.abs)) return true;
  return is_nonzero_integer(dotd(c.e), tol.abs);
}

}  // namespace

bool h3_membership(const HSet3& h, const V3q& t) {
  if (t.x == 0 && t.y == 0 && t.z == 0) return false;
  for (const auto& c : h.clauses())
    if (!clause_member(c, t)) return false;
  return true;
}

bool h3_membership(const HSet3& h, const V3d& t, const Tol& tol) {
  if (std::abs(t.x) <= tol.abs && std::abs(t.y) <= tol.abs && std::abs(t.z) <= tol.abs)
    return false;
  for (const auto& c : h.clauses())
    if (!clause_member(c, t, tol))
      return false;
  return true;
}

}  // namespace spectra
