#pragma once

#include "spectra/polytope3.hpp"

namespace spectra {

/// One (facet, edge) clause of the three-dimensional constraint set:
/// <t,tau_f> in Z  or  <t,tau_fe> in Z (Z\{0} on quadrilateral facets)
/// or <t,e> in Z\{0}.
struct FacetEdgeClause {
  V3q tau_f;    // carries the opposite facet onto this one
  V3q tau_fe;   // carries the opposite edge within the facet onto this one
  V3q e;        // edge vector
  bool quad_facet = false;
  int facet = 0;
};

class HSet3 {
 public:
  const Polytope3& polytope() const { return a_; }
  const std::vector<FacetEdgeClause>& clauses() const { return clauses_; }

 private:
  friend HSet3 h3_set(const Polytope3&);
  Polytope3 a_;
  std::vector<FacetEdgeClause> clauses_;
};

/// Build the intersection predicate over all (facet, edge) pairs. Requires a
/// centrally symmetric, non-prism polytope with centrally symmetric facets.
HSet3 h3_set(const Polytope3& a);

bool h3_membership(const HSet3& h, const V3q& t);
bool h3_membership(const HSet3& h, const V3d& t, const Tol& tol = {});

}  // namespace spectra
