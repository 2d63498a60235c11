#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "spectra/pointset.hpp"

namespace spectra {

/// {t : <t,normal> in Z}, or in Z\{0} when exclude_zero is set.
struct LineFamily {
  V2q normal;
  bool exclude_zero = false;
};

/// Per-edge constraint set: union of the two line families of an edge pair.
struct HEdgeSet {
  EdgePair pair;
  LineFamily tau_family;   // offsets Z
  LineFamily edge_family;  // offsets Z\{0}
};

bool member(const HEdgeSet& h, const V2q& t);
bool member(const HEdgeSet& h, const V2d& t, const Tol& tol);

/// Intersection of the per-edge sets minus the origin. Line families in the
/// parallelogram case, a discrete set otherwise.
class HSet {
 public:
  enum class Kind { LineFamilies, DiscretePoints };

  Kind kind() const { return kind_; }
  const Polygon& polygon() const { return a_; }
  const std::vector<HEdgeSet>& edge_sets() const { return edges_; }
  const std::array<LineFamily, 2>& closed_form() const;  // parallelogram only

 private:
  friend HSet h_set(const Polygon&);
  friend PointSet h_enumerate(const HSet&, double);

  Kind kind_ = Kind::DiscretePoints;
  Polygon a_;
  std::vector<HEdgeSet> edges_;
  std::array<LineFamily, 2> pgram_{};

  struct Cache {
    std::mutex mu;
    std::map<long long, PointSet> by_radius;  // keyed by radius*1e6
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

HEdgeSet h_edge(const Polygon& a, const EdgePair& pair);
HSet h_set(const Polygon& a);

bool h_membership(const HSet& h, const V2q& t);
bool h_membership(const HSet& h, const V2d& t, const Tol& tol = {});

/// All points of the discrete set with |t| <= radius: exact intersections of
/// covering line pairs, filtered by full membership.
PointSet h_enumerate(const HSet& h, double radius);

struct GammaReport {
  bool ok = false;
  std::size_t differences_checked = 0;
  std::vector<V2d> violators;       // capped sample
  std::size_t violator_count = 0;
};

/// (Gamma - Gamma) \ {0} must lie inside H(A).
GammaReport check_gamma_condition(const HSet& h, const PointSet& gamma);

struct ProductConditionReport {
  bool ok = false;
  std::size_t differences_checked = 0;
  std::vector<VecXd> violators;     // capped sample
  std::size_t violator_count = 0;
};

/// Every nonzero difference (s,w) of the product-space spectrum must satisfy
/// s in H(A) or w in Z(ft of B) at tolerance tol.
ProductConditionReport check_product_condition(const HSet& h, const Domain& b,
                                               const PointSet& lambda, double tol);

}  // namespace spectra
