#include "spectra/hset.hpp"

#include <algorithm>
#include <set>

#include "spectra/fourier.hpp"

namespace spectra {

namespace {

bool family_member(const LineFamily& f, const V2q& t) {
  Rat s = dot(f.normal, t);
  if (!is_integer(s)) return false;
  return f.exclude_zero ? s != 0 : true;
}

bool family_member(const LineFamily& f, const V2d& t, const Tol& tol) {
  double s = f.normal.x.convert_to<double>() * t.x + f.normal.y.convert_to<double>() * t.y;
  if (!is_integer(s, tol.abs)) return false;
  return f.exclude_zero ? std::round(s) != 0.0 : true;
}

}  // namespace

bool member(const HEdgeSet& h, const V2q& t) {
  return family_member(h.tau_family, t) || family_member(h.edge_family, t);
}
bool member(const HEdgeSet& h, const V2d& t, const Tol& tol) {
  return family_member(h.tau_family, t, tol) || family_member(h.edge_family, t, tol);
}

HEdgeSet h_edge(const Polygon& a, const EdgePair& pair) {
  if (!a.symmetric()) raise(Err::NotSymmetric, "edge constraint sets need central symmetry");
  HEdgeSet h;
  h.pair = pair;
  h.tau_family = {pair.tau, false};
  h.edge_family = {pair.e, true};
  return h;
}

HSet h_set(const Polygon& a) {
  if (!a.symmetric()) raise(Err::NotSymmetric, "H(A) needs a centrally symmetric polygon");
  HSet h;
  h.a_ = a;
  auto pairs = edge_pairs(a);
  for (const auto& p : pairs) h.edges_.push_back(h_edge(a, p));
  if (a.size() == 4) {
    h.kind_ = HSet::Kind::LineFamilies;
    // Parallelogram closed form: nonzero integrality against the two edge vectors.
    h.pgram_[0] = {pairs[0].e, true};
    h.pgram_[1] = {pairs[1].e, true};
  } else {
    h.kind_ = HSet::Kind::DiscretePoints;
  }
  return h;
}

const std::array<LineFamily, 2>& HSet::closed_form() const {
  if (kind_ != Kind::LineFamilies) raise(Err::Unsupported, "closed form is parallelogram-only");
  return pgram_;
}

bool h_membership(const HSet& h, const V2q& t) {
  if (h.kind() == HSet::Kind::LineFamilies) {
    return family_member(h.closed_form()[0], t) || family_member(h.closed_form()[1], t);
  }
  if (t.x == 0 && t.y == 0) return false;
  for (const auto& e : h.edge_sets())
    if (!member(e, t)) return false;
  return true;
}

bool h_membership(const HSet& h, const V2d& t, const Tol& tol) {
  if (h.kind() == HSet::Kind::LineFamilies) {
    return family_member(h.closed_form()[0], t, tol) || family_member(h.closed_form()[1], t, tol);
  }
  if (std::abs(t.x) <= tol.abs && std::abs(t.y) <= tol.abs) return false;
  for (const auto& e : h.edge_sets())
    if (!member(e, t, tol)) return false;
  return true;
}

PointSet h_enumerate(const HSet& h, double radius) {
  if (h.kind() != HSet::Kind::DiscretePoints)
    raise(Err::ContinuousKind, "enumeration is undefined for parallelogram line families");
  if (radius <= 0) raise(Err::BadInput, "enumeration radius must be positive");

  long long key = llround(radius * 1e6);
  {
    std::lock_guard<std::mutex> lk(h.cache_->mu);
    auto it = h.cache_->by_radius.find(key);
    if (it != h.cache_->by_radius.end()) return it->second;
  }

  Rat r = Rat(Int(key), Int(1000000));
  Rat r2 = r * r;

  // Families with generation offsets: tau families include k = 0.
  struct Fam {
    V2q n;
    bool skip_zero;
    int pair;
  };
  std::vector<Fam> fams;
  for (size_t i = 0; i < h.edge_sets().size(); ++i) {
    fams.push_back({h.edge_sets()[i].pair.tau, false, (int)i});
    fams.push_back({h.edge_sets()[i].pair.e, true, (int)i});
  }
  auto offset_bound = [&](const V2q& n) {
    Rat l1 = (n.x < 0 ? -n.x : n.x) + (n.y < 0 ? -n.y : n.y);
    Rat b = r * l1;
    Int k = numerator(b) / denominator(b) + 1;
    return k.convert_to<long long>();
  };

  std::set<std::pair<Rat, Rat>> found;
  for (size_t fi = 0; fi < fams.size(); ++fi) {
    for (size_t fj = fi + 1; fj < fams.size(); ++fj) {
      if (fams[fi].pair == fams[fj].pair) continue;
      const V2q& n1 = fams[fi].n;
      const V2q& n2 = fams[fj].n;
      Rat det = cross(n1, n2);
      if (det == 0) continue;
      long long k1max = offset_bound(n1), k2max = offset_bound(n2);
      for (long long k1 = -k1max; k1 <= k1max; ++k1) {
        if (fams[fi].skip_zero && k1 == 0) continue;
        for (long long k2 = -k2max; k2 <= k2max; ++k2) {
          if (fams[fj].skip_zero && k2 == 0) continue;
          // Solve <t,n1>=k1, <t,n2>=k2.
          Rat tx = (Rat(k1) * n2.y - Rat(k2) * n1.y) / det;
          Rat ty = (Rat(k2) * n1.x - Rat(k1) * n2.x) / det;
          if (tx == 0 && ty == 0) continue;
          if (tx * tx + ty * ty > r2) continue;
          V2q t{tx, ty};
          if (!h_membership(h, t)) continue;
          found.insert({tx, ty});
        }
      }
    }
  }

  std::vector<VecXq> rows;
  rows.reserve(found.size());
  for (const auto& [x, y] : found) rows.push_back({x, y});
  BoxN box;
  box.lo = {Scalar(-r), Scalar(-r)};
  box.hi = {Scalar(r), Scalar(r)};
  PointSet ps = PointSet::from_exact_rows(2, rows, box);

  std::lock_guard<std::mutex> lk(h.cache_->mu);
  h.cache_->by_radius.emplace(key, ps);
  return ps;
}

GammaReport check_gamma_condition(const HSet& h, const PointSet& gamma) {
  if (gamma.dim() != 2) raise(Err::DimensionMismatch, "gamma must be planar");
  GammaReport rep;
  PointSet diffs = difference_set(gamma);
  rep.differences_checked = diffs.size();
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    bool in;
    if (diffs.exact()) {
      auto d = diffs.exact_point(i);
      in = h_membership(h, V2q{d[0], d[1]});
    } else {
      auto d = diffs.point(i);
      in = h_membership(h, V2d{d[0], d[1]});
    }
    if (!in) {
      ++rep.violator_count;
      if (rep.violators.size() < 16) {
        auto d = diffs.point(i);
        rep.violators.push_back({d[0], d[1]});
      }
    }
  }
  rep.ok = rep.violator_count == 0;
  return rep;
}

ProductConditionReport check_product_condition(const HSet& h, const Domain& b,
                                               const PointSet& lambda, double tol) {
  if (lambda.dim() != 2 + b.dim())
    raise(Err::DimensionMismatch, "lambda must live in R^2 x domain(B)");
  ProductConditionReport rep;
  int m = b.dim();
  PointSet diffs = difference_set(lambda);
  rep.differences_checked = diffs.size();
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    auto d = diffs.point(i);
    bool in_h;
    if (diffs.exact()) {
      auto dq = diffs.exact_point(i);
      in_h = h_membership(h, V2q{dq[0], dq[1]});
    } else {
      in_h = h_membership(h, V2d{d[0], d[1]});
    }
    bool ok = in_h || is_zero(b, d.subspan(2, m), tol);
    if (!ok) {
      ++rep.violator_count;
      if (rep.violators.size() < 16) rep.violators.emplace_back(d.begin(), d.end());
    }
  }
  rep.ok = rep.violator_count == 0;
  return rep;
}

}  // namespace spectra
