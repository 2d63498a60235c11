#include "spectra/pointset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>

#include "spectra/fourier.hpp"
#include "spectra/parallel.hpp"

namespace spectra {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= (std::size_t)v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::int64_t> quantize(std::span<const double> p, double cell) {
  std::vector<std::int64_t> k(p.size());
  for (size_t i = 0; i < p.size(); ++i) k[i] = (std::int64_t)llround(p[i] / cell);
  return k;
}

}  // namespace

PointSet PointSet::from_rows(int dim, const std::vector<VecXd>& rows, BoxN box) {
  if (box.dim() != dim) raise(Err::DimensionMismatch, "validity box dimension");
  PointSet ps(dim);
  ps.box_ = std::move(box);
  std::unordered_set<std::vector<std::int64_t>, KeyHash> seen;
  for (const auto& r : rows) {
    if ((int)r.size() != dim) raise(Err::DimensionMismatch, "point dimension");
    for (int i = 0; i < dim; ++i)
      if (r[i] < ps.box_.lo[i].value() - 1e-12 || r[i] > ps.box_.hi[i].value() + 1e-12)
        raise(Err::BadInput, "point outside validity box");
    if (!seen.insert(quantize(r, 1e-10)).second) continue;  // merge near-duplicates
    ps.flat_.insert(ps.flat_.end(), r.begin(), r.end());
  }
  return ps;
}

PointSet PointSet::from_exact_rows(int dim, const std::vector<VecXq>& rows, BoxN box) {
  if (box.dim() != dim) raise(Err::DimensionMismatch, "validity box dimension");
  for (int i = 0; i < dim; ++i)
    if (!box.lo[i].exact() || !box.hi[i].exact())
      raise(Err::ExactRequired, "exact point set needs an exact box");
  PointSet ps(dim);
  ps.box_ = std::move(box);
  ps.exact_.emplace();
  std::map<VecXq, bool> seen;
  for (const auto& r : rows) {
    if ((int)r.size() != dim) raise(Err::DimensionMismatch, "point dimension");
    for (int i = 0; i < dim; ++i)
      if (r[i] < ps.box_.lo[i].rat() || r[i] > ps.box_.hi[i].rat())
        raise(Err::BadInput, "point outside validity box");
    if (seen.count(r)) continue;
    seen[r] = true;
    for (const auto& c : r) {
      ps.exact_->push_back(c);
      ps.flat_.push_back(to_double(c));
    }
  }
  return ps;
}

PointSet PointSet::translated(std::span<const double> shift) const {
  if ((int)shift.size() != dim_) raise(Err::DimensionMismatch, "shift dimension");
  PointSet ps(dim_);
  ps.flat_ = flat_;
  for (size_t i = 0; i < flat_.size(); ++i) ps.flat_[i] += shift[i % dim_];
  ps.box_ = box_;
  for (int i = 0; i < dim_; ++i) {
    ps.box_.lo[i] = ps.box_.lo[i] + Scalar(shift[i]);
    ps.box_.hi[i] = ps.box_.hi[i] + Scalar(shift[i]);
  }
  return ps;
}

PointSet PointSet::translated_exact(std::span<const Rat> shift) const {
  if (!exact_) raise(Err::ExactRequired, "translated_exact on float-mode set");
  if ((int)shift.size() != dim_) raise(Err::DimensionMismatch, "shift dimension");
  PointSet ps(dim_);
  ps.exact_ = exact_;
  for (size_t i = 0; i < ps.exact_->size(); ++i) (*ps.exact_)[i] += shift[i % dim_];
  ps.flat_.resize(ps.exact_->size());
  for (size_t i = 0; i < ps.flat_.size(); ++i) ps.flat_[i] = to_double((*ps.exact_)[i]);
  ps.box_ = box_;
  for (int i = 0; i < dim_; ++i) {
    ps.box_.lo[i] = ps.box_.lo[i] + Scalar(shift[i]);
    ps.box_.hi[i] = ps.box_.hi[i] + Scalar(shift[i]);
  }
  return ps;
}

PointSet PointSet::block_map2(const Mat2q& m, int offset) const {
  if (!exact_) raise(Err::ExactRequired, "block_map2 on float-mode set");
  if (offset < 0 || offset + 2 > dim_) raise(Err::BadIndex, "block offset");
  PointSet ps(dim_);
  ps.exact_ = exact_;
  for (size_t i = 0; i < size(); ++i) {
    Rat& x = (*ps.exact_)[i * dim_ + offset];
    Rat& y = (*ps.exact_)[i * dim_ + offset + 1];
    V2q r = m.apply({x, y});
    x = r.x;
    y = r.y;
  }
  ps.flat_.resize(ps.exact_->size());
  for (size_t i = 0; i < ps.flat_.size(); ++i) ps.flat_[i] = to_double((*ps.exact_)[i]);
  // The affine image of a box is not a box; take the bounding box.
  ps.box_ = box_;
  for (size_t i = 0; i < size(); ++i) {
    for (int k = 0; k < 2; ++k) {
      Rat c = (*ps.exact_)[i * dim_ + offset + k];
      if (i == 0 || c < ps.box_.lo[offset + k].rat()) ps.box_.lo[offset + k] = Scalar(c);
      if (i == 0 || c > ps.box_.hi[offset + k].rat()) ps.box_.hi[offset + k] = Scalar(c);
    }
  }
  return ps;
}

double separation(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 2) raise(Err::TooFew, "separation needs at least two points");
  int d = ps.dim();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ps.point(a)[0] < ps.point(b)[0]; });

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    auto pi = ps.point(order[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto pj = ps.point(order[j]);
      double dx = pj[0] - pi[0];
      if (dx * dx > best) break;  // sweep cutoff along the sorted axis
      double d2 = 0;
      for (int k = 0; k < d; ++k) {
        double t = pj[k] - pi[k];
        d2 += t * t;
      }
      best = std::min(best, d2);
    }
  }
  return std::sqrt(best);
}

double covering_radius(const PointSet& ps, const BoxN& region, double probe_step) {
  if (ps.empty()) raise(Err::EmptySet, "covering radius of the empty set");
  if (region.dim() != ps.dim()) raise(Err::DimensionMismatch, "region dimension");
  int d = ps.dim();
  if (probe_step <= 0) {
    double diam2 = 0;
    for (int i = 0; i < d; ++i) {
      double len = region.hi[i].value() - region.lo[i].value();
      diam2 += len * len;
    }
    probe_step = std::sqrt(diam2) / 500;
  }

  std::vector<std::size_t> counts(d);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    double len = region.hi[i].value() - region.lo[i].value();
    counts[i] = (std::size_t)std::floor(len / probe_step) + 1;
    total *= counts[i];
  }

  std::vector<double> worst(total);
  parallel_for(total, [&](std::size_t idx) {
    std::vector<double> x(d);
    std::size_t rem = idx;
    for (int i = 0; i < d; ++i) {
      std::size_t k = rem % counts[i];
      rem /= counts[i];
      x[i] = std::min(region.lo[i].value() + (double)k * probe_step, region.hi[i].value());
    }
    double bd2 = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < ps.size(); ++p) {
      auto q = ps.point(p);
      double d2 = 0;
      for (int i = 0; i < d; ++i) {
        double t = x[i] - q[i];
        d2 += t * t;
      }
      bd2 = std::min(bd2, d2);
    }
    worst[idx] = bd2;
  });
  double max_d2 = *std::max_element(worst.begin(), worst.end());
  return std::sqrt(max_d2) + probe_step * std::sqrt((double)d) / 2;
}

PointSet difference_set(const PointSet& ps) {
  int d = ps.dim();
  PointSet out(d);
  out.box_.lo.resize(d);
  out.box_.hi.resize(d);
  for (int i = 0; i < d; ++i) {
    out.box_.lo[i] = ps.box_.lo[i] - ps.box_.hi[i];
    out.box_.hi[i] = ps.box_.hi[i] - ps.box_.lo[i];
  }
  std::size_t n = ps.size();
  if (ps.exact()) {
    out.exact_.emplace();
    std::map<VecXq, bool> seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        VecXq diff(d);
        bool zero = true;
        for (int k = 0; k < d; ++k) {
          diff[k] = ps.exact_point(j)[k] - ps.exact_point(i)[k];
          if (diff[k] != 0) zero = false;
        }
        if (zero || seen.count(diff)) continue;
        seen[diff] = true;
        for (auto& c : diff) {
          out.exact_->push_back(c);
          out.flat_.push_back(to_double(c));
        }
      }
    }
  } else {
    std::unordered_set<std::vector<std::int64_t>, KeyHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        VecXd diff(d);
        bool zero = true;
        for (int k = 0; k < d; ++k) {
          diff[k] = ps.point(j)[k] - ps.point(i)[k];
          if (std::abs(diff[k]) > 0.5e-10) zero = false;
        }
        if (zero || !seen.insert(quantize(diff, 1e-10)).second) continue;
        out.flat_.insert(out.flat_.end(), diff.begin(), diff.end());
      }
    }
  }
  return out;
}

PointSet product_pointset(const PointSet& u, const PointSet& v) {
  PointSet out(u.dim() + v.dim());
  out.box_ = product_box(u.box(), v.box());
  bool ex = u.exact() && v.exact();
  if (ex) out.exact_.emplace();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      auto a = u.point(i);
      auto b = v.point(j);
      out.flat_.insert(out.flat_.end(), a.begin(), a.end());
      out.flat_.insert(out.flat_.end(), b.begin(), b.end());
      if (ex) {
        auto aq = u.exact_point(i);
        auto bq = v.exact_point(j);
        out.exact_->insert(out.exact_->end(), aq.begin(), aq.end());
        out.exact_->insert(out.exact_->end(), bq.begin(), bq.end());
      }
    }
  }
  return out;
}

OrthogonalityReport check_orthogonality(const Domain& omega, const PointSet& lambda, double tol) {
  if (omega.dim() != lambda.dim()) raise(Err::DimensionMismatch, "domain vs point dimension");
  int d = lambda.dim();
  std::size_t n = lambda.size();
  OrthogonalityReport rep;
  rep.tol_abs = tol * omega.measure().value();
  rep.pairs_checked = n < 2 ? 0 : n * (n - 1) / 2;
  if (n < 2) {
    rep.ok = true;
    return rep;
  }

  int workers = thread_cap();
  std::size_t chunks = std::min<std::size_t>(n, (std::size_t)workers * 8);
  struct Worst {
    double abs = -1;
    std::size_t i = 0, j = 0;
  };
  std::vector<Worst> per_chunk(chunks);
  std::size_t rows_per = (n + chunks - 1) / chunks;

  parallel_for(chunks, [&](std::size_t c) {
    std::size_t lo = c * rows_per, hi = std::min(n, lo + rows_per);
    Worst w;
    std::vector<double> diff(d);
    for (std::size_t i = lo; i < hi; ++i) {
      auto pi = lambda.point(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        auto pj = lambda.point(j);
        for (int k = 0; k < d; ++k) diff[k] = pj[k] - pi[k];
        double a = std::abs(ft(omega, diff));
        if (a > w.abs) w = {a, i, j};
      }
    }
    per_chunk[c] = w;
  }, workers);

  Worst best;
  for (const auto& w : per_chunk)
    if (w.abs > best.abs) best = w;

  rep.worst_abs = best.abs;
  auto a = lambda.point(best.i);
  auto b = lambda.point(best.j);
  rep.worst_a.assign(a.begin(), a.end());
  rep.worst_b.assign(b.begin(), b.end());
  rep.ok = rep.worst_abs <= rep.tol_abs;
  return rep;
}

}  // namespace spectra
