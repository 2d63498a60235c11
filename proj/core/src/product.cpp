#include "spectra/product.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "spectra/fourier.hpp"

namespace spectra {

namespace {

struct SplitSets {
  bool ok = false;
  std::vector<VecXq> u, v;  // distinct blocks, exact
};

SplitSets split_exact(const PointSet& lam, int n) {
  SplitSets s;
  if (!lam.exact()) return s;
  std::map<VecXq, bool> us, vs;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    auto p = lam.exact_point(i);
    us.emplace(VecXq(p.begin(), p.begin() + n), true);
    vs.emplace(VecXq(p.begin() + n, p.end()), true);
  }
  if (us.size() * vs.size() != lam.size()) return s;
  s.ok = true;
  for (auto& [k, _] : us) s.u.push_back(k);
  for (auto& [k, _] : vs) s.v.push_back(k);
  return s;
}

VecXd to_dvec(const VecXq& q) {
  VecXd d(q.size());
  for (size_t i = 0; i < q.size(); ++i) d[i] = to_double(q[i]);
  return d;
}

}  // namespace

CompatReport w_compatible(const PointSet& lambda, const Region& w, const Domain& b, double tol) {
  int n = w.dim(), m = b.dim();
  if (lambda.dim() != n + m) raise(Err::DimensionMismatch, "lambda vs W x B dimensions");
  CompatReport rep;
  if (lambda.size() == 0) {  // empty spectrum is trivially compatible
    rep.ok = true;
    return rep;
  }

  auto split = split_exact(lambda, n);
  if (split.ok) {
    // Product structure: differences factor as (U-U) x (V-V), both with 0.
    std::map<VecXq, bool> du_seen, dv_seen;
    std::vector<VecXq> du_bad, dv_bad;  // s in Delta(W); w outside the zero set
    for (const auto& ua : split.u) {
      for (const auto& ub : split.u) {
        VecXq s(n);
        for (int k = 0; k < n; ++k) s[k] = ua[k] - ub[k];
        if (du_seen.count(s)) continue;
        du_seen[s] = true;
        if (delta_membership_exact(w, s)) du_bad.push_back(s);
      }
    }
    for (const auto& va : split.v) {
      for (const auto& vb : split.v) {
        VecXq t(m);
        for (int k = 0; k < m; ++k) t[k] = va[k] - vb[k];
        if (dv_seen.count(t)) continue;
        dv_seen[t] = true;
        if (!is_zero(b, to_dvec(t), tol)) dv_bad.push_back(t);
      }
    }
    rep.differences_checked = du_seen.size() * dv_seen.size() - 1;
    for (const auto& s : du_bad) {
      for (const auto& t : dv_bad) {
        bool zero = std::all_of(s.begin(), s.end(), [](const Rat& r) { return r == 0; }) &&
                    std::all_of(t.begin(), t.end(), [](const Rat& r) { return r == 0; });
        if (zero) continue;
        ++rep.violator_count;
        if (rep.violators.size() < 16) {
          VecXd row = to_dvec(s);
          VecXd tail = to_dvec(t);
          row.insert(row.end(), tail.begin(), tail.end());
          rep.violators.push_back(std::move(row));
        }
      }
    }
    rep.ok = rep.violator_count == 0;
    return rep;
  }

  PointSet diffs = difference_set(lambda);
  rep.differences_checked = diffs.size();
  Tol tol_ctx{};
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    auto d = diffs.point(i);
    bool s_in_delta;
    if (diffs.exact()) {
      auto dq = diffs.exact_point(i);
      std::vector<Rat> s(dq.begin(), dq.begin() + n);
      s_in_delta = delta_membership_exact(w, s);
    } else {
      s_in_delta = delta_membership(w, d.subspan(0, n), tol_ctx);
    }
    if (s_in_delta && !is_zero(b, d.subspan(n, m), tol)) {
      ++rep.violator_count;
      if (rep.violators.size() < 16) rep.violators.emplace_back(d.begin(), d.end());
    }
  }
  rep.ok = rep.violator_count == 0;
  return rep;
}

namespace {

CutProjectResult cut_project_impl(const PointSet& lambda, const Region& w,
                                  std::span<const double> xd, const std::vector<Rat>* xq) {
  int n = w.dim();
  int m = lambda.dim() - n;
  if (m <= 0) raise(Err::DimensionMismatch, "lambda must extend beyond the window block");

  CutProjectResult res;
  res.x.assign(xd.begin(), xd.end());

  bool exact = xq && lambda.exact();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    bool in;
    if (exact) {
      auto p = lambda.exact_point(i);
      std::vector<Rat> s(n);
      for (int k = 0; k < n; ++k) s[k] = p[k] - (*xq)[k];
      in = w.contains_exact(s);
    } else {
      auto p = lambda.point(i);
      std::vector<double> s(n);
      for (int k = 0; k < n; ++k) s[k] = p[k] - xd[k];
      in = w.contains(s, Tol{});
    }
    if (in) selected.push_back(i);
  }
  res.selected = selected.size();

  // Injectivity of the projection on the selected set.
  if (exact) {
    std::map<VecXq, std::size_t> proj;
    for (auto i : selected) {
      auto p = lambda.exact_point(i);
      VecXq v(p.begin() + n, p.end());
      auto [it, fresh] = proj.emplace(v, i);
      if (!fresh) {
        res.injective = false;
        auto q = lambda.point(it->second);
        auto r = lambda.point(i);
        res.collisions.emplace_back(VecXd(q.begin(), q.end()), VecXd(r.begin(), r.end()));
      }
    }
  } else {
    std::map<std::vector<long long>, std::size_t> proj;
    for (auto i : selected) {
      auto p = lambda.point(i);
      std::vector<long long> key(m);
      for (int k = 0; k < m; ++k) key[k] = llround(p[n + k] * 1e10);
      auto [it, fresh] = proj.emplace(key, i);
      if (!fresh) {
        res.injective = false;
        auto q = lambda.point(it->second);
        auto r = lambda.point(i);
        res.collisions.emplace_back(VecXd(q.begin(), q.end()), VecXd(r.begin(), r.end()));
      }
    }
  }

  BoxN gamma_box;
  for (int k = n; k < lambda.dim(); ++k) {
    gamma_box.lo.push_back(lambda.box().lo[k]);
    gamma_box.hi.push_back(lambda.box().hi[k]);
  }
  if (exact) {
    std::vector<VecXq> rows;
    for (auto i : selected) {
      auto p = lambda.exact_point(i);
      rows.emplace_back(p.begin() + n, p.end());
    }
    res.gamma = PointSet::from_exact_rows(m, rows, gamma_box);
  } else {
    std::vector<VecXd> rows;
    for (auto i : selected) {
      auto p = lambda.point(i);
      rows.emplace_back(p.begin() + n, p.end());
    }
    res.gamma = PointSet::from_rows(m, rows, gamma_box);
  }
  return res;
}

}  // namespace

CutProjectResult cut_project(const PointSet& lambda, const Region& w,
                             std::span<const double> x) {
  if ((int)x.size() != w.dim()) raise(Err::DimensionMismatch, "x vs window dimension");
  return cut_project_impl(lambda, w, x, nullptr);
}

CutProjectResult cut_project_exact(const PointSet& lambda, const Region& w,
                                   std::span<const Rat> x) {
  if ((int)x.size() != w.dim()) raise(Err::DimensionMismatch, "x vs window dimension");
  std::vector<Rat> xq(x.begin(), x.end());
  std::vector<double> xd(x.size());
  for (size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
  return cut_project_impl(lambda, w, xd, &xq);
}

std::vector<ExtractRow> extract_factor_spectrum(const ProductSpectrumJob& job) {
  int n = job.w.dim();
  std::mt19937_64 rng(job.seed);
  std::uniform_int_distribution<long> dy(0, (1 << 20) - 1);

  // Window must fit inside the first-block validity box wherever x lands.
  BoxN wbb = job.w.bounding_box();

  std::vector<ExtractRow> rows;
  for (int s = 0; s < job.samples; ++s) {
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
      Rat frac(dy(rng), 1 << 20);
      x[i] = job.sample_box.lo[i].rat() +
             (job.sample_box.hi[i].rat() - job.sample_box.lo[i].rat()) * frac;
    }
    ExtractRow row;
    row.cut = cut_project_exact(job.lambda, job.w, x);
    row.x = row.cut.x;

    for (int i = 0; i < n; ++i) {
      Rat lo = wbb.lo[i].rat() + x[i];
      Rat hi = wbb.hi[i].rat() + x[i];
      if (lo < job.lambda.box().lo[i].rat() || hi > job.lambda.box().hi[i].rat())
        row.insufficient_window = true;
    }

    if (row.cut.gamma.size() == 0) {
      row.pass = false;
      rows.push_back(std::move(row));
      continue;
    }
    row.orth = check_orthogonality(job.b, row.cut.gamma, job.orth_tol);
    row.tiling = tiling_check(job.b, row.cut.gamma, job.gamma_grid, {-1, job.tile_tol});
    row.pass = row.cut.injective && row.orth.ok && row.tiling.ok && !row.insufficient_window;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Evaluator for 1_{-W} (x) f_B summed over Lambda, grouped over the product
// structure when the point set factorizes.
struct MixedSum {
  const ProductSpectrumJob& job;
  Region neg_w;
  int n, m;
  bool grouped = false;
  std::vector<VecXd> u, v;

  explicit MixedSum(const ProductSpectrumJob& j)
      : job(j), neg_w(reflected(j.w)), n(j.w.dim()), m(j.b.dim()) {
    auto split = split_exact(job.lambda, n);
    if (split.ok) {
      grouped = true;
      for (auto& q : split.u) u.push_back(to_dvec(q));
      for (auto& q : split.v) v.push_back(to_dvec(q));
    }
  }

  double operator()(std::span<const double> xy) const {
    Tol tol{};
    std::vector<double> s(n), t(m);
    if (grouped) {
      double cnt = 0;
      for (const auto& uu : u) {
        for (int k = 0; k < n; ++k) s[k] = xy[k] - uu[k];
        if (neg_w.contains(s, tol)) cnt += 1.0;
      }
      if (cnt == 0) return 0.0;
      double sb = 0;
      for (const auto& vv : v) {
        for (int k = 0; k < m; ++k) t[k] = xy[n + k] - vv[k];
        sb += power(job.b, t);
      }
      return cnt * sb;
    }
    double total = 0;
    for (std::size_t i = 0; i < job.lambda.size(); ++i) {
      auto p = job.lambda.point(i);
      for (int k = 0; k < n; ++k) s[k] = xy[k] - p[k];
      if (!neg_w.contains(s, tol)) continue;
      for (int k = 0; k < m; ++k) t[k] = xy[n + k] - p[n + k];
      total += power(job.b, t);
    }
    return total;
  }
};

TilingReport grid_report(SumKind kind, const GridSpec& grid, const MixedSum& sum) {
  TilingReport rep;
  rep.kind = kind;
  rep.grid = grid;
  auto samples = grid.samples();
  rep.samples = samples.size();
  rep.max_sum = -std::numeric_limits<double>::infinity();
  rep.min_interior_sum = std::numeric_limits<double>::infinity();
  for (const auto& x : samples) {
    double s = sum(x);
    rep.max_sum = std::max(rep.max_sum, s);
    rep.min_interior_sum = std::min(rep.min_interior_sum, s);
    rep.max_abs_dev_from_1 = std::max(rep.max_abs_dev_from_1, std::abs(s - 1.0));
  }
  return rep;
}

double second_block_margin(const ProductSpectrumJob& job, const GridSpec& grid) {
  double r = std::numeric_limits<double>::infinity();
  int n = job.w.dim();
  for (int k = 0; k < job.b.dim(); ++k) {
    r = std::min(r, grid.box.lo[n + k].value() - job.lambda.box().lo[n + k].value());
    r = std::min(r, job.lambda.box().hi[n + k].value() - grid.box.hi[n + k].value());
  }
  return r;
}

}  // namespace

AuditReport theorem4_audit(const ProductSpectrumJob& job, const GridSpec& product_grid) {
  AuditReport rep;
  rep.compat = w_compatible(job.lambda, job.w, job.b, job.orth_tol);
  rep.steps.push_back(
      {"w_compatible", rep.compat.ok,
       rep.compat.ok ? "all differences satisfy the compatibility condition"
                     : "violating differences found"});

  MixedSum g(job);

  // Tail allowance on the B side: everything inside the validity box is
  // summed, so only the ideal set beyond it contributes.
  double tail_b = 0;
  bool tail_cert = false;
  double margin = second_block_margin(job, product_grid);
  if (job.b.kind() == Domain::Kind::Interval && margin > 0 && g.grouped && g.v.size() >= 2) {
    std::vector<double> xs;
    for (auto& vv : g.v) xs.push_back(vv[0]);
    std::sort(xs.begin(), xs.end());
    double delta = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < xs.size(); ++i) delta = std::min(delta, xs[i] - xs[i - 1]);
    tail_b = interval_tail_bound(job.b.measure().value(), delta, margin);
    tail_cert = true;
  }

  rep.step2_packing = grid_report(SumKind::Packing, product_grid, g);
  rep.step2_packing.tol = 1e-3;
  rep.step2_packing.tail_bound = tail_b;
  rep.step2_packing.tail_certified = tail_cert;
  rep.step2_packing.note = "indicator (x) power sum over the full window";
  rep.step2_packing.ok = rep.step2_packing.max_sum <= 1.0 + rep.step2_packing.tol;
  rep.step2_packing.dev_beyond_tail = std::max(0.0, rep.step2_packing.max_sum - 1.0);
  rep.steps.push_back({"step2_packing", rep.step2_packing.ok,
                       "max translated sum " + std::to_string(rep.step2_packing.max_sum)});

  rep.step3_tiling = tiling_check(Domain::product(job.a, job.b), job.lambda, product_grid,
                                  {-1, job.tile_tol});
  rep.steps.push_back({"step3_tiling", rep.step3_tiling.ok,
                       "max deviation " + std::to_string(rep.step3_tiling.max_abs_dev_from_1)});

  Scalar am = job.a.measure();
  rep.a_measure_inv = Scalar(1) / am;
  rep.w_measure = job.w_measure ? *job.w_measure : Scalar(0.0);
  rep.measures_comparable = job.w_measure.has_value() && rep.w_measure.exact() && am.exact();
  if (rep.measures_comparable) {
    rep.measure_equal = rep.w_measure.rat() == rep.a_measure_inv.rat();
    rep.measure_bounded = rep.w_measure.rat() <= rep.a_measure_inv.rat();
  } else if (job.w_measure) {
    rep.measure_equal =
        std::abs(rep.w_measure.value() - rep.a_measure_inv.value()) <= 1e-12;
    rep.measure_bounded = rep.w_measure.value() <= rep.a_measure_inv.value() + 1e-12;
  }
  rep.steps.push_back({"step4_measure", rep.measure_bounded && rep.measure_equal,
                       "|W| = " + rep.w_measure.str() + ", |A|^{-1} = " + rep.a_measure_inv.str()});

  if (rep.measure_equal) {
    TilingReport t5 = grid_report(SumKind::Tiling, product_grid, g);
    t5.tol = job.tile_tol;
    t5.tail_bound = tail_b;
    t5.tail_certified = tail_cert;
    t5.truncation_radius = margin;
    t5.note = "induced tiling of the reflected window block";
    t5.dev_beyond_tail =
        std::max({0.0, t5.max_sum - 1.0, (1.0 - tail_b) - t5.min_interior_sum});
    t5.ok = t5.dev_beyond_tail <= t5.tol;
    rep.step5_tiling = t5;
    rep.steps.push_back({"step5_tiling", t5.ok,
                         "max deviation " + std::to_string(t5.max_abs_dev_from_1)});
  } else {
    rep.steps.push_back({"step5_tiling", false, "skipped: measures differ"});
  }

  rep.all_ok = rep.compat.ok && rep.step2_packing.ok && rep.step3_tiling.ok &&
               rep.measure_equal && rep.measure_bounded && rep.step5_tiling &&
               rep.step5_tiling->ok;
  return rep;
}

}  // namespace spectra
