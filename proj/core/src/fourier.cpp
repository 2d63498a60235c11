#include "spectra/fourier.hpp"

#include <numbers>

namespace spectra {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex cis(double t) { return {std::cos(t), std::sin(t)}; }
}  // namespace

double sinc(double t) {
  double y = kPi * t;
  if (std::abs(y) < 1e-4) {
    double y2 = y * y;
    return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
  }
  return std::sin(y) / y;
}

namespace {

Complex ft_box(const BoxN& b, std::span<const double> xi) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < b.dim(); ++i) {
    double len = b.hi[i].value() - b.lo[i].value();
    double c = (b.hi[i].value() + b.lo[i].value()) / 2;
    r *= len * sinc(xi[i] * len) * cis(-kTwoPi * xi[i] * c);
  }
  return r;
}

Complex ft_polygon(const Domain& d, std::span<const double> xi) {
  double r2 = xi[0] * xi[0] + xi[1] * xi[1];
  const auto& mo = d.poly_moments();
  if (r2 < 1e-12) {  // |xi| < 1e-6: second-order moment series
    double lin = xi[0] * mo[1] + xi[1] * mo[2];
    double quad = xi[0] * xi[0] * mo[3] + 2 * xi[0] * xi[1] * mo[4] + xi[1] * xi[1] * mo[5];
    return Complex(mo[0] - 2 * kPi * kPi * quad, -kTwoPi * lin);
  }
  V2d q{xi[0], xi[1]};
  Complex sum(0, 0);
  for (const auto& e : d.edges()) {
    double coef = q.x * e.rot.x + q.y * e.rot.y;
    if (coef == 0) continue;
    double along = q.x * e.vec.x + q.y * e.vec.y;
    double phase = -kTwoPi * (q.x * e.mid.x + q.y * e.mid.y);
    sum += coef * sinc(along) * cis(phase);
  }
  // div(xi * exp(-2 pi i <xi,x>)) integrated over the polygon.
  return sum * Complex(0, 1.0 / (kTwoPi * r2));
}

}  // namespace

Complex ft(const Domain& omega, std::span<const double> xi) {
  if ((int)xi.size() != omega.dim()) raise(Err::DimensionMismatch, "ft: frequency dimension");
  switch (omega.kind()) {
    case Domain::Kind::Interval:
    case Domain::Kind::BoxUnion: {
      Complex s(0, 0);
      for (const auto& b : omega.boxes()) s += ft_box(b, xi);
      return s;
    }
    case Domain::Kind::Polygon:
      return ft_polygon(omega, xi);
    case Domain::Kind::Product: {
      int n = omega.factor(0).dim();
      return ft(omega.factor(0), xi.subspan(0, n)) * ft(omega.factor(1), xi.subspan(n));
    }
  }
  raise(Err::Internal, "unreachable domain kind");
}

double power(const Domain& omega, std::span<const double> x) {
  double m = omega.measure().value();
  return std::norm(ft(omega, x)) / (m * m);
}

bool is_zero(const Domain& omega, std::span<const double> xi, double tol) {
  if (tol <= 0) raise(Err::BadInput, "is_zero needs tol > 0");
  return std::abs(ft(omega, xi)) <= tol * omega.measure().value();
}

namespace {

// Real-valued proxy along rays: the transform of the centered copy of the
// domain. Real for symmetric domains, where zero curves cross rays with a
// sign change.
double centered_real(const Domain& d, const std::vector<double>& c, std::span<const double> xi) {
  double ph = 0;
  for (size_t i = 0; i < c.size(); ++i) ph += xi[i] * c[i];
  Complex val = ft(d, xi) * cis(kTwoPi * ph);
  return val.real();
}

}  // namespace

double chi(const Domain& omega, double search_radius, double grid_step) {
  if (search_radius <= 0) raise(Err::BadInput, "chi needs search_radius > 0");
  if (grid_step <= 0) grid_step = search_radius / 400;
  auto c = omega.centroid();
  int d = omega.dim();
  double scale = omega.measure().value();

  std::vector<std::vector<double>> dirs;
  if (d == 1) {
    dirs.push_back({1.0});
  } else if (d == 2) {
    int n_ang = 720;
    for (int k = 0; k < n_ang; ++k) {
      double th = kPi * k / n_ang;  // conjugate symmetry: half circle suffices
      dirs.push_back({std::cos(th), std::sin(th)});
    }
  } else {
    // Axes plus a deterministic spread; evidence only in higher dimensions.
    for (int i = 0; i < d; ++i) {
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
    }
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < 500; ++k) {
      std::vector<double> v(d);
      double n2 = 0;
      for (int i = 0; i < d; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        v[i] = double((s >> 11) % 20001) / 10000.0 - 1.0;
        n2 += v[i] * v[i];
      }
      if (n2 < 1e-6) continue;
      for (auto& x : v) x /= std::sqrt(n2);
      dirs.push_back(v);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> xi(d);
  auto eval = [&](const std::vector<double>& dir, double r) {
    for (int i = 0; i < d; ++i) xi[i] = r * dir[i];
    return centered_real(omega, c, xi);
  };

  for (const auto& dir : dirs) {
    double prev_r = grid_step / 2;
    double prev_f = eval(dir, prev_r);
    for (double r = grid_step; r <= search_radius + 1e-12 && r < best; r += grid_step) {
      double f = eval(dir, r);
      if (std::abs(f) <= 1e-13 * scale) {
        best = std::min(best, r);
        break;
      }
      if (prev_f * f < 0) {
        double lo = prev_r, hi = r;
        for (int it = 0; it < 80 && (hi - lo) > 1e-8 * hi; ++it) {
          double mid = (lo + hi) / 2;
          double fm = eval(dir, mid);
          if (fm == 0) { lo = hi = mid; break; }
          if (fm * prev_f < 0) hi = mid; else lo = mid;
        }
        best = std::min(best, (lo + hi) / 2);
        break;
      }
      prev_r = r;
      prev_f = f;
    }
  }
  return best;
}

double asymptotic_residual(const Polygon& a, double u, double v) {
  if (!is_normalized(a)) raise(Err::NotNormalized, "polygon must be in canonical edge position");
  Domain d = Domain::polygon(a);
  std::array<double, 2> xi{u, v};
  Complex lhs = kPi * u * ft(d, xi);
  double rhs = std::sin(kPi * u) * sinc(v);
  return std::abs(lhs - Complex(rhs, 0));
}

}  // namespace spectra
