#pragma once

#include <complex>
#include <span>

#include "spectra/domain.hpp"

namespace spectra {

using Complex = std::complex<double>;

/// sin(pi t)/(pi t) with a series branch near 0.
double sinc(double t);

/// Fourier transform of the indicator of the domain at frequency xi,
/// integral over the domain of exp(-2 pi i <xi,x>).
Complex ft(const Domain& omega, std::span<const double> xi);

/// Normalized power |ft|^2 / |Omega|^2; a spectrum tiles this at level 1 and
/// its integral is 1/|Omega|.
double power(const Domain& omega, std::span<const double> x);

/// |ft(xi)| <= tol * |Omega|.
bool is_zero(const Domain& omega, std::span<const double> xi, double tol);

/// Smallest |xi| with ft(xi) = 0, searched on a radial/angular grid with
/// bisection refinement (relative accuracy 1e-8). Numerical evidence, not a
/// certificate. Returns +infinity when no zero lies within search_radius.
double chi(const Domain& omega, double search_radius, double grid_step);

/// |pi*u*ft_A(u,v) - sin(pi u)*ft_I(v)| for a polygon in canonical edge
/// position, I = [-1/2,1/2]. Decays like 1/u as u grows.
double asymptotic_residual(const Polygon& normalized, double u, double v);

}  // namespace spectra
