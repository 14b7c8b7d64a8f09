#pragma once

#include <span>

#include "qpw/grid.hpp"
#include "qpw/qft.hpp"
#include "qpw/slice_function.hpp"

// Non-compact Paley-Wiener machinery on the open right half-space: Cauchy
// and Poisson kernels of a slice half-plane, synthesis from half-line
// spectra, Poisson extension of boundary traces, Hardy membership, and the
// reproducing kernel of the half-space Hardy space.

namespace qpw {

/// Cauchy kernel of the right half-plane on the slice of I,
///   K(z) = (2 pi)^{-1} integral_{-inf}^{0} e^{z xi} d xi = 1 / (2 pi z),
/// evaluated at z = x + I y with x > 0.
Quat cauchy_kernel(double x, double y, const Unit& I);

/// Poisson kernel P(x, y) = |K(z)|^2 / K(2x) = x / (pi (x^2 + y^2)), x > 0.
double poisson_kernel(double x, double y);

/// Half-line synthesis at q = x + I y, x > 0:
///   f(q) = (2 pi)^{-1/2} integral_{-T}^{0} e^{q t} S(t) dt.
/// Evaluation is refused when e^{-x T} max|S| > 1e-12 (the truncated tail
/// of the integrand would not be negligible).
Quat synthesize_hardy(const HalfLineSpectrum& S, const Quat& q);

/// Boundary trace y -> f(unit * y) of the synthesized function; the kernel
/// at x = 0 is bounded, so no truncation guard applies.
BoundaryTrace hardy_boundary_trace(const HalfLineSpectrum& S, const Unit& unit,
                                   const UniformGrid& y_grid);

/// Poisson integral of a boundary trace at x + I y on the trace's slice.
Quat poisson_extend(const BoundaryTrace& F, double x, double y);

/// Cauchy-kernel convolution of a boundary trace at x + I y on its slice.
Quat cauchy_extend(const BoundaryTrace& F, double x, double y);

/// Slice regular extension of a boundary trace to the whole half-space:
/// the Poisson integral on the trace's slice, carried to other slices by
/// the representation formula (requires a symmetric trace grid).
SliceEvaluator hardy_extension(const BoundaryTrace& F);

/// True iff F is the boundary data of a Hardy-class function: the spectrum
/// of F must vanish (within tol) at strictly positive frequencies.
/// p selects the norm reported by callers; only p in {1, 2} is supported.
bool hardy_membership(const BoundaryTrace& F, int p, double tol);

/// Slice preserving Hardy extension built from an even profile and an odd
/// profile (both real): f recovers the boundary data A + J B on every
/// slice.  The combined spectrum of A + I B must live on the half line;
/// max_freq caps the spectral window the profiles are resolved on.
Quat hardy_extend_symmetric(const LineSamples& A_even, const LineSamples& B_odd, const Quat& q,
                            double support_tol = 1e-6, double max_freq = 60.0);

/// Reproducing kernel of the half-space Hardy space,
///   k(q1, q2) = integral_0^inf e^{-q1 t} e^{-conj(q2) t} dt,
/// by composite Gauss-Legendre quadrature.  Defined whenever the integrand
/// decays, i.e. re(q1) + re(q2) > 0.
Quat rk_halfspace(const Quat& q1, const Quat& q2);

/// (2 pi)^{-1} integral k(q, I y) F(y) dy; reproduces H^2 functions from
/// their boundary trace.
Quat rk_reproduce(const BoundaryTrace& F, const Quat& q);

}  // namespace qpw
