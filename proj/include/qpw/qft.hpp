#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qpw/grid.hpp"

// One-dimensional left-sided quaternion Fourier transform
//   F_I(F)(t) = (2 pi)^{-1/2} integral e^{-I x t} F(x) dx,
// its inverse, the unit-transfer identity for real-valued signals, the
// essential Fourier transform of Hardy boundary data, and spectral-support
// estimation.  All integrals are composite trapezoid sums on uniform grids.

namespace qpw {

/// Frequency grid whose step pi / line_extent makes the discrete transform
/// of data sampled on [-line_extent, line_extent] orthogonal across nodes;
/// support checks are honest on this lattice.
UniformGrid frequency_lattice(double line_extent, double max_freq);

/// Line extent commensurate with a spectrum step (multiple * pi / step).
double lattice_line_extent(double spectrum_step, int multiple = 1);

/// Left-sided transform; the exponential kernel multiplies F from the left,
/// which matters for quaternion-valued data.
Spectrum qft_left(const LineSamples& F, const Unit& I, const UniformGrid& freq_grid);

/// Inverse transform back onto a line grid (conjugate kernel quadrature).
LineSamples iqft_left(const Spectrum& S, const UniformGrid& line_grid);

/// Spectrum of the same real-valued signal under a different kernel unit:
///   F_J(t) = [F_I(t) + F_I(-t)]/2 + (J I / 2) [F_I(-t) - F_I(t)].
/// Requires a grid symmetric about 0; only valid when the underlying line
/// data was real-valued.
Spectrum transfer_spectrum(const Spectrum& S, const Unit& J);

/// Produces the boundary trace y -> f(unit * y) of a Hardy-class function.
using TraceProvider = std::function<LineSamples(const Unit&)>;

struct EssentialSpectrum {
  Spectrum spectrum;            // transform at the first probe unit
  double cross_unit_deviation;  // max node-wise disagreement across units
};

/// Transforms each probe unit's boundary trace with its own kernel and
/// reports how far the spectra disagree.  For Hardy-class slice functions
/// the result is unit independent.
EssentialSpectrum essential_ft_probe(const TraceProvider& traces, std::span<const Unit> units,
                                     const UniformGrid& freq_grid);

/// Same, but enforces agreement: disagreement beyond tol means the input is
/// not the boundary data of a Hardy-class slice function.
Spectrum essential_ft(const TraceProvider& traces, std::span<const Unit> units, double tol,
                      const UniformGrid& freq_grid);

/// Smallest R with |S| <= tol outside [-R, R] on the grid; 0 when the whole
/// spectrum is below tol, +infinity when even the outermost nodes exceed it
/// (the support may extend past the grid).
double support_radius(const Spectrum& S, double tol);

/// True iff max |S| over strictly positive frequencies is <= tol.
bool support_halfline_check(const Spectrum& S, double tol);

/// Discrete (||F||_2^2, ||S||_2^2); equal within quadrature tolerance when
/// S is the transform of F.
std::pair<double, double> plancherel_norm(const LineSamples& F, const Spectrum& S);

}  // namespace qpw
