#pragma once

#include <memory>
#include <span>
#include <vector>

#include "qpw/grid.hpp"
#include "qpw/qft.hpp"
#include "qpw/slice_function.hpp"

// Compact-type Paley-Wiener machinery: band-limited synthesis over the
// whole quaternion space, the exponential growth bound with its explicit
// Cauchy-Schwarz constant, membership checks, and the sinc reproducing
// integral.

namespace qpw {

/// A quaternion-valued compact spectrum resolved into its four slice
/// preserving components along the frame adapted to the defining unit.
/// Component m carries the spectrum a_m(t) + I b_m(t) of a function with
/// real restriction (a even, b odd, both real and unit independent), which
/// is what lets the synthesis evaluate on every slice.
struct ComponentSpectra {
  UniformGrid grid;
  Eigen::Array<double, Eigen::Dynamic, 4> even;  // a_m per column
  Eigen::Array<double, Eigen::Dynamic, 4> odd;   // b_m per column
  Frame<double> frame;

  /// Reassembles the spectrum transferred to the slice of `unit`.
  QuatArray assemble(const Unit& unit) const;
};

/// Splits S into component spectra; requires a grid symmetric about 0.
ComponentSpectra resolve_components(const CompactSpectrum& S);

/// Synthesis quadrature at one point,
///   f(x + I y) = (2 pi)^{-1/2} integral_{-A}^{A} e^{I (x + I y) t} S_I(t) dt,
/// with the spectrum transferred to the slice of the query point.
Quat synthesize_at(const ComponentSpectra& comps, const Quat& q);

/// Band-limited function synthesized from its compact spectrum.  The
/// evaluator is slice regular by construction (a finite exponential sum)
/// and obeys |f(q)| <= sqrt(A/pi) ||S||_2 e^{A |im q|}.
struct PWFunction {
  CompactSpectrum spectrum;
  SliceEvaluator evaluator;
  double spectrum_l2;  // discrete L2 norm of the spectrum

  Quat operator()(const Quat& q) const { return evaluator(q); }
  double growth_bound(const Quat& q) const;
};

/// Rejects quadrature grids coarser than min_nodes_per_band nodes per unit
/// bandwidth (default 8).
PWFunction synthesize_compact(const CompactSpectrum& S, double min_nodes_per_band = 8.0);

struct GrowthReport {
  double max_ratio = 0;            // max |f(q)| / bound(q)
  bool pass = false;               // max_ratio <= 1 + slack
  std::vector<double> ratios;
};

GrowthReport growth_check(const PWFunction& f, std::span<const Quat> points, double slack = 1e-6);

/// True iff the spectrum of F is contained in [-A, A] up to one frequency
/// bin, at threshold tol * max|spectrum|; checked with two independent
/// kernel units.
bool pw_membership(const LineSamples& F, double band, double tol);

/// Reproducing integral of the Paley-Wiener space,
///   f(q) = (A/pi) integral sinc((A/pi)(q - t)) f(t) dt,
/// evaluated by trapezoid quadrature over the sampled line.
Quat reproduce(const LineSamples& f_samples, double band, const Quat& q);

}  // namespace qpw
