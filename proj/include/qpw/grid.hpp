#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qpw/errors.hpp"
#include "qpw/quaternion.hpp"

namespace qpw {

/// Quaternion-valued samples: one row per node, columns (w, x, y, z).
using QuatArray = Eigen::Array<double, Eigen::Dynamic, 4>;

inline Quat get(const QuatArray& a, Eigen::Index i) {
  return {a(i, 0), a(i, 1), a(i, 2), a(i, 3)};
}

inline void set(QuatArray& a, Eigen::Index i, const Quat& q) {
  a(i, 0) = q.w;
  a(i, 1) = q.x;
  a(i, 2) = q.y;
  a(i, 3) = q.z;
}

inline Eigen::ArrayXd norms(const QuatArray& a) {
  return a.square().rowwise().sum().sqrt();
}

/// Closed uniform grid with n nodes on [min, max].  Nodes come from the
/// symmetric lerp ((n-1-i) min + i max)/(n-1), so for min = -max the grid
/// mirrors bit-exactly: node(n-1-i) == -node(i).
struct UniformGrid {
  double min{0};
  double max{0};
  Eigen::Index n{0};

  double step() const { return (max - min) / double(n - 1); }

  double node(Eigen::Index i) const {
    return (double(n - 1 - i) * min + double(i) * max) / double(n - 1);
  }

  Eigen::ArrayXd nodes() const {
    Eigen::ArrayXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = node(i);
    return out;
  }

  /// Trapezoid weight of node i (half weight at the ends).
  double weight(Eigen::Index i) const { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

  bool symmetric(double tol = 1e-12) const {
    return std::abs(min + max) <= tol * std::max(1.0, std::abs(max));
  }

  Eigen::Index mirror(Eigen::Index i) const { return n - 1 - i; }

  bool operator==(const UniformGrid&) const = default;
};

inline void require_grid(const UniformGrid& g) {
  if (g.n < 2 || !(g.max > g.min)) throw DomainError("grid needs n >= 2 and max > min");
}

/// Builds the symmetric grid [-extent, extent] with the node count implied
/// by the requested step (rounded so the step divides the extent).
inline UniformGrid symmetric_grid(double extent, double step_hint) {
  if (!(extent > 0) || !(step_hint > 0)) throw DomainError("grid extent and step must be positive");
  const auto half = Eigen::Index(std::llround(std::ceil(extent / step_hint - 1e-12)));
  return {-extent, extent, 2 * std::max<Eigen::Index>(half, 1) + 1};
}

/// Quaternion-valued samples of a function on a real-line grid.
struct LineSamples {
  UniformGrid grid;
  QuatArray values;
};

inline LineSamples zeros_like(const UniformGrid& g) {
  require_grid(g);
  return {g, QuatArray::Zero(g.n, 4)};
}

template <typename Fn>
LineSamples sample_line(const UniformGrid& g, Fn&& f) {
  LineSamples out = zeros_like(g);
  for (Eigen::Index i = 0; i < g.n; ++i) set(out.values, i, f(g.node(i)));
  return out;
}

/// Trapezoid value of the squared-norm integral over the grid.
inline double squared_l2(const UniformGrid& g, const QuatArray& values) {
  double acc = 0;
  for (Eigen::Index i = 0; i < g.n; ++i) acc += g.weight(i) * get(values, i).squared_norm();
  return acc * g.step();
}

inline double max_norm(const QuatArray& values) {
  return values.rows() == 0 ? 0.0 : norms(values).maxCoeff();
}

/// One-dimensional left-sided quaternion Fourier data on a frequency grid,
/// tagged with the kernel unit that defined the transform.
struct Spectrum {
  UniformGrid grid;
  QuatArray values;
  Unit unit;
};

/// Spectrum supported on [-band, band]; the canonical representation of a
/// band-limited (Paley-Wiener) function.
struct CompactSpectrum {
  double band{0};
  UniformGrid grid;  // covers exactly [-band, band]
  QuatArray values;
  Unit unit;

  Spectrum as_spectrum() const { return {grid, values, unit}; }
};

inline void require_compact(const CompactSpectrum& s) {
  require_grid(s.grid);
  if (!(s.band > 0)) throw DomainError("compact spectrum needs band > 0");
  const double tol = 1e-12 * std::max(1.0, s.band);
  if (std::abs(s.grid.min + s.band) > tol || std::abs(s.grid.max - s.band) > tol)
    throw DomainError("compact spectrum grid must cover exactly [-band, band]");
}

/// Spectrum supported on the half line [-cutoff, 0]; the canonical
/// representation of a Hardy-space function on the right half-space.
struct HalfLineSpectrum {
  double cutoff{0};
  UniformGrid grid;  // covers [-cutoff, 0]
  QuatArray values;
  Unit unit;
};

/// Structural checks always run; the decay check guards claims that the
/// data represents a spectrum on all of (-inf, 0].  Synthesis skips it
/// (its own e^{x t} guard bounds the truncated tail per evaluation), so
/// exactly-supported data like a constant on [-T, 0] stays usable.
inline void require_halfline(const HalfLineSpectrum& s, bool require_decay = true) {
  require_grid(s.grid);
  if (!(s.cutoff > 0)) throw DomainError("half-line spectrum needs cutoff > 0");
  const double tol = 1e-12 * std::max(1.0, s.cutoff);
  if (std::abs(s.grid.min + s.cutoff) > tol || std::abs(s.grid.max) > tol)
    throw DomainError("half-line spectrum grid must cover exactly [-cutoff, 0]");
  if (!require_decay) return;
  const double peak = max_norm(s.values);
  if (peak > 0 && get(s.values, 0).norm() > 1e-8 * peak)
    throw AdmissibilityError("half-line spectrum does not decay at its cutoff");
}

/// Non-tangential boundary values y -> f(I y) along the slice of `unit`.
struct BoundaryTrace {
  LineSamples samples;
  Unit unit;
};

/// Samples f(pi k / band) for |k| <= half_width, ordered k = -K .. K.
struct SampleSet {
  double band{0};
  int half_width{0};
  QuatArray values;

  double node(int k) const { return std::numbers::pi * double(k) / band; }
  Quat sample(int k) const { return get(values, k + half_width); }
};

inline void require_samples(const SampleSet& s) {
  if (!(s.band > 0) || s.half_width < 0) throw DomainError("sample set needs band > 0, K >= 0");
  if (s.values.rows() != 2 * s.half_width + 1)
    throw DomainError("sample set must hold 2K + 1 rows");
}

}  // namespace qpw
