#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qpw/quaternion.hpp"

// Deterministic probe sets for property checks: a golden-angle spiral on
// the unit sphere of imaginary quaternions, Halton points in a slice box,
// and seeded random quaternions for stress tests.

namespace qpw {

/// n nearly uniform imaginary units on the sphere (golden-angle spiral).
inline std::vector<Unit> fibonacci_units(std::size_t n) {
  std::vector<Unit> units;
  units.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double zc = 1.0 - 2.0 * (double(k) + 0.5) / double(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double phi = golden * double(k);
    units.push_back(Unit::from_vector(r * std::cos(phi), r * std::sin(phi), zc));
  }
  return units;
}

inline double halton(std::uint32_t index, std::uint32_t base) {
  double f = 1.0, r = 0.0;
  for (std::uint32_t i = index + 1; i > 0; i /= base) {
    f /= double(base);
    r += f * double(i % base);
  }
  return r;
}

struct BoxPoint {
  double x, y;
};

/// Low-discrepancy (x, y) probes over |x| <= half_x, 0 <= y <= half_y.
inline std::vector<BoxPoint> box_probes(std::size_t n, double half_x = 3.0, double half_y = 3.0) {
  std::vector<BoxPoint> pts;
  pts.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k)
    pts.push_back({(2.0 * halton(k, 2) - 1.0) * half_x, halton(k, 3) * half_y});
  return pts;
}

/// Slice probes q = x + I y combining the box with the unit spiral.
/// With positive_re the real part is mapped into (re_floor, half_x].
inline std::vector<Quat> slice_probes(std::size_t n, double half_x = 3.0, double half_y = 3.0,
                                      bool positive_re = false, double re_floor = 0.25) {
  const auto units = fibonacci_units(std::max<std::size_t>(8, std::min<std::size_t>(n, 64)));
  const auto box = box_probes(n, half_x, half_y);
  std::vector<Quat> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double x = box[k].x;
    if (positive_re) x = re_floor + (std::abs(x) / half_x) * (half_x - re_floor);
    pts.push_back(slice_point(x, box[k].y, units[k % units.size()]));
  }
  return pts;
}

/// Seeded uniform quaternions with components in [-c, c].
inline std::vector<Quat> random_quaternions(std::size_t n, double c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-c, c);
  std::vector<Quat> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = u(rng), b = u(rng), cc = u(rng), d = u(rng);
    out.push_back({a, b, cc, d});
  }
  return out;
}

inline std::vector<Unit> random_units(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Unit> out;
  out.reserve(n);
  while (out.size() < n) {
    const double a = g(rng), b = g(rng), c = g(rng);
    if (a * a + b * b + c * c < 1e-12) continue;
    out.push_back(Unit::from_vector(a, b, c));
  }
  return out;
}

}  // namespace qpw
