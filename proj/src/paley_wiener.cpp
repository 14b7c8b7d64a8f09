#include "qpw/paley_wiener.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qpw/entire.hpp"

namespace qpw {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014326779;  // (2 pi)^{-1/2}

}  // namespace

QuatArray ComponentSpectra::assemble(const Unit& unit) const {
  const std::array<Quat, 4> basis = {Quat::real(1), frame.I.quat(), frame.J.quat(),
                                     frame.K.quat()};
  QuatArray out = QuatArray::Zero(grid.n, 4);
  for (Eigen::Index m = 0; m < grid.n; ++m) {
    Quat acc{};
    for (int c = 0; c < 4; ++c)
      acc += Quat::real(even(m, c)) * basis[c] + unit.quat() * (odd(m, c) * basis[c]);
    set(out, m, acc);
  }
  return out;
}

ComponentSpectra resolve_components(const CompactSpectrum& S) {
  require_compact(S);
  if (!S.grid.symmetric()) throw DomainError("component resolution needs a symmetric grid");
  const Frame<double> frame = orthogonal_frame(S.unit);
  const std::array<Quat, 4> basis = {Quat::real(1), frame.I.quat(), frame.J.quat(),
                                     frame.K.quat()};

  // Coordinates of S(t) along {1, I, J, K}.  Writing each component's
  // slice-complex spectrum as a_m + I b_m with a even and b odd in t, the
  // coordinates are c0 = a0 - b1, c1 = b0 + a1, c2 = a2 - b3, c3 = b2 + a3,
  // so the even/odd parts of the coordinates recover every a_m and b_m.
  Eigen::Array<double, Eigen::Dynamic, 4> coord(S.grid.n, 4);
  for (Eigen::Index m = 0; m < S.grid.n; ++m)
    for (int c = 0; c < 4; ++c) coord(m, c) = dot(get(S.values, m), basis[c]);

  ComponentSpectra comps;
  comps.grid = S.grid;
  comps.frame = frame;
  comps.even.resize(S.grid.n, 4);
  comps.odd.resize(S.grid.n, 4);
  for (Eigen::Index m = 0; m < S.grid.n; ++m) {
    const Eigen::Index r = S.grid.mirror(m);
    const auto ev = [&](int c) { return 0.5 * (coord(m, c) + coord(r, c)); };
    const auto od = [&](int c) { return 0.5 * (coord(m, c) - coord(r, c)); };
    comps.even(m, 0) = ev(0);
    comps.odd(m, 0) = od(1);
    comps.even(m, 1) = ev(1);
    comps.odd(m, 1) = -od(0);
    comps.even(m, 2) = ev(2);
    comps.odd(m, 2) = od(3);
    comps.even(m, 3) = ev(3);
    comps.odd(m, 3) = -od(2);
  }
  return comps;
}

Quat synthesize_at(const ComponentSpectra& comps, const Quat& q) {
  const Slice p = split(q);
  const double x = p.re, y = p.im;

  // e^{I (x + I y) t} = e^{-y t} (cos x t + I sin x t); integrate it against
  // each component's slice-complex spectrum a_m + I b_m.
  std::array<double, 4> re_acc{}, im_acc{};
  for (Eigen::Index m = 0; m < comps.grid.n; ++m) {
    const double t = comps.grid.node(m);
    const double damp = comps.grid.weight(m) * std::exp(-y * t);
    const double kc = damp * std::cos(x * t);
    const double ks = damp * std::sin(x * t);
    for (int c = 0; c < 4; ++c) {
      re_acc[c] += kc * comps.even(m, c) - ks * comps.odd(m, c);
      im_acc[c] += kc * comps.odd(m, c) + ks * comps.even(m, c);
    }
  }
  const double scale = inv_sqrt_2pi * comps.grid.step();
  const std::array<Quat, 4> basis = {Quat::real(1), comps.frame.I.quat(), comps.frame.J.quat(),
                                     comps.frame.K.quat()};
  Quat even_part{}, odd_part{};
  for (int c = 0; c < 4; ++c) {
    even_part += re_acc[c] * basis[c];
    odd_part += im_acc[c] * basis[c];
  }
  return scale * (even_part + p.unit.quat() * odd_part);
}

double PWFunction::growth_bound(const Quat& q) const {
  const double band = spectrum.band;
  return std::sqrt(band / std::numbers::pi) * spectrum_l2 * std::exp(band * split(q).im);
}

PWFunction synthesize_compact(const CompactSpectrum& S, double min_nodes_per_band) {
  require_compact(S);
  const double density = double(S.grid.n - 1) / (2.0 * S.band);
  if (density < min_nodes_per_band)
    throw AdmissibilityError("spectrum grid too coarse for synthesis quadrature");
  auto comps = std::make_shared<ComponentSpectra>(resolve_components(S));
  PWFunction f{S,
               {.eval = [comps](const Quat& q) { return synthesize_at(*comps, q); },
                .domain = Domain::WholeSpace},
               std::sqrt(squared_l2(S.grid, S.values))};
  return f;
}

GrowthReport growth_check(const PWFunction& f, std::span<const Quat> points, double slack) {
  GrowthReport report;
  report.ratios.reserve(points.size());
  for (const Quat& q : points) {
    const double bound = f.growth_bound(q);
    const double value = f(q).norm();
    const double ratio = bound > 0 ? value / bound : (value > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    report.ratios.push_back(ratio);
    report.max_ratio = std::max(report.max_ratio, ratio);
  }
  report.pass = report.max_ratio <= 1.0 + slack;
  return report;
}

bool pw_membership(const LineSamples& F, double band, double tol) {
  require_grid(F.grid);
  if (!(band > 0) || !(tol > 0)) throw DomainError("pw_membership needs band, tol > 0");
  if (!F.grid.symmetric()) throw DomainError("pw_membership needs a symmetric line grid");

  const UniformGrid lattice =
      frequency_lattice(F.grid.max, std::max(2.0 * band, band + 20.0 * std::numbers::pi / F.grid.max));
  const double margin = lattice.step() * (1.0 + 1e-9);
  for (const Unit& u : {Unit::i(), Unit::j()}) {
    const Spectrum S = qft_left(F, u, lattice);
    const double floor = tol * max_norm(S.values);
    if (floor == 0) continue;  // zero signal is band limited for every band
    if (support_radius(S, floor) > band + margin) return false;
  }
  return true;
}

Quat reproduce(const LineSamples& f_samples, double band, const Quat& q) {
  require_grid(f_samples.grid);
  if (!(band > 0)) throw DomainError("reproduce needs band > 0");
  const double lobe = std::numbers::pi / band;
  if (std::abs(q.w) > f_samples.grid.max - 10.0 * lobe)
    throw AdmissibilityError("line grid extent too small for the query point");

  const Slice p = split(q);
  const double scale_re = (band / std::numbers::pi);
  Quat acc{};
  for (Eigen::Index n = 0; n < f_samples.grid.n; ++n) {
    const std::complex<double> z(scale_re * (p.re - f_samples.grid.node(n)), scale_re * p.im);
    const std::complex<double> s = detail::sinc_complex(z);
    const Quat kernel = Quat::real(s.real()) + p.unit.quat() * s.imag();
    acc += f_samples.grid.weight(n) * (kernel * get(f_samples.values, n));
  }
  return (band / std::numbers::pi) * f_samples.grid.step() * acc;
}

}  // namespace qpw
