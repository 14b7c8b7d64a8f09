#include "qpw/qft.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qpw {

namespace {

// Core quadrature shared by the forward and inverse transforms:
//   out(t) = scale * sum_n w_n [cos(x_n t) + sign * U sin(x_n t)] v_n dx.
// The oscillator advances by a rotation recurrence, refreshed every block
// so phase drift stays near machine level.  cos is even and sin is odd in
// the angle, and the recurrence preserves those parities bit-exactly, so
// out(-t) is the slice conjugate of out(t) for real-valued input data.
QuatArray kernel_transform(const UniformGrid& src, const QuatArray& values, const Unit& unit,
                           double sign, const UniformGrid& dst) {
  constexpr Eigen::Index refresh = 256;
  const double scale = src.step() / std::sqrt(2.0 * std::numbers::pi);

  QuatArray sv(values.rows(), 4);  // sign * U * v, precomputed per node
  for (Eigen::Index n = 0; n < values.rows(); ++n)
    set(sv, n, sign * (unit.quat() * get(values, n)));

  QuatArray out(dst.n, 4);
  for (Eigen::Index m = 0; m < dst.n; ++m) {
    const double t = dst.node(m);
    const double cd = std::cos(src.step() * t);
    const double sd = std::sin(src.step() * t);
    double c = 1, s = 0;
    Quat acc{};
    for (Eigen::Index n = 0; n < src.n; ++n) {
      if (n % refresh == 0) {
        const double theta = src.node(n) * t;
        c = std::cos(theta);
        s = std::sin(theta);
      }
      const double w = src.weight(n);
      acc.w += w * (c * values(n, 0) + s * sv(n, 0));
      acc.x += w * (c * values(n, 1) + s * sv(n, 1));
      acc.y += w * (c * values(n, 2) + s * sv(n, 2));
      acc.z += w * (c * values(n, 3) + s * sv(n, 3));
      const double cn = c * cd - s * sd;
      s = s * cd + c * sd;
      c = cn;
    }
    set(out, m, scale * acc);
  }
  return out;
}

}  // namespace

UniformGrid frequency_lattice(double line_extent, double max_freq) {
  if (!(line_extent > 0) || !(max_freq > 0))
    throw DomainError("frequency lattice needs positive extent and max frequency");
  const double step = std::numbers::pi / line_extent;
  const auto half = Eigen::Index(std::ceil(max_freq / step - 1e-9));
  const double top = double(std::max<Eigen::Index>(half, 1)) * step;
  return {-top, top, 2 * std::max<Eigen::Index>(half, 1) + 1};
}

double lattice_line_extent(double spectrum_step, int multiple) {
  if (!(spectrum_step > 0) || multiple < 1)
    throw DomainError("lattice extent needs a positive step and multiple");
  return double(multiple) * std::numbers::pi / spectrum_step;
}

Spectrum qft_left(const LineSamples& F, const Unit& I, const UniformGrid& freq_grid) {
  require_grid(F.grid);
  require_grid(freq_grid);
  return {freq_grid, kernel_transform(F.grid, F.values, I, -1.0, freq_grid), I};
}

LineSamples iqft_left(const Spectrum& S, const UniformGrid& line_grid) {
  require_grid(S.grid);
  require_grid(line_grid);
  return {line_grid, kernel_transform(S.grid, S.values, S.unit, +1.0, line_grid)};
}

Spectrum transfer_spectrum(const Spectrum& S, const Unit& J) {
  require_grid(S.grid);
  if (!S.grid.symmetric()) throw DomainError("transfer_spectrum needs a grid symmetric about 0");
  const Quat ji = J.quat() * S.unit.quat();
  QuatArray out(S.grid.n, 4);
  for (Eigen::Index m = 0; m < S.grid.n; ++m) {
    const Quat at = get(S.values, m);
    const Quat mir = get(S.values, S.grid.mirror(m));
    set(out, m, 0.5 * (at + mir) + 0.5 * (ji * (mir - at)));
  }
  return {S.grid, out, J};
}

EssentialSpectrum essential_ft_probe(const TraceProvider& traces, std::span<const Unit> units,
                                     const UniformGrid& freq_grid) {
  if (units.empty()) throw DomainError("essential transform needs at least one probe unit");
  EssentialSpectrum result{qft_left(traces(units[0]), units[0], freq_grid), 0.0};
  for (std::size_t u = 1; u < units.size(); ++u) {
    const Spectrum other = qft_left(traces(units[u]), units[u], freq_grid);
    const double dev = max_norm(other.values - result.spectrum.values);
    result.cross_unit_deviation = std::max(result.cross_unit_deviation, dev);
  }
  return result;
}

Spectrum essential_ft(const TraceProvider& traces, std::span<const Unit> units, double tol,
                      const UniformGrid& freq_grid) {
  EssentialSpectrum probe = essential_ft_probe(traces, units, freq_grid);
  if (probe.cross_unit_deviation > tol)
    throw InvariantError("boundary data is not Hardy-class: spectra disagree across units");
  return std::move(probe.spectrum);
}

double support_radius(const Spectrum& S, double tol) {
  if (!(tol > 0)) throw DomainError("support_radius needs tol > 0");
  const Eigen::ArrayXd ns = norms(S.values);
  if (ns(0) > tol || ns(S.grid.n - 1) > tol) return std::numeric_limits<double>::infinity();
  double radius = 0;
  for (Eigen::Index m = 0; m < S.grid.n; ++m)
    if (ns(m) > tol) radius = std::max(radius, std::abs(S.grid.node(m)));
  return radius;
}

bool support_halfline_check(const Spectrum& S, double tol) {
  if (!(tol > 0)) throw DomainError("support_halfline_check needs tol > 0");
  const Eigen::ArrayXd ns = norms(S.values);
  const double half_bin = 0.5 * S.grid.step();
  double worst = 0;
  for (Eigen::Index m = 0; m < S.grid.n; ++m)
    if (S.grid.node(m) > half_bin) worst = std::max(worst, ns(m));
  return worst <= tol;
}

std::pair<double, double> plancherel_norm(const LineSamples& F, const Spectrum& S) {
  return {squared_l2(F.grid, F.values), squared_l2(S.grid, S.values)};
}

}  // namespace qpw
