#include "qpw/hardy.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>

#include "qpw/entire.hpp"

namespace qpw {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014326779;
constexpr double two_pi = 6.2831853071795864769;

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; mirror the rest).
constexpr std::array<double, 8> gl_x = {
    0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
    0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
    0.9445750230732325761, 0.9894009349916499326};
constexpr std::array<double, 8> gl_w = {
    0.1894506104550684963, 0.1826034150449235889, 0.1691565193950025382,
    0.1495959888165767320, 0.1246289712555338720, 0.0951585116824927848,
    0.0622535239386478929, 0.0271524594117540949};

// Composite Gauss-Legendre integral of fn over [0, T]; the panel width
// resolves the oscillation frequency omega.
template <typename Fn>
Quat gl_halfline(double T, double omega, Fn&& fn) {
  const double period = two_pi / std::max(omega, 1e-3);
  const double width = std::min(period / 3.0, T / 4.0);
  const auto panels = std::max<Eigen::Index>(4, Eigen::Index(std::ceil(T / width)));
  const double h = T / double(panels);
  Quat acc{};
  for (Eigen::Index p = 0; p < panels; ++p) {
    const double mid = (double(p) + 0.5) * h;
    const double half = 0.5 * h;
    for (int k = 0; k < 8; ++k) {
      acc += (gl_w[k] * half) * fn(mid + half * gl_x[k]);
      acc += (gl_w[k] * half) * fn(mid - half * gl_x[k]);
    }
  }
  return acc;
}

void require_interior(double x, const char* what) {
  if (!(x > 0)) throw DomainError(std::string(what) + " needs re > 0");
}

}  // namespace

Quat cauchy_kernel(double x, double y, const Unit& I) {
  require_interior(x, "cauchy_kernel");
  const double d = two_pi * (x * x + y * y);
  return Quat::real(x / d) - I.quat() * (y / d);
}

double poisson_kernel(double x, double y) {
  require_interior(x, "poisson_kernel");
  return x / (std::numbers::pi * (x * x + y * y));
}

Quat synthesize_hardy(const HalfLineSpectrum& S, const Quat& q) {
  require_halfline(S, /*require_decay=*/false);
  const Slice p = split(q);
  require_interior(p.re, "half-line synthesis");
  const double peak = max_norm(S.values);
  if (std::exp(-p.re * S.cutoff) * peak > 1e-12)
    throw AdmissibilityError("half-line truncation inadmissible this close to the boundary");

  // e^{(x + I y) t} = e^{x t} (cos y t + I sin y t), applied left of S(t).
  Quat acc{};
  for (Eigen::Index m = 0; m < S.grid.n; ++m) {
    const double t = S.grid.node(m);
    const double damp = S.grid.weight(m) * std::exp(p.re * t);
    const Quat kernel = Quat::real(damp * std::cos(p.im * t)) +
                        p.unit.quat() * (damp * std::sin(p.im * t));
    acc += kernel * get(S.values, m);
  }
  return inv_sqrt_2pi * S.grid.step() * acc;
}

BoundaryTrace hardy_boundary_trace(const HalfLineSpectrum& S, const Unit& unit,
                                   const UniformGrid& y_grid) {
  require_halfline(S);
  return {iqft_left({S.grid, S.values, unit}, y_grid), unit};
}

Quat poisson_extend(const BoundaryTrace& F, double x, double y) {
  require_interior(x, "poisson_extend");
  const UniformGrid& g = F.samples.grid;
  Quat acc{};
  for (Eigen::Index n = 0; n < g.n; ++n)
    acc += (g.weight(n) * poisson_kernel(x, y - g.node(n))) * get(F.samples.values, n);
  return g.step() * acc;
}

Quat cauchy_extend(const BoundaryTrace& F, double x, double y) {
  require_interior(x, "cauchy_extend");
  const UniformGrid& g = F.samples.grid;
  Quat acc{};
  for (Eigen::Index n = 0; n < g.n; ++n)
    acc += g.weight(n) * (cauchy_kernel(x, y - g.node(n), F.unit) * get(F.samples.values, n));
  return g.step() * acc;
}

SliceEvaluator hardy_extension(const BoundaryTrace& F) {
  require_grid(F.samples.grid);
  if (!F.samples.grid.symmetric())
    throw DomainError("hardy_extension needs a trace grid symmetric about 0");
  // f(x + I' y) = integral P(x, y - t) { [F(-t) + F(t)]/2 + (I' I/2)[F(-t) - F(t)] } dt,
  // the slice regular extension of the one-slice Poisson integral.
  auto trace = std::make_shared<BoundaryTrace>(F);
  return {.eval =
              [trace](const Quat& q) {
                const Slice p = split(q);
                const Quat tilt = p.unit.quat() * trace->unit.quat();
                const UniformGrid& g = trace->samples.grid;
                Quat acc{};
                for (Eigen::Index n = 0; n < g.n; ++n) {
                  const Quat at = get(trace->samples.values, n);
                  const Quat mir = get(trace->samples.values, g.mirror(n));
                  const Quat sym = 0.5 * (mir + at) + 0.5 * (tilt * (mir - at));
                  acc += (g.weight(n) * poisson_kernel(p.re, p.im - g.node(n))) * sym;
                }
                return g.step() * acc;
              },
          .domain = Domain::RightHalfSpace};
}

bool hardy_membership(const BoundaryTrace& F, int p, double tol) {
  if (p != 1 && p != 2) throw DomainError("hardy_membership supports p in {1, 2}");
  if (!(tol > 0)) throw DomainError("hardy_membership needs tol > 0");
  require_grid(F.samples.grid);
  const double extent = std::max(std::abs(F.samples.grid.min), F.samples.grid.max);
  const double nyquist = std::numbers::pi / F.samples.grid.step();
  const UniformGrid lattice = frequency_lattice(extent, std::min(nyquist / 2.0, 40.0));
  return support_halfline_check(qft_left(F.samples, F.unit, lattice), tol);
}

Quat hardy_extend_symmetric(const LineSamples& A_even, const LineSamples& B_odd, const Quat& q,
                            double support_tol, double max_freq) {
  require_grid(A_even.grid);
  if (!(A_even.grid == B_odd.grid)) throw DomainError("profiles must share one grid");
  if (!A_even.grid.symmetric()) throw DomainError("profiles need a grid symmetric about 0");

  const UniformGrid& g = A_even.grid;
  const double scale = std::max({max_norm(A_even.values), max_norm(B_odd.values), 1e-30});
  for (Eigen::Index n = 0; n < g.n; ++n) {
    const Quat a = get(A_even.values, n), am = get(A_even.values, g.mirror(n));
    const Quat b = get(B_odd.values, n), bm = get(B_odd.values, g.mirror(n));
    if (!a.is_real(1e-10 * scale) || !b.is_real(1e-10 * scale))
      throw DomainError("profiles must be real-valued");
    if ((a - am).norm() > 1e-10 * scale || (b + bm).norm() > 1e-10 * scale)
      throw InvariantError("profiles must be even (A) and odd (B)");
  }

  // Combined one-slice datum A + i B; its spectrum is real when the profile
  // symmetries hold, and must live on the half line for a Hardy extension.
  LineSamples combined = zeros_like(g);
  for (Eigen::Index n = 0; n < g.n; ++n)
    set(combined.values, n, {get(A_even.values, n).w, get(B_odd.values, n).w, 0, 0});
  const double nyquist = std::numbers::pi / g.step();
  const UniformGrid lattice = frequency_lattice(g.max, std::min(nyquist / 2.0, max_freq));
  const Spectrum S = qft_left(combined, Unit::i(), lattice);
  const double floor = support_tol * std::max(max_norm(S.values), 1e-30);
  if (!support_halfline_check(S, floor))
    throw InvariantError("combined profile spectrum is not supported on the half line");

  // Restrict to t <= 0 and synthesize with the real part of the spectrum.
  Eigen::Index zero_idx = 0;
  for (Eigen::Index m = 0; m < S.grid.n; ++m)
    if (std::abs(S.grid.node(m)) < 0.5 * S.grid.step()) zero_idx = m;
  const Eigen::Index n_half = zero_idx + 1;
  HalfLineSpectrum half;
  half.cutoff = -S.grid.node(0);
  half.grid = {S.grid.node(0), 0.0, n_half};
  half.values = QuatArray::Zero(n_half, 4);
  for (Eigen::Index m = 0; m < n_half; ++m) {
    const Quat v = get(S.values, m);
    if (std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z) > floor + 1e-12 * scale)
      throw InvariantError("combined profile spectrum is not real-valued");
    set(half.values, m, Quat::real(v.w));
  }
  half.unit = Unit::i();
  return synthesize_hardy(half, q);
}

Quat rk_halfspace(const Quat& q1, const Quat& q2) {
  const Slice p1 = split(q1), p2 = split(q2);
  const double decay = p1.re + p2.re;
  if (!(decay > 0)) throw DomainError("rk_halfspace needs re(q1) + re(q2) > 0");
  const double T = 42.0 / decay;
  const double omega = p1.im + p2.im;
  const Quat c2 = conj(q2);
  return gl_halfline(T, omega, [&](double t) { return exp_q(-t * q1) * exp_q(-t * c2); });
}

Quat rk_reproduce(const BoundaryTrace& F, const Quat& q) {
  const Slice p = split(q);
  require_interior(p.re, "rk_reproduce");
  const UniformGrid& g = F.samples.grid;
  const double T = 42.0 / p.re;
  const double omega = p.im + std::max(std::abs(g.min), std::abs(g.max));
  const Quat I = F.unit.quat();

  // k(q, I y) F(y) integrated in t first: e^{-q t} stays left of the
  // boundary sum, whose oscillator advances by a rotation recurrence.
  const Quat acc = gl_halfline(T, omega, [&](double t) {
    const double cd = std::cos(g.step() * t), sd = std::sin(g.step() * t);
    double c = std::cos(g.node(0) * t), s = std::sin(g.node(0) * t);
    Quat inner{};
    for (Eigen::Index n = 0; n < g.n; ++n) {
      const Quat v = get(F.samples.values, n);
      inner += g.weight(n) * (c * v + s * (I * v));
      const double cn = c * cd - s * sd;
      s = s * cd + c * sd;
      c = cn;
    }
    return exp_q(-t * q) * inner;
  });
  return (g.step() / two_pi) * acc;
}

}  // namespace qpw
