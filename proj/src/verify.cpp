#include "qpw/verify.hpp"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qpw/entire.hpp"
#include "qpw/hardy.hpp"
#include "qpw/io.hpp"
#include "qpw/paley_wiener.hpp"
#include "qpw/probes.hpp"
#include "qpw/qft.hpp"
#include "qpw/sampling.hpp"
#include "qpw/slice_function.hpp"

namespace qpw {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
constexpr double pi = std::numbers::pi;

struct Collector {
  std::vector<CheckResult> checks;

  void add(std::string name, double err, double tol) {
    checks.push_back({std::move(name), err, tol, err <= tol});
  }
};

// ---------------------------------------------------------------------------
// deterministic test-signal generators

// Band spectrum with a C^8-vanishing envelope at +-band; the smooth edges
// keep the synthesized function's tails decaying like x^{-9}, which the
// sampling and reproducing checks rely on.
CompactSpectrum make_compact(double band, Eigen::Index n, std::uint64_t seed, bool quaternion,
                             const Unit& unit) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CompactSpectrum S{band, {-band, band, n}, QuatArray::Zero(n, 4), unit};
  const int comps = quaternion ? 4 : 1;
  std::array<std::array<double, 5>, 4> cc{}, sc{};
  for (int c = 0; c < comps; ++c)
    for (int j = 0; j < 5; ++j) {
      cc[c][j] = u(rng);
      sc[c][j] = u(rng);
    }
  for (Eigen::Index m = 0; m < n; ++m) {
    const double w = S.grid.node(m) / band;
    const double env = std::pow(std::max(0.0, 1.0 - w * w), 8);
    for (int c = 0; c < comps; ++c) {
      double v = 0;
      for (int j = 0; j < 5; ++j) v += cc[c][j] * std::cos(j * pi * w) + sc[c][j] * std::sin(j * pi * w);
      S.values(m, c) = env * v;
    }
  }
  return S;
}

// Half-line spectrum vanishing to 4th order at both 0 and -cutoff, so the
// boundary trace decays like |y|^{-5}.
HalfLineSpectrum make_halfline(double cutoff, Eigen::Index n, std::uint64_t seed, bool realvalued,
                               const Unit& unit) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HalfLineSpectrum S{cutoff, {-cutoff, 0.0, n}, QuatArray::Zero(n, 4), unit};
  const int comps = realvalued ? 1 : 4;
  std::array<std::array<double, 4>, 4> cc{}, sc{};
  for (int c = 0; c < comps; ++c)
    for (int j = 0; j < 4; ++j) {
      cc[c][j] = u(rng);
      sc[c][j] = u(rng);
    }
  for (Eigen::Index m = 0; m < n; ++m) {
    const double w = -S.grid.node(m) / cutoff;  // in [0, 1]
    const double env = 256.0 * std::pow(std::max(0.0, w * (1.0 - w)), 4);
    for (int c = 0; c < comps; ++c) {
      double v = 0.25;
      for (int j = 0; j < 4; ++j) v += cc[c][j] * std::cos(j * pi * w) + sc[c][j] * std::sin(j * pi * w);
      S.values(m, c) = env * v;
    }
  }
  return S;
}

// Smooth real or quaternion signal supported in [-support, support].
LineSamples make_bump_line(double support, const UniformGrid& grid, std::uint64_t seed,
                           bool realvalued) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int comps = realvalued ? 1 : 4;
  std::array<std::array<double, 4>, 4> cc{}, sc{};
  for (int c = 0; c < comps; ++c)
    for (int j = 0; j < 4; ++j) {
      cc[c][j] = u(rng);
      sc[c][j] = u(rng);
    }
  LineSamples out = zeros_like(grid);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const double w = grid.node(i) / support;
    if (std::abs(w) >= 1.0) continue;
    const double env = std::pow(1.0 - w * w, 8);
    for (int c = 0; c < comps; ++c) {
      double v = 0.25;
      for (int j = 0; j < 4; ++j) v += cc[c][j] * std::cos(j * pi * w) + sc[c][j] * std::sin(j * pi * w);
      out.values(i, c) = env * v;
    }
  }
  return out;
}

UniformGrid line_grid_for(double extent, double step_hint) { return symmetric_grid(extent, step_hint); }

// ---------------------------------------------------------------------------
// suite 1: quaternion algebra

SuiteReport suite_algebra(const VerifyOptions& opts) {
  SuiteReport r{"algebra", opts.seed, {}};
  Collector c;

  const Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1}, one{1, 0, 0, 0};
  double table = 0;
  const auto cell = [&](const Quat& a, const Quat& b, const Quat& want) {
    table = std::max(table, (a * b - want).norm());
  };
  cell(i, j, k);
  cell(j, i, -k);
  cell(j, k, i);
  cell(k, j, -i);
  cell(k, i, j);
  cell(i, k, -j);
  cell(i, i, -one);
  cell(j, j, -one);
  cell(k, k, -one);
  c.add("multiplication-table", table, 0.0);

  const auto qs = random_quaternions(30000, 5.0, opts.seed);
  double norm_err = 0;
  for (std::size_t m = 0; m + 1 < 20000; m += 2) {
    const Quat &a = qs[m], &b = qs[m + 1];
    const double lhs = (a * b).norm(), rhs = a.norm() * b.norm();
    norm_err = std::max(norm_err, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
  }
  c.add("norm-multiplicativity", norm_err, 1e-12);

  double assoc = 0;
  for (std::size_t m = 0; m + 2 < 30000; m += 3) {
    const Quat &a = qs[m], &b = qs[m + 1], &cc = qs[m + 2];
    const Quat d = (a * b) * cc - a * (b * cc);
    const double scale = std::max(a.norm() * b.norm() * cc.norm(), 1e-300);
    assoc = std::max(assoc, std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)}) / scale);
  }
  c.add("associativity", assoc, 1e-12);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 2: entire functions against the truncated power series

SuiteReport suite_entire(const VerifyOptions& opts) {
  SuiteReport r{"entire", opts.seed, {}};
  Collector c;

  std::vector<double> exp_c(60, 0.0), sin_c(60, 0.0), sinc_c(60, 0.0);
  exp_c[0] = 1;
  for (int n = 1; n < 60; ++n) exp_c[n] = exp_c[n - 1] / double(n);
  // sin: a_{2k+1} = (-1)^k/(2k+1)!; sinc: a_{2k} = (-pi^2)^k/(2k+1)!
  {
    double a = 1;
    for (int kk = 0; 2 * kk + 1 < 60; ++kk) {
      if (kk > 0) a *= -1.0 / double((2 * kk) * (2 * kk + 1));
      sin_c[2 * kk + 1] = a;
    }
    a = 1;
    for (int kk = 0; 2 * kk < 60; ++kk) {
      if (kk > 0) a *= -pi * pi / double((2 * kk) * (2 * kk + 1));
      sinc_c[2 * kk] = a;
    }
  }

  const auto pts = random_quaternions(1000, 2.5, opts.seed + 1);  // |q| <= 5
  double e_exp = 0, e_sin = 0, e_sinc = 0;
  for (const Quat& q : pts) {
    e_exp = std::max(e_exp, (exp_q(q) - series_eval(exp_c, q, 60)).norm());
    e_sin = std::max(e_sin, (sin_q(q) - series_eval(sin_c, q, 60)).norm());
    e_sinc = std::max(e_sinc, (sinc_q(q) - series_eval(sinc_c, q, 60)).norm());
  }
  c.add("exp-vs-series", e_exp, 1e-11);
  c.add("sin-vs-series", e_sin, 1e-11);
  c.add("sinc-vs-series", e_sinc, 1e-11);

  // real-coefficient series commute with conjugation
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double e_conj = 0;
  for (int s = 0; s < 5; ++s) {
    std::vector<double> coeffs(40);
    double fact = 1;
    for (int n = 0; n < 40; ++n) {
      coeffs[n] = u(rng) * fact;
      fact /= double(n + 1);
    }
    for (std::size_t m = 0; m < 200; ++m) {
      const Quat q = pts[(s * 200 + m) % pts.size()];
      const Quat d = series_eval(coeffs, conj(q)) - conj(series_eval(coeffs, q));
      e_conj = std::max(e_conj, d.norm());
    }
  }
  c.add("series-conjugation-symmetry", e_conj, 1e-13);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 3: slice structure theory

SuiteReport suite_structure(const VerifyOptions& opts) {
  SuiteReport r{"structure", opts.seed, {}};
  Collector c;

  const SliceEvaluator f_exp{[](const Quat& q) { return exp_q(q); }, Domain::WholeSpace};
  const SliceEvaluator f_mixed{
      [](const Quat& q) { return exp_q(q) * Quat{1, 1, 0, 0} + (q * q) * Quat{0, 0, 1, 0}; },
      Domain::WholeSpace};

  // representation formula: independent of the probe slice, and consistent
  // with direct evaluation
  const auto units = random_units(24, opts.seed + 3);
  const auto box = box_probes(40, 3.0, 2.0);
  double rep = 0;
  for (std::size_t m = 0; m < box.size(); ++m) {
    const Unit J = units[m % units.size()];
    const Unit J2 = units[(m + 7) % units.size()];
    const Unit I = units[(m + 13) % units.size()];
    const double x = box[m].x, y = box[m].y;
    for (const auto& f : {f_exp, f_mixed}) {
      const Quat via_j = represent(f(slice_point(x, y, J)), f(slice_point(x, -y, J)), J, I);
      const Quat via_j2 = represent(f(slice_point(x, y, J2)), f(slice_point(x, -y, J2)), J2, I);
      const Quat direct = f(slice_point(x, y, I));
      rep = std::max({rep, (via_j - via_j2).norm(), (via_j - direct).norm()});
    }
  }
  c.add("representation-formula", rep, 1e-11);

  const Frame<double> frame = orthogonal_frame(Unit::from_vector(1, 1, 1));
  const ComponentQuad quad = decompose(f_mixed, frame);
  double rec = 0;
  for (const Quat& q : slice_probes(200, 3.0, 3.0))
    rec = std::max(rec, (quad.recombine(q) - f_mixed(q)).norm());
  c.add("decompose-recombine", rec, 1e-11);

  double comp = 0;
  for (const auto& h : quad.h) comp = std::max(comp, slice_preserving_defect(h));
  c.add("components-slice-preserving", comp, 1e-10);

  const SliceEvaluator ext =
      ext_l([](double x, double y) { return exp_q(slice_point(x, y, Unit::i())); }, Unit::i());
  double ee = 0;
  for (const Quat& q : slice_probes(100, 3.0, 3.0)) ee = std::max(ee, (ext(q) - exp_q(q)).norm());
  c.add("ext-of-exp-matches", ee, 1e-12);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 4: quaternion Fourier transform

SuiteReport suite_qft(const VerifyOptions& opts) {
  SuiteReport r{"qft", opts.seed, {}};
  Collector c;

  const UniformGrid line{-20.0, 20.0, 4001};
  const UniformGrid freq = frequency_lattice(20.0, 30.0);
  const auto pair_units = random_units(10, opts.seed + 4);
  const Unit mixed = Unit::from_vector(1, 2, 2);
  const Frame<double> mixed_frame = orthogonal_frame(mixed);

  double rt = 0, plan = 0, slice_val = 0, conj_sym = 0, transfer = 0;
  for (int s = 0; s < 10; ++s) {
    const LineSamples F = make_bump_line(5.0, line, opts.seed + 10 + s, true);
    const Spectrum S = qft_left(F, mixed, freq);

    const LineSamples back = iqft_left(S, line);
    rt = std::max(rt, max_norm(back.values - F.values));

    const auto [nf, ns] = plancherel_norm(F, S);
    plan = std::max(plan, std::abs(nf - ns) / std::max(nf, 1e-300));

    for (Eigen::Index m = 0; m < S.grid.n; ++m) {
      const Quat v = get(S.values, m);
      slice_val = std::max(slice_val, std::max(std::abs(dot(v, mixed_frame.J.quat())),
                                               std::abs(dot(v, mixed_frame.K.quat()))));
      const Quat mir = get(S.values, S.grid.mirror(m));
      conj_sym = std::max(conj_sym, (conj(v) - mir).norm());
    }

    for (int p = 0; p < 5; ++p) {
      const Unit I = pair_units[2 * p];
      const Unit J = pair_units[2 * p + 1];
      const Spectrum SI = qft_left(F, I, freq);
      const Spectrum direct = qft_left(F, J, freq);
      transfer = std::max(transfer, max_norm(transfer_spectrum(SI, J).values - direct.values));
    }
  }
  c.add("round-trip", rt, 1e-6);
  c.add("plancherel", plan, 1e-6);
  c.add("spectrum-slice-valued", slice_val, 1e-12);
  c.add("spectrum-conjugate-symmetry", conj_sym, 1e-12);
  c.add("transfer-vs-direct", transfer, 1e-10);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 5: compact-type Paley-Wiener loop

SuiteReport suite_pw_compact(const VerifyOptions& opts) {
  SuiteReport r{"pw-compact", opts.seed, {}};
  Collector c;

  const std::array<double, 3> bands{1.0, 2.0, pi};
  const auto units = fibonacci_units(8);

  double growth_excess = 0, support_excess = 0, support_bin = 0;
  bool member_all = true;
  double min_order = 10;

  for (int s = 0; s < 20; ++s) {
    const double A = bands[s % 3];
    const CompactSpectrum S = make_compact(A, 129, opts.seed + 20 + s, true, units[s % units.size()]);
    const PWFunction f = synthesize_compact(S);

    // growth bound with the explicit constant sqrt(A/pi) ||S||_2
    std::vector<Quat> pts = slice_probes(24, 3.0, 2.0);
    pts.push_back(slice_point(0.5, 3.0, units[(s + 3) % units.size()]));
    pts.push_back(slice_point(-2.0, 2.5, units[(s + 5) % units.size()]));
    const GrowthReport g = growth_check(f, pts);
    growth_excess = std::max(growth_excess, g.max_ratio - 1.0);

    // restriction -> transform -> support inside [-A, A] plus one bin
    const double extent = lattice_line_extent(S.grid.step());
    const UniformGrid lg = line_grid_for(extent, 0.05);
    const LineSamples rest = sample_line(lg, [&](double x) { return f(Quat::real(x)); });
    member_all = member_all && pw_membership(rest, A, 1e-6);

    const UniformGrid lattice = frequency_lattice(lg.max, std::max(2.0 * A, A + 20.0 * pi / lg.max));
    const Spectrum spec = qft_left(rest, Unit::i(), lattice);
    const double radius = support_radius(spec, 1e-6 * max_norm(spec.values));
    support_excess = std::max(support_excess, radius - A);
    support_bin = lattice.step();

    if (s < 3) {
      for (int t = 0; t < 3; ++t) {
        const Unit I = units[(s + t) % units.size()];
        const double order =
            cr_order(f.evaluator, I, Slice{0.4, 0.8, I}, 1e-2, 2.0);
        min_order = std::min(min_order, order);
      }
    }
  }
  c.add("growth-ratio-excess", growth_excess, 1e-6);
  c.add("support-radius-excess", support_excess, support_bin * (1.0 + 1e-9));
  c.add("membership", member_all ? 0.0 : 1.0, 0.0);
  c.add("cr-order-shortfall", std::max(0.0, 1.9 - min_order), 0.0);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 6: Hardy space on the right half-space

SuiteReport suite_hardy(const VerifyOptions& opts) {
  SuiteReport r{"hardy", opts.seed, {}};
  Collector c;

  const double cutoff = 60.0;
  const UniformGrid trace_grid =
      line_grid_for(lattice_line_extent(0.1, 3), 0.02);  // 3 pi / dt, step 0.02

  double three_way = 0;
  for (int s = 0; s < 5; ++s) {
    const HalfLineSpectrum S = make_halfline(cutoff, 601, opts.seed + 40 + s, true, Unit::i());
    const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), trace_grid);
    for (int m = 0; m < 20; ++m) {
      const double x = 0.5 + 2.5 * halton(m, 2);
      const double y = 4.0 * halton(m, 3) - 2.0;
      const Quat q = slice_point(x, y, Unit::i());
      const Quat a = synthesize_hardy(S, q);
      const Quat b = cauchy_extend(trace, x, y);
      const Quat p = poisson_extend(trace, x, y);
      three_way = std::max({three_way, (a - b).norm(), (a - p).norm(), (b - p).norm()});
    }
  }
  c.add("three-way-identity", three_way, 1e-5);

  std::mt19937_64 rng(opts.seed + 41);
  std::uniform_real_distribution<double> ux(1e-3, 5.0), uy(-5.0, 5.0);
  double kern = 0;
  for (int m = 0; m < 100; ++m) {
    const double x = ux(rng), y = uy(rng);
    const Quat K = cauchy_kernel(x, y, Unit::j());
    const double via_ratio = K.squared_norm() / cauchy_kernel(2 * x, 0, Unit::j()).w;
    kern = std::max(kern, std::abs(via_ratio - poisson_kernel(x, y)));
  }
  c.add("poisson-kernel-identity", kern, 1e-12);

  const HalfLineSpectrum S0 = make_halfline(cutoff, 601, opts.seed + 46, true, Unit::i());
  const std::array<Unit, 3> probes{Unit::i(), Unit::j(), Unit::from_vector(1, 1, 0)};
  const UniformGrid ess_lattice = frequency_lattice(trace_grid.max, 30.0);
  const EssentialSpectrum ess = essential_ft_probe(
      [&](const Unit& u) { return hardy_boundary_trace(S0, u, trace_grid).samples; }, probes,
      ess_lattice);
  c.add("essential-cross-unit", ess.cross_unit_deviation, 1e-8);

  const UniformGrid ggrid = line_grid_for(12.0, 0.01);
  const LineSamples gauss =
      sample_line(ggrid, [](double y) { return Quat::real(std::exp(-y * y)); });
  const bool accepted = hardy_membership({gauss, Unit::i()}, 2, 1e-6);
  c.add("gaussian-trace-rejected", accepted ? 1.0 : 0.0, 0.0);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 7: reproducing kernels

SuiteReport suite_kernel(const VerifyOptions& opts) {
  SuiteReport r{"kernel", opts.seed, {}};
  Collector c;

  const std::array<double, 3> bands{1.0, pi, 3.0};
  const auto units = fibonacci_units(6);
  double repro = 0;
  for (int b = 0; b < 3; ++b) {
    const double A = bands[b];
    const CompactSpectrum S = make_compact(A, 257, opts.seed + 50 + b, true, units[b]);
    const PWFunction f = synthesize_compact(S);
    const UniformGrid lg = line_grid_for(80.0, 0.02);
    const LineSamples rest = sample_line(lg, [&](double x) { return f(Quat::real(x)); });
    for (int m = 0; m < 50; ++m) {
      const double x = 10.0 * halton(m, 2) - 5.0;
      const double y = 4.0 * halton(m, 3) - 2.0;
      const Quat q = slice_point(x, y, units[(b + m) % units.size()]);
      repro = std::max(repro, (reproduce(rest, A, q) - f(q)).norm());
    }
  }
  c.add("sinc-reproducing", repro, 1e-5);

  const HalfLineSpectrum S = make_halfline(60.0, 601, opts.seed + 53, true, Unit::i());
  const UniformGrid tg = line_grid_for(50.0, 0.05);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);
  double rk = 0;
  for (int m = 0; m < 10; ++m) {
    const double x = 1.0 + 2.0 * halton(m, 2);
    const double y = 4.0 * halton(m, 3) - 2.0;
    const Quat q = slice_point(x, y, Unit::i());
    rk = std::max(rk, (rk_reproduce(trace, q) - synthesize_hardy(S, q)).norm());
  }
  c.add("halfspace-kernel-reproducing", rk, 1e-5);

  const Quat one = Quat::real(1);
  c.add("kernel-at-one", std::abs(rk_halfspace(one, one).w - 0.5), 1e-10);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 8: sampling theorem

SuiteReport suite_sampling(const VerifyOptions& opts) {
  SuiteReport r{"sampling", opts.seed, {}};
  Collector c;

  const std::array<double, 3> bands{1.0, 2.0, pi};
  const auto units = fibonacci_units(8);
  const int K = opts.trunc_k;
  const int K_store = std::max(500, K);

  double interp = 0, consist = 0, parseval = 0;
  SampleSet l2_set;
  PWFunction l2_f;
  for (int b = 0; b < 3; ++b) {
    const double A = bands[b];
    const CompactSpectrum S = make_compact(A, 1025, opts.seed + 60 + b, true, units[b + 2]);
    const PWFunction f = synthesize_compact(S);
    const SampleSet samples =
        take_samples([&](double x) { return f(Quat::real(x)); }, A, K_store);

    for (int m = -10; m <= 10; ++m) {
      const int node = m * K_store / 10;
      const Quat via = wks_reconstruct(samples, Quat::real(samples.node(node)));
      interp = std::max(interp, (via - samples.sample(node)).norm());
    }

    for (int m = 0; m < 20; ++m) {
      const double x = 6.0 * halton(m, 2) - 3.0;
      const double y = 2.0 * halton(m, 3) - 1.0;
      const Quat q = slice_point(x, y, units[(b + m) % units.size()]);
      consist = std::max(consist, (wks_reconstruct(samples, q, K) - f(q)).norm());
    }

    const UniformGrid lg = line_grid_for(60.0, 0.02);
    const LineSamples rest = sample_line(lg, [&](double x) { return f(Quat::real(x)); });
    const double line_energy = squared_l2(lg, rest.values);
    parseval = std::max(parseval,
                        std::abs(sample_energy(samples) - line_energy) / std::max(line_energy, 1e-300));

    if (b == 1) {
      l2_set = samples;
      l2_f = f;
    }
  }
  c.add("node-interpolation", interp, 1e-12);
  c.add("series-vs-synthesis", consist, 1e-6);
  c.add("parseval-sample-energy", parseval, 1e-5);

  double domination_excess = 0;
  for (const double M : {0.25, 0.5}) {
    const double bound = 2.0 * std::exp(2.0 * M * pi);
    for (int m = 0; m < 50; ++m) {
      const double x = 6.0 * halton(m, 2) - 3.0;
      const double y = M * (0.5 + 0.499 * halton(m, 3));
      const Quat q = slice_point(x, y, units[m % units.size()]);
      domination_excess =
          std::max(domination_excess, sinc_sq_partial_sum(q, 200) / bound - 1.0);
    }
  }
  c.add("sinc-square-sum-domination", std::max(0.0, domination_excess), 0.0);

  const std::array<int, 5> orders{25, 50, 100, 200, 500};
  const UniformGrid lg = line_grid_for(60.0, 0.02);
  const auto errs =
      l2_error_curve([&](double x) { return l2_f(Quat::real(x)); }, l2_set, orders, lg);
  double mono_excess = 0;
  for (std::size_t m = 0; m + 1 < errs.size(); ++m)
    if (errs[m] > 0) mono_excess = std::max(mono_excess, errs[m + 1] / errs[m] - 1.05);
  c.add("l2-curve-monotone", std::max(0.0, mono_excess), 0.0);
  c.add("l2-curve-final", errs.back(), 1e-5);

  r.checks = std::move(c.checks);
  return r;
}

// ---------------------------------------------------------------------------
// suite 9: CLI contract

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SuiteReport suite_cli(const VerifyOptions& opts) {
  SuiteReport r{"cli", opts.seed, {}};
  Collector c;

  // file round trips are value-identical
  {
    const CompactSpectrum S = make_compact(pi, 65, opts.seed + 70, true, Unit::j());
    const HalfLineSpectrum H = make_halfline(30.0, 121, opts.seed + 71, false, Unit::k());
    SampleSet W{2.0, 8, QuatArray::Zero(17, 4)};
    {
      const auto vals = random_quaternions(17, 1.0, opts.seed + 75);
      for (Eigen::Index m = 0; m < 17; ++m) set(W.values, m, vals[m]);
    }
    const LineSamples L = make_bump_line(3.0, line_grid_for(8.0, 0.05), opts.seed + 72, false);
    double err = 0;
    {
      const CompactSpectrum back = io::compact_from_json(io::to_json(S));
      err = std::max(err, max_norm(back.values - S.values));
      err = std::max(err, std::abs(back.band - S.band));
    }
    {
      const HalfLineSpectrum back = io::halfline_from_json(io::to_json(H));
      err = std::max(err, max_norm(back.values - H.values));
    }
    {
      const SampleSet back = io::samples_from_json(io::to_json(W));
      err = std::max(err, max_norm(back.values - W.values));
    }
    {
      const LineSamples back = io::line_samples_from_json(io::to_json(L));
      err = std::max(err, max_norm(back.values - L.values));
      const BoundaryTrace back_trace = io::trace_from_json(io::to_json(BoundaryTrace{L, Unit::j()}));
      err = std::max(err, max_norm(back_trace.samples.values - L.values));
    }
    c.add("json-round-trip", err, 0.0);
  }

  if (opts.cli_path.empty()) {
    c.add("cli-binary-available", 1.0, 0.0);
    r.checks = std::move(c.checks);
    return r;
  }
  c.add("cli-binary-available", 0.0, 0.0);

  const fs::path dir = fs::temp_directory_path() / "qpw-cli-suite";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const fs::path compact = dir / "compact.json";
  io::write_json_atomic(compact, io::to_json(make_compact(pi, 129, opts.seed + 73, false, Unit::i())));
  const fs::path halfline = dir / "halfline.json";
  io::write_json_atomic(halfline, io::to_json(make_halfline(60.0, 301, opts.seed + 74, true, Unit::i())));
  const fs::path gauss = dir / "gauss.json";
  io::write_json_atomic(gauss, io::to_json(sample_line(line_grid_for(12.0, 0.02), [](double y) {
                                 return Quat::real(std::exp(-y * y));
                               })));
  const fs::path sincset = dir / "sinc-samples.json";
  {
    SampleSet sset{pi, 40, QuatArray::Zero(81, 4)};
    sset.values(40, 0) = 1.0;
    io::write_json_atomic(sincset, io::to_json(sset));
  }

  const auto check_code = [&](const std::string& name, const std::string& args, int want) {
    const int got = run_cli(opts.cli_path, args);
    c.add(name, got == want ? 0.0 : 1.0 + std::abs(got - want), 0.0);
  };
  check_code("exit-ok", "synth --in " + compact.string() + " --out " + (dir / "a.json").string() +
                            " --extent 10 --grid-step 0.05", 0);
  check_code("exit-usage", "verify", 2);
  check_code("exit-truncation", "synth --in " + halfline.string() + " --re 0.05 --out " +
                                    (dir / "b.json").string(), 3);
  check_code("exit-invariant", "qft --in " + gauss.string() + " --essential --out " +
                                   (dir / "c.json").string(), 4);
  check_code("exit-domain", "reconstruct --in " + sincset.string() +
                                " --at 0,0,2,0 --omega-m 1 --out " + (dir / "d.json").string(), 5);

  const std::string synth_args = "synth --in " + compact.string() + " --extent 10 --grid-step 0.05";
  run_cli(opts.cli_path, synth_args + " --out " + (dir / "r1.json").string());
  run_cli(opts.cli_path, synth_args + " --out " + (dir / "r2.json").string());
  const bool same = slurp(dir / "r1.json") == slurp(dir / "r2.json") && !slurp(dir / "r1.json").empty();
  c.add("deterministic-rerun", same ? 0.0 : 1.0, 0.0);

  fs::remove_all(dir);
  r.checks = std::move(c.checks);
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"algebra", "entire", "structure", "qft", "pw-compact", "hardy", "kernel", "sampling", "cli"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "algebra") return suite_algebra(opts);
  if (name == "entire") return suite_entire(opts);
  if (name == "structure") return suite_structure(opts);
  if (name == "qft") return suite_qft(opts);
  if (name == "pw-compact") return suite_pw_compact(opts);
  if (name == "hardy") return suite_hardy(opts);
  if (name == "kernel") return suite_kernel(opts);
  if (name == "sampling") return suite_sampling(opts);
  if (name == "cli") return suite_cli(opts);
  throw UsageError("unknown suite: " + name);
}

nlohmann::json report_to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name},
                          {"max_error", c.max_error},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  return json{{"suite", report.suite}, {"seed", report.seed}, {"checks", checks}};
}

}  // namespace qpw
