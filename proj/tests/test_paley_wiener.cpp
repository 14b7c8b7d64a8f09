#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qpw/entire.hpp"
#include "qpw/paley_wiener.hpp"
#include "qpw/probes.hpp"

using namespace qpw;
namespace {
constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt_2pi = 0.3989422804014326779;

CompactSpectrum box_spectrum(double band, Eigen::Index n) {
  CompactSpectrum S{band, {-band, band, n}, QuatArray::Zero(n, 4), Unit::i()};
  S.values.col(0).setConstant(inv_sqrt_2pi);
  return S;
}

CompactSpectrum bump_spectrum(double band, Eigen::Index n, std::uint64_t seed, bool quaternion) {
  const auto coef = random_quaternions(5, 1.0, seed);
  CompactSpectrum S{band, {-band, band, n}, QuatArray::Zero(n, 4), Unit::i()};
  for (Eigen::Index m = 0; m < n; ++m) {
    const double w = S.grid.node(m) / band;
    const double env = std::pow(std::max(0.0, 1.0 - w * w), 8);
    Quat acc{};
    for (int j = 0; j < 5; ++j) {
      const double osc = std::cos(j * pi * w) + std::sin((j + 1) * pi * w);
      acc += (env * osc) * (quaternion ? coef[j] : Quat::real(coef[j].w));
    }
    set(S.values, m, acc);
  }
  return S;
}

// independent trapezoid oracle for the synthesis integral on one slice
Quat synthesis_oracle(const CompactSpectrum& S, double x, double y, const Unit& I) {
  Quat acc{};
  for (Eigen::Index m = 0; m < S.grid.n; ++m) {
    const double t = S.grid.node(m);
    const Quat kernel =
        std::exp(-y * t) * (Quat::real(std::cos(x * t)) + I.quat() * std::sin(x * t));
    acc += S.grid.weight(m) * (kernel * get(S.values, m));
  }
  return inv_sqrt_2pi * S.grid.step() * acc;
}
}  // namespace

TEST_CASE("box spectrum synthesizes the sinc function") {
  const CompactSpectrum S = box_spectrum(pi, 257);
  const PWFunction f = synthesize_compact(S);

  // engine against the independent one-slice quadrature oracle
  CHECK((f(Quat::real(0)) - synthesis_oracle(S, 0, 0, Unit::i())).norm() <= 1e-12);
  CHECK((f(Quat::real(1)) - synthesis_oracle(S, 1, 0, Unit::i())).norm() <= 1e-12);
  CHECK((f(Quat{0, 1, 0, 0}) - synthesis_oracle(S, 0, 1, Unit::i())).norm() <= 1e-12);

  // and against the closed form, up to the band-edge quadrature term
  for (double x : {0.0, 0.5, 1.0, 2.25}) {
    CHECK((f(Quat::real(x)) - sinc_q(Quat::real(x))).norm() <= 1e-4);
  }
}

TEST_CASE("zero spectrum synthesizes zero") {
  CompactSpectrum S = box_spectrum(2.0, 65);
  S.values.setZero();
  const PWFunction f = synthesize_compact(S);
  for (const Quat& q : slice_probes(20, 3.0, 2.0)) CHECK(f(q).norm() == 0);
  const GrowthReport g = growth_check(f, slice_probes(20, 3.0, 2.0));
  CHECK(g.max_ratio == 0);
  CHECK(g.pass);
}

TEST_CASE("real even spectra synthesize slice preserving functions") {
  CompactSpectrum S = box_spectrum(2.0, 129);
  for (Eigen::Index m = 0; m < S.grid.n; ++m) {
    const double w = S.grid.node(m) / S.band;
    S.values(m, 0) = std::pow(1.0 - w * w, 8) * (1.0 + 0.5 * std::cos(2 * pi * w));
  }
  const PWFunction f = synthesize_compact(S);
  CHECK(is_slice_preserving(f.evaluator, 1e-10));

  // slice-preserving backers have |f(x+Jy)| independent of J
  const auto units = fibonacci_units(16);
  for (const auto& p : box_probes(10, 2.0, 1.5)) {
    const double ref = f(slice_point(p.x, p.y, units[0])).norm();
    for (const Unit& u : units)
      CHECK(std::abs(f(slice_point(p.x, p.y, u)).norm() - ref) <= 1e-10 * std::max(1.0, ref));
  }
}

TEST_CASE("synthesized functions satisfy the explicit growth bound") {
  const CompactSpectrum S = bump_spectrum(pi, 129, 71, true);
  const PWFunction f = synthesize_compact(S);
  std::vector<Quat> pts = slice_probes(30, 3.0, 2.0);
  pts.push_back(Quat{0, 0, 0, 3});  // q = 3k, the strongest growth direction
  const GrowthReport g = growth_check(f, pts);
  CHECK(g.pass);
  CHECK(g.max_ratio <= 1.0 + 1e-6);

  // at q = 3i the bound sqrt(A/pi) ||S|| e^{3A} dominates directly
  const Quat q3i{0, 3, 0, 0};
  CHECK(f(q3i).norm() <= std::sqrt(S.band / pi) * f.spectrum_l2 * std::exp(3.0 * S.band));
}

TEST_CASE("synthesis rejects too-coarse spectra") {
  CHECK_THROWS_AS(synthesize_compact(box_spectrum(pi, 17)), AdmissibilityError);
  CHECK_NOTHROW(synthesize_compact(box_spectrum(pi, 65)));
}

TEST_CASE("membership accepts band-limited data and rejects a gaussian") {
  // truncated sinc samples: band-edge leakage scales like 1/(pi L |t-A|),
  // so the claim holds at leakage tolerance but fails for a smaller band
  const UniformGrid grid{-40.0, 40.0, 8001};
  const LineSamples sinc_line = sample_line(grid, [](double x) { return sinc_q(Quat::real(x)); });
  CHECK(pw_membership(sinc_line, pi, 0.1));
  CHECK_FALSE(pw_membership(sinc_line, pi / 2.0, 0.1));

  // smooth-edge synthesized data meets the tight tolerance
  const CompactSpectrum S = bump_spectrum(3.0, 257, 73, true);
  const PWFunction f = synthesize_compact(S);
  const double extent = lattice_line_extent(S.grid.step());
  const UniformGrid lg = symmetric_grid(extent, 0.05);
  const LineSamples rest = sample_line(lg, [&](double x) { return f(Quat::real(x)); });
  CHECK(pw_membership(rest, 3.0, 1e-6));
  const UniformGrid lattice = frequency_lattice(lg.max, 6.0);
  const Spectrum spec = qft_left(rest, Unit::i(), lattice);
  CHECK(support_radius(spec, 1e-6 * max_norm(spec.values)) <= 3.0 + lattice.step() * 1.001);

  // gaussian tails exceed every finite band at this tolerance
  const UniformGrid gg{-20.0, 20.0, 2001};
  const LineSamples gauss =
      sample_line(gg, [](double x) { return Quat::real(std::exp(-x * x)); });
  CHECK_FALSE(pw_membership(gauss, 2.0, 1e-6));

  CHECK(pw_membership(zeros_like(gg), 0.5, 1e-6));
}

TEST_CASE("synthesized functions are slice regular") {
  const CompactSpectrum S = bump_spectrum(2.0, 129, 79, true);
  const PWFunction f = synthesize_compact(S);
  for (const Unit& I : random_units(3, 83)) {
    CHECK(cr_order(f.evaluator, I, Slice{0.3, 0.7, I}, 1e-2) >= 1.9);
    CHECK(cr_order(f.evaluator, I, Slice{-1.1, 1.3, I}, 1e-2, 2.0) >= 1.9);
  }
}

TEST_CASE("sinc reproducing integral") {
  // hard-edged case: sinc itself; truncation tail is ~1/(pi^2 L)
  const UniformGrid grid{-40.0, 40.0, 8001};
  const LineSamples sinc_line = sample_line(grid, [](double x) { return sinc_q(Quat::real(x)); });
  CHECK((reproduce(sinc_line, pi, Quat::real(0)) - Quat::real(1)).norm() <= 3e-3);

  CHECK(reproduce(zeros_like(grid), pi, Quat::real(0.3)).norm() == 0);

  // smooth-edge case meets the tight dual-path tolerance at quaternion points
  const CompactSpectrum S = bump_spectrum(pi, 257, 89, true);
  const PWFunction f = synthesize_compact(S);
  const UniformGrid lg{-60.0, 60.0, 6001};
  const LineSamples rest = sample_line(lg, [&](double x) { return f(Quat::real(x)); });
  const Quat q{1, 0, 1, 0};  // 1 + j
  CHECK((reproduce(rest, pi, q) - f(q)).norm() <= 1e-5);
  for (const Quat& p : slice_probes(10, 3.0, 1.5))
    CHECK((reproduce(rest, pi, p) - f(p)).norm() <= 1e-5);

  CHECK_THROWS_AS(reproduce(rest, pi, Quat::real(59.0)), AdmissibilityError);
}

TEST_CASE("component resolution reassembles the source spectrum") {
  const CompactSpectrum S = bump_spectrum(2.0, 129, 97, true);
  const ComponentSpectra comps = resolve_components(S);
  CHECK(max_norm(comps.assemble(S.unit) - S.values) <= 1e-14);

  // restriction to the real axis equals the inverse transform of S
  const PWFunction f = synthesize_compact(S);
  const UniformGrid lg{-10.0, 10.0, 201};
  const LineSamples direct = iqft_left(S.as_spectrum(), lg);
  for (Eigen::Index n = 0; n < lg.n; ++n)
    CHECK((f(Quat::real(lg.node(n))) - get(direct.values, n)).norm() <= 1e-12);
}
