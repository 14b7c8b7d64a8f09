#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpw/entire.hpp"
#include "qpw/hardy.hpp"
#include "qpw/probes.hpp"

using namespace qpw;
namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

// real half-line spectrum vanishing to 4th order at 0 and -cutoff
HalfLineSpectrum smooth_halfline(double cutoff, Eigen::Index n, std::uint64_t seed) {
  const auto coef = random_quaternions(4, 1.0, seed);
  HalfLineSpectrum S{cutoff, {-cutoff, 0.0, n}, QuatArray::Zero(n, 4), Unit::i()};
  for (Eigen::Index m = 0; m < n; ++m) {
    const double u = -S.grid.node(m) / cutoff;
    double v = 0.3;
    for (int j = 0; j < 4; ++j) v += coef[j].w * std::cos(j * pi * u);
    S.values(m, 0) = 256.0 * std::pow(u * (1 - u), 4) * v;
  }
  return S;
}

// closed-form Hardy element 1/(2 pi (z + 1)) on the slice of I
Quat cauchy_shift(double x, double y, const Unit& I) {
  const double d = two_pi * ((x + 1) * (x + 1) + y * y);
  return Quat::real((x + 1) / d) - I.quat() * (y / d);
}
}  // namespace

TEST_CASE("cauchy kernel closed form and quadrature oracle") {
  CHECK(std::abs(cauchy_kernel(1, 0, Unit::i()).w - 1.0 / two_pi) <= 1e-15);
  CHECK(std::abs(cauchy_kernel(2, 0, Unit::i()).w - 1.0 / (2 * two_pi)) <= 1e-15);

  // defining integral (2 pi)^{-1} int_{-inf}^0 e^{z t} dt by direct quadrature
  for (const auto& [x, y] : {std::pair{1.0, 0.5}, {0.7, -2.0}, {3.0, 1.0}}) {
    const double T = 60.0 / x;
    const long n = 1 << 20;
    const double dt = T / double(n);
    Quat acc{};
    for (long m = 0; m <= n; ++m) {
      const double t = -T + double(m) * dt;
      const double w = (m == 0 || m == n) ? 0.5 : 1.0;
      acc += (w * std::exp(x * t)) *
             (Quat::real(std::cos(y * t)) + Unit::j().quat() * std::sin(y * t));
    }
    CHECK((dt / two_pi * acc - cauchy_kernel(x, y, Unit::j())).norm() <= 1e-8);
  }

  // decay along a ray with positive real part
  const double r1 = cauchy_kernel(1, 2, Unit::i()).norm();
  const double r2 = cauchy_kernel(2, 4, Unit::i()).norm();
  const double r3 = cauchy_kernel(4, 8, Unit::i()).norm();
  CHECK(r1 > r2);
  CHECK(r2 > r3);

  CHECK_THROWS_AS(cauchy_kernel(0, 1, Unit::i()), DomainError);
}

TEST_CASE("poisson kernel closed form, mass and symmetry") {
  CHECK(std::abs(poisson_kernel(1, 0) - 1.0 / pi) <= 1e-16);
  CHECK(poisson_kernel(0.3, 5.0) == poisson_kernel(0.3, -5.0));
  CHECK_THROWS_AS(poisson_kernel(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(poisson_kernel(-1.0, 1.0), DomainError);

  // grid mass against the arctangent antiderivative, window 1000 x
  for (double x : {0.5, 1.0, 2.0}) {
    const double W = 1000.0 * x;
    const UniformGrid g{-W, W, 200001};
    double mass = 0;
    for (Eigen::Index n = 0; n < g.n; ++n) mass += g.weight(n) * poisson_kernel(x, g.node(n));
    mass *= g.step();
    const double want = 2.0 / pi * std::atan(W / x);
    CHECK(std::abs(mass - want) <= 1e-6);
    CHECK(mass < 1.0);
  }

  // definitional identity |K(z)|^2 / K(2x)
  for (const auto& p : box_probes(50, 4.0, 5.0)) {
    const double x = 0.2 + std::abs(p.x);
    const Quat K = cauchy_kernel(x, p.y, Unit::k());
    CHECK(std::abs(K.squared_norm() / cauchy_kernel(2 * x, 0, Unit::k()).w -
                   poisson_kernel(x, p.y)) <= 1e-12);
  }
}

TEST_CASE("half-line synthesis: zero, constant antiderivative, guards") {
  const double T = 60.0;
  HalfLineSpectrum Z{T, {-T, 0.0, 301}, QuatArray::Zero(301, 4), Unit::i()};
  CHECK(synthesize_hardy(Z, Quat::real(1)).norm() == 0);

  // constant spectrum c on [-T, 0] at real q: c (1 - e^{-T x}) / (sqrt(2 pi) x)
  const double c = 0.75;
  HalfLineSpectrum C{T, {-T, 0.0, 600001}, QuatArray::Zero(600001, 4), Unit::i()};
  C.values.col(0).setConstant(c);
  for (double x : {0.5, 1.0, 2.0}) {
    const double want = c * (1.0 - std::exp(-T * x)) / (std::sqrt(two_pi) * x);
    CHECK(std::abs(synthesize_hardy(C, Quat::real(x)).w - want) <= 1e-9);
  }

  // boundary guard and truncation guard
  CHECK_THROWS_AS(synthesize_hardy(C, Quat::real(-1)), DomainError);
  CHECK_THROWS_AS(synthesize_hardy(C, Quat::real(0.05)), AdmissibilityError);
}

TEST_CASE("three-way identity: synthesis, cauchy and poisson integrals") {
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 101);
  const UniformGrid tg = symmetric_grid(lattice_line_extent(S.grid.step(), 3), 0.02);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);

  for (int m = 0; m < 8; ++m) {
    const double x = 0.6 + 2.0 * halton(m, 2);
    const double y = 3.0 * halton(m, 3) - 1.5;
    const Quat q = slice_point(x, y, Unit::i());
    const Quat a = synthesize_hardy(S, q);
    const Quat b = cauchy_extend(trace, x, y);
    const Quat p = poisson_extend(trace, x, y);
    CHECK((a - b).norm() <= 1e-5);
    CHECK((a - p).norm() <= 1e-5);
    CHECK((b - p).norm() <= 1e-5);
  }

  // cross-slice check at q = 1 + 2k against the trace on the slice of k
  const BoundaryTrace trace_k = hardy_boundary_trace(S, Unit::k(), tg);
  const Quat qk = slice_point(1.0, 2.0, Unit::k());
  CHECK((synthesize_hardy(S, qk) - poisson_extend(trace_k, 1.0, 2.0)).norm() <= 1e-5);
}

TEST_CASE("poisson extension basics") {
  // constant trace: value equals the captured kernel mass
  const UniformGrid g{-400.0, 400.0, 40001};
  LineSamples ones = zeros_like(g);
  ones.values.col(0).setConstant(1.0);
  const BoundaryTrace F{ones, Unit::i()};
  for (const auto& [x, y] : {std::pair{0.5, 0.0}, {1.0, 2.0}, {2.0, -3.0}}) {
    const double mass =
        (std::atan((g.max - y) / x) + std::atan((g.max + y) / x)) / pi;
    CHECK((poisson_extend(F, x, y) - Quat::real(mass)).norm() <= 1e-6);
    CHECK(std::abs(mass - 1.0) <= 0.01);  // captured mass is close to one
  }

  // boundary trace of 1/(2 pi (z+1)) extends to the same function
  const LineSamples ctr =
      sample_line(g, [](double t) { return cauchy_shift(0.0, t, Unit::i()); });
  const BoundaryTrace FK{ctr, Unit::i()};
  for (const auto& p : box_probes(12, 2.0, 2.0)) {
    const double x = 0.3 + std::abs(p.x);
    CHECK((poisson_extend(FK, x, p.y) - cauchy_shift(x, p.y, Unit::i())).norm() <= 1e-6);
  }

  // odd real trace extends odd in y
  const UniformGrid go{-100.0, 100.0, 10001};
  const LineSamples odd =
      sample_line(go, [](double t) { return Quat::real(t * std::exp(-t * t)); });
  const BoundaryTrace FO{odd, Unit::i()};
  CHECK((poisson_extend(FO, 0.7, 1.3) + poisson_extend(FO, 0.7, -1.3)).norm() <= 1e-12);

  CHECK_THROWS_AS(poisson_extend(F, 0.0, 0.0), DomainError);
}

TEST_CASE("nontangential recovery and the poisson semigroup") {
  // vertical-approach recovery: discrete L2 error decreases toward the
  // boundary (reported sequence, not a limit).  The grid must resolve the
  // kernel width x; its aliasing error scales like e^{-2 pi x / dy}.
  const HalfLineSpectrum Sf = smooth_halfline(24.0, 241, 103);
  const UniformGrid fine{-60.0, 60.0, 240001};  // dy = 5e-4
  const BoundaryTrace ftrace = hardy_boundary_trace(Sf, Unit::i(), fine);
  const UniformGrid window{-8.0, 8.0, 81};
  const auto l2_err = [&](double x) {
    double acc = 0;
    for (Eigen::Index n = 0; n < window.n; ++n) {
      const double y = window.node(n);
      const double idx = (y - fine.min) / fine.step();
      const Quat ref = get(ftrace.samples.values, Eigen::Index(std::llround(idx)));
      acc += window.weight(n) * (poisson_extend(ftrace, x, y) - ref).squared_norm();
    }
    return std::sqrt(acc * window.step());
  };
  const double e1 = l2_err(1e-1), e2 = l2_err(1e-2), e3 = l2_err(1e-3);
  CHECK(e2 < e1);
  CHECK(e3 < e2);

  // semigroup: extending the x2-trace by x1 equals extending by x1 + x2
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 105);
  const UniformGrid tg = symmetric_grid(lattice_line_extent(S.grid.step(), 3), 0.02);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);
  const double x1 = 0.4, x2 = 0.7;
  const LineSamples mid =
      sample_line(tg, [&](double y) { return poisson_extend(trace, x2, y); });
  const BoundaryTrace mid_trace{mid, Unit::i()};
  for (double y : {-1.0, 0.0, 2.0})
    CHECK((poisson_extend(mid_trace, x1, y) - poisson_extend(trace, x1 + x2, y)).norm() <= 1e-5);
}

TEST_CASE("hardy extension to other slices is slice regular") {
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 107);
  const UniformGrid tg = symmetric_grid(lattice_line_extent(S.grid.step(), 3), 0.02);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);
  const SliceEvaluator f = hardy_extension(trace);

  // agrees with direct synthesis off the defining slice
  for (const Unit& u : {Unit::j(), Unit::from_vector(1, -1, 1)}) {
    const Quat q = slice_point(1.2, 0.8, u);
    CHECK((f(q) - synthesize_hardy(S, q)).norm() <= 1e-5);
  }
  CHECK(cr_order(f, Unit::j(), Slice{1.0, 0.5, Unit::j()}, 1e-2) >= 1.9);
}

TEST_CASE("hardy membership") {
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 109);
  const UniformGrid tg = symmetric_grid(lattice_line_extent(S.grid.step(), 3), 0.02);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);
  CHECK(hardy_membership(trace, 2, 1e-6));
  CHECK(hardy_membership(trace, 1, 1e-6));

  // the cauchy-kernel trace decays like 1/y; spectral leakage from the
  // truncation sits at the jump scale, so the check runs at that tolerance
  const UniformGrid cg{-200.0, 200.0, 20001};
  const LineSamples ctr =
      sample_line(cg, [](double t) { return cauchy_shift(0.0, t, Unit::i()); });
  CHECK(hardy_membership({ctr, Unit::i()}, 2, 5e-2));

  const UniformGrid gg{-12.0, 12.0, 1201};
  const LineSamples gauss =
      sample_line(gg, [](double y) { return Quat::real(std::exp(-y * y)); });
  CHECK_FALSE(hardy_membership({gauss, Unit::i()}, 2, 1e-6));

  CHECK(hardy_membership({zeros_like(gg), Unit::i()}, 2, 1e-6));
  CHECK_THROWS_AS(hardy_membership({gauss, Unit::i()}, 3, 1e-6), DomainError);
}

TEST_CASE("slice preserving extension from even/odd profiles") {
  // profiles from a synthesized slice preserving Hardy element
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 113);
  const UniformGrid tg = symmetric_grid(lattice_line_extent(S.grid.step(), 3), 0.02);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);

  LineSamples A = zeros_like(tg), B = zeros_like(tg);
  for (Eigen::Index n = 0; n < tg.n; ++n) {
    const Quat v = get(trace.samples.values, n);
    A.values(n, 0) = v.w;  // even real part
    B.values(n, 0) = v.x;  // odd part along the defining unit
  }

  for (const auto& p : box_probes(8, 1.5, 1.5)) {
    const double x = 0.6 + std::abs(p.x);
    for (const Unit& u : {Unit::i(), Unit::j()}) {
      const Quat q = slice_point(x, p.y, u);
      CHECK((hardy_extend_symmetric(A, B, q) - synthesize_hardy(S, q)).norm() <= 1e-5);
    }
    // conjugate symmetry of the output (slice preserving class)
    const Quat qp = slice_point(x, 1.1, Unit::k());
    CHECK((hardy_extend_symmetric(A, B, conj(qp)) - conj(hardy_extend_symmetric(A, B, qp)))
              .norm() <= 1e-10);
  }

  // zero profiles synthesize zero
  const LineSamples Z = zeros_like(tg);
  CHECK(hardy_extend_symmetric(Z, Z, Quat::real(1)).norm() == 0);

  // symmetry violation and support violation are rejected
  CHECK_THROWS_AS(hardy_extend_symmetric(B, A, Quat::real(1)), InvariantError);
  LineSamples gaussA = sample_line(tg, [](double y) { return Quat::real(std::exp(-y * y)); });
  CHECK_THROWS_AS(hardy_extend_symmetric(gaussA, Z, Quat::real(1)), InvariantError);
}

TEST_CASE("half-space reproducing kernel") {
  // scalar antiderivative: k(1, 1) = 1/2
  CHECK(std::abs(rk_halfspace(Quat::real(1), Quat::real(1)).w - 0.5) <= 1e-10);

  // same-slice commuting case: k(z, z) = 1/(2x)
  const Quat z = slice_point(0.7, 1.3, Unit::j());
  const Quat kz = rk_halfspace(z, z);
  CHECK(std::abs(kz.w - 1.0 / 1.4) <= 1e-10);
  CHECK(std::abs(kz.x) + std::abs(kz.y) + std::abs(kz.z) <= 1e-10);

  // boundary second argument is admissible while the sum of real parts is
  // positive
  CHECK_NOTHROW(rk_halfspace(Quat::real(1), Quat{0, 2, 0, 0}));
  CHECK_THROWS_AS(rk_halfspace(Quat{0, 1, 0, 0}, Quat{0, 2, 0, 0}), DomainError);

  // reproducing property on a synthesized element
  const HalfLineSpectrum S = smooth_halfline(60.0, 601, 127);
  const UniformGrid tg = symmetric_grid(50.0, 0.05);
  const BoundaryTrace trace = hardy_boundary_trace(S, Unit::i(), tg);
  const Quat q = slice_point(2.0, 1.0, Unit::i());
  CHECK((rk_reproduce(trace, q) - synthesize_hardy(S, q)).norm() <= 1e-5);
}
