#include "qpw/slice_function.hpp"

#include <cmath>

#include "qpw/probes.hpp"

namespace qpw {

Quat represent(const Quat& f_plus, const Quat& f_minus, const Unit& J, const Unit& I) {
  const Quat ij = I.quat() * J.quat();
  const Quat one = Quat::real(1);
  return 0.5 * ((one - ij) * f_plus) + 0.5 * ((one + ij) * f_minus);
}

namespace {

// Residual of (1/2)(d/dx + J d/dy) applied to a one-slice datum.
double single_slice_residual(const SliceComplexFunction& F, const Unit& J, double x, double y,
                             double h) {
  const Quat dx = (F(x + h, y) - F(x - h, y)) / (2 * h);
  const Quat dy = (F(x, y + h) - F(x, y - h)) / (2 * h);
  return (0.5 * (dx + J.quat() * dy)).norm();
}

}  // namespace

SliceEvaluator ext_l(SliceComplexFunction F, const Unit& J, const ExtensionOptions& opts) {
  if (opts.check_regularity) {
    const double h = 1e-3;
    const bool half = opts.domain == Domain::RightHalfSpace;
    for (const auto& p : box_probes(12, 2.0, 2.0)) {
      const double x = half ? 1.0 + std::abs(p.x) : p.x;
      const double scale = 1.0 + F(x, p.y).norm();
      if (single_slice_residual(F, J, x, p.y, h) > opts.regularity_tol * scale)
        throw InvariantError("one-slice datum fails the holomorphy residual probe");
    }
  }
  return {.eval =
              [F = std::move(F), J](const Quat& q) {
                const Slice p = split(q);
                return represent(F(p.re, p.im), F(p.re, -p.im), J, p.unit);
              },
          .domain = opts.domain};
}

StemPair stem_split(const SliceEvaluator& f, const Unit& probe) {
  auto alpha = [f, probe](double x, double y) {
    return 0.5 * (f(slice_point(x, y, probe)) + f(slice_point(x, -y, probe)));
  };
  auto beta = [f, probe](double x, double y) {
    return 0.5 * (probe.quat() * (f(slice_point(x, -y, probe)) - f(slice_point(x, y, probe))));
  };
  return {std::move(alpha), std::move(beta)};
}

Quat ComponentQuad::recombine(const Quat& q) const {
  return h[0](q) + h[1](q) * frame.I.quat() + h[2](q) * frame.J.quat() + h[3](q) * frame.K.quat();
}

ComponentQuad decompose(const SliceEvaluator& f, const Frame<double>& frame) {
  const StemPair stem = stem_split(f, frame.I);
  const std::array<Quat, 4> basis = {Quat::real(1), frame.I.quat(), frame.J.quat(),
                                     frame.K.quat()};
  ComponentQuad quad;
  quad.frame = frame;
  for (int m = 0; m < 4; ++m) {
    quad.h[m] = {.eval =
                     [stem, e = basis[m]](const Quat& q) {
                       const Slice p = split(q);
                       // resolve the stem along the frame axis, then carry the
                       // odd part on the slice of q
                       const double a = dot(stem.alpha(p.re, p.im), e);
                       const double b = dot(stem.beta(p.re, p.im), e);
                       return Quat::real(a) + p.unit.quat() * b;
                     },
                 .domain = f.domain};
  }
  return quad;
}

double slice_preserving_defect(const SliceEvaluator& f) {
  const bool half = f.domain == Domain::RightHalfSpace;
  double worst = 0;
  for (const Quat& q : slice_probes(96, 3.0, 3.0, half)) {
    const Quat d = f(conj(q)) - conj(f(q));
    worst = std::max(worst, d.norm());
  }
  return worst;
}

bool is_slice_preserving(const SliceEvaluator& f, double tol) {
  if (!(tol > 0)) throw DomainError("is_slice_preserving needs tol > 0");
  return slice_preserving_defect(f) <= tol;
}

double cr_residual(const SliceEvaluator& f, const Unit& I, const Slice& at, double h) {
  if (!(h > 0)) throw DomainError("cr_residual needs h > 0");
  if (f.domain == Domain::RightHalfSpace && !(at.re - h > 0))
    throw DomainError("cr_residual stencil leaves the right half-space");
  const double x = at.re, y = at.im;
  const Quat dx = (f(slice_point(x + h, y, I)) - f(slice_point(x - h, y, I))) / (2 * h);
  const Quat dy = (f(slice_point(x, y + h, I)) - f(slice_point(x, y - h, I))) / (2 * h);
  return (0.5 * (dx + I.quat() * dy)).norm();
}

double cr_order(const SliceEvaluator& f, const Unit& I, const Slice& at, double h, double shrink) {
  if (!(shrink > 1)) throw DomainError("cr_order needs shrink > 1");
  const double r1 = cr_residual(f, I, at, h);
  const double r2 = cr_residual(f, I, at, h / shrink);
  if (r2 == 0) return 2.0;
  return std::log(r1 / r2) / std::log(shrink);
}

}  // namespace qpw
