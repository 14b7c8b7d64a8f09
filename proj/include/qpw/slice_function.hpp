#pragma once

#include <array>
#include <functional>

#include "qpw/quaternion.hpp"

// Structure theory of slice regular functions: the representation formula,
// extension from one slice, stem (alpha/beta) splitting, the four slice
// preserving components, and finite-difference Cauchy-Riemann residuals.

namespace qpw {

enum class Domain { WholeSpace, RightHalfSpace };

/// A function on the quaternions (or on the open right half-space),
/// immutable once built.  Backers that claim slice regularity are expected
/// to pass cr_residual at second order.
struct SliceEvaluator {
  std::function<Quat(const Quat&)> eval;
  Domain domain = Domain::WholeSpace;

  Quat operator()(const Quat& q) const {
    if (domain == Domain::RightHalfSpace && !(q.w > 0))
      throw DomainError("evaluator is only defined on the right half-space");
    return eval(q);
  }
};

/// Value F(x + J y) of a function given on the single slice C_J.
using SliceComplexFunction = std::function<Quat(double x, double y)>;

/// Representation formula: rebuilds f(x + I y) from the mirror pair of
/// values on the slice of J,
///   f(x + I y) = (1 - I J)/2 f(x + J y) + (1 + I J)/2 f(x - J y).
Quat represent(const Quat& f_plus, const Quat& f_minus, const Unit& J, const Unit& I);

struct ExtensionOptions {
  Domain domain = Domain::WholeSpace;
  bool check_regularity = true;  // single-slice residual probe before extending
  double regularity_tol = 1e-5;
};

/// Unique left slice regular extension of a one-slice datum F on C_J.
/// When F is C_J-valued with F(x, -y) = conj(F(x, y)) the output is slice
/// preserving.
SliceEvaluator ext_l(SliceComplexFunction F, const Unit& J, const ExtensionOptions& opts = {});

/// Stem pair of f: f(x + I y) = alpha(x, y) + I beta(x, y), with alpha even
/// and beta odd in y, both independent of the probe unit.
struct StemPair {
  std::function<Quat(double x, double y)> alpha;
  std::function<Quat(double x, double y)> beta;
};

StemPair stem_split(const SliceEvaluator& f, const Unit& probe);

/// The four slice preserving components of f along the frame {1, I, J, K}:
///   f(q) = h0(q) + h1(q) I + h2(q) J + h3(q) K.
struct ComponentQuad {
  std::array<SliceEvaluator, 4> h;
  Frame<double> frame;

  Quat recombine(const Quat& q) const;
};

ComponentQuad decompose(const SliceEvaluator& f, const Frame<double>& frame);

/// True iff f maps each slice into itself, tested as
/// max |f(conj q) - conj(f(q))| <= tol over a deterministic probe set.
bool is_slice_preserving(const SliceEvaluator& f, double tol);
double slice_preserving_defect(const SliceEvaluator& f);

/// Norm of the central-difference Cauchy-Riemann operator
///   (1/2)(d/dx + I d/dy) f  on the slice of I at the given point.
/// Second order in h for slice regular f.
double cr_residual(const SliceEvaluator& f, const Unit& I, const Slice& at, double h);

/// Observed order log(r(h) / r(h/shrink)) / log(shrink) of the residual.
double cr_order(const SliceEvaluator& f, const Unit& I, const Slice& at, double h = 1e-2,
                double shrink = 10.0);

}  // namespace qpw
