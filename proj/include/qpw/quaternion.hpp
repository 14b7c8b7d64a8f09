#pragma once

#include <cmath>
#include <cstddef>

#include "qpw/errors.hpp"

namespace qpw {

/// Element of the quaternion algebra, q = w + x i + y j + z k.
/// All arithmetic is the Hamilton product algebra; nothing here assumes
/// unit norm or rotation semantics.
template <typename Scalar = double>
struct Quaternion {
  Scalar w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  /// Embeds a real number on the real axis.
  static constexpr Quaternion real(Scalar r) { return {r, 0, 0, 0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(Scalar s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(Scalar s) { return *this *= Scalar(1) / s; }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, Scalar s) { return a *= s; }
  friend constexpr Quaternion operator*(Scalar s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, Scalar s) { return a /= s; }

  // Hamilton product: ij = k, jk = i, ki = j, and i^2 = j^2 = k^2 = -1.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  constexpr Scalar squared_norm() const { return w * w + x * x + y * y + z * z; }
  Scalar norm() const { return std::sqrt(squared_norm()); }

  constexpr bool is_real(Scalar tol = Scalar(0)) const {
    return std::abs(x) <= tol && std::abs(y) <= tol && std::abs(z) <= tol;
  }
};

template <typename S>
constexpr Quaternion<S> conj(const Quaternion<S>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename S>
constexpr Quaternion<S> mul(const Quaternion<S>& a, const Quaternion<S>& b) {
  return a * b;
}

template <typename S>
S norm(const Quaternion<S>& q) {
  return q.norm();
}

/// conj(q) / |q|^2; the multiplicative inverse for q != 0.
template <typename S>
Quaternion<S> inverse(const Quaternion<S>& q) {
  const S n2 = q.squared_norm();
  if (n2 == S(0)) throw DomainError("quaternion inverse of zero");
  return conj(q) / n2;
}

template <typename S>
constexpr S dot(const Quaternion<S>& a, const Quaternion<S>& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Point of the unit sphere of purely imaginary quaternions.  Every such
/// unit I satisfies I^2 = -1 and spans the complex slice C_I = {x + I y}.
template <typename Scalar = double>
struct ImaginaryUnit {
  Scalar x{1}, y{0}, z{0};

  ImaginaryUnit() = default;

  /// Requires an already-normalized direction (|v| = 1 within 1e-14).
  ImaginaryUnit(Scalar x_, Scalar y_, Scalar z_) : x(x_), y(y_), z(z_) {
    const Scalar n2 = x * x + y * y + z * z;
    if (std::abs(n2 - Scalar(1)) > Scalar(1e-14))
      throw DomainError("imaginary unit is not normalized");
  }

  /// Normalizes an arbitrary nonzero direction onto the sphere.
  static ImaginaryUnit from_vector(Scalar x_, Scalar y_, Scalar z_) {
    const Scalar n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (n == Scalar(0)) throw DomainError("imaginary unit from zero vector");
    ImaginaryUnit u;
    u.x = x_ / n;
    u.y = y_ / n;
    u.z = z_ / n;
    return u;
  }

  static ImaginaryUnit i() { return ImaginaryUnit(Scalar(1), Scalar(0), Scalar(0)); }
  static ImaginaryUnit j() { return ImaginaryUnit(Scalar(0), Scalar(1), Scalar(0)); }
  static ImaginaryUnit k() { return ImaginaryUnit(Scalar(0), Scalar(0), Scalar(1)); }

  constexpr Quaternion<Scalar> quat() const { return {Scalar(0), x, y, z}; }

  constexpr bool operator==(const ImaginaryUnit&) const = default;
};

template <typename S>
constexpr S dot(const ImaginaryUnit<S>& a, const ImaginaryUnit<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Slice coordinates of a quaternion: q = re + unit * im with im >= 0.
template <typename Scalar = double>
struct SlicePoint {
  Scalar re{0};
  Scalar im{0};  // canonical form keeps im >= 0
  ImaginaryUnit<Scalar> unit{};

  Quaternion<Scalar> realize() const {
    return {re, unit.x * im, unit.y * im, unit.z * im};
  }
};

/// Splits q into slice coordinates.  re = (q + conj q)/2 stays bit-exact;
/// im = |q - conj q|/2.  Real inputs take the canonical unit i so that the
/// output is deterministic.
template <typename S>
SlicePoint<S> split(const Quaternion<S>& q) {
  SlicePoint<S> p;
  p.re = q.w;
  const S n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  p.im = n;
  if (n == S(0)) {
    p.unit = ImaginaryUnit<S>::i();
  } else {
    p.unit.x = q.x / n;
    p.unit.y = q.y / n;
    p.unit.z = q.z / n;
    // renormalize once; the checked constructor is bypassed on purpose here
    const S m = std::sqrt(p.unit.x * p.unit.x + p.unit.y * p.unit.y + p.unit.z * p.unit.z);
    p.unit.x /= m;
    p.unit.y /= m;
    p.unit.z /= m;
  }
  return p;
}

/// Point x + I y on the slice of I.
template <typename S>
Quaternion<S> slice_point(S x, S y, const ImaginaryUnit<S>& unit) {
  return {x, unit.x * y, unit.y * y, unit.z * y};
}

/// Completes I to a positively oriented orthonormal frame (I, J, K) with
/// K = I J.  J is the Gram-Schmidt complement of the first standard basis
/// unit that is not parallel to I (threshold |dot| > 1 - 1e-10), so the
/// output is deterministic.
template <typename S>
struct Frame {
  ImaginaryUnit<S> I, J, K;
};

template <typename S>
Frame<S> orthogonal_frame(const ImaginaryUnit<S>& I) {
  S ex = 1, ey = 0, ez = 0;
  if (std::abs(I.x) > S(1) - S(1e-10)) {
    ex = 0;
    ey = 1;
  }
  const S d = ex * I.x + ey * I.y + ez * I.z;
  ImaginaryUnit<S> J = ImaginaryUnit<S>::from_vector(ex - d * I.x, ey - d * I.y, ez - d * I.z);
  const Quaternion<S> kq = I.quat() * J.quat();
  ImaginaryUnit<S> K = ImaginaryUnit<S>::from_vector(kq.x, kq.y, kq.z);
  return {I, J, K};
}

using Quat = Quaternion<double>;
using Unit = ImaginaryUnit<double>;
using Slice = SlicePoint<double>;

}  // namespace qpw
