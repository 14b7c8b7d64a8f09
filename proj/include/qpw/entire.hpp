#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>

#include "qpw/quaternion.hpp"

// Slice preserving entire functions.  Each one has real power-series
// coefficients, so f(x + I y) is the scalar holomorphic value transported
// onto the slice of I; that is how the closed forms below evaluate.

namespace qpw {

namespace detail {

/// sinc on one slice: sum_k z^{2k} (-pi^2)^k/(2k+1)! below the switch
/// radius, sin(pi z)/(pi z) beyond it.  The series keeps the removable
/// singularity at 0 free of cancellation.
template <typename S>
std::complex<S> sinc_complex(const std::complex<S>& z) {
  constexpr S switch_radius = S(0.5);
  if (std::norm(z) < switch_radius * switch_radius) {
    const std::complex<S> z2 = z * z * (-std::numbers::pi_v<S> * std::numbers::pi_v<S>);
    std::complex<S> term(1, 0), acc(1, 0);
    for (int k = 1; k <= 16; ++k) {
      term *= z2 / S((2 * k) * (2 * k + 1));
      acc += term;
      if (std::abs(term) < std::numeric_limits<S>::epsilon() * std::abs(acc)) break;
    }
    return acc;
  }
  const std::complex<S> pz = std::numbers::pi_v<S> * z;
  return std::sin(pz) / pz;
}

}  // namespace detail

namespace detail {

// The entire functions grow like e^{|im q|}; carrying the slice reduction
// in extended precision keeps the double result within an ulp (the im
// coordinate enters the exponent, so its rounding error would otherwise be
// amplified by |im q| |value|).
struct WideSlice {
  long double re{0}, im{0};
  long double ux{1}, uy{0}, uz{0};  // slice direction; canonical i on the real axis
};

inline WideSlice wide_split(const Quat& q) {
  WideSlice s;
  s.re = q.w;
  const long double x = q.x, y = q.y, z = q.z;
  const long double n2 = x * x + y * y + z * z;
  if (n2 > 0) {
    const long double n = std::sqrt(n2);
    s.im = n;
    s.ux = x / n;
    s.uy = y / n;
    s.uz = z / n;
  }
  return s;
}

inline Quat wide_assemble(const std::complex<long double>& v, const WideSlice& s) {
  return {double(v.real()), double(v.imag() * s.ux), double(v.imag() * s.uy),
          double(v.imag() * s.uz)};
}

}  // namespace detail

/// Quaternionic exponential: exp(x + I y) = e^x (cos y + I sin y).
inline Quat exp_q(const Quat& q) {
  const detail::WideSlice s = detail::wide_split(q);
  return detail::wide_assemble(std::exp(std::complex<long double>(s.re, s.im)), s);
}

/// Quaternionic sine: sin(x + I y) = sin x cosh y + I cos x sinh y.
inline Quat sin_q(const Quat& q) {
  const detail::WideSlice s = detail::wide_split(q);
  return detail::wide_assemble(std::sin(std::complex<long double>(s.re, s.im)), s);
}

/// sinc(q) = sum_k q^{2k} (-pi^2)^k / (2k+1)!  =  sin(pi q) (pi q)^{-1}.
inline Quat sinc_q(const Quat& q) {
  const detail::WideSlice s = detail::wide_split(q);
  return detail::wide_assemble(detail::sinc_complex(std::complex<long double>(s.re, s.im)), s);
}

/// Horner evaluation of sum_n q^n a_n over the first n_terms coefficients.
/// Real coefficients make the result slice preserving.  The recursion runs
/// in extended precision: alternating series like sinc reach term
/// magnitudes ~1e4 inside the working radius, and the wider accumulator
/// keeps the returned value rounding-limited rather than
/// cancellation-limited.
inline Quat series_eval(std::span<const double> coeffs, const Quat& q, std::size_t n_terms) {
  if (n_terms == 0 || coeffs.empty()) throw DomainError("series_eval needs at least one term");
  if (n_terms > coeffs.size()) n_terms = coeffs.size();
  const Quaternion<long double> qe{q.w, q.x, q.y, q.z};
  Quaternion<long double> p = Quaternion<long double>::real(coeffs[n_terms - 1]);
  for (std::size_t n = n_terms - 1; n-- > 0;)
    p = qe * p + Quaternion<long double>::real(coeffs[n]);
  return {double(p.w), double(p.x), double(p.y), double(p.z)};
}

inline Quat series_eval(std::span<const double> coeffs, const Quat& q) {
  return series_eval(coeffs, q, coeffs.size());
}

}  // namespace qpw
