#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qpw/grid.hpp"

// Whittaker-Kotelnikov-Shannon reconstruction for band-limited slice
// regular functions: the sinc series over samples at pi k / A, its
// truncation control, and the Parseval sample-energy identity.

namespace qpw {

/// Collects f(pi k / band) for |k| <= half_width.
SampleSet take_samples(const std::function<Quat(double)>& f_line, double band, int half_width);

/// Truncated sampling series
///   f(q) ~= sum_{|k| <= use_k} sinc(band q / pi - k) f(pi k / band);
/// the sinc factor multiplies the sample from the left.  use_k < 0 means
/// the full stored range.
Quat wks_reconstruct(const SampleSet& S, const Quat& q, int use_k = -1);

/// (pi / band) sum |f(pi k / band)|^2; equals the line energy of true
/// band-limited inputs.
double sample_energy(const SampleSet& S);

/// Holder tail estimate for the truncated series on the strip |im q| < M:
/// the sinc p-sum obeys sum_k |sinc(q - k)|^p < p' e^{p M pi} there, so the
/// omitted terms are bounded by (p' e^{p M pi})^{1/p} tail^{1/p'} where
/// tail = sum of the omitted |sample|^{p'}.
double truncation_bound(double strip_halfwidth, double p, double tail_energy);

/// Partial sum sum_{|k| <= n} |sinc(q - k)|^2 (the strip bound's subject).
double sinc_sq_partial_sum(const Quat& q, int n);

/// Geometric extrapolation of the out-of-range sample energy from the last
/// decade of stored samples; a reporting aid, not a bound.
double estimate_tail_energy(const SampleSet& S);

/// Discrete L2(R) error of the truncated series against f_true on the line
/// grid, one entry per requested truncation order.
std::vector<double> l2_error_curve(const std::function<Quat(double)>& f_true, const SampleSet& S,
                                   std::span<const int> orders, const UniformGrid& line_grid);

}  // namespace qpw
