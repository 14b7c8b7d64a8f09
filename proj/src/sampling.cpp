#include "qpw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qpw/entire.hpp"

namespace qpw {

SampleSet take_samples(const std::function<Quat(double)>& f_line, double band, int half_width) {
  if (!(band > 0) || half_width < 0) throw DomainError("take_samples needs band > 0, K >= 0");
  SampleSet out{band, half_width, QuatArray::Zero(2 * half_width + 1, 4)};
  for (int k = -half_width; k <= half_width; ++k)
    set(out.values, k + half_width, f_line(out.node(k)));
  return out;
}

Quat wks_reconstruct(const SampleSet& S, const Quat& q, int use_k) {
  require_samples(S);
  const int K = use_k < 0 ? S.half_width : std::min(use_k, S.half_width);
  const Slice p = split(q);
  const double sx = S.band * p.re / std::numbers::pi;
  const double sy = S.band * p.im / std::numbers::pi;
  Quat acc{};
  for (int k = -K; k <= K; ++k) {
    const std::complex<double> s = detail::sinc_complex(std::complex<double>(sx - k, sy));
    const Quat kernel = Quat::real(s.real()) + p.unit.quat() * s.imag();
    acc += kernel * S.sample(k);
  }
  return acc;
}

double sample_energy(const SampleSet& S) {
  require_samples(S);
  double acc = 0;
  for (Eigen::Index r = 0; r < S.values.rows(); ++r) acc += get(S.values, r).squared_norm();
  return std::numbers::pi / S.band * acc;
}

double truncation_bound(double strip_halfwidth, double p, double tail_energy) {
  if (!(p > 1)) throw DomainError("truncation_bound needs p > 1");
  if (!(strip_halfwidth >= 0) || !(tail_energy >= 0))
    throw DomainError("truncation_bound needs nonnegative strip and tail");
  if (tail_energy == 0) return 0;
  const double pc = p / (p - 1);
  return std::pow(pc * std::exp(p * strip_halfwidth * std::numbers::pi), 1.0 / p) *
         std::pow(tail_energy, 1.0 / pc);
}

double sinc_sq_partial_sum(const Quat& q, int n) {
  const Slice p = split(q);
  double acc = 0;
  for (int k = -n; k <= n; ++k)
    acc += std::norm(detail::sinc_complex(std::complex<double>(p.re - k, p.im)));
  return acc;
}

double estimate_tail_energy(const SampleSet& S) {
  require_samples(S);
  const int K = S.half_width;
  if (K < 10) return 0;
  const int lo = std::max(1, K - std::max(4, K / 10));
  // per-|k| shell energies over the last decade
  std::vector<double> shell;
  for (int k = lo; k <= K; ++k)
    shell.push_back(S.sample(k).squared_norm() + S.sample(-k).squared_norm());
  double num = 0, den = 0;
  for (std::size_t m = 1; m < shell.size(); ++m) {
    if (shell[m] <= 0 || shell[m - 1] <= 0) continue;
    num += std::log(shell[m] / shell[m - 1]);
    den += 1;
  }
  const double last = shell.back();
  if (den == 0 || last <= 0) return 0;
  const double r = std::exp(num / den);
  if (r >= 1.0) return last * double(K);  // no decay observed; report a crude floor
  return last * r / (1.0 - r);
}

std::vector<double> l2_error_curve(const std::function<Quat(double)>& f_true, const SampleSet& S,
                                   std::span<const int> orders, const UniformGrid& line_grid) {
  require_samples(S);
  require_grid(line_grid);
  std::vector<int> ks(orders.begin(), orders.end());
  std::sort(ks.begin(), ks.end());

  QuatArray truth(line_grid.n, 4), partial = QuatArray::Zero(line_grid.n, 4);
  for (Eigen::Index n = 0; n < line_grid.n; ++n) set(truth, n, f_true(line_grid.node(n)));

  const auto add_term = [&](int k) {
    if (std::abs(k) > S.half_width) return;
    const Quat sample = S.sample(k);
    for (Eigen::Index n = 0; n < line_grid.n; ++n) {
      const double s =
          detail::sinc_complex(std::complex<double>(S.band * line_grid.node(n) / std::numbers::pi - k, 0.0))
              .real();
      set(partial, n, get(partial, n) + s * sample);
    }
  };

  std::vector<double> errors;
  errors.reserve(ks.size());
  int next = 0;
  for (int target : ks) {
    if (target >= 0 && next == 0) {
      add_term(0);
      next = 1;
    }
    for (; next <= target; ++next) {
      add_term(next);
      add_term(-next);
    }
    errors.push_back(std::sqrt(squared_l2(line_grid, QuatArray(truth - partial))));
  }
  return errors;
}

}  // namespace qpw
