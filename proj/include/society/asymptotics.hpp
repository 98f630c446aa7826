#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <cmath>
#include <optional>

namespace society {

/// An asymptotic estimate kept in log space, optionally compared with the
/// exact value. ratio_to_exact = estimate / exact.
struct AsymptoticEstimate {
  double log_value = 0.0;
  std::optional<double> ratio_to_exact;

  double abs_error() const { return ratio_to_exact ? std::abs(*ratio_to_exact - 1.0) : 0.0; }
};

/// 32 pi^2 exp(3 - 1/log 2) log 2 = 1038.97...
double constant_C();

/// log C as the sum of the logs of its factors.
double log_constant_C();

/// log n! as sum_{k<=n} log k. Prefix sums are cached; this is the only
/// source of log-factorials in the library.
double log_factorial(std::size_t n);

/// H_n ~ n! e^{sqrt(2n/log 2)} / (C^{1/4} n^{3/4} (log 2)^n).
AsymptoticEstimate hierarchical_asymptotic_log(std::size_t n,
                                               const std::optional<Count>& exact = std::nullopt);

/// B_n ~ n! / (2 (log 2)^{n+1}).
AsymptoticEstimate ordered_bell_asymptotic_log(std::size_t n,
                                               const std::optional<Count>& exact = std::nullopt);

/// U_n ~ 2^n e^{sqrt(2n)} / (sqrt(2 pi) 2^{3/4} e^{1/4} n^{3/4}).
AsymptoticEstimate unlabeled_asymptotic_log(std::size_t n,
                                            const std::optional<Count>& exact = std::nullopt);

/// c = sum_{k>=2} 2^{-k} / (k (1 - 2^{1-k})): the part of log U(x) at x = 1/2
/// that is analytic there (everything except the k = 1 pole term).
double unlabeled_pole_constant();

/// The U_n estimate above times e^c. Without that factor the ratio to U_n
/// tends to e^{-c} = 0.7155...; with it the ratio tends to 1.
AsymptoticEstimate unlabeled_asymptotic_corrected_log(std::size_t n,
                                                      const std::optional<Count>& exact = std::nullopt);

/// a_n B_n ~ n! n / (8 (log 2)^{n+2}). `exact` is a_n B_n itself (not 2 a_n B_n).
AsymptoticEstimate rank_numerator_asymptotic_log(std::size_t n,
                                                 const std::optional<Rational>& exact = std::nullopt);

/// Smooth part of log H_n: n log n - n(1 + log log 2) + sqrt(2n / log 2).
double hierarchical_log_leading(std::size_t n);

struct SaddlePoint {
  double solved = 0.0;      // root of r U'(r)/U(r) = n in (0, 1/2)
  double expansion = 0.0;   // 1/2 - sqrt(8n+1)/(8n) + 1/(8n)
  int iterations = 0;
};

/// Bisection budget for saddle_point.
inline constexpr int kSaddleMaxIterations = 200;

/// r U'(r)/U(r) = sum_{k>=1} r^k / (1 - 2 r^k)^2, summed until terms drop
/// below 1e-16 of the running total. Requires 0 < r < 1/2.
double unlabeled_log_derivative(double r);

/// Solves r U'(r)/U(r) = n by bisection on (0, 1/2). Throws std::runtime_error
/// if the bracket does not shrink below tolerance within kSaddleMaxIterations.
SaddlePoint saddle_point(std::size_t n);

}  // namespace society
