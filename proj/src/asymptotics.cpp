#include "society/asymptotics.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace society {

namespace {

const double kLog2 = std::numbers::ln2;
const double kLogLog2 = std::log(std::numbers::ln2);

std::optional<double> ratio(double log_estimate, const std::optional<Count>& exact) {
  if (!exact) return std::nullopt;
  return std::exp(log_estimate - log_of(*exact));
}

void require_positive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("asymptotic estimate needs n >= 1");
}

}  // namespace

double constant_C() {
  constexpr double pi = std::numbers::pi;
  return 32.0 * pi * pi * std::exp(3.0 - 1.0 / kLog2) * kLog2;
}

double log_constant_C() {
  return std::log(32.0) + 2.0 * std::log(std::numbers::pi) + (3.0 - 1.0 / kLog2) + kLogLog2;
}

double log_factorial(std::size_t n) {
  static std::mutex mutex;
  static std::vector<double> prefix{0.0};
  std::lock_guard lock(mutex);
  while (prefix.size() <= n) {
    prefix.push_back(prefix.back() + std::log(static_cast<double>(prefix.size())));
  }
  return prefix[n];
}

double hierarchical_log_leading(std::size_t n) {
  const double x = static_cast<double>(n);
  return x * std::log(x) - x * (1.0 + kLogLog2) + std::sqrt(2.0 * x / kLog2);
}

AsymptoticEstimate hierarchical_asymptotic_log(std::size_t n, const std::optional<Count>& exact) {
  require_positive(n);
  const double x = static_cast<double>(n);
  const double lv = log_factorial(n) + std::sqrt(2.0 * x / kLog2) - 0.25 * log_constant_C() -
                    0.75 * std::log(x) - x * kLogLog2;
  return {lv, ratio(lv, exact)};
}

AsymptoticEstimate ordered_bell_asymptotic_log(std::size_t n, const std::optional<Count>& exact) {
  require_positive(n);
  const double x = static_cast<double>(n);
  const double lv = log_factorial(n) - kLog2 - (x + 1.0) * kLogLog2;
  return {lv, ratio(lv, exact)};
}

AsymptoticEstimate unlabeled_asymptotic_log(std::size_t n, const std::optional<Count>& exact) {
  require_positive(n);
  const double x = static_cast<double>(n);
  const double lv = x * kLog2 + std::sqrt(2.0 * x) - 0.5 * std::log(2.0 * std::numbers::pi) -
                    0.75 * kLog2 - 0.25 - 0.75 * std::log(x);
  return {lv, ratio(lv, exact)};
}

double unlabeled_pole_constant() {
  double c = 0.0;
  double half_k = 0.25;
  for (int k = 2; k < 200; ++k, half_k *= 0.5) c += half_k / (k * (1.0 - 2.0 * half_k));
  return c;
}

AsymptoticEstimate unlabeled_asymptotic_corrected_log(std::size_t n, const std::optional<Count>& exact) {
  const double lv = unlabeled_asymptotic_log(n).log_value + unlabeled_pole_constant();
  return {lv, ratio(lv, exact)};
}

AsymptoticEstimate rank_numerator_asymptotic_log(std::size_t n,
                                                 const std::optional<Rational>& exact) {
  require_positive(n);
  const double x = static_cast<double>(n);
  const double lv = log_factorial(n) + std::log(x) - std::log(8.0) - (x + 2.0) * kLogLog2;
  AsymptoticEstimate est{lv, std::nullopt};
  if (exact) {
    est.ratio_to_exact = std::exp(lv - (log_of(exact->get_num()) - log_of(exact->get_den())));
  }
  return est;
}

double unlabeled_log_derivative(double r) {
  if (!(r > 0.0 && r < 0.5)) throw std::domain_error("log-derivative needs 0 < r < 1/2");
  double total = 0.0;
  double rk = 1.0;
  while (true) {
    rk *= r;
    const double denom = 1.0 - 2.0 * rk;
    const double term = rk / (denom * denom);
    total += term;
    if (term < 1e-16 * total) break;
  }
  return total;
}

SaddlePoint saddle_point(std::size_t n) {
  require_positive(n);
  const double target = static_cast<double>(n);
  double lo = 0.0;
  double hi = 0.5;
  SaddlePoint sp;
  // The log-derivative increases from 0 to infinity on (0, 1/2).
  while (hi - lo > 1e-16 * hi) {
    if (sp.iterations == kSaddleMaxIterations) {
      throw std::runtime_error("saddle_point: bisection did not converge");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (unlabeled_log_derivative(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++sp.iterations;
  }
  sp.solved = 0.5 * (lo + hi);
  const double e = 8.0 * target;
  sp.expansion = 0.5 - std::sqrt(e + 1.0) / e + 1.0 / e;
  return sp;
}

}  // namespace society
