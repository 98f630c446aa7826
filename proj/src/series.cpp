#include "society/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace society {

namespace {

void require_same_flavor(const Series& a, const Series& b) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument("series flavor mismatch");
}

}  // namespace

Series::Series(Flavor flavor, std::vector<Rational> coeffs)
    : flavor_(flavor), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::zero(Flavor flavor, std::size_t order) {
  return Series(flavor, std::vector<Rational>(order + 1));
}

Series Series::constant(Flavor flavor, std::size_t order, const Rational& c) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return Series(flavor, std::move(v));
}

Series Series::x(Flavor flavor, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (order >= 1) v[1] = 1;
  return Series(flavor, std::move(v));
}

Series Series::exp_x(Flavor flavor, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) v[k] = v[k - 1] / static_cast<unsigned long>(k);
  return Series(flavor, std::move(v));
}

Count Series::egf_count(std::size_t n) const {
  Rational scaled = coeffs_.at(n) * Rational(factorial(n));
  if (scaled.get_den() != 1) {
    throw InvariantError("n! * c_n is not an integer at n = " + std::to_string(n));
  }
  return scaled.get_num();
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
  return Series(flavor_, {coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)});
}

bool operator==(const Series& a, const Series& b) {
  return a.flavor_ == b.flavor_ && a.coeffs_ == b.coeffs_;
}

Series operator+(const Series& a, const Series& b) {
  require_same_flavor(a, b);
  const std::size_t ord = std::min(a.order(), b.order());
  std::vector<Rational> v(ord + 1);
  for (std::size_t k = 0; k <= ord; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
  return Series(a.flavor_, std::move(v));
}

Series operator-(const Series& a) {
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -a.coeffs_[k];
  return Series(a.flavor_, std::move(v));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series operator*(const Rational& s, const Series& a) {
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s * a.coeffs_[k];
  return Series(a.flavor_, std::move(v));
}

Series operator+(const Series& a, const Rational& c) {
  auto v = a.coeffs_;
  v[0] += c;
  return Series(a.flavor_, std::move(v));
}

Series operator-(const Series& a, const Rational& c) { return a + Rational(-c); }

Series series_mul(const Series& a, const Series& b) {
  require_same_flavor(a, b);
  const std::size_t ord = std::min(a.order(), b.order());
  std::vector<Rational> v(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= ord; ++j) v[i + j] += a[i] * b[j];
  }
  return Series(a.flavor(), std::move(v));
}

Series series_inv(const Series& a) {
  if (sgn(a[0]) == 0) throw std::domain_error("series_inv: zero constant term");
  const std::size_t ord = a.order();
  std::vector<Rational> v(ord + 1);
  v[0] = 1 / a[0];
  for (std::size_t n = 1; n <= ord; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * v[n - k];
    v[n] = -acc * v[0];
  }
  return Series(a.flavor(), std::move(v));
}

Series series_exp(const Series& a) {
  if (sgn(a[0]) != 0) throw std::domain_error("series_exp: nonzero constant term");
  // With e = exp(a): n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
  const std::size_t ord = a.order();
  std::vector<Rational> e(ord + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= ord; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(a[k]) == 0) continue;
      acc += Rational(static_cast<unsigned long>(k)) * a[k] * e[n - k];
    }
    e[n] = acc / static_cast<unsigned long>(n);
  }
  return Series(a.flavor(), std::move(e));
}

Series series_log(const Series& a) {
  if (a[0] != 1) throw std::domain_error("series_log: constant term must be 1");
  if (a.order() == 0) return Series::zero(a.flavor(), 0);
  return series_integrate(series_mul(series_diff(a), series_inv(a.truncated(a.order() - 1))));
}

Series series_diff(const Series& a) {
  if (a.order() < 1) throw std::invalid_argument("series_diff: order must be >= 1");
  std::vector<Rational> v(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) v[k - 1] = a[k] * static_cast<unsigned long>(k);
  return Series(a.flavor(), std::move(v));
}

Series series_integrate(const Series& a) {
  std::vector<Rational> v(a.order() + 2);
  for (std::size_t k = 0; k <= a.order(); ++k) v[k + 1] = a[k] / static_cast<unsigned long>(k + 1);
  return Series(a.flavor(), std::move(v));
}

Series unlabeled_ogf(std::size_t order) {
  std::vector<Rational> acc(order + 1);
  acc[0] = 1;
  // Multiply in (1 - x^j)^{-m} = sum_i C(m+i-1, i) x^{ij} with m = 2^{j-1}.
  for (std::size_t j = 1; j <= order; ++j) {
    const Count m = Count(1) << static_cast<mp_bitcnt_t>(j - 1);
    std::vector<Count> factor(order / j + 1);
    factor[0] = 1;
    for (std::size_t i = 1; i < factor.size(); ++i) {
      factor[i] = factor[i - 1] * (m + static_cast<unsigned long>(i - 1));
      mpz_divexact_ui(factor[i].get_mpz_t(), factor[i].get_mpz_t(), static_cast<unsigned long>(i));
    }
    std::vector<Rational> next(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      if (sgn(acc[n]) == 0) continue;
      for (std::size_t i = 0; n + i * j <= order; ++i) next[n + i * j] += acc[n] * Rational(factor[i]);
    }
    acc = std::move(next);
  }
  return Series(Flavor::OGF, std::move(acc));
}

Series log_unlabeled_identity(std::size_t order) {
  // x^k / (k (1 - 2x^k)) = sum_{m>=1} 2^{m-1} x^{km} / k.
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t m = 1; k * m <= order; ++m) {
      v[k * m] += make_rational(Count(1) << static_cast<mp_bitcnt_t>(m - 1), static_cast<unsigned long>(k));
    }
  }
  return Series(Flavor::OGF, std::move(v));
}

Series rank_numerator_egf(std::size_t order) {
  const Series ex = Series::exp_x(Flavor::EGF, order);
  const Series shifted = ex - Rational(2);
  const Series numerator = (ex - Rational(1)) * (ex - Rational(3));
  return Rational(-1, 2) * (numerator * series_inv(shifted * shifted));
}

Series ordered_bell_egf(std::size_t order) {
  const Series two = Series::constant(Flavor::EGF, order, 2);
  return series_inv(two - Series::exp_x(Flavor::EGF, order));
}

Series hierarchical_egf(std::size_t order) {
  return series_exp(ordered_bell_egf(order) - Rational(1));
}

Series nested_hierarchical_egf(std::size_t order) {
  const Series sets_of_orderings = series_exp(hierarchical_egf(order) - Rational(1));
  return series_exp(sets_of_orderings - Rational(1));
}

}  // namespace society
