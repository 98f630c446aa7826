#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <vector>

namespace society {

enum class Flavor { EGF, OGF };

/// Truncated power series with exact rational coefficients.
///
/// Holds coefficients 0..order inclusive. Binary operations require the same
/// flavor and truncate to the smaller order. The flavor only records how the
/// coefficients are meant to be read: multiplication is the plain Cauchy
/// product either way.
class Series {
public:
  Series(Flavor flavor, std::vector<Rational> coeffs);

  static Series zero(Flavor flavor, std::size_t order);
  static Series constant(Flavor flavor, std::size_t order, const Rational& c);
  /// x itself (x^1), truncated at `order`.
  static Series x(Flavor flavor, std::size_t order);
  /// e^x = sum x^k / k!.
  static Series exp_x(Flavor flavor, std::size_t order);

  Flavor flavor() const noexcept { return flavor_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// n! * c_n; throws InvariantError if that is not an integer.
  Count egf_count(std::size_t n) const;

  Series truncated(std::size_t order) const;

  friend bool operator==(const Series& a, const Series& b);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& s, const Series& a);
  friend Series operator+(const Series& a, const Rational& c);
  friend Series operator-(const Series& a, const Rational& c);

private:
  Flavor flavor_;
  std::vector<Rational> coeffs_;
};

Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse. Requires a nonzero constant term.
Series series_inv(const Series& a);

/// exp(a) via (exp a)' = a' exp(a). Requires a zero constant term.
Series series_exp(const Series& a);

/// log(a) via (log a)' = a'/a. Requires constant term exactly 1.
Series series_log(const Series& a);

/// Formal derivative; the result has order one less. Requires order >= 1.
Series series_diff(const Series& a);

/// Formal antiderivative with zero constant term; order one more.
Series series_integrate(const Series& a);

/// prod_{j>=1} (1 - x^j)^{-2^{j-1}} as an OGF.
Series unlabeled_ogf(std::size_t order);

/// sum_{k>=1} x^k / (k (1 - 2 x^k)) as an OGF; equals log of unlabeled_ogf.
Series log_unlabeled_identity(std::size_t order);

/// -(1/2)(e^x - 1)(e^x - 3)/(e^x - 2)^2 as an EGF.
Series rank_numerator_egf(std::size_t order);

/// 1/(2 - e^x).
Series ordered_bell_egf(std::size_t order);

/// exp(B(x) - 1).
Series hierarchical_egf(std::size_t order);

/// exp(G(x) - 1) with G(x) = exp(H(x) - 1): the e.g.f. whose coefficients
/// are HH_n = 1, 1, 6, 52, 588, ...
Series nested_hierarchical_egf(std::size_t order);

}  // namespace society
