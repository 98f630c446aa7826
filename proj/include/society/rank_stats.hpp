#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <vector>

namespace society {

/// Distribution of the rank of a uniformly chosen element in a uniformly
/// chosen hierarchy on n elements. probs[r - 1] = P(rank = r), r = 1..n.
struct RankDistribution {
  std::size_t n = 0;
  std::vector<Rational> probs;
  Rational mean;

  const Rational& prob(std::size_t rank) const { return probs.at(rank - 1); }
};

/// Throws InvariantError unless probs sum to 1, are non-increasing and
/// nonnegative, and mean equals both sum r P(r) and sum P(rank >= r).
void check_distribution(const RankDistribution& d);

/// P(rank = r) = (1/B_n) sum_{i=r}^{n} (i-1)! S(n,i). Requires n >= 1.
RankDistribution labeled_rank_distribution(std::size_t n);

/// a_n = (1/(2 B_n)) sum_{i=1}^{n} (i+1)! S(n,i). Requires n >= 1.
Rational labeled_average_rank(std::size_t n);

/// P(rank = r) = (1/(n 2^{n-1})) sum_{i=r}^{n} C(n,i); mean is (n+3)/4.
/// Requires n >= 1.
RankDistribution unlabeled_rank_distribution(std::size_t n);

/// 2 a_n B_n = sum_{i=1}^{n} (i+1)! S(n,i) for n = 0..order.
///
/// For order <= kRankNumeratorCrossCheckLimit the values are also compared
/// with the coefficients of the closed-form e.g.f.; a mismatch throws
/// InvariantError.
std::vector<Count> rank_numerator_values(std::size_t order);

inline constexpr std::size_t kRankNumeratorCrossCheckLimit = 30;

/// Exact a_n B_n divided by n! n / (8 (log 2)^{n+2}), in log space.
double labeled_rank_asymptotic_check(std::size_t n);

}  // namespace society
