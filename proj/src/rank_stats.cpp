#include "society/rank_stats.hpp"

#include "society/asymptotics.hpp"
#include "society/sequences.hpp"
#include "society/series.hpp"

#include <stdexcept>
#include <string>

namespace society {

namespace {

void require_positive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rank statistics need n >= 1");
}

// Builds the distribution from unnormalized per-rank tail sums.
RankDistribution from_tails(std::size_t n, const std::vector<Count>& tails, const Count& total) {
  RankDistribution d;
  d.n = n;
  d.probs.reserve(n);
  for (std::size_t r = 1; r <= n; ++r) {
    d.probs.push_back(make_rational(tails[r], total));
    d.mean += d.probs.back() * static_cast<unsigned long>(r);
  }
  return d;
}

// sum_{i=1}^{n} (i+1)! S(n,i) = 2 a_n B_n.
Count twice_rank_numerator(std::size_t n) {
  const auto s = stirling2_row(n);
  Count total;
  Count fact(2);  // (i+1)! for i = 1
  for (std::size_t i = 1; i <= n; ++i) {
    total += fact * s[i];
    fact *= static_cast<unsigned long>(i + 2);
  }
  return total;
}

}  // namespace

void check_distribution(const RankDistribution& d) {
  Rational sum;
  Rational first_moment;
  Rational tail_sum;
  Rational tail(1);
  for (std::size_t r = 1; r <= d.probs.size(); ++r) {
    const Rational& p = d.probs[r - 1];
    if (sgn(p) < 0) throw InvariantError("negative probability at rank " + std::to_string(r));
    if (r > 1 && p > d.probs[r - 2]) {
      throw InvariantError("probabilities increase at rank " + std::to_string(r));
    }
    sum += p;
    first_moment += p * static_cast<unsigned long>(r);
    tail_sum += tail;
    tail -= p;
  }
  if (sum != 1) throw InvariantError("probabilities sum to " + to_string(sum));
  if (first_moment != d.mean) throw InvariantError("mean is not sum r P(r)");
  if (tail_sum != d.mean) throw InvariantError("mean is not sum P(rank >= r)");
}

RankDistribution labeled_rank_distribution(std::size_t n) {
  require_positive(n);
  const auto s = stirling2_row(n);
  std::vector<Count> tails(n + 2);
  Count fact = factorial(n - 1);  // (i-1)! for i = n, walked downward
  for (std::size_t i = n; i >= 1; --i) {
    tails[i] = tails[i + 1] + fact * s[i];
    if (i > 1) mpz_divexact_ui(fact.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(i - 1));
  }
  return from_tails(n, tails, ordered_bell(n));
}

Rational labeled_average_rank(std::size_t n) {
  require_positive(n);
  return make_rational(twice_rank_numerator(n), 2 * ordered_bell(n));
}

RankDistribution unlabeled_rank_distribution(std::size_t n) {
  require_positive(n);
  const auto c = binomial_row(n);
  std::vector<Count> tails(n + 2);
  for (std::size_t i = n; i >= 1; --i) tails[i] = tails[i + 1] + c[i];
  return from_tails(n, tails, compositions(n) * static_cast<unsigned long>(n));
}

std::vector<Count> rank_numerator_values(std::size_t order) {
  std::vector<Count> out(order + 1);
  for (std::size_t n = 1; n <= order; ++n) out[n] = twice_rank_numerator(n);
  if (order <= kRankNumeratorCrossCheckLimit) {
    const Series egf = rank_numerator_egf(order);
    for (std::size_t n = 0; n <= order; ++n) {
      if (2 * egf.egf_count(n) != out[n]) {
        throw InvariantError("rank numerator disagrees with its e.g.f. at n = " + std::to_string(n));
      }
    }
  }
  return out;
}

double labeled_rank_asymptotic_check(std::size_t n) {
  require_positive(n);
  const Rational exact = make_rational(twice_rank_numerator(n), 2);
  const auto est = rank_numerator_asymptotic_log(n, exact);
  return 1.0 / *est.ratio_to_exact;
}

}  // namespace society
