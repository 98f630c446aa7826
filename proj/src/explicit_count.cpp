#include "society/explicit_count.hpp"

#include "society/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace society {

std::size_t PartitionMultiplicity::total() const {
  std::size_t s = 0;
  for (std::size_t j = 1; j < m.size(); ++j) s += j * m[j];
  return s;
}

namespace {

void descend(std::size_t remaining, std::size_t max_part, PartitionMultiplicity& cur,
             const std::function<void(const PartitionMultiplicity&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++cur.m[part];
    descend(remaining - part, part, cur, visit);
    --cur.m[part];
  }
}

}  // namespace

void for_each_partition(std::size_t n, const std::function<void(const PartitionMultiplicity&)>& visit) {
  if (n == 0) throw std::invalid_argument("partitions_of: n must be >= 1");
  PartitionMultiplicity cur{std::vector<std::size_t>(n + 1, 0)};
  descend(n, n, cur, visit);
}

std::vector<PartitionMultiplicity> partitions_of(std::size_t n) {
  std::vector<PartitionMultiplicity> out;
  for_each_partition(n, [&](const PartitionMultiplicity& p) { out.push_back(p); });
  return out;
}

Count explicit_summand(const PartitionMultiplicity& p) {
  const std::size_t n = p.total();
  Count denom(1);
  Count bell_product(1);
  for (std::size_t j = 1; j < p.m.size(); ++j) {
    const auto mj = static_cast<unsigned long>(p.m[j]);
    if (mj == 0) continue;
    Count jf_pow;
    mpz_pow_ui(jf_pow.get_mpz_t(), factorial(j).get_mpz_t(), mj);
    denom *= factorial(mj) * jf_pow;
    Count b_pow;
    mpz_pow_ui(b_pow.get_mpz_t(), ordered_bell(j).get_mpz_t(), mj);
    bell_product *= b_pow;
  }
  Count multinomial = factorial(n);
  if (!mpz_divisible_p(multinomial.get_mpz_t(), denom.get_mpz_t())) {
    throw InvariantError("explicit formula: n!/denominator not exact for n = " + std::to_string(n));
  }
  mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), denom.get_mpz_t());
  return multinomial * bell_product;
}

std::vector<Count> explicit_summands(std::size_t n) {
  std::vector<Count> out;
  for_each_partition(n, [&](const PartitionMultiplicity& p) { out.push_back(explicit_summand(p)); });
  return out;
}

Count hierarchical_explicit(std::size_t n) {
  Count total;
  for_each_partition(n, [&](const PartitionMultiplicity& p) { total += explicit_summand(p); });
  return total;
}

}  // namespace society
