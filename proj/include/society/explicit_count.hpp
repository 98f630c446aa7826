#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace society {

/// Integer partition of n as part multiplicities: m[j] parts equal to j,
/// j = 1..n (m[0] is unused and always 0).
struct PartitionMultiplicity {
  std::vector<std::size_t> m;

  std::size_t total() const;
  friend bool operator==(const PartitionMultiplicity&, const PartitionMultiplicity&) = default;
};

/// Visits every partition of n >= 1 exactly once. Order: parts written in
/// decreasing order, partitions listed in lexicographically decreasing order
/// (6, 5+1, 4+2, 4+1+1, 3+3, ..., 1+1+1+1+1+1).
void for_each_partition(std::size_t n, const std::function<void(const PartitionMultiplicity&)>& visit);

std::vector<PartitionMultiplicity> partitions_of(std::size_t n);

/// One summand n! prod B_j^{m_j} / prod (m_j! (j!)^{m_j}) of the explicit
/// formula for H_n. Throws InvariantError if the multinomial is not exact.
Count explicit_summand(const PartitionMultiplicity& p);

/// Summands for every partition of n, in partitions_of order.
std::vector<Count> explicit_summands(std::size_t n);

/// H_n as the sum over partitions of n. Requires n >= 1.
Count hierarchical_explicit(std::size_t n);

}  // namespace society
