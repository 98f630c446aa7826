#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace society {

using Label = unsigned;

/// Ordered set-partition of a label set. blocks[0] holds the rank-1
/// (bottom) elements. Labels inside a block are kept ascending.
struct Hierarchy {
  std::vector<std::vector<Label>> blocks;

  std::size_t height() const noexcept { return blocks.size(); }
  Label min_label() const;
  /// Rank (1-based) of `label`, or 0 if absent.
  std::size_t rank_of(Label label) const;

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

/// Unordered collection of hierarchies whose label sets partition {1..n},
/// stored sorted by minimum label.
struct HierarchicalOrdering {
  std::vector<Hierarchy> hierarchies;

  friend bool operator==(const HierarchicalOrdering&, const HierarchicalOrdering&) = default;
};

/// Composition of n: parts[0] is the size of the rank-1 level.
struct Composition {
  std::vector<unsigned> parts;

  unsigned total() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Total order used for the canonical multiset form: by sum, then length,
/// then parts lexicographically.
bool composition_less(const Composition& a, const Composition& b);

/// Multiset of compositions, sorted by composition_less.
using UnlabeledOrdering = std::vector<Composition>;

inline constexpr std::size_t kMaxHierarchiesN = 9;
inline constexpr std::size_t kMaxOrderingsN = 8;
inline constexpr std::size_t kMaxCompositionsN = 20;
inline constexpr std::size_t kMaxUnlabeledOrderingsN = 14;

/// Every ordered set-partition of `labels` (which must be nonempty). The
/// rank-1 block is chosen first among nonempty subsets in increasing
/// bitmask order over the positions of `labels`, then the rest recursively.
void for_each_hierarchy(const std::vector<Label>& labels,
                        const std::function<void(const Hierarchy&)>& visit);

/// Ordered set-partitions of {1..n}, 1 <= n <= kMaxHierarchiesN.
void enumerate_hierarchies(std::size_t n, const std::function<void(const Hierarchy&)>& visit);

/// Hierarchical orderings of {1..n}, 1 <= n <= kMaxOrderingsN. Outer loop
/// over set partitions in restricted-growth order, inner product over the
/// hierarchies of each block.
void enumerate_orderings(std::size_t n, const std::function<void(const HierarchicalOrdering&)>& visit);

/// Compositions of n in lexicographically decreasing order,
/// 1 <= n <= kMaxCompositionsN.
void enumerate_compositions(std::size_t n, const std::function<void(const Composition&)>& visit);

/// Multisets of compositions with total n, 1 <= n <= kMaxUnlabeledOrderingsN,
/// in lexicographic order of their canonical sequences.
void enumerate_unlabeled_orderings(std::size_t n,
                                   const std::function<void(const UnlabeledOrdering&)>& visit);

/// Uniform ordered set-partition of {1..n}. The rank-1 block has size k with
/// probability C(n,k) B_{n-k} / B_n, its members are a uniform k-subset, and
/// the rest is sampled the same way. Deterministic for a given seed.
Hierarchy sample_hierarchy(std::size_t n, std::uint64_t seed);

/// "1,2<3" style text for one hierarchy.
std::string format_hierarchy(const Hierarchy& h);

/// Hierarchies in canonical order joined by " | ".
std::string format_structure(const HierarchicalOrdering& s);

/// Compositions written "(2,1)" and joined by " | ".
std::string format_unlabeled(const UnlabeledOrdering& u);

/// Inverse of format_structure for labels {1..n}. Accepts hierarchies and
/// in-block labels in any order and returns the canonical structure.
/// Throws std::invalid_argument on malformed text, duplicate, out-of-range
/// or missing labels.
HierarchicalOrdering parse_structure(std::string_view text, std::size_t n);

/// Sorts labels inside blocks and hierarchies by minimum label.
void canonicalize(HierarchicalOrdering& s);

}  // namespace society
