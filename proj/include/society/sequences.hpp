#pragma once

#include "society/count.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace society {

enum class SequenceKind {
  OrderedBell,         // B_n, ordered set-partitions (hierarchies)
  Hierarchical,        // H_n, hierarchical orderings
  Unlabeled,           // U_n, multisets of compositions
  NestedHierarchical,  // HH_n, hierarchies of hierarchical orderings
  Compositions,        // 2^{n-1}, seeded with 1 at n = 0
};

std::string_view short_name(SequenceKind kind);

namespace testing {
void corrupt_shared_entry(SequenceKind kind, std::size_t n, const Count& value);
}

/// Accepts the CLI names B, H, U, HH, C.
SequenceKind parse_sequence_kind(std::string_view name);

/// Append-only table of an integer sequence indexed from n = 0.
///
/// Extending never rewrites an existing entry. Tables whose recurrence
/// depends on another sequence (H on B, HH on H) pull those values from the
/// process-wide shared tables.
class SequenceTable {
public:
  explicit SequenceTable(SequenceKind kind);

  SequenceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Count>& values() const noexcept { return values_; }

  /// Grows the table so that index n is present.
  void extend_to(std::size_t n);

  /// Value at n, extending first if needed.
  const Count& at(std::size_t n);

private:
  friend void testing::corrupt_shared_entry(SequenceKind, std::size_t, const Count&);

  Count next_value(std::size_t n, const std::vector<Count>& inner) const;

  SequenceKind kind_;
  std::vector<Count> values_;
};

/// Copy of entry n from the process-wide memo table for `kind`.
/// Safe to call from several threads.
Count shared_value(SequenceKind kind, std::size_t n);

/// Entries 0..n (inclusive) of the shared table for `kind`.
std::vector<Count> shared_prefix(SequenceKind kind, std::size_t n);

Count ordered_bell(std::size_t n);
Count hierarchical(std::size_t n);
Count nested_hierarchical(std::size_t n);
Count unlabeled(std::size_t n);

/// Divisor sum sum_{d | k} d * 2^{d-1}. Requires k >= 1.
Count unlabeled_alpha(std::size_t k);

/// 2^{n-1}. Requires n >= 1.
Count compositions(std::size_t n);

/// Stirling number of the second kind. Requires h <= n.
Count stirling2(std::size_t n, std::size_t h);

/// S(n, 0..n) computed from the triangle recurrence.
std::vector<Count> stirling2_row(std::size_t n);

/// Requires k <= n.
Count binomial(std::size_t n, std::size_t k);

/// C(n, 0..n).
std::vector<Count> binomial_row(std::size_t n);

namespace testing {

/// Overwrites entry n of the shared table for `kind`, extending it first.
/// Exists only so the verification suite can be shown to detect a bad
/// table; never used on a normal code path.
void corrupt_shared_entry(SequenceKind kind, std::size_t n, const Count& value);

/// Drops every shared table so the next access recomputes from scratch.
void reset_shared_tables();

}  // namespace testing

}  // namespace society
