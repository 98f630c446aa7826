#include "society/sequences.hpp"

#include <array>
#include <mutex>
#include <string>

namespace society {

std::string_view short_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::OrderedBell: return "B";
    case SequenceKind::Hierarchical: return "H";
    case SequenceKind::Unlabeled: return "U";
    case SequenceKind::NestedHierarchical: return "HH";
    case SequenceKind::Compositions: return "C";
  }
  return "?";
}

SequenceKind parse_sequence_kind(std::string_view name) {
  if (name == "B") return SequenceKind::OrderedBell;
  if (name == "H") return SequenceKind::Hierarchical;
  if (name == "U") return SequenceKind::Unlabeled;
  if (name == "HH") return SequenceKind::NestedHierarchical;
  if (name == "C") return SequenceKind::Compositions;
  throw std::invalid_argument("unknown sequence kind '" + std::string(name) +
                              "' (expected B, H, U, HH or C)");
}

namespace {

std::vector<Count> alpha_prefix(std::size_t n) {
  std::vector<Count> alpha(n + 1);
  for (std::size_t d = 1; d <= n; ++d) {
    Count term = Count(1) << static_cast<mp_bitcnt_t>(d - 1);
    term *= static_cast<unsigned long>(d);
    for (std::size_t k = d; k <= n; k += d) alpha[k] += term;
  }
  return alpha;
}

// X_n = sum_{k=1}^{n} C(n-1,k-1) Y_k X_{n-k}, the coefficient recurrence of
// X(x) = exp(Y(x) - 1) for e.g.f.s; `x` holds X_0..X_{n-1}.
Count exp_formula_step(std::size_t n, const std::vector<Count>& y, const std::vector<Count>& x) {
  Count acc;
  Count c(1);
  Count term;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      c *= static_cast<unsigned long>(n - k + 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k - 1));
    }
    term = c * y[k];
    mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), x[n - k].get_mpz_t());
  }
  return acc;
}

std::vector<Count> exp_formula_prefix(const std::vector<Count>& y) {
  std::vector<Count> x{Count(1)};
  x.reserve(y.size());
  while (x.size() < y.size()) x.push_back(exp_formula_step(x.size(), y, x));
  return x;
}

}  // namespace

SequenceTable::SequenceTable(SequenceKind kind) : kind_(kind), values_{Count(1)} {}

void SequenceTable::extend_to(std::size_t n) {
  if (n < values_.size()) return;

  // The recurrences for H and HH convolve against another sequence; U
  // convolves against the divisor sums. Fetch that once for the whole fill.
  // HH sits two exponential levels above H: sets of hierarchical orderings
  // G = exp(H - 1) first, then HH = exp(G - 1).
  std::vector<Count> inner;
  switch (kind_) {
    case SequenceKind::Hierarchical: inner = shared_prefix(SequenceKind::OrderedBell, n); break;
    case SequenceKind::NestedHierarchical:
      inner = exp_formula_prefix(shared_prefix(SequenceKind::Hierarchical, n));
      break;
    case SequenceKind::Unlabeled: inner = alpha_prefix(n); break;
    default: break;
  }

  values_.reserve(n + 1);
  while (values_.size() <= n) values_.push_back(next_value(values_.size(), inner));
}

const Count& SequenceTable::at(std::size_t n) {
  extend_to(n);
  return values_[n];
}

Count SequenceTable::next_value(std::size_t n, const std::vector<Count>& inner) const {
  Count acc;
  switch (kind_) {
    case SequenceKind::OrderedBell: {
      // B_n = sum_{k=1}^{n} C(n,k) B_{n-k}, from B(x)(2 - e^x) = 1.
      Count c(1);
      for (std::size_t k = 1; k <= n; ++k) {
        c *= static_cast<unsigned long>(n - k + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
        mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), values_[n - k].get_mpz_t());
      }
      return acc;
    }
    case SequenceKind::Hierarchical:
    case SequenceKind::NestedHierarchical:
      return exp_formula_step(n, inner, values_);
    case SequenceKind::Unlabeled: {
      for (std::size_t k = 1; k <= n; ++k) {
        mpz_addmul(acc.get_mpz_t(), inner[k].get_mpz_t(), values_[n - k].get_mpz_t());
      }
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n))) {
        throw InvariantError("U_" + std::to_string(n) + " recurrence sum not divisible by n");
      }
      mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
      return acc;
    }
    case SequenceKind::Compositions:
      return Count(1) << static_cast<mp_bitcnt_t>(n - 1);
  }
  return acc;
}

namespace {

struct SharedTable {
  explicit SharedTable(SequenceKind kind) : table(kind) {}
  std::mutex mutex;
  SequenceTable table;
};

SharedTable& shared(SequenceKind kind) {
  static std::array<SharedTable, 5> tables{
      SharedTable(SequenceKind::OrderedBell), SharedTable(SequenceKind::Hierarchical),
      SharedTable(SequenceKind::Unlabeled), SharedTable(SequenceKind::NestedHierarchical),
      SharedTable(SequenceKind::Compositions)};
  return tables[static_cast<std::size_t>(kind)];
}

}  // namespace

Count shared_value(SequenceKind kind, std::size_t n) {
  auto& s = shared(kind);
  std::lock_guard lock(s.mutex);
  return s.table.at(n);
}

std::vector<Count> shared_prefix(SequenceKind kind, std::size_t n) {
  auto& s = shared(kind);
  std::lock_guard lock(s.mutex);
  s.table.extend_to(n);
  const auto& v = s.table.values();
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

Count ordered_bell(std::size_t n) { return shared_value(SequenceKind::OrderedBell, n); }
Count hierarchical(std::size_t n) { return shared_value(SequenceKind::Hierarchical, n); }
Count nested_hierarchical(std::size_t n) {
  return shared_value(SequenceKind::NestedHierarchical, n);
}
Count unlabeled(std::size_t n) { return shared_value(SequenceKind::Unlabeled, n); }

Count unlabeled_alpha(std::size_t k) {
  if (k == 0) throw std::invalid_argument("unlabeled_alpha: k must be >= 1");
  Count acc;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    Count term = Count(1) << static_cast<mp_bitcnt_t>(d - 1);
    acc += term * static_cast<unsigned long>(d);
  }
  return acc;
}

Count compositions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("compositions: n must be >= 1");
  return Count(1) << static_cast<mp_bitcnt_t>(n - 1);
}

std::vector<Count> stirling2_row(std::size_t n) {
  std::vector<Count> row(n + 1);
  row[0] = 1;
  // Row m is built in place from row m-1, right to left.
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t h = m; h >= 1; --h) {
      row[h] *= static_cast<unsigned long>(h);
      row[h] += row[h - 1];
    }
    row[0] = 0;
  }
  return row;
}

Count stirling2(std::size_t n, std::size_t h) {
  if (h > n) throw std::invalid_argument("stirling2: h must not exceed n");
  return stirling2_row(n)[h];
}

Count binomial(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("binomial: k must not exceed n");
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<Count> binomial_row(std::size_t n) {
  std::vector<Count> row(n + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * static_cast<unsigned long>(n - k + 1);
    mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), static_cast<unsigned long>(k));
  }
  return row;
}

namespace testing {

void corrupt_shared_entry(SequenceKind kind, std::size_t n, const Count& value) {
  auto& s = shared(kind);
  std::lock_guard lock(s.mutex);
  s.table.extend_to(n);
  s.table.values_[n] = value;
}

void reset_shared_tables() {
  for (auto kind : {SequenceKind::OrderedBell, SequenceKind::Hierarchical, SequenceKind::Unlabeled,
                    SequenceKind::NestedHierarchical, SequenceKind::Compositions}) {
    auto& s = shared(kind);
    std::lock_guard lock(s.mutex);
    s.table = SequenceTable(kind);
  }
}

}  // namespace testing

}  // namespace society
