#include "society/structures.hpp"

#include "society/sequences.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace society {

Label Hierarchy::min_label() const {
  Label m = std::numeric_limits<Label>::max();
  for (const auto& b : blocks) {
    if (!b.empty()) m = std::min(m, b.front());
  }
  return m;
}

std::size_t Hierarchy::rank_of(Label label) const {
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    if (std::binary_search(blocks[r].begin(), blocks[r].end(), label)) return r + 1;
  }
  return 0;
}

unsigned Composition::total() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

bool composition_less(const Composition& a, const Composition& b) {
  const unsigned sa = a.total();
  const unsigned sb = b.total();
  if (sa != sb) return sa < sb;
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  return a.parts < b.parts;
}

namespace {

void require_guard(std::size_t n, std::size_t limit, const char* what) {
  if (n < 1 || n > limit) {
    throw std::out_of_range(std::string(what) + ": n must be in 1.." + std::to_string(limit));
  }
}

void hierarchy_step(const std::vector<Label>& remaining, Hierarchy& cur,
                    const std::function<void(const Hierarchy&)>& visit) {
  const std::size_t m = remaining.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<Label> rest;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<Label> block;
    rest.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        block.push_back(remaining[i]);
      } else {
        rest.push_back(remaining[i]);
      }
    }
    cur.blocks.push_back(std::move(block));
    if (rest.empty()) {
      visit(cur);
    } else {
      hierarchy_step(rest, cur, visit);
    }
    cur.blocks.pop_back();
  }
}

// Set partitions of {1..n} by restricted growth strings; blocks come out
// ordered by their minimum label.
void set_partition_step(Label next, Label n, std::vector<std::vector<Label>>& blocks,
                        const std::function<void(const std::vector<std::vector<Label>>&)>& visit) {
  if (next > n) {
    visit(blocks);
    return;
  }
  // Indexed loop: the recursion appends to `blocks`.
  for (std::size_t i = 0, count = blocks.size(); i < count; ++i) {
    blocks[i].push_back(next);
    set_partition_step(next + 1, n, blocks, visit);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  set_partition_step(next + 1, n, blocks, visit);
  blocks.pop_back();
}

void ordering_product(const std::vector<std::vector<Label>>& blocks, std::size_t i,
                      HierarchicalOrdering& cur,
                      const std::function<void(const HierarchicalOrdering&)>& visit) {
  if (i == blocks.size()) {
    visit(cur);
    return;
  }
  for_each_hierarchy(blocks[i], [&](const Hierarchy& h) {
    cur.hierarchies.push_back(h);
    ordering_product(blocks, i + 1, cur, visit);
    cur.hierarchies.pop_back();
  });
}

void composition_step(unsigned remaining, Composition& cur,
                      const std::function<void(const Composition&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (unsigned first = remaining; first >= 1; --first) {
    cur.parts.push_back(first);
    composition_step(remaining - first, cur, visit);
    cur.parts.pop_back();
  }
}

void multiset_step(const std::vector<Composition>& pool, std::size_t min_index, unsigned remaining,
                   UnlabeledOrdering& cur, const std::function<void(const UnlabeledOrdering&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (std::size_t i = min_index; i < pool.size(); ++i) {
    const unsigned size = pool[i].total();
    // Pool is sorted by size first, so nothing later fits either.
    if (size > remaining) break;
    cur.push_back(pool[i]);
    multiset_step(pool, i, remaining - size, cur, visit);
    cur.pop_back();
  }
}

using Engine = std::mt19937_64;

std::uint64_t uniform_u64_below(std::uint64_t bound, Engine& rng) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// Exactly uniform on [0, bound) by rejection over whole 64-bit words.
Count uniform_count_below(const Count& bound, Engine& rng) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  Count draw;
  do {
    draw = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t word = rng();
      draw <<= 32;
      draw += static_cast<unsigned long>(word >> 32);
      draw <<= 32;
      draw += static_cast<unsigned long>(word & 0xffffffffu);
    }
    mpz_fdiv_r_2exp(draw.get_mpz_t(), draw.get_mpz_t(), bits);
  } while (draw >= bound);
  return draw;
}

}  // namespace

void for_each_hierarchy(const std::vector<Label>& labels,
                        const std::function<void(const Hierarchy&)>& visit) {
  if (labels.empty()) throw std::invalid_argument("hierarchy over an empty label set");
  if (labels.size() > 31) throw std::out_of_range("too many labels to enumerate");
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  Hierarchy cur;
  hierarchy_step(sorted, cur, visit);
}

void enumerate_hierarchies(std::size_t n, const std::function<void(const Hierarchy&)>& visit) {
  require_guard(n, kMaxHierarchiesN, "enumerate_hierarchies");
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  for_each_hierarchy(labels, visit);
}

void enumerate_orderings(std::size_t n, const std::function<void(const HierarchicalOrdering&)>& visit) {
  require_guard(n, kMaxOrderingsN, "enumerate_orderings");
  std::vector<std::vector<Label>> blocks;
  HierarchicalOrdering cur;
  set_partition_step(1, static_cast<Label>(n), blocks,
                     [&](const std::vector<std::vector<Label>>& partition) {
                       ordering_product(partition, 0, cur, visit);
                     });
}

void enumerate_compositions(std::size_t n, const std::function<void(const Composition&)>& visit) {
  require_guard(n, kMaxCompositionsN, "enumerate_compositions");
  Composition cur;
  composition_step(static_cast<unsigned>(n), cur, visit);
}

void enumerate_unlabeled_orderings(std::size_t n,
                                   const std::function<void(const UnlabeledOrdering&)>& visit) {
  require_guard(n, kMaxUnlabeledOrderingsN, "enumerate_unlabeled_orderings");
  std::vector<Composition> pool;
  for (std::size_t size = 1; size <= n; ++size) {
    enumerate_compositions(size, [&](const Composition& c) { pool.push_back(c); });
  }
  std::sort(pool.begin(), pool.end(), composition_less);
  UnlabeledOrdering cur;
  multiset_step(pool, 0, static_cast<unsigned>(n), cur, visit);
}

Hierarchy sample_hierarchy(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_hierarchy: n must be >= 1");
  Engine rng(seed);
  std::vector<Label> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<Label>(i + 1);

  Hierarchy h;
  while (!remaining.empty()) {
    const std::size_t m = remaining.size();
    const Count draw = uniform_count_below(ordered_bell(m), rng);
    const auto binom = binomial_row(m);
    Count threshold;
    std::size_t k = 0;
    while (draw >= threshold) {
      ++k;
      threshold += binom[k] * ordered_bell(m - k);
    }
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_u64_below(m - i, rng));
      std::swap(remaining[i], remaining[j]);
    }
    std::vector<Label> block(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(block.begin(), block.end());
    h.blocks.push_back(std::move(block));
    remaining.erase(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(remaining.begin(), remaining.end());
  }
  return h;
}

std::string format_hierarchy(const Hierarchy& h) {
  std::string out;
  for (std::size_t r = 0; r < h.blocks.size(); ++r) {
    if (r > 0) out += '<';
    for (std::size_t i = 0; i < h.blocks[r].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(h.blocks[r][i]);
    }
  }
  return out;
}

std::string format_structure(const HierarchicalOrdering& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hierarchies.size(); ++i) {
    if (i > 0) out += " | ";
    out += format_hierarchy(s.hierarchies[i]);
  }
  return out;
}

std::string format_unlabeled(const UnlabeledOrdering& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += " | ";
    out += '(';
    for (std::size_t j = 0; j < u[i].parts.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(u[i].parts[j]);
    }
    out += ')';
  }
  return out;
}

void canonicalize(HierarchicalOrdering& s) {
  for (auto& h : s.hierarchies) {
    for (auto& b : h.blocks) std::sort(b.begin(), b.end());
  }
  std::sort(s.hierarchies.begin(), s.hierarchies.end(),
            [](const Hierarchy& a, const Hierarchy& b) { return a.min_label() < b.min_label(); });
}

namespace {

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw std::invalid_argument("malformed structure '" + std::string(text) + "': " + why);
}

}  // namespace

HierarchicalOrdering parse_structure(std::string_view text, std::size_t n) {
  if (text.empty()) malformed(text, "empty");
  std::vector<bool> seen(n + 1, false);
  HierarchicalOrdering s;
  for (std::string_view htext : split(text, " | ")) {
    if (htext.empty()) malformed(text, "empty hierarchy");
    Hierarchy h;
    for (std::string_view btext : split(htext, "<")) {
      if (btext.empty()) malformed(text, "empty block");
      std::vector<Label> block;
      for (std::string_view ltext : split(btext, ",")) {
        if (ltext.empty()) malformed(text, "empty label");
        if (ltext.size() > 1 && ltext.front() == '0') malformed(text, "leading zero in label");
        unsigned long value = 0;
        for (char ch : ltext) {
          if (ch < '0' || ch > '9') malformed(text, std::string("unexpected character '") + ch + "'");
          value = value * 10 + static_cast<unsigned long>(ch - '0');
          if (value > n) break;
        }
        if (value < 1 || value > n) {
          throw std::invalid_argument("label " + std::string(ltext) + " outside 1.." + std::to_string(n));
        }
        if (seen[value]) throw std::invalid_argument("duplicate label " + std::to_string(value));
        seen[value] = true;
        block.push_back(static_cast<Label>(value));
      }
      h.blocks.push_back(std::move(block));
    }
    s.hierarchies.push_back(std::move(h));
  }
  for (std::size_t label = 1; label <= n; ++label) {
    if (!seen[label]) throw std::invalid_argument("missing label " + std::to_string(label));
  }
  canonicalize(s);
  return s;
}

}  // namespace society
