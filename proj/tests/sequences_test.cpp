#include "oracles.hpp"
#include "society/explicit_count.hpp"
#include "society/sequences.hpp"
#include "society/series.hpp"

#include <doctest.h>

#include <thread>

using namespace society;

namespace {

std::vector<unsigned long> as_ulongs(SequenceKind kind, std::size_t last) {
  std::vector<unsigned long> out;
  for (const auto& v : shared_prefix(kind, last)) out.push_back(v.get_ui());
  return out;
}

}  // namespace

TEST_CASE("ordered Bell numbers") {
  CHECK(ordered_bell(0) == 1);
  CHECK(as_ulongs(SequenceKind::OrderedBell, 6) == std::vector<unsigned long>{1, 1, 3, 13, 75, 541, 4683});
  // Frozen from the surjection-counting oracle below.
  CHECK(ordered_bell(7) == 47293);
  CHECK(oracle::ordered_set_partitions(7) == 47293);
  for (unsigned n = 1; n <= 6; ++n) CHECK(ordered_bell(n) == oracle::ordered_set_partitions(n));
}

TEST_CASE("hierarchical orderings") {
  CHECK(hierarchical(3) == 23);
  CHECK(as_ulongs(SequenceKind::Hierarchical, 9) ==
        std::vector<unsigned long>{1, 1, 4, 23, 173, 1602, 17575, 222497, 3188806, 50988405});
}

TEST_CASE("nested hierarchical orderings") {
  CHECK(nested_hierarchical(1) == 1);
  CHECK(as_ulongs(SequenceKind::NestedHierarchical, 9) ==
        std::vector<unsigned long>{1, 1, 6, 52, 588, 8174, 134537, 2554647, 54909468, 1316675221});
  CHECK(nested_hierarchical_egf(4).egf_count(4) == 588);
}

TEST_CASE("divisor sums alpha_k") {
  CHECK(unlabeled_alpha(1) == 1);
  CHECK(unlabeled_alpha(2) == 5);
  CHECK(unlabeled_alpha(3) == 13);
  CHECK(unlabeled_alpha(12) == 1 + 2 * 2 + 3 * 4 + 4 * 8 + 6 * 32 + 12 * 2048);
  CHECK_THROWS_AS(unlabeled_alpha(0), std::invalid_argument);
}

TEST_CASE("unlabeled orderings") {
  CHECK(as_ulongs(SequenceKind::Unlabeled, 9) ==
        std::vector<unsigned long>{1, 1, 3, 7, 18, 42, 104, 244, 585, 1373});
  // (alpha_1 U_2 + alpha_2 U_1 + alpha_3 U_0) / 3 = (3 + 5 + 13) / 3
  CHECK(unlabeled(3) == (1 * 3 + 5 * 1 + 13 * 1) / 3);
  const auto brute = oracle::multisets_of_compositions(12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(unlabeled(n) == brute[n]);
  CHECK(unlabeled(12) == 17547);
}

TEST_CASE("compositions") {
  CHECK(compositions(1) == 1);
  CHECK(compositions(3) == 4);
  CHECK(compositions(10) == 512);
  CHECK_THROWS_AS(compositions(0), std::invalid_argument);
  CHECK(shared_value(SequenceKind::Compositions, 0) == 1);
  CHECK(shared_value(SequenceKind::Compositions, 5) == 16);
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(3, 2) == oracle::set_partitions_into(3, 2));
  for (unsigned n = 0; n <= 7; ++n) {
    CHECK(stirling2(n, n) == 1);
    for (unsigned h = 0; h <= n; ++h) CHECK(stirling2(n, h) == oracle::set_partitions_into(n, h));
  }
  CHECK_THROWS_AS(stirling2(3, 4), std::invalid_argument);
}

TEST_CASE("B_n is the sum of h! S(n,h)") {
  for (std::size_t n = 0; n <= 12; ++n) {
    Count total;
    for (std::size_t h = 0; h <= n; ++h) total += factorial(h) * stirling2(n, h);
    CHECK(total == ordered_bell(n));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(9, 0) == 1);
  CHECK_THROWS_AS(binomial(2, 3), std::invalid_argument);
  const auto row = binomial_row(30);
  for (std::size_t k = 0; k <= 30; ++k) CHECK(row[k] == binomial(30, k));
}

TEST_CASE("three sources agree on H_n") {
  for (std::size_t n = 1; n <= 10; ++n) CHECK(hierarchical_explicit(n) == hierarchical(n));
}

TEST_CASE("series coefficients match the tables up to n = 25") {
  const Series b = ordered_bell_egf(25);
  const Series h = hierarchical_egf(25);
  const Series u = unlabeled_ogf(25);
  // 1/(1 - 2x) = sum 2^n x^n
  const Series geometric = series_inv(Series::constant(Flavor::OGF, 25, 1) - Rational(2) * Series::x(Flavor::OGF, 25));
  for (std::size_t n = 0; n <= 25; ++n) {
    CHECK(b.egf_count(n) == ordered_bell(n));
    CHECK(h.egf_count(n) == hierarchical(n));
    CHECK(u[n] == Rational(unlabeled(n)));
    if (n >= 1) CHECK(Rational(2 * compositions(n)) == geometric[n]);
  }
  const Series hh = nested_hierarchical_egf(25);
  for (std::size_t n = 0; n <= 25; ++n) CHECK(hh.egf_count(n) == nested_hierarchical(n));
}

TEST_CASE("tables are append-only and reproducible") {
  SequenceTable t(SequenceKind::Hierarchical);
  t.extend_to(10);
  const auto first = t.values();
  t.extend_to(50);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(t.values()[n] == first[n]);
  CHECK(t.size() == 51);
  t.extend_to(5);
  CHECK(t.size() == 51);

  for (auto kind : {SequenceKind::OrderedBell, SequenceKind::Hierarchical, SequenceKind::Unlabeled,
                    SequenceKind::NestedHierarchical, SequenceKind::Compositions}) {
    SequenceTable a(kind);
    SequenceTable b(kind);
    a.extend_to(50);
    b.extend_to(50);
    for (std::size_t n = 0; n <= 50; ++n) CHECK(to_decimal(a.values()[n]) == to_decimal(b.values()[n]));
    CHECK(a.values()[0] == 1);
  }
}

TEST_CASE("decimal round trip") {
  const Count big = hierarchical(200);
  CHECK(parse_count(to_decimal(big)) == big);
  CHECK(parse_count("0") == 0);
  CHECK_THROWS_AS(parse_count("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_count("12 "), std::invalid_argument);
}

TEST_CASE("concurrent readers see the same values") {
  const Count expected = hierarchical(120);
  std::vector<std::thread> threads;
  std::vector<Count> seen(4);
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&seen, i] { seen[i] = hierarchical(120); });
  }
  for (auto& t : threads) t.join();
  for (const auto& v : seen) CHECK(v == expected);
}

TEST_CASE("sequence names") {
  CHECK(parse_sequence_kind("HH") == SequenceKind::NestedHierarchical);
  CHECK(short_name(SequenceKind::Unlabeled) == "U");
  CHECK_THROWS_AS(parse_sequence_kind("X"), std::invalid_argument);
}
