// Command-line front end: sequences, asymptotic tables, rank statistics,
// structure listings and the verification suite.

#include "society/asymptotics.hpp"
#include "society/rank_stats.hpp"
#include "society/sequences.hpp"
#include "society/structures.hpp"
#include "society/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using namespace society;

struct RangeArgs {
  std::string kind;
  std::size_t from = 0;
  std::size_t to = 0;
  std::string format = "bfile";
};

void require_range(const RangeArgs& a) {
  if (a.from > a.to) throw std::invalid_argument("bad range: from > to");
}

int cmd_seq(const RangeArgs& a) {
  const SequenceKind kind = parse_sequence_kind(a.kind);
  require_range(a);
  const auto values = shared_prefix(kind, a.to);
  if (a.format == "bfile") {
    for (std::size_t n = a.from; n <= a.to; ++n) std::cout << n << ' ' << to_decimal(values[n]) << '\n';
  } else if (a.format == "csv") {
    std::cout << "n,exact\n";
    for (std::size_t n = a.from; n <= a.to; ++n) std::cout << n << ',' << to_decimal(values[n]) << '\n';
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t n = a.from; n <= a.to; ++n) out.push_back({{"n", n}, {"exact", to_decimal(values[n])}});
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

std::optional<AsymptoticEstimate> estimate_for(SequenceKind kind, std::size_t n, const Count& exact) {
  if (n == 0) return std::nullopt;
  switch (kind) {
    case SequenceKind::OrderedBell: return ordered_bell_asymptotic_log(n, exact);
    case SequenceKind::Hierarchical: return hierarchical_asymptotic_log(n, exact);
    case SequenceKind::Unlabeled: return unlabeled_asymptotic_log(n, exact);
    default: break;
  }
  throw std::invalid_argument("table supports only B, H and U");
}

std::string exact_or_log(const Count& value, std::size_t max_digits) {
  if (mpz_sizeinbase(value.get_mpz_t(), 10) <= max_digits) return to_decimal(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "log10≈%.6f", log_of(value) / std::numbers::ln10);
  return buf;
}

int cmd_table(const RangeArgs& a, std::size_t max_digits) {
  const SequenceKind kind = parse_sequence_kind(a.kind);
  require_range(a);
  if (kind != SequenceKind::OrderedBell && kind != SequenceKind::Hierarchical &&
      kind != SequenceKind::Unlabeled) {
    throw std::invalid_argument("table supports only B, H and U");
  }
  const auto values = shared_prefix(kind, a.to);
  const bool json = a.format == "json";
  nlohmann::json out = nlohmann::json::array();
  if (!json) std::cout << "n,exact,log_asymptotic,ratio\n";
  for (std::size_t n = a.from; n <= a.to; ++n) {
    const auto est = estimate_for(kind, n, values[n]);
    const std::string exact = exact_or_log(values[n], max_digits);
    if (json) {
      nlohmann::json rec{{"n", n}, {"exact", exact}};
      if (est) {
        rec["asymptotic"] = est->log_value;
        rec["ratio"] = *est->ratio_to_exact;
      }
      out.push_back(std::move(rec));
    } else {
      char buf[96] = "";
      if (est) std::snprintf(buf, sizeof buf, "%.12g,%.12g", est->log_value, *est->ratio_to_exact);
      std::cout << n << ',' << exact << ',' << (est ? buf : ",") << '\n';
    }
  }
  if (json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_rank(std::size_t n, const std::string& model) {
  if (n == 0) throw std::invalid_argument("rank needs n >= 1");
  const bool labeled = model == "labeled";
  const RankDistribution d = labeled ? labeled_rank_distribution(n) : unlabeled_rank_distribution(n);
  for (std::size_t r = 1; r <= n; ++r) std::cout << r << ": " << to_string(d.prob(r)) << ", ";
  std::cout << "mean " << to_string(d.mean) << '\n';
  if (labeled) {
    std::printf("mean ~ %.10g, n/(4 log 2) = %.10g\n", d.mean.get_d(),
                static_cast<double>(n) / (4.0 * std::numbers::ln2));
  }
  return 0;
}

int cmd_enum(std::size_t n, const std::string& model) {
  std::uint64_t count = 0;
  if (model == "labeled") {
    enumerate_orderings(n, [&](const HierarchicalOrdering& s) {
      std::cout << format_structure(s) << '\n';
      ++count;
    });
  } else {
    enumerate_unlabeled_orderings(n, [&](const UnlabeledOrdering& u) {
      std::cout << format_unlabeled(u) << '\n';
      ++count;
    });
  }
  std::cout << "count: " << count << '\n';
  return 0;
}

int cmd_verify(const std::string& level, bool inject_fault) {
  if (inject_fault) testing::corrupt_shared_entry(SequenceKind::Hierarchical, 5, Count(1603));
  const auto results = run_verification(level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_sample(std::size_t n, std::uint64_t seed) {
  std::cout << format_hierarchy(sample_hierarchy(n, seed)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical orderings: exact counts, asymptotics, rank statistics"};
  app.require_subcommand(1);

  RangeArgs range;
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("kind", range.kind, "Sequence: B, H, U, HH or C")->required();
    sub->add_option("from,--from", range.from, "First index")->required();
    sub->add_option("to,--to", range.to, "Last index")->required();
  };

  auto* seq = app.add_subcommand("seq", "Print exact sequence values");
  add_range(seq);
  seq->add_option("format,--format", range.format, "bfile, csv or json")
      ->check(CLI::IsMember({"bfile", "csv", "json"}));

  auto* table = app.add_subcommand("table", "Exact values against their asymptotic estimates");
  add_range(table);
  std::size_t max_digits = 1000000;
  table->add_option("--format", range.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--max-digits", max_digits, "Print log10 instead of values with more digits");

  std::size_t n = 0;
  std::string model = "labeled";
  auto* rank = app.add_subcommand("rank", "Exact rank distribution of a random hierarchy");
  rank->add_option("n", n, "Number of elements")->required();
  rank->add_option("model,--model", model)->check(CLI::IsMember({"labeled", "unlabeled"}));

  auto* enumerate = app.add_subcommand("enum", "List every hierarchical ordering of n elements");
  enumerate->add_option("n", n, "Number of elements")->required();
  enumerate->add_option("model,--model", model)->check(CLI::IsMember({"labeled", "unlabeled"}));

  std::string level = "quick";
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("level,--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--inject-fault", inject_fault, "Corrupt H_5 before checking")->group("");

  std::uint64_t seed = 1;
  auto* sample = app.add_subcommand("sample", "Draw a uniform random hierarchy");
  sample->add_option("n", n, "Number of elements")->required();
  sample->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*seq) return cmd_seq(range);
    if (*table) {
      if (range.format == "bfile") range.format = "csv";
      return cmd_table(range, max_digits);
    }
    if (*rank) return cmd_rank(n, model);
    if (*enumerate) return cmd_enum(n, model);
    if (*verify) return cmd_verify(level, inject_fault);
    if (*sample) return cmd_sample(n, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
