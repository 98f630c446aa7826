#include "society/sequences.hpp"
#include "society/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace society;

namespace {

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace

TEST_CASE("quick verification passes on a clean build") {
  const auto results = run_verification(VerifyLevel::Quick);
  CHECK(results.size() == 18);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("a corrupted table entry is caught") {
  testing::corrupt_shared_entry(SequenceKind::Hierarchical, 5, Count(1603));
  const auto results = run_verification(VerifyLevel::Quick);
  CHECK_FALSE(all_passed(results));
  const auto listed = std::find_if(results.begin(), results.end(),
                                   [](const CheckResult& r) { return r.name == "H_0..H_9 listed values"; });
  REQUIRE(listed != results.end());
  CHECK_FALSE(listed->passed);
  CHECK(listed->detail.find("1603") != std::string::npos);

  testing::reset_shared_tables();
  CHECK(hierarchical(5) == 1602);
  CHECK(all_passed(run_verification(VerifyLevel::Quick)));
}

TEST_CASE("expanded H_6 reference sums to H_6") {
  unsigned long total = 0;
  for (auto t : expanded_h6_summands()) total += t;
  CHECK(total == 17575);
  CHECK(expanded_h6_summands().size() == 11);
}
