#pragma once

// Oracle suites comparing independent computations on seeded random inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace kee {

enum class Suite { Lemmas, SValues, ZariskiOracle, RouteAgreement, Halving, DeltaBound };

std::span<const Suite> all_suites();
std::string suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteResult {
  Suite suite = Suite::Lemmas;
  bool passed = true;
  std::size_t checked = 0;
  // Input and reason of the first failure.
  std::optional<std::string> counterexample;
};

// `samples` is per checked family: per closed form for Lemmas, per
// S formula for SValues, and per input otherwise.
SuiteResult run_suite(Suite suite, std::size_t samples, std::uint64_t seed);

}  // namespace kee
