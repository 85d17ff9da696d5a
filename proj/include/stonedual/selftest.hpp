#ifndef STONEDUAL_SELFTEST_HPP
#define STONEDUAL_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stonedual {

struct SelftestResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

const std::vector<std::string>& selftest_suites();

/// Randomized law checks for one suite (or "all"), reproducible from the seed.
/// Throws DomainError for an unknown suite.
std::vector<SelftestResult> run_selftest(std::string_view suite, std::uint64_t seed, std::uint64_t count);

}  // namespace stonedual

#endif
