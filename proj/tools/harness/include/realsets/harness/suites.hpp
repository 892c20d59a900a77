#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "realsets/series.hpp"

namespace realsets::harness {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  ApproxLevel level{32};
};

struct SuiteReport {
  std::string instance;
  std::string suite;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  std::size_t invalid = 0;
  /// Details of the first few non-passing cases.
  std::vector<std::string> notes;
  /// Suites whose cases each assert that something is refuted.
  bool expected_negative = false;

  void record(std::size_t index, const Check& c);
  bool clean() const { return fail == 0 && invalid == 0 && inconclusive == 0; }
};

struct UnknownName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> instance_names();
/// Suites registered for one instance; throws UnknownName.
std::vector<std::string> suite_names(const std::string& instance);

/// Runs `cases` seeded cases. Each case draws from CaseRng(seed, index), so
/// the report depends only on the arguments. Throws UnknownName.
SuiteReport run_suite(const std::string& instance, const std::string& suite, const SuiteConfig& config);

/// Plain-text report, byte-identical for identical inputs.
std::string render(const SuiteReport& report, const SuiteConfig& config);

}  // namespace realsets::harness
