#pragma once

// The twelve acceptance fixtures, shared by the acceptance test binary and
// the `reproduce` subcommand of the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/counting.hpp"

namespace frobsplit {

struct FixtureInfo {
  std::size_t id;    // 1..12
  std::string name;  // e.g. "gvd-blowup"
  std::string summary;
};

/// In criterion order.
const std::vector<FixtureInfo>& acceptance_fixtures();
/// Throws PreconditionError for an unknown name.
const FixtureInfo& fixture_by_name(std::string_view name);

struct AcceptanceOptions {
  /// Replaces the criterion's list of primes. Ignored by stabilization, which
  /// compares a fixed list.
  std::optional<std::uint32_t> p;
  std::uint64_t budget = kDefaultPointBudget;
  std::uint64_t seed = 20261016;
};

struct CriterionResult {
  std::size_t id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> metrics;  // insertion order
  std::vector<std::string> failures;                      // first few, for diagnosis
};

/// Runs one criterion. Exceptions thrown by the library are caught and
/// reported as failures.
CriterionResult run_criterion(std::size_t id, const AcceptanceOptions& options = {});

}  // namespace frobsplit
