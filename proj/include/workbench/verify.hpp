#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace workbench {

enum class Suite { PsiIdentities, Characters, Frobenius, Crt, CrossedRelations };

const char* suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& name);

struct SuiteReport {
  std::string suite;
  unsigned bound = 1;
  std::uint64_t seed = 0;
  bool passed = true;
  std::size_t items = 0;    // values of n visited
  std::size_t checked = 0;  // individual identities checked
  std::string counterexample;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Runs the suite for n = 1..bound. Items are independent and run in
/// parallel; the report (including the first counterexample, by n) does not
/// depend on the thread count.
SuiteReport run_suite(Suite s, unsigned bound, std::uint64_t seed = 0);
/// Serial reference implementation of run_suite.
SuiteReport run_suite_serial(Suite s, unsigned bound, std::uint64_t seed = 0);

}  // namespace workbench
