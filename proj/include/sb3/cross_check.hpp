#pragma once

// Three-way agreement harness: Burau matrices, the tau-peeling recursion and
// pinch reduction in SG3 must give the same verdict on every sampled pair,
// and the verdict must match how the pair was built (equal pairs equal,
// near misses unequal). Optionally the Birman images are compared too: eta
// separates exactly the pairs the solvers separate.
//
// cross_check runs samples under OpenMP; cross_check_serial is the reference
// loop. Both produce identical reports for identical configs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sb3/random_words.hpp"
#include "sb3/solver.hpp"

namespace sb3 {

inline constexpr std::size_t kMaxSampleLength = 256;

struct CrossCheckConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t max_len = 16;
  bool with_birman = false;
};

struct SampleOutcome {
  std::uint64_t index = 0;
  SamplePair pair;
  bool burau = false;
  bool recursion = false;
  bool pinch = false;
  std::optional<bool> eta_equal;
  std::string error;

  bool agree() const;
  /// Verdicts agree, match the construction, and (if computed) eta agrees.
  bool ok() const;
};

struct CrossCheckReport {
  CrossCheckConfig config;
  std::size_t equal_verdicts = 0;
  std::size_t unequal_verdicts = 0;
  std::size_t birman_checked = 0;
  /// Failed samples, in sample-index order, with all three traces.
  std::vector<SampleOutcome> failures;
  std::vector<std::vector<std::string>> failure_traces;

  bool passed() const { return failures.empty(); }
};

SampleOutcome run_sample(const CrossCheckConfig& cfg, std::uint64_t index);

CrossCheckReport cross_check(const CrossCheckConfig& cfg);
CrossCheckReport cross_check_serial(const CrossCheckConfig& cfg);

}  // namespace sb3
