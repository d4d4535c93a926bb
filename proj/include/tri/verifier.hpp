#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tri/freeness.hpp"
#include "tri/trigraph.hpp"

namespace tri {

// Exhaustive bounds and sampling defaults.
constexpr int kTheoremDefaultN = 5;
constexpr int kOracleMaxN = 4;
constexpr int kDeleteThreeMaxN = 6;
constexpr int kDiamondMaxN = 5;
constexpr int kK33OrPrismExhaustiveN = 5;
constexpr int kK33OrPrismSampledMaxN = 7;
constexpr int kLemma45MaxN = 7;
constexpr int kDecompositionMaxN = 10;
constexpr int kDefaultSamples = 1000;
constexpr int kMaxHostSize = 14;
constexpr int kMaxGrowth = 6;
constexpr std::size_t kStoredCounterexamples = 20;

struct VerifyOptions {
  std::optional<int> n;            ///< size bound; property default when absent
  int samples = kDefaultSamples;   ///< sampled properties
  std::uint64_t seed = 1;          ///< trial i uses seed + i
  std::optional<bool> modulo_iso;  ///< property default when absent
  bool triangle_rims = false;      ///< wheels may have a rim of length 3
};

struct Counterexample {
  Trigraph g;
  std::string diagnostic;
};

struct PropertyReport {
  std::string id;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;  ///< the first few failures
  double elapsed_seconds = 0;
  std::vector<std::pair<std::string, std::uint64_t>> stats;
  std::vector<std::string> rows;  ///< per-size or per-check detail lines
  bool report_only = false;

  bool pass() const { return failures == 0; }
  /// Value of a named statistic, 0 if absent.
  std::uint64_t stat(const std::string& name) const;
};

const std::vector<std::string>& property_ids();

/// Throws InputError on an unknown id or a bound outside the supported range.
PropertyReport verify(const std::string& id, const VerifyOptions& opts = {});

/// Every {ISK4,wheel}-free trigraph on 1..n_max vertices has a non-empty classification.
PropertyReport verify_theorem(int n_max, bool modulo_iso, WheelOptions wheel = {});

/// Detectors and recognizers against the brute-force oracles on 1..n_max vertices.
PropertyReport verify_oracle_agreement(int n_max, WheelOptions wheel = {});

/// Structured text; ends with "result pass" or "result fail".
std::string format_report(const PropertyReport& r);

}  // namespace tri
