#pragma once

#include "wbinom/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wb {

struct IntRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// "lo..hi" or a single integer
IntRange parse_range(std::string_view text);

struct SuiteConfig {
  std::string suite = "all";
  std::optional<IntRange> n, m, k, window, alpha;
  std::optional<int> span;  // truncation / conv2 width, suite dependent
  std::optional<std::uint64_t> seed;
  std::optional<EllipticParams> params;
  int samples = 3;
  double tolerance = 1e-9;
};

struct SuiteRecord {
  std::string suite;
  std::string name;
  std::vector<int> instance;
  bool pass = false;
  double residual = 0.0;
  std::string lhs;  // kept for failures and numeric checks only
  std::string rhs;
};

const std::vector<std::string>& suite_names();  // without "all"
std::vector<SuiteRecord> run_suite(const SuiteConfig& cfg);

std::string instance_key(const SuiteRecord& r);
std::string report_json(const std::vector<SuiteRecord>& records);
std::string report_csv(const std::vector<SuiteRecord>& records);

}  // namespace wb
