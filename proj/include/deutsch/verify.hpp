// Cross-checks between brute force, structural generation, generating
// functions, closed forms and the tree bijection.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace deutsch {

struct VerifyOptions {
  /// Largest length checked.
  std::size_t max_n = 12;
  /// Brute-force enumeration is skipped above this length.
  std::size_t brute_cap = 14;
  /// Order for series-only comparisons.
  std::size_t series_order = 64;
  /// Random cases for the star identity.
  std::size_t star_cases = 100;
  std::uint64_t seed = 20241017;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// The six non-decreasing paths of length 5 in the order the tree figures use,
/// with their marked trees in JSON.
struct FigurePair {
  const char* path;
  const char* tree_json;
};
const std::vector<FigurePair>& length5_figures();

}  // namespace deutsch
