// Deutsch paths: up-steps (1,1) and down-steps (1,-j) for any j >= 1.
//
// Paths start and end on the ground and never dip below it. The subclass of
// interest keeps the levels of its valleys weakly increasing from left to
// right ("non-decreasing" paths).
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deutsch {

class Step {
 public:
  static constexpr Step up() noexcept { return Step{0}; }
  /// Throws std::invalid_argument when size == 0.
  static Step down(std::uint32_t size);

  constexpr bool is_up() const noexcept { return drop_ == 0; }
  constexpr bool is_down() const noexcept { return drop_ != 0; }
  /// Size of a down-step; 0 for an up-step.
  constexpr std::uint32_t size() const noexcept { return drop_; }
  constexpr long long rise() const noexcept {
    return is_up() ? 1 : -static_cast<long long>(drop_);
  }

  // U < D1 < D2 < ... matches the ordering of drop_.
  friend constexpr auto operator<=>(Step, Step) noexcept = default;

 private:
  explicit constexpr Step(std::uint32_t drop) noexcept : drop_(drop) {}
  std::uint32_t drop_;
};

class DeutschPath {
 public:
  DeutschPath() = default;
  explicit DeutschPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  friend auto operator<=>(const DeutschPath&, const DeutschPath&) = default;
  friend bool operator==(const DeutschPath&, const DeutschPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// A path known to stay at or above the ground and to end on it.
class ValidatedPath {
 public:
  ValidatedPath() = default;  // the empty path

  const DeutschPath& path() const noexcept { return path_; }
  const std::vector<Step>& steps() const noexcept { return path_.steps(); }
  std::size_t length() const noexcept { return path_.length(); }
  bool empty() const noexcept { return path_.empty(); }

  friend auto operator<=>(const ValidatedPath&, const ValidatedPath&) = default;
  friend bool operator==(const ValidatedPath&, const ValidatedPath&) = default;

 private:
  friend struct PathAccess;
  explicit ValidatedPath(DeutschPath p) : path_(std::move(p)) {}
  DeutschPath path_;
};

struct PathError {
  enum class Kind { NegativeExcursion, NonzeroEnd };
  Kind kind;
  /// 1-based index of the first step that goes below ground (NegativeExcursion).
  std::size_t position = 0;
  /// Height after the last step (NonzeroEnd).
  long long final_height = 0;

  std::string message() const;
  friend bool operator==(const PathError&, const PathError&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPath : public std::invalid_argument {
 public:
  explicit InvalidPath(PathError e);
  const PathError& error() const noexcept { return error_; }

 private:
  PathError error_;
};

class NotNonDecreasing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Text form: tokens "U" and "D<k>" separated by single spaces.

DeutschPath parse_path(std::string_view text);
std::string render_path(const DeutschPath& path);
inline std::string render_path(const ValidatedPath& path) {
  return render_path(path.path());
}
std::string render_step(Step s);

/// JSON record {"steps": ["U","D1",...]}.
std::string path_to_json(const DeutschPath& path);

// ---------------------------------------------------------------------------
// Validation and valley analysis.

std::variant<ValidatedPath, PathError> validate(const DeutschPath& path);
/// Throws InvalidPath.
ValidatedPath require_valid(const DeutschPath& path);

/// Heights at lattice points 0..n (size n + 1).
std::vector<long long> heights(const DeutschPath& path);

/// Levels of interior points preceded by a down-step and followed by an up-step.
std::vector<long long> valley_levels(const ValidatedPath& path);
bool is_nondecreasing(const ValidatedPath& path);

// ---------------------------------------------------------------------------
// Mountains and the bundle/backbone decomposition.

/// Ordered positive parts.
using Composition = std::vector<std::uint32_t>;

struct Mountain {
  std::uint32_t ups = 0;
  Composition descent;

  std::size_t length() const noexcept { return ups + descent.size(); }
  bool valid() const noexcept;
  friend bool operator==(const Mountain&, const Mountain&) = default;
};

/// U^j followed only by down-steps summing to j.
std::optional<Mountain> as_mountain(const ValidatedPath& path);
std::vector<Step> mountain_steps(const Mountain& m);

struct Decomposition {
  std::uint32_t height = 0;
  /// bundles[i] holds the mountains based at level i, left to right.
  std::vector<std::vector<Mountain>> bundles;
  Composition homerun;

  bool valid() const noexcept;
  std::size_t length() const noexcept;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws NotNonDecreasing.
Decomposition decompose(const ValidatedPath& path);
/// Throws std::invalid_argument if the decomposition invariants fail.
ValidatedPath compose(const Decomposition& dec);

// ---------------------------------------------------------------------------
// Generation. Visitors see paths in canonical order: lexicographic on tokens
// with U < D1 < D2 < ...

using PathVisitor = std::function<void(const ValidatedPath&)>;

/// Streams every Deutsch path of length n.
void for_each_deutsch(std::size_t n, const PathVisitor& visit);
std::vector<ValidatedPath> enumerate_deutsch(std::size_t n);

/// Brute force: every Deutsch path of length n filtered by is_nondecreasing.
void for_each_nondecreasing_filter(std::size_t n, const PathVisitor& visit);
std::vector<ValidatedPath> enumerate_nondecreasing_filter(std::size_t n);

/// Structural: composes every decomposition of total length n, then sorts.
std::vector<ValidatedPath> enumerate_nondecreasing_direct(std::size_t n);
void for_each_decomposition(std::size_t n,
                            const std::function<void(const Decomposition&)>& visit);

/// All compositions of `total` (any number of parts), lexicographic order.
void for_each_composition(std::uint32_t total,
                          const std::function<void(const Composition&)>& visit);

// ---------------------------------------------------------------------------
// Statistics.

struct PathStats {
  std::size_t length = 0;
  std::size_t up_count = 0;
  std::size_t downstep_count = 0;
  std::size_t total_fall = 0;
  long long height = 0;
  std::vector<long long> valley_levels;
};

PathStats path_stats(const ValidatedPath& path);

struct StatisticsReport {
  std::size_t length = 0;
  std::vector<ValidatedPath> paths;
  std::vector<PathStats> records;
  std::map<std::size_t, std::size_t> downstep_histogram;
  std::map<long long, std::size_t> height_histogram;
  std::map<std::size_t, std::size_t> valley_count_histogram;
};

/// Aggregates over all non-decreasing paths of length n.
StatisticsReport statistics(std::size_t n);

}  // namespace deutsch
