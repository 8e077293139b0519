// Marked-tree encoding of non-decreasing Deutsch paths.
//
// The backbone is the root-to-bottom spine built from the home run; each
// backbone node carries a bundle of hanging paths, one per mountain. Every
// edge is Single (weight 1) or Double (weight 2). A down-step of size d becomes
// d - 1 Singles followed by one Double, read from the attachment node downward,
// so the total weight of a tree equals the length of its path.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deutsch/path.hpp"

namespace deutsch {

enum class EdgeMark : std::uint8_t { Single, Double };

using MarkSequence = std::vector<EdgeMark>;

struct MarkedTree {
  MarkSequence backbone;
  /// bundles[i] hangs from backbone node i (the root is node 0).
  std::vector<std::vector<MarkSequence>> bundles;

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
};

struct TreeStats {
  std::size_t edge_count = 0;
  std::size_t double_count = 0;
  std::size_t weight = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

struct TreeError {
  enum class Kind {
    BackboneEndsWithSingle,
    BundleCountMismatch,
    EmptyHangingPath,
    HangingPathEndsWithSingle,
  };
  Kind kind;
  /// Backbone node (bundle index) or -1 when not applicable.
  long long node = -1;
  /// Index of the hanging path within its bundle, or -1.
  long long path_index = -1;
  /// Offending mark index, or -1.
  long long mark_index = -1;

  std::string message() const;
  friend bool operator==(const TreeError&, const TreeError&) = default;
};

class DanglingSingles : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidTree : public std::invalid_argument {
 public:
  explicit InvalidTree(std::vector<TreeError> errors);
  const std::vector<TreeError>& errors() const noexcept { return errors_; }

 private:
  std::vector<TreeError> errors_;
};

MarkSequence composition_to_marks(const Composition& parts);
/// Splits after every Double. Throws DanglingSingles if the last mark is Single.
Composition marks_to_composition(const MarkSequence& marks);

/// Throws NotNonDecreasing.
MarkedTree path_to_tree(const ValidatedPath& path);
/// Throws InvalidTree.
ValidatedPath tree_to_path(const MarkedTree& tree);

/// Empty result means the tree is valid.
std::vector<TreeError> validate_tree(const MarkedTree& tree);

TreeStats tree_statistics(const MarkedTree& tree);

/// {"backbone": ["s"|"d", ...], "bundles": [[["s"|"d", ...], ...], ...]}
std::string tree_to_json(const MarkedTree& tree);
/// Throws std::invalid_argument on malformed JSON or marks. Does not validate
/// tree invariants.
MarkedTree tree_from_json(const std::string& text);

/// Streams every valid tree of total weight n, built directly from marks
/// (no paths involved). Order: backbone length, then backbone marks, then bundles.
void for_each_tree(std::size_t weight, const std::function<void(const MarkedTree&)>& visit);

/// Indented text outline: one line per backbone node.
std::string render_outline(const MarkedTree& tree);

}  // namespace deutsch
