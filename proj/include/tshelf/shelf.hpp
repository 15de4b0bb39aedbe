#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tshelf {

// Node labels are 1..n; 0 means "no child".
using Label = int;
inline constexpr Label kNoChild = 0;

// Default resource guard for exhaustive generation (12! ~ 4.8e8 objects).
inline constexpr int kDefaultCeiling = 12;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ResourceLimitError : public std::length_error {
 public:
  ResourceLimitError(int requested, int ceiling);
};

// Throws ResourceLimitError if n > ceiling, std::invalid_argument if n < 0.
void check_size(int n, int ceiling);

/// A binary increasing tree whose child links are tagged left or right.
///
/// Stored as two label-indexed link tables; entry 0 is unused so that
/// left(v)/right(v) index directly by label. Instances are always valid:
/// labels are exactly 1..n, every non-root label has one parent with a
/// smaller label, and the root (when present) is 1.
class Treeshelf {
 public:
  Treeshelf() = default;

  // Links are indexed by label (size n + 1, entry 0 ignored). Throws
  // ValidationError if the links do not describe a treeshelf on 1..n.
  static Treeshelf from_links(std::vector<Label> left, std::vector<Label> right);

  std::size_t size() const { return left_.empty() ? 0 : left_.size() - 1; }
  bool empty() const { return size() == 0; }
  Label root() const { return empty() ? kNoChild : 1; }
  Label left(Label v) const { return left_[static_cast<std::size_t>(v)]; }
  Label right(Label v) const { return right_[static_cast<std::size_t>(v)]; }

  const std::vector<Label>& left_links() const { return left_; }
  const std::vector<Label>& right_links() const { return right_; }

  friend bool operator==(const Treeshelf&, const Treeshelf&) = default;
  friend auto operator<=>(const Treeshelf&, const Treeshelf&) = default;

 private:
  std::vector<Label> left_;
  std::vector<Label> right_;
};

/// Unvalidated tree as read from text: arbitrary labels, index-linked nodes.
struct RawNode {
  long long label = 0;
  int left = -1;
  int right = -1;
};

struct RawTree {
  std::vector<RawNode> nodes;
  int root = -1;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const RawTree& tree);
Treeshelf to_shelf(const RawTree& tree);
RawTree to_raw(const Treeshelf& shelf);

// Grammar: shelf := "" | node ; node := LABEL [ "(" [node] "," [node] ")" ].
// Whitespace between tokens is tolerated on input and never emitted.
RawTree parse_raw(std::string_view text);
Treeshelf parse_shelf(std::string_view text);
std::string render(const Treeshelf& shelf);

class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

Permutation parse_permutation(std::string_view text);
std::string render(const Permutation& perm);

// In-order traversal; the node labelled l contributes the value n + 1 - l.
Permutation shelf_to_permutation(const Treeshelf& shelf);
// Maximum value becomes the root, the prefix the left t-shelf, the suffix the right one.
Treeshelf permutation_to_shelf(const Permutation& perm);

Treeshelf mirror(const Treeshelf& shelf);

using ShelfVisitor = std::function<void(const Treeshelf&)>;

/// Visits every size-n treeshelf once, in increasing lexicographic order of
/// render(). Throws ResourceLimitError when n exceeds the ceiling.
void enumerate_shelves(int n, const ShelfVisitor& visit, int ceiling = kDefaultCeiling);

std::vector<Treeshelf> all_shelves(int n, int ceiling = kDefaultCeiling);

}  // namespace tshelf
