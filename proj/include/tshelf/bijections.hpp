#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tshelf/shelf.hpp"

namespace tshelf {

// ---------------------------------------------------------------------------
// Set partitions

/// Blocks of {1..n}, ordered by their minima, each block ascending.
class SetPartition {
 public:
  SetPartition() = default;
  // Throws std::invalid_argument unless the blocks are canonical and cover 1..n.
  explicit SetPartition(std::vector<std::vector<Label>> blocks);

  const std::vector<std::vector<Label>>& blocks() const { return blocks_; }
  std::size_t size() const { return size_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<Label>> blocks_;
  std::size_t size_ = 0;
};

// Blocks separated by '|', elements by ','; e.g. "1,3|2". Empty text is the
// partition of the empty set.
SetPartition parse_partition(std::string_view text);
std::string render(const SetPartition& p);

void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit,
                          int ceiling = kDefaultCeiling);
std::vector<SetPartition> all_partitions(int n, int ceiling = kDefaultCeiling);

/// Root min S1 carrying the left chain S1 \ {min S1}; the right t-shelf is
/// built from the remaining blocks. The image avoids LthenR.
Treeshelf partition_to_shelf(const SetPartition& p);
/// Reads one block per right-spine node. Rejects shelves containing LthenR.
SetPartition shelf_to_partition(const Treeshelf& t);

// ---------------------------------------------------------------------------
// Unordered binary increasing trees and J-trees

/// Increasing tree with at most two unordered children per node. Children are
/// stored ascending, absent slots are kNoChild and come last.
class UnorderedIncTree {
 public:
  using Children = std::array<Label, 2>;

  UnorderedIncTree() = default;
  // Indexed by label (entry 0 ignored). Child order within a node is
  // irrelevant on input. Throws ValidationError on a malformed tree.
  static UnorderedIncTree from_children(std::vector<Children> children);

  std::size_t size() const { return kids_.empty() ? 0 : kids_.size() - 1; }
  bool empty() const { return size() == 0; }
  Label root() const { return empty() ? kNoChild : 1; }
  const Children& children(Label v) const { return kids_[static_cast<std::size_t>(v)]; }
  int child_count(Label v) const;

  friend bool operator==(const UnorderedIncTree&, const UnorderedIncTree&) = default;
  friend auto operator<=>(const UnorderedIncTree&, const UnorderedIncTree&) = default;

 private:
  std::vector<Children> kids_;
};

enum class Side { None, Left, Right };

/// Unordered sibling pairs, but every only-child keeps a left/right tag.
class JTree {
 public:
  JTree() = default;
  // tags[v] must be Left or Right exactly when v has one child.
  static JTree from_parts(UnorderedIncTree shape, std::vector<Side> tags);

  const UnorderedIncTree& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  Side tag(Label v) const { return tags_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const JTree&, const JTree&) = default;
  friend auto operator<=>(const JTree&, const JTree&) = default;

 private:
  UnorderedIncTree shape_;
  std::vector<Side> tags_;
};

// Text forms extend the shelf grammar: `1{2,3}` for a sibling pair, `1{2}`
// for the only child of an unordered tree, `1[L:2]` / `1[R:2]` for a tagged
// only-child of a J-tree. Children are written in ascending label order.
UnorderedIncTree parse_unordered(std::string_view text);
JTree parse_jtree(std::string_view text);
std::string render(const UnorderedIncTree& u);
std::string render(const JTree& j);

void enumerate_unordered(int n, const std::function<void(const UnorderedIncTree&)>& visit,
                         int ceiling = kDefaultCeiling);
void enumerate_jtrees(int n, const std::function<void(const JTree&)>& visit,
                      int ceiling = kDefaultCeiling);
std::vector<UnorderedIncTree> all_unordered(int n, int ceiling = kDefaultCeiling);
std::vector<JTree> all_jtrees(int n, int ceiling = kDefaultCeiling);

/// Orders sibling pairs smaller-label-right; only-children keep their tag.
/// The image avoids SiblingsIncreasing.
Treeshelf jtree_to_shelf(const JTree& j);
/// Forgets sibling order. Rejects shelves containing SiblingsIncreasing.
JTree shelf_to_jtree(const Treeshelf& t);

/// Sibling pairs ordered smaller-label-right, only-children placed right.
Treeshelf standard_representation(const UnorderedIncTree& u);

/// Recursive shift: shift the right t-shelf, move the root's left child y
/// under its right sibling z when z < y and z has no left child, then shift
/// the subtree of y at its (possibly new) position.
Treeshelf shift(const Treeshelf& t);
/// Inverse of shift on shifted standard representations. Throws
/// std::logic_error when the input is not such an image.
Treeshelf unshift(const Treeshelf& t);

/// Deletes a root without left child and lowers every label by one.
Treeshelf drop_root(const Treeshelf& t);

/// Size n+1 unordered tree -> size n LL-avoider: standard representation,
/// shift, drop_root.
Treeshelf unordered_to_ll_avoider(const UnorderedIncTree& u);
/// Inverse: raise labels, add a new root 1 with the shelf as right t-shelf,
/// unshift, forget order. Rejects shelves containing LL.
UnorderedIncTree ll_avoider_to_unordered(const Treeshelf& t);

}  // namespace tshelf
