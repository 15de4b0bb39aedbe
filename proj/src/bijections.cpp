#include "tshelf/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "tshelf/patterns.hpp"

namespace tshelf {

// ---------------------------------------------------------------------------
// Set partitions

SetPartition::SetPartition(std::vector<std::vector<Label>> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.size();
  std::vector<bool> seen(total + 1, false);
  Label previous_min = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    if (b.front() <= previous_min) throw std::invalid_argument("blocks not ordered by minimum");
    previous_min = b.front();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Label v = b[i];
      if (i > 0 && v <= b[i - 1]) throw std::invalid_argument("block not ascending");
      if (v < 1 || static_cast<std::size_t>(v) > total || seen[v]) {
        throw std::invalid_argument("blocks do not partition 1.." + std::to_string(total));
      }
      seen[v] = true;
    }
  }
  size_ = total;
}

SetPartition parse_partition(std::string_view text) {
  std::vector<std::vector<Label>> blocks;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed.empty()) return SetPartition();
  std::vector<Label> current;
  std::size_t pos = 0;
  while (true) {
    if (pos >= trimmed.size() || !std::isdigit(static_cast<unsigned char>(trimmed[pos]))) {
      throw ParseError("expected an element", pos);
    }
    Label v = 0;
    while (pos < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[pos]))) {
      if (v > 1'000'000) throw ParseError("element too large", pos);
      v = v * 10 + (trimmed[pos++] - '0');
    }
    current.push_back(v);
    if (pos == trimmed.size()) break;
    if (trimmed[pos] == '|') {
      blocks.push_back(std::move(current));
      current.clear();
    } else if (trimmed[pos] != ',') {
      throw ParseError("expected ',' or '|'", pos);
    }
    ++pos;
  }
  blocks.push_back(std::move(current));
  return SetPartition(std::move(blocks));
}

std::string render(const SetPartition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(p.blocks()[b][i]);
    }
  }
  return out;
}

namespace {

// Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
void grow_partitions(std::vector<int>& rgs, std::size_t i, int max_block,
                     const std::function<void(const SetPartition&)>& visit) {
  if (i == rgs.size()) {
    std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(max_block) + 1);
    for (std::size_t j = 0; j < rgs.size(); ++j) {
      blocks[static_cast<std::size_t>(rgs[j])].push_back(static_cast<Label>(j + 1));
    }
    visit(SetPartition(std::move(blocks)));
    return;
  }
  for (int b = 0; b <= max_block + 1; ++b) {
    rgs[i] = b;
    grow_partitions(rgs, i + 1, std::max(max_block, b), visit);
  }
}

}  // namespace

void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit,
                          int ceiling) {
  check_size(n, ceiling);
  if (n == 0) {
    visit(SetPartition());
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  grow_partitions(rgs, 1, 0, visit);
}

std::vector<SetPartition> all_partitions(int n, int ceiling) {
  std::vector<SetPartition> out;
  enumerate_partitions(n, [&](const SetPartition& p) { out.push_back(p); }, ceiling);
  return out;
}

Treeshelf partition_to_shelf(const SetPartition& p) {
  const std::size_t n = p.size();
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  Label spine = kNoChild;
  for (const auto& block : p.blocks()) {
    if (spine != kNoChild) right[spine] = block.front();
    spine = block.front();
    for (std::size_t i = 0; i + 1 < block.size(); ++i) left[block[i]] = block[i + 1];
  }
  return Treeshelf::from_links(std::move(left), std::move(right));
}

SetPartition shelf_to_partition(const Treeshelf& t) {
  if (!avoids(t, PatternId::LthenR)) {
    throw std::invalid_argument("shelf contains the l-then-r pattern: " + render(t));
  }
  std::vector<std::vector<Label>> blocks;
  for (Label spine = t.root(); spine != kNoChild; spine = t.right(spine)) {
    std::vector<Label> block;
    for (Label v = spine; v != kNoChild; v = t.left(v)) block.push_back(v);
    blocks.push_back(std::move(block));
  }
  return SetPartition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Unordered trees and J-trees

int UnorderedIncTree::child_count(Label v) const {
  const Children& c = children(v);
  return (c[0] != kNoChild ? 1 : 0) + (c[1] != kNoChild ? 1 : 0);
}

UnorderedIncTree UnorderedIncTree::from_children(std::vector<Children> children) {
  UnorderedIncTree tree;
  if (children.size() <= 1) return tree;
  const auto n = static_cast<Label>(children.size() - 1);
  std::vector<std::string> violations;
  std::vector<Label> parent(children.size(), kNoChild);
  children[0] = {kNoChild, kNoChild};
  for (Label v = 1; v <= n; ++v) {
    Children& c = children[static_cast<std::size_t>(v)];
    if (c[0] == kNoChild || (c[1] != kNoChild && c[1] < c[0])) std::swap(c[0], c[1]);
    if (c[0] != kNoChild && c[0] == c[1]) violations.push_back("repeated child " + std::to_string(c[0]));
    for (Label child : c) {
      if (child == kNoChild) continue;
      if (child < 1 || child > n) {
        violations.push_back("child label " + std::to_string(child) + " out of range");
      } else if (parent[child] != kNoChild) {
        violations.push_back("label " + std::to_string(child) + " has two parents");
      } else {
        parent[child] = v;
        if (child <= v) {
          violations.push_back("decreasing edge " + std::to_string(v) + " -> " + std::to_string(child));
        }
      }
    }
  }
  for (Label v = 2; v <= n; ++v) {
    if (parent[v] == kNoChild) violations.push_back("label " + std::to_string(v) + " is detached");
  }
  if (parent[1] != kNoChild) violations.push_back("label 1 is not the root");
  if (!violations.empty()) throw ValidationError(std::move(violations));
  tree.kids_ = std::move(children);
  return tree;
}

JTree JTree::from_parts(UnorderedIncTree shape, std::vector<Side> tags) {
  if (tags.size() < shape.size() + 1) tags.resize(shape.size() + 1, Side::None);
  if (tags.size() != shape.size() + 1) throw std::invalid_argument("tag table has the wrong length");
  const auto n = static_cast<Label>(shape.size());
  for (Label v = 1; v <= n; ++v) {
    const bool only_child = shape.child_count(v) == 1;
    if (only_child != (tags[static_cast<std::size_t>(v)] != Side::None)) {
      throw std::invalid_argument("node " + std::to_string(v) +
                                  (only_child ? " has an untagged only-child" : " carries a stray tag"));
    }
  }
  if (shape.empty()) tags.clear();
  if (!tags.empty()) tags[0] = Side::None;
  JTree j;
  j.shape_ = std::move(shape);
  j.tags_ = std::move(tags);
  return j;
}

namespace {

// Shared reader for the brace/bracket grammar. Produces label-indexed child
// pairs and tags; the caller decides which forms are allowed.
class TreeReader {
 public:
  TreeReader(std::string_view text, bool tagged) : text_(text), tagged_(tagged) {}

  void read() {
    skip_space();
    if (pos_ < text_.size()) {
      node(0);
      skip_space();
      if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    }
    // Size the tables to the largest label seen; validation reports gaps.
    Label max_label = 0;
    for (const auto& [label, parent] : nodes_) max_label = std::max(max_label, label);
    children_.assign(static_cast<std::size_t>(max_label) + 1, {kNoChild, kNoChild});
    tags_.assign(static_cast<std::size_t>(max_label) + 1, Side::None);
    for (const auto& e : edges_) {
      auto& c = children_[static_cast<std::size_t>(e.parent)];
      if (c[0] == kNoChild) {
        c[0] = e.child;
      } else if (c[1] == kNoChild) {
        c[1] = e.child;
      } else {
        throw ValidationError({"label " + std::to_string(e.parent) + " used for two nodes"});
      }
      if (e.side != Side::None) tags_[static_cast<std::size_t>(e.parent)] = e.side;
    }
    std::vector<Label> labels;
    for (const auto& [label, parent] : nodes_) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw ValidationError({"duplicate label"});
    }
    if (!labels.empty() && labels.back() != static_cast<Label>(labels.size())) {
      throw ValidationError({"labels are not 1.." + std::to_string(labels.size())});
    }
  }

  std::vector<UnorderedIncTree::Children>& children() { return children_; }
  std::vector<Side>& tags() { return tags_; }

 private:
  struct Edge {
    Label parent;
    Label child;
    Side side;
  };

  Label node(Label parent) {
    const Label label = number();
    nodes_.emplace_back(label, parent);
    skip_space();
    const char open = peek();
    if (open == '{') {
      ++pos_;
      edges_.push_back({label, node(label), Side::None});
      skip_space();
      if (peek() == ',') {
        ++pos_;
        edges_.push_back({label, node(label), Side::None});
      } else if (tagged_) {
        throw ParseError("only-children of a J-tree need a [L:..] or [R:..] tag", pos_);
      }
      expect('}');
    } else if (open == '[') {
      if (!tagged_) throw ParseError("unordered trees carry no tags", pos_);
      ++pos_;
      skip_space();
      Side side = Side::None;
      if (peek() == 'L') side = Side::Left;
      if (peek() == 'R') side = Side::Right;
      if (side == Side::None) throw ParseError("expected 'L' or 'R'", pos_);
      ++pos_;
      expect(':');
      edges_.push_back({label, node(label), side});
      expect(']');
    }
    return label;
  }

  Label number() {
    skip_space();
    const std::size_t start = pos_;
    Label v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000) throw ParseError("label too large", pos_);
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) throw ParseError("expected a label", pos_);
    if (v < 1) throw ParseError("labels start at 1", start);
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  bool tagged_;
  std::size_t pos_ = 0;
  std::vector<std::pair<Label, Label>> nodes_;
  std::vector<Edge> edges_;
  std::vector<UnorderedIncTree::Children> children_;
  std::vector<Side> tags_;
};

void render_unordered(const UnorderedIncTree& u, const std::vector<Side>* tags, Label v,
                      std::string& out) {
  out += std::to_string(v);
  const auto& c = u.children(v);
  if (c[0] == kNoChild) return;
  if (c[1] != kNoChild) {
    out += '{';
    render_unordered(u, tags, c[0], out);
    out += ',';
    render_unordered(u, tags, c[1], out);
    out += '}';
  } else if (tags) {
    out += (*tags)[static_cast<std::size_t>(v)] == Side::Left ? "[L:" : "[R:";
    render_unordered(u, tags, c[0], out);
    out += ']';
  } else {
    out += '{';
    render_unordered(u, tags, c[0], out);
    out += '}';
  }
}

}  // namespace

UnorderedIncTree parse_unordered(std::string_view text) {
  TreeReader reader(text, false);
  reader.read();
  return UnorderedIncTree::from_children(std::move(reader.children()));
}

JTree parse_jtree(std::string_view text) {
  TreeReader reader(text, true);
  reader.read();
  auto shape = UnorderedIncTree::from_children(std::move(reader.children()));
  return JTree::from_parts(std::move(shape), std::move(reader.tags()));
}

std::string render(const UnorderedIncTree& u) {
  std::string out;
  if (!u.empty()) render_unordered(u, nullptr, u.root(), out);
  return out;
}

std::string render(const JTree& j) {
  std::string out;
  std::vector<Side> tags(j.size() + 1, Side::None);
  for (Label v = 1; v <= static_cast<Label>(j.size()); ++v) tags[static_cast<std::size_t>(v)] = j.tag(v);
  if (j.size() > 0) render_unordered(j.shape(), &tags, j.shape().root(), out);
  return out;
}

namespace {

using Mask = std::uint32_t;
using Continuation = std::function<void()>;

Label lowest(Mask s) { return s == 0 ? kNoChild : static_cast<Label>(__builtin_ctz(s)); }
Mask bit(Label v) { return Mask{1} << v; }

// Builds increasing trees with unordered sibling pairs on a label mask. When
// `tag_only_children` is set, each only-child is produced once per side.
class UnorderedBuilder {
 public:
  UnorderedBuilder(int n, bool tag_only_children)
      : kids_(static_cast<std::size_t>(n) + 1, {kNoChild, kNoChild}),
        tags_(static_cast<std::size_t>(n) + 1, Side::None),
        tagged_(tag_only_children),
        all_(n == 0 ? 0 : ((Mask{1} << (n + 1)) - 2)) {}

  Mask all() const { return all_; }
  const std::vector<UnorderedIncTree::Children>& kids() const { return kids_; }
  const std::vector<Side>& tags() const { return tags_; }

  void build(Mask s, const Continuation& k) {
    const Label m = lowest(s);
    const Mask rest = s ^ bit(m);
    if (rest == 0) {
      kids_[m] = {kNoChild, kNoChild};
      tags_[m] = Side::None;
      return k();
    }
    const Label low = lowest(rest);
    kids_[m] = {low, kNoChild};
    if (tagged_) {
      tags_[m] = Side::Left;
      build(rest, k);
      tags_[m] = Side::Right;
      build(rest, k);
    } else {
      tags_[m] = Side::None;
      build(rest, k);
    }
    // Unordered pair: the component holding `low` is fixed, the other is non-empty.
    const Mask others = rest ^ bit(low);
    for (Mask with_low = others;; with_low = (with_low - 1) & others) {
      const Mask first = with_low | bit(low);
      const Mask second = others ^ with_low;
      if (second != 0) {
        kids_[m] = {low, lowest(second)};
        tags_[m] = Side::None;
        build(first, [&] { build(second, k); });
      }
      if (with_low == 0) break;
    }
  }

 private:
  std::vector<UnorderedIncTree::Children> kids_;
  std::vector<Side> tags_;
  bool tagged_;
  Mask all_;
};

}  // namespace

void enumerate_unordered(int n, const std::function<void(const UnorderedIncTree&)>& visit,
                         int ceiling) {
  check_size(n, std::min(ceiling, 30));
  if (n == 0) return visit(UnorderedIncTree());
  UnorderedBuilder builder(n, false);
  builder.build(builder.all(), [&] { visit(UnorderedIncTree::from_children(builder.kids())); });
}

void enumerate_jtrees(int n, const std::function<void(const JTree&)>& visit, int ceiling) {
  check_size(n, std::min(ceiling, 30));
  if (n == 0) return visit(JTree());
  UnorderedBuilder builder(n, true);
  builder.build(builder.all(), [&] {
    visit(JTree::from_parts(UnorderedIncTree::from_children(builder.kids()), builder.tags()));
  });
}

std::vector<UnorderedIncTree> all_unordered(int n, int ceiling) {
  std::vector<UnorderedIncTree> out;
  enumerate_unordered(n, [&](const UnorderedIncTree& u) { out.push_back(u); }, ceiling);
  return out;
}

std::vector<JTree> all_jtrees(int n, int ceiling) {
  std::vector<JTree> out;
  enumerate_jtrees(n, [&](const JTree& j) { out.push_back(j); }, ceiling);
  return out;
}

Treeshelf jtree_to_shelf(const JTree& j) {
  const std::size_t n = j.size();
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  for (Label v = 1; v <= static_cast<Label>(n); ++v) {
    const auto& c = j.shape().children(v);
    if (c[1] != kNoChild) {
      right[v] = c[0];  // smaller label to the right
      left[v] = c[1];
    } else if (c[0] != kNoChild) {
      (j.tag(v) == Side::Left ? left : right)[v] = c[0];
    }
  }
  return Treeshelf::from_links(std::move(left), std::move(right));
}

JTree shelf_to_jtree(const Treeshelf& t) {
  if (!avoids(t, PatternId::SiblingsIncreasing)) {
    throw std::invalid_argument("shelf contains the siblings-inc pattern: " + render(t));
  }
  const std::size_t n = t.size();
  std::vector<UnorderedIncTree::Children> kids(n + 1, {kNoChild, kNoChild});
  std::vector<Side> tags(n + 1, Side::None);
  for (Label v = 1; v <= static_cast<Label>(n); ++v) {
    const Label l = t.left(v);
    const Label r = t.right(v);
    kids[static_cast<std::size_t>(v)] = {l, r};
    if ((l == kNoChild) != (r == kNoChild)) {
      tags[static_cast<std::size_t>(v)] = l != kNoChild ? Side::Left : Side::Right;
    }
  }
  return JTree::from_parts(UnorderedIncTree::from_children(std::move(kids)), std::move(tags));
}

Treeshelf standard_representation(const UnorderedIncTree& u) {
  const std::size_t n = u.size();
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  for (Label v = 1; v <= static_cast<Label>(n); ++v) {
    const auto& c = u.children(v);
    right[v] = c[0];
    left[v] = c[1];
  }
  return Treeshelf::from_links(std::move(left), std::move(right));
}

namespace {

struct Links {
  std::vector<Label> left;
  std::vector<Label> right;
};

void shift_at(Links& t, Label v) {
  if (v == kNoChild) return;
  const Label z = t.right[v];
  shift_at(t, z);
  const Label y = t.left[v];
  if (y != kNoChild && z != kNoChild && t.left[z] == kNoChild && z < y) {
    t.left[v] = kNoChild;
    t.left[z] = y;
  }
  shift_at(t, y);
}

// Undoes shift_at in reverse order: a left child of the right child z can
// only have been moved there by the shift at v.
void unshift_at(Links& t, Label v) {
  if (v == kNoChild) return;
  const Label z = t.right[v];
  if (z != kNoChild && t.left[z] != kNoChild) {
    const Label y = t.left[z];
    if (t.left[v] != kNoChild || y <= z) throw std::logic_error("not the image of a shift");
    unshift_at(t, y);
    t.left[z] = kNoChild;
    t.left[v] = y;
  }
  unshift_at(t, z);
}

}  // namespace

Treeshelf shift(const Treeshelf& t) {
  if (t.empty()) return t;
  Links links{t.left_links(), t.right_links()};
  shift_at(links, t.root());
  return Treeshelf::from_links(std::move(links.left), std::move(links.right));
}

Treeshelf unshift(const Treeshelf& t) {
  if (t.empty()) return t;
  Links links{t.left_links(), t.right_links()};
  unshift_at(links, t.root());
  return Treeshelf::from_links(std::move(links.left), std::move(links.right));
}

Treeshelf drop_root(const Treeshelf& t) {
  if (t.empty()) throw std::invalid_argument("cannot drop the root of an empty shelf");
  if (t.left(t.root()) != kNoChild) throw std::invalid_argument("root has a left child");
  const std::size_t n = t.size() - 1;
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  auto lower = [](Label v) { return v == kNoChild ? kNoChild : v - 1; };
  for (Label v = 2; v <= static_cast<Label>(t.size()); ++v) {
    left[v - 1] = lower(t.left(v));
    right[v - 1] = lower(t.right(v));
  }
  return Treeshelf::from_links(std::move(left), std::move(right));
}

Treeshelf unordered_to_ll_avoider(const UnorderedIncTree& u) {
  if (u.empty()) throw std::invalid_argument("the unordered tree needs at least one node");
  return drop_root(shift(standard_representation(u)));
}

UnorderedIncTree ll_avoider_to_unordered(const Treeshelf& t) {
  if (!avoids(t, PatternId::LL)) {
    throw std::invalid_argument("shelf contains the ll pattern: " + render(t));
  }
  const std::size_t n = t.size() + 1;
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  auto raise = [](Label v) { return v == kNoChild ? kNoChild : v + 1; };
  for (Label v = 1; v <= static_cast<Label>(t.size()); ++v) {
    left[v + 1] = raise(t.left(v));
    right[v + 1] = raise(t.right(v));
  }
  right[1] = t.empty() ? kNoChild : 2;
  const Treeshelf standard = unshift(Treeshelf::from_links(std::move(left), std::move(right)));

  std::vector<UnorderedIncTree::Children> kids(n + 1, {kNoChild, kNoChild});
  for (Label v = 1; v <= static_cast<Label>(n); ++v) {
    const Label l = standard.left(v);
    const Label r = standard.right(v);
    if (l != kNoChild && (r == kNoChild || r > l)) {
      throw std::logic_error("unshift did not produce a standard representation");
    }
    kids[static_cast<std::size_t>(v)] = {r, l};
  }
  return UnorderedIncTree::from_children(std::move(kids));
}

}  // namespace tshelf
