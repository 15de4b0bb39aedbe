#include "tshelf/shelf.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <utility>

namespace tshelf {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid treeshelf";
  for (const auto& v : violations) {
    out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)),
      violations_(std::move(violations)) {}

ResourceLimitError::ResourceLimitError(int requested, int ceiling)
    : std::length_error("size " + std::to_string(requested) +
                        " exceeds the enumeration ceiling " + std::to_string(ceiling)) {}

void check_size(int n, int ceiling) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (n > ceiling) throw ResourceLimitError(n, ceiling);
}

Treeshelf Treeshelf::from_links(std::vector<Label> left, std::vector<Label> right) {
  if (left.size() != right.size()) {
    throw ValidationError({"left and right link tables differ in length"});
  }
  Treeshelf shelf;
  if (left.size() <= 1) return shelf;

  const auto n = static_cast<Label>(left.size() - 1);
  std::vector<std::string> violations;
  std::vector<Label> parent(left.size(), kNoChild);
  auto attach = [&](Label p, Label c) {
    if (c == kNoChild) return;
    if (c < 1 || c > n) {
      violations.push_back("link from " + std::to_string(p) + " to out-of-range label " +
                           std::to_string(c));
      return;
    }
    if (parent[c] != kNoChild) {
      violations.push_back("label " + std::to_string(c) + " has two parents");
      return;
    }
    parent[c] = p;
    if (c <= p) {
      violations.push_back("decreasing edge " + std::to_string(p) + " -> " + std::to_string(c));
    }
  };
  for (Label v = 1; v <= n; ++v) {
    attach(v, left[v]);
    attach(v, right[v]);
  }
  if (parent[1] != kNoChild) violations.push_back("label 1 is not the root");
  for (Label v = 2; v <= n; ++v) {
    if (parent[v] == kNoChild) violations.push_back("label " + std::to_string(v) + " is detached");
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  left[0] = right[0] = kNoChild;
  shelf.left_ = std::move(left);
  shelf.right_ = std::move(right);
  return shelf;
}

// ---------------------------------------------------------------------------
// Validation of raw candidate trees

ValidationReport validate(const RawTree& tree) {
  ValidationReport report;
  if (tree.root < 0) {
    if (!tree.nodes.empty()) report.violations.push_back("nodes present without a root");
    return report;
  }

  std::vector<int> seen_count(tree.nodes.size(), 0);
  std::set<long long> labels;
  std::set<long long> duplicates;
  std::vector<std::pair<int, long long>> stack{{tree.root, 0}};  // node, parent label
  bool cycle = false;
  while (!stack.empty()) {
    auto [idx, parent_label] = stack.back();
    stack.pop_back();
    if (idx < 0 || static_cast<std::size_t>(idx) >= tree.nodes.size()) {
      report.violations.push_back("dangling child reference");
      continue;
    }
    if (++seen_count[static_cast<std::size_t>(idx)] > 1) {
      cycle = true;
      continue;
    }
    const RawNode& node = tree.nodes[static_cast<std::size_t>(idx)];
    if (node.label < 1) {
      report.violations.push_back("label " + std::to_string(node.label) + " is not positive");
    }
    if (!labels.insert(node.label).second) duplicates.insert(node.label);
    if (node.label <= parent_label) {
      report.violations.push_back("decreasing edge " + std::to_string(parent_label) + " -> " +
                                  std::to_string(node.label));
    }
    if (node.right >= 0) stack.emplace_back(node.right, node.label);
    if (node.left >= 0) stack.emplace_back(node.left, node.label);
  }
  if (cycle) report.violations.push_back("node shared between branches");
  if (std::count(seen_count.begin(), seen_count.end(), 0) > 0) {
    report.violations.push_back("node unreachable from the root");
  }
  for (long long d : duplicates) {
    report.violations.push_back("duplicate label " + std::to_string(d));
  }
  const auto n = static_cast<long long>(labels.size());
  if (!labels.empty() && (*labels.begin() != 1 || *labels.rbegin() != n)) {
    std::string set = "{";
    for (long long l : labels) set += (set.size() > 1 ? "," : "") + std::to_string(l);
    set += "}";
    report.violations.push_back("label set " + set + " is not {1.." + std::to_string(n) + "}");
  }
  return report;
}

Treeshelf to_shelf(const RawTree& tree) {
  auto report = validate(tree);
  if (!report.valid()) throw ValidationError(std::move(report.violations));
  const std::size_t n = tree.nodes.size();
  std::vector<Label> left(n + 1, kNoChild), right(n + 1, kNoChild);
  for (const RawNode& node : tree.nodes) {
    const auto v = static_cast<std::size_t>(node.label);
    if (node.left >= 0) left[v] = static_cast<Label>(tree.nodes[static_cast<std::size_t>(node.left)].label);
    if (node.right >= 0) right[v] = static_cast<Label>(tree.nodes[static_cast<std::size_t>(node.right)].label);
  }
  return Treeshelf::from_links(std::move(left), std::move(right));
}

RawTree to_raw(const Treeshelf& shelf) {
  RawTree tree;
  if (shelf.empty()) return tree;
  const auto n = static_cast<Label>(shelf.size());
  tree.nodes.resize(static_cast<std::size_t>(n));
  for (Label v = 1; v <= n; ++v) {
    RawNode& node = tree.nodes[static_cast<std::size_t>(v - 1)];
    node.label = v;
    node.left = shelf.left(v) == kNoChild ? -1 : shelf.left(v) - 1;
    node.right = shelf.right(v) == kNoChild ? -1 : shelf.right(v) - 1;
  }
  tree.root = 0;
  return tree;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class ShelfParser {
 public:
  explicit ShelfParser(std::string_view text) : text_(text) {}

  RawTree parse() {
    skip_space();
    if (pos_ < text_.size()) {
      tree_.root = node();
      skip_space();
      if (pos_ != text_.size()) fail("unexpected trailing input");
    }
    return std::move(tree_);
  }

 private:
  int node() {
    const long long label = number();
    const int idx = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back(RawNode{label, -1, -1});
    skip_space();
    if (peek() != '(') return idx;
    ++pos_;
    skip_space();
    int left = -1;
    if (peek() != ',') left = node();
    expect(',');
    skip_space();
    int right = -1;
    if (peek() != ')') right = node();
    expect(')');
    tree_.nodes[static_cast<std::size_t>(idx)].left = left;
    tree_.nodes[static_cast<std::size_t>(idx)].right = right;
    return idx;
  }

  long long number() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100'000'000'000LL) fail("label too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a label");
    return value;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  RawTree tree_;
};

void render_node(const Treeshelf& shelf, Label v, std::string& out) {
  out += std::to_string(v);
  const Label l = shelf.left(v);
  const Label r = shelf.right(v);
  if (l == kNoChild && r == kNoChild) return;
  out += '(';
  if (l != kNoChild) render_node(shelf, l, out);
  out += ',';
  if (r != kNoChild) render_node(shelf, r, out);
  out += ')';
}

}  // namespace

RawTree parse_raw(std::string_view text) { return ShelfParser(text).parse(); }

Treeshelf parse_shelf(std::string_view text) { return to_shelf(parse_raw(text)); }

std::string render(const Treeshelf& shelf) {
  std::string out;
  if (!shelf.empty()) render_node(shelf, shelf.root(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::string buffer(text);
  for (char& c : buffer) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(buffer);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad permutation entry '" + token + "'");
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

std::string render(const Permutation& perm) {
  std::string out;
  for (int v : perm.values()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Permutation shelf_to_permutation(const Treeshelf& shelf) {
  const auto n = static_cast<int>(shelf.size());
  std::vector<int> values;
  values.reserve(shelf.size());
  std::vector<Label> stack;
  Label v = shelf.root();
  while (v != kNoChild || !stack.empty()) {
    while (v != kNoChild) {
      stack.push_back(v);
      v = shelf.left(v);
    }
    v = stack.back();
    stack.pop_back();
    values.push_back(n + 1 - v);
    v = shelf.right(v);
  }
  return Permutation(std::move(values));
}

namespace {

Label build_from_range(const std::vector<int>& values, std::size_t lo, std::size_t hi, int n,
                       std::vector<Label>& left, std::vector<Label>& right) {
  if (lo >= hi) return kNoChild;
  const auto top = std::max_element(values.begin() + static_cast<std::ptrdiff_t>(lo),
                                    values.begin() + static_cast<std::ptrdiff_t>(hi));
  const auto pos = static_cast<std::size_t>(top - values.begin());
  const Label label = n + 1 - *top;
  left[label] = build_from_range(values, lo, pos, n, left, right);
  right[label] = build_from_range(values, pos + 1, hi, n, left, right);
  return label;
}

}  // namespace

Treeshelf permutation_to_shelf(const Permutation& perm) {
  const auto n = static_cast<int>(perm.size());
  std::vector<Label> left(perm.size() + 1, kNoChild), right(perm.size() + 1, kNoChild);
  build_from_range(perm.values(), 0, perm.size(), n, left, right);
  return Treeshelf::from_links(std::move(left), std::move(right));
}

Treeshelf mirror(const Treeshelf& shelf) {
  if (shelf.empty()) return shelf;
  return Treeshelf::from_links(shelf.right_links(), shelf.left_links());
}

// ---------------------------------------------------------------------------
// Lexicographic enumeration
//
// The canonical text is produced in preorder, one decision at a time. Each
// decision contributes a distinct next character, so trying the options in
// character order walks the strings in lexicographic order:
//   slot left empty      -> ',' (left slot) or ')' (right slot)
//   slot filled by label -> its decimal digits
//   placed node internal -> '('   (tried before "leaf" except at the root)
// Digits sort after all punctuation, and a label token is always followed
// by punctuation, so labels are tried in the order of their decimal strings.

namespace {

class LexEnumerator {
 public:
  LexEnumerator(int n, const ShelfVisitor& visit)
      : n_(n),
        visit_(visit),
        left_(static_cast<std::size_t>(n) + 1, kNoChild),
        right_(static_cast<std::size_t>(n) + 1, kNoChild) {
    for (Label v = 2; v <= n; ++v) {
      candidates_.push_back(v);
      unused_ |= bit(v);
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](Label a, Label b) { return std::to_string(a) < std::to_string(b); });
  }

  void run() {
    if (n_ == 0) {
      visit_(Treeshelf());
      return;
    }
    if (feasible()) step();  // root as leaf (only when n == 1)
    open(1);
    if (feasible()) step();
    close();
  }

 private:
  struct Slot {
    Label parent;
    bool is_left;
    bool required;  // right slot of a node whose left slot stayed empty
  };

  static std::uint32_t bit(Label v) { return std::uint32_t{1} << v; }

  void open(Label v) {
    stack_.push_back({v, false, false});
    stack_.push_back({v, true, false});
  }
  void close() {
    stack_.pop_back();
    stack_.pop_back();
  }

  // Every pending required slot needs its own larger label (Hall condition on
  // thresholds), and the smallest unused label needs a slot under a smaller node.
  bool feasible() const {
    if (unused_ == 0) {
      return std::none_of(stack_.begin(), stack_.end(), [](const Slot& s) { return s.required; });
    }
    Label min_unused = 0;
    while (!(unused_ & bit(min_unused))) ++min_unused;
    Label min_parent = n_ + 1;
    required_buf_.clear();
    for (const Slot& s : stack_) {
      min_parent = std::min(min_parent, s.parent);
      if (s.required) required_buf_.push_back(s.parent);
    }
    if (min_parent >= min_unused) return false;
    std::sort(required_buf_.begin(), required_buf_.end(), std::greater<>());
    for (std::size_t i = 0; i < required_buf_.size(); ++i) {
      const std::uint32_t above = unused_ & ~((bit(required_buf_[i]) << 1) - 1);
      if (static_cast<std::size_t>(__builtin_popcount(above)) < i + 1) return false;
    }
    return true;
  }

  void step() {
    if (stack_.empty()) {
      if (unused_ == 0) visit_(Treeshelf::from_links(left_, right_));
      return;
    }
    const Slot slot = stack_.back();
    stack_.pop_back();

    if (!slot.required) {
      // After popping a left slot, the right slot of the same node is on top.
      const std::size_t sibling = stack_.size() - 1;
      if (slot.is_left) stack_[sibling].required = true;
      if (feasible()) step();
      if (slot.is_left) stack_[sibling].required = false;
    }

    std::vector<Label>& links = slot.is_left ? left_ : right_;
    for (Label u : candidates_) {
      if (!(unused_ & bit(u)) || u <= slot.parent) continue;
      links[slot.parent] = u;
      unused_ ^= bit(u);
      open(u);
      if (feasible()) step();
      close();
      if (feasible()) step();
      unused_ ^= bit(u);
      links[slot.parent] = kNoChild;
    }
    stack_.push_back(slot);
  }

  int n_;
  const ShelfVisitor& visit_;
  std::vector<Label> left_;
  std::vector<Label> right_;
  std::vector<Label> candidates_;
  std::vector<Slot> stack_;
  std::uint32_t unused_ = 0;
  mutable std::vector<Label> required_buf_;
};

}  // namespace

void enumerate_shelves(int n, const ShelfVisitor& visit, int ceiling) {
  check_size(n, std::min(ceiling, 30));
  LexEnumerator(n, visit).run();
}

std::vector<Treeshelf> all_shelves(int n, int ceiling) {
  std::vector<Treeshelf> out;
  enumerate_shelves(n, [&](const Treeshelf& t) { out.push_back(t); }, ceiling);
  return out;
}

}  // namespace tshelf
