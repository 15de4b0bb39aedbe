#include "tshelf/patterns.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tshelf {

namespace {

struct PatternName {
  PatternId id;
  std::string_view name;
};

constexpr std::array<PatternName, 8> kNames = {{
    {PatternId::LeftEdge, "left-edge"},
    {PatternId::RightEdge, "right-edge"},
    {PatternId::LL, "ll"},
    {PatternId::RR, "rr"},
    {PatternId::LthenR, "l-then-r"},
    {PatternId::RthenL, "r-then-l"},
    {PatternId::SiblingsIncreasing, "siblings-inc"},
    {PatternId::SiblingsDecreasing, "siblings-dec"},
}};

}  // namespace

std::string_view pattern_name(PatternId p) {
  for (const auto& entry : kNames) {
    if (entry.id == p) return entry.name;
  }
  return "?";
}

std::optional<PatternId> parse_pattern(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

PatternId mirror(PatternId p) {
  switch (p) {
    case PatternId::LeftEdge: return PatternId::RightEdge;
    case PatternId::RightEdge: return PatternId::LeftEdge;
    case PatternId::LL: return PatternId::RR;
    case PatternId::RR: return PatternId::LL;
    case PatternId::LthenR: return PatternId::RthenL;
    case PatternId::RthenL: return PatternId::LthenR;
    case PatternId::SiblingsIncreasing: return PatternId::SiblingsDecreasing;
    case PatternId::SiblingsDecreasing: return PatternId::SiblingsIncreasing;
  }
  throw std::invalid_argument("unknown pattern");
}

int pattern_size(PatternId p) {
  return (p == PatternId::LeftEdge || p == PatternId::RightEdge) ? 2 : 3;
}

namespace {

bool rooted_at(const Treeshelf& t, Label v, PatternId p) {
  const Label l = t.left(v);
  const Label r = t.right(v);
  switch (p) {
    case PatternId::LeftEdge: return l != kNoChild;
    case PatternId::RightEdge: return r != kNoChild;
    case PatternId::LL: return l != kNoChild && t.left(l) != kNoChild;
    case PatternId::RR: return r != kNoChild && t.right(r) != kNoChild;
    case PatternId::LthenR: return l != kNoChild && t.right(l) != kNoChild;
    case PatternId::RthenL: return r != kNoChild && t.left(r) != kNoChild;
    case PatternId::SiblingsIncreasing: return l != kNoChild && r != kNoChild && l < r;
    case PatternId::SiblingsDecreasing: return l != kNoChild && r != kNoChild && l > r;
  }
  return false;
}

}  // namespace

std::size_t count_occurrences(const Treeshelf& t, PatternId p) {
  std::size_t count = 0;
  const auto n = static_cast<Label>(t.size());
  for (Label v = 1; v <= n; ++v) {
    if (rooted_at(t, v, p)) ++count;
  }
  return count;
}

bool avoids(const Treeshelf& t, PatternId p) {
  const auto n = static_cast<Label>(t.size());
  for (Label v = 1; v <= n; ++v) {
    if (rooted_at(t, v, p)) return false;
  }
  return true;
}

void filter_avoiders(int n, PatternId p, const ShelfVisitor& visit, int ceiling) {
  enumerate_shelves(
      n,
      [&](const Treeshelf& t) {
        if (avoids(t, p)) visit(t);
      },
      ceiling);
}

// ---------------------------------------------------------------------------
// Grammar-based generation
//
// Each generator fills in the links of every label of its label set S
// (a bitmask) and then calls the continuation, once per structure. A boxed
// product A[]*B puts min(S) in A and splits the remaining labels over all
// subsets; components are built directly on their share of labels, which is
// the order-isomorphic relabelling of a standard-labelled component. The root
// of a component on S is always min(S).

namespace {

using Mask = std::uint32_t;
using Continuation = std::function<void()>;

Label lowest(Mask s) { return s == 0 ? kNoChild : static_cast<Label>(__builtin_ctz(s)); }
Mask bit(Label v) { return Mask{1} << v; }

// Calls f(sub) for every submask of `set`, from `set` down to 0.
template <class F>
void for_each_submask(Mask set, F&& f) {
  for (Mask sub = set;; sub = (sub - 1) & set) {
    f(sub);
    if (sub == 0) break;
  }
}

class Builder {
 public:
  explicit Builder(int n)
      : left_(static_cast<std::size_t>(n) + 1, kNoChild),
        right_(static_cast<std::size_t>(n) + 1, kNoChild),
        all_(n == 0 ? 0 : ((Mask{1} << (n + 1)) - 2)) {}

  Mask all() const { return all_; }
  Treeshelf shelf() const { return Treeshelf::from_links(left_, right_); }

  // B = eps + Z[]*(B x B)
  void unrestricted(Mask s, const Continuation& k) {
    if (s == 0) return k();
    const Label m = lowest(s);
    const Mask rest = s ^ bit(m);
    for_each_submask(rest, [&](Mask x) {
      const Mask y = rest ^ x;
      left_[m] = lowest(x);
      right_[m] = lowest(y);
      unrestricted(x, [&] { unrestricted(y, k); });
    });
  }

  // C = eps + D[]*C with D the non-empty left chains: the chain carrying
  // min(S) hangs off the root to the left, C becomes the root's right t-shelf.
  void avoid_l_then_r(Mask s, const Continuation& k) {
    if (s == 0) return k();
    const Label m = lowest(s);
    const Mask rest = s ^ bit(m);
    for_each_submask(rest, [&](Mask chain) {
      Label prev = m;
      for (Mask c = chain; c != 0; c &= c - 1) {
        const Label v = lowest(c);
        left_[prev] = v;
        right_[v] = kNoChild;
        prev = v;
      }
      left_[prev] = kNoChild;
      const Mask tail = rest ^ chain;
      right_[m] = lowest(tail);
      avoid_l_then_r(tail, k);
    });
  }

  // E = eps + F + F[]*F with F = Z[]*E. In F the atom is the root and E its
  // right t-shelf; in F[]*F the second F becomes the left t-shelf of the first.
  void avoid_ll(Mask s, const Continuation& k) {
    if (s == 0) return k();
    const Label m = lowest(s);
    const Mask rest = s ^ bit(m);
    left_[m] = kNoChild;
    right_[m] = lowest(rest);
    avoid_ll(rest, k);

    for_each_submask(rest, [&](Mask first_share) {
      const Mask second = rest ^ first_share;
      if (second == 0) return;
      const Label b = lowest(second);
      const Mask second_rest = second ^ bit(b);
      left_[m] = b;
      right_[m] = lowest(first_share);
      left_[b] = kNoChild;
      right_[b] = lowest(second_rest);
      avoid_ll(first_share, [&] { avoid_ll(second_rest, k); });
    });
  }

  // G = Z + Z[]*G (right only) + Z[]*G (left only) + Z[]*(G[]*G); in the last
  // production the component holding the smaller minimum is the right t-shelf.
  void avoid_siblings_inc(Mask s, const Continuation& k) {
    const Label m = lowest(s);
    const Mask rest = s ^ bit(m);
    if (rest == 0) {
      left_[m] = right_[m] = kNoChild;
      return k();
    }
    left_[m] = kNoChild;
    right_[m] = lowest(rest);
    avoid_siblings_inc(rest, k);

    right_[m] = kNoChild;
    left_[m] = lowest(rest);
    avoid_siblings_inc(rest, k);

    const Label low = lowest(rest);
    const Mask others = rest ^ bit(low);
    for_each_submask(others, [&](Mask with_low) {
      const Mask right_share = with_low | bit(low);
      const Mask left_share = others ^ with_low;
      if (left_share == 0) return;
      right_[m] = low;
      left_[m] = lowest(left_share);
      avoid_siblings_inc(right_share, [&] { avoid_siblings_inc(left_share, k); });
    });
  }

 private:
  std::vector<Label> left_;
  std::vector<Label> right_;
  Mask all_;
};

void generate_base(int n, PatternId p, const ShelfVisitor& visit) {
  Builder builder(n);
  const Continuation emit = [&] { visit(builder.shelf()); };
  switch (p) {
    case PatternId::LthenR:
      builder.avoid_l_then_r(builder.all(), emit);
      return;
    case PatternId::LL:
      builder.avoid_ll(builder.all(), emit);
      return;
    case PatternId::SiblingsIncreasing:
      if (n == 0) return emit();
      builder.avoid_siblings_inc(builder.all(), emit);
      return;
    default:
      throw std::invalid_argument("no generator for pattern " + std::string(pattern_name(p)));
  }
}

}  // namespace

void generate_avoiders(int n, PatternId p, const ShelfVisitor& visit, int ceiling) {
  check_size(n, std::min(ceiling, 30));
  switch (p) {
    case PatternId::LthenR:
    case PatternId::LL:
    case PatternId::SiblingsIncreasing:
      generate_base(n, p, visit);
      return;
    case PatternId::RthenL:
    case PatternId::RR:
    case PatternId::SiblingsDecreasing:
      generate_base(n, mirror(p), [&](const Treeshelf& t) { visit(mirror(t)); });
      return;
    default:
      throw std::invalid_argument("avoiders of a size-2 pattern are not generated");
  }
}

void generate_unrestricted(int n, const ShelfVisitor& visit, int ceiling) {
  check_size(n, std::min(ceiling, 30));
  Builder builder(n);
  builder.unrestricted(builder.all(), [&] { visit(builder.shelf()); });
}

PolyY distribution_polynomial(int n, std::optional<PatternId> avoid, int ceiling) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
  enumerate_shelves(
      n,
      [&](const Treeshelf& t) {
        if (avoid && !avoids(t, *avoid)) return;
        ++counts[count_occurrences(t, PatternId::LeftEdge)];
      },
      ceiling);
  std::vector<Rational> coeffs;
  coeffs.reserve(counts.size());
  for (std::uint64_t c : counts) coeffs.emplace_back(BigInt(std::to_string(c)));
  return PolyY(std::move(coeffs));
}

BigInt popularity(int n, std::optional<PatternId> avoid, int ceiling) {
  std::uint64_t total = 0;
  enumerate_shelves(
      n,
      [&](const Treeshelf& t) {
        if (avoid && !avoids(t, *avoid)) return;
        total += count_occurrences(t, PatternId::LeftEdge);
      },
      ceiling);
  return BigInt(std::to_string(total));
}

}  // namespace tshelf
