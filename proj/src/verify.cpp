#include "tshelf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tshelf/asymptotics.hpp"
#include "tshelf/bijections.hpp"

namespace tshelf {

namespace {

// Highest n the exhaustive routes accept from this layer.
constexpr int kEnumerationLimit = kDefaultCeiling;

bool is_mirrored(const ShelfClass& c) {
  return c.avoid && (*c.avoid == PatternId::RR || *c.avoid == PatternId::RthenL ||
                     *c.avoid == PatternId::SiblingsDecreasing);
}

SeriesClass series_class(const ShelfClass& c) {
  if (!c.avoid) return SeriesClass::Unrestricted;
  const PatternId base = is_mirrored(c) ? mirror(*c.avoid) : *c.avoid;
  switch (base) {
    case PatternId::LthenR: return SeriesClass::LthenR;
    case PatternId::LL: return SeriesClass::LL;
    case PatternId::SiblingsIncreasing: return SeriesClass::SiblingsIncreasing;
    default: break;
  }
  throw std::invalid_argument("class must avoid a size-3 pattern");
}

void check_n_max(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
}

BigInt to_big(std::uint64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

std::optional<ShelfClass> parse_shelf_class(std::string_view name) {
  if (name == "all") return ShelfClass{};
  const auto p = parse_pattern(name);
  if (!p || pattern_size(*p) != 3) return std::nullopt;
  return ShelfClass{p};
}

std::string class_name(const ShelfClass& c) {
  return c.avoid ? std::string(pattern_name(*c.avoid)) : std::string("all");
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "enum") return Method::Enumeration;
  if (name == "series") return Method::Series;
  if (name == "grammar") return Method::Grammar;
  if (name == "recurrence") return Method::Recurrence;
  return std::nullopt;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Enumeration: return "enum";
    case Method::Series: return "series";
    case Method::Grammar: return "grammar";
    case Method::Recurrence: return "recurrence";
  }
  return "?";
}

std::vector<BigInt> class_counts(const ShelfClass& c, int n_max, Method m) {
  check_n_max(n_max);
  std::vector<BigInt> out;
  switch (m) {
    case Method::Series:
      return counting_series(series_class(c), n_max);
    case Method::Enumeration:
      check_size(n_max, kEnumerationLimit);
      for (int n = 0; n <= n_max; ++n) {
        std::uint64_t count = 0;
        enumerate_shelves(
            n,
            [&](const Treeshelf& t) {
              if (!c.avoid || avoids(t, *c.avoid)) ++count;
            },
            kEnumerationLimit);
        out.push_back(to_big(count));
      }
      return out;
    case Method::Grammar:
      check_size(n_max, kEnumerationLimit);
      for (int n = 0; n <= n_max; ++n) {
        std::uint64_t count = 0;
        const auto tally = [&](const Treeshelf&) { ++count; };
        if (c.avoid) {
          generate_avoiders(n, *c.avoid, tally, kEnumerationLimit);
        } else {
          generate_unrestricted(n, tally, kEnumerationLimit);
        }
        out.push_back(to_big(count));
      }
      return out;
    case Method::Recurrence:
      break;
  }
  throw std::invalid_argument("counts are available by enum, series or grammar");
}

std::vector<PolyY> class_distribution(const ShelfClass& c, int n_max, Method m) {
  check_n_max(n_max);
  std::vector<PolyY> out;
  if (m == Method::Enumeration) {
    check_size(n_max, kEnumerationLimit);
    for (int n = 0; n <= n_max; ++n) out.push_back(distribution_polynomial(n, c.avoid, kEnumerationLimit));
    return out;
  }
  if (m != Method::Series) throw std::invalid_argument("distributions are available by enum or series");
  out = distribution_series<PolyY>(series_class(c), n_max);
  if (is_mirrored(c)) {
    for (std::size_t n = 1; n < out.size(); ++n) out[n] = out[n].reversed(n);
  }
  return out;
}

std::vector<BigInt> class_popularity(const ShelfClass& c, int n_max, Method m) {
  check_n_max(n_max);
  std::vector<BigInt> base;
  switch (m) {
    case Method::Enumeration: {
      check_size(n_max, kEnumerationLimit);
      std::vector<BigInt> out;
      for (int n = 0; n <= n_max; ++n) out.push_back(popularity(n, c.avoid, kEnumerationLimit));
      return out;
    }
    case Method::Series:
      base = popularity_by_derivative(series_class(c), n_max);
      break;
    case Method::Recurrence:
      base = popularity_by_recurrence(series_class(c), n_max);
      break;
    case Method::Grammar:
      throw std::invalid_argument("popularity is available by enum, series or recurrence");
  }
  if (is_mirrored(c)) {
    // Every size-n shelf has n - 1 edges; mirroring swaps left and right.
    const auto counts = counting_series(series_class(c), n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      base[i] = (n - 1) * counts[i] - base[i];
    }
  }
  return base;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "counts") return Suite::Counts;
  if (name == "distributions") return Suite::Distributions;
  if (name == "bijections") return Suite::Bijections;
  if (name == "asymptotics") return Suite::Asymptotics;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cross-check matrix

namespace {

const std::vector<ShelfClass>& all_classes() {
  static const std::vector<ShelfClass> classes = {
      ShelfClass{},
      ShelfClass{PatternId::LthenR},
      ShelfClass{PatternId::LL},
      ShelfClass{PatternId::SiblingsIncreasing},
      ShelfClass{PatternId::RthenL},
      ShelfClass{PatternId::RR},
      ShelfClass{PatternId::SiblingsDecreasing},
  };
  return classes;
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += v.get_str();
  }
  return out;
}

class Recorder {
 public:
  void check(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

void count_checks(Recorder& rec, int n_max) {
  for (const auto& c : all_classes()) {
    const auto by_enum = class_counts(c, n_max, Method::Enumeration);
    const auto by_series = class_counts(c, n_max, Method::Series);
    const auto by_grammar = class_counts(c, n_max, Method::Grammar);
    rec.check("counts " + class_name(c) + ": enum = series = grammar",
              by_enum == by_series && by_series == by_grammar,
              "enum " + join(by_enum) + " / series " + join(by_series) + " / grammar " +
                  join(by_grammar));
  }

  bool complement = true;
  bool duality = true;
  for (int n = 0; n <= n_max; ++n) {
    enumerate_shelves(n, [&](const Treeshelf& t) {
      const auto edges = count_occurrences(t, PatternId::LeftEdge) +
                         count_occurrences(t, PatternId::RightEdge);
      if (n > 0 && edges != static_cast<std::size_t>(n - 1)) complement = false;
      const Treeshelf m = mirror(t);
      for (PatternId p : kAllPatterns) {
        if (count_occurrences(m, p) != count_occurrences(t, mirror(p))) duality = false;
      }
    });
  }
  rec.check("left + right edges = n - 1 for all shelves", complement);
  rec.check("pattern counts are mirror-dual", duality);

  constexpr int kOrder = 20;
  rec.check("l-then-r counts = exp(e^z - 1) to order 20",
            counting_series(SeriesClass::LthenR, kOrder) == named_sequence(NamedSequence::Bell, kOrder));
  rec.check("ll counts = 1/(1 - sin z) to order 20",
            counting_series(SeriesClass::LL, kOrder) == named_sequence(NamedSequence::Euler, kOrder));
}

// (z - 1) F' + F, entries 0..order-2 of a table with `order` entries.
std::vector<BigInt> popularity_transform(const EgfTable<Rational>& f) {
  const std::size_t order = f.size() - 1;
  const EgfTable<Rational> head(f.begin(), f.end() - 1);
  const auto deriv = egf_differentiate(f);
  const auto shifted = egf_mul(egf_sub(egf_z<Rational>(order), egf_constant<Rational>(order, 1)), deriv);
  std::vector<BigInt> out;
  for (const auto& v : egf_add(shifted, head)) out.push_back(to_integer(v));
  return out;
}

void distribution_checks(Recorder& rec, int n_max) {
  for (const auto& c : all_classes()) {
    const bool same = class_distribution(c, n_max, Method::Enumeration) ==
                      class_distribution(c, n_max, Method::Series);
    rec.check("distribution " + class_name(c) + ": enum = series", same);

    const auto by_enum = class_popularity(c, n_max, Method::Enumeration);
    const auto by_series = class_popularity(c, n_max, Method::Series);
    bool agree = by_enum == by_series;
    std::string detail = "enum " + join(by_enum) + " / series " + join(by_series);
    if (series_class(c) != SeriesClass::SiblingsIncreasing) {
      const auto by_rec = class_popularity(c, n_max, Method::Recurrence);
      agree = agree && by_rec == by_series;
      detail += " / recurrence " + join(by_rec);
    }
    rec.check("popularity " + class_name(c) + ": methods agree", agree, detail);
  }

  constexpr std::size_t kOrder = 15;
  for (SeriesClass cls : {SeriesClass::LthenR, SeriesClass::LL}) {
    const auto counts = distribution_series<Rational>(cls, static_cast<int>(kOrder) + 1);
    const auto transformed = popularity_transform(counts);
    const auto popular = popularity_by_derivative(cls, static_cast<int>(kOrder));
    rec.check("(z - 1) F' + F = popularity EGF for " + std::string(series_class_name(cls)) +
                  " to order 15",
              transformed == popular, join(transformed));
  }
}

template <class T, class ToShelf, class FromShelf>
bool check_bijection(const std::vector<T>& domain, PatternId avoided, int n, ToShelf to_shelf,
                     FromShelf from_shelf, std::string& detail) {
  std::vector<std::string> image;
  for (const T& x : domain) {
    const Treeshelf t = to_shelf(x);
    if (static_cast<int>(t.size()) != n || !avoids(t, avoided)) {
      detail = "bad image at n=" + std::to_string(n);
      return false;
    }
    if (!(from_shelf(t) == x)) {
      detail = "round trip fails at n=" + std::to_string(n);
      return false;
    }
    image.push_back(render(t));
  }
  std::sort(image.begin(), image.end());
  std::vector<std::string> expected;
  filter_avoiders(n, avoided, [&](const Treeshelf& t) { expected.push_back(render(t)); });
  if (image != expected) {
    detail = "image differs from the avoiders at n=" + std::to_string(n) + " (" +
             std::to_string(image.size()) + " vs " + std::to_string(expected.size()) + ")";
    return false;
  }
  // Inverse direction on the whole class.
  for (const auto& text : expected) {
    const Treeshelf t = parse_shelf(text);
    if (!(to_shelf(from_shelf(t)) == t)) {
      detail = "inverse round trip fails on " + text;
      return false;
    }
  }
  return true;
}

void bijection_checks(Recorder& rec, int n_max) {
  bool perms = true;
  for (int n = 0; n <= n_max && perms; ++n) {
    std::set<std::vector<int>> seen;
    enumerate_shelves(n, [&](const Treeshelf& t) {
      const Permutation p = shelf_to_permutation(t);
      if (!seen.insert(p.values()).second || !(permutation_to_shelf(p) == t)) perms = false;
    });
  }
  rec.check("shelf <-> permutation bijection", perms);

  {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_max && ok; ++n) {
      ok = check_bijection(all_partitions(n), PatternId::LthenR, n,
                           [](const SetPartition& p) { return partition_to_shelf(p); },
                           [](const Treeshelf& t) { return shelf_to_partition(t); }, detail);
    }
    rec.check("set partitions <-> l-then-r avoiders", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_max && ok; ++n) {
      ok = check_bijection(all_jtrees(n), PatternId::SiblingsIncreasing, n,
                           [](const JTree& j) { return jtree_to_shelf(j); },
                           [](const Treeshelf& t) { return shelf_to_jtree(t); }, detail);
    }
    rec.check("J-trees <-> siblings-inc avoiders", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_max && ok; ++n) {
      ok = check_bijection(all_unordered(n + 1), PatternId::LL, n,
                           [](const UnorderedIncTree& u) { return unordered_to_ll_avoider(u); },
                           [](const Treeshelf& t) { return ll_avoider_to_unordered(t); }, detail);
    }
    rec.check("unordered trees (n+1 nodes) <-> ll avoiders", ok, detail);
  }
  {
    const auto u = parse_unordered("1{2{3},4{5,6}}");
    const Treeshelf standard = standard_representation(u);
    const Treeshelf shifted = shift(standard);
    const Treeshelf dropped = drop_root(shifted);
    const bool ok = render(standard) == "1(4(6,5),2(,3))" &&
                    render(shifted) == "1(,2(4(,5(6,)),3))" && render(dropped) == "1(3(,4(5,)),2)" &&
                    ll_avoider_to_unordered(dropped) == u;
    rec.check("worked example: standard representation, shift, root deletion", ok,
              render(standard) + " -> " + render(shifted) + " -> " + render(dropped));
  }
}

void asymptotic_checks(Recorder& rec) {
  double worst = 0;
  for (double x : {0.0, 0.5, 1.0, std::exp(1.0), 10.0, 1e3, 1e6}) {
    const double w = lambert_w(x);
    worst = std::max(worst, std::abs(w * std::exp(w) - x) / std::max(x, 1.0));
  }
  rec.check("Lambert W residual <= 1e-12", worst <= 1e-12, "worst " + std::to_string(worst));

  for (SeriesClass cls : {SeriesClass::LL, SeriesClass::SiblingsIncreasing}) {
    const auto report = ratio_report(cls, {50, 100});
    const double at50 = std::abs(report.rows[0].log_ratio);
    const double at100 = std::abs(report.rows[1].log_ratio);
    std::ostringstream detail;
    detail << "|log ratio| " << at50 << " at 50, " << at100 << " at 100";
    rec.check(std::string(series_class_name(cls)) + " asymptotic: |log ratio| < 0.1 at 100 and shrinking",
              at100 < 0.1 && at100 < at50, detail.str());
  }
  const auto report = ratio_report(SeriesClass::LthenR, {100, 400});
  const double at100 = std::abs(report.rows[0].log_ratio);
  const double at400 = std::abs(report.rows[1].log_ratio);
  std::ostringstream detail;
  detail << "|log ratio| " << at100 << " at 100, " << at400 << " at 400";
  rec.check("l-then-r asymptotic: |log ratio| shrinks from 100 to 400", at400 < at100, detail.str());
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int n_max) {
  check_n_max(n_max);
  check_size(n_max, kEnumerationLimit);
  Recorder rec;
  if (suite == Suite::All || suite == Suite::Counts) count_checks(rec, n_max);
  if (suite == Suite::All || suite == Suite::Distributions) distribution_checks(rec, n_max);
  if (suite == Suite::All || suite == Suite::Bijections) bijection_checks(rec, n_max);
  if (suite == Suite::All || suite == Suite::Asymptotics) asymptotic_checks(rec);
  return rec.take();
}

}  // namespace tshelf
