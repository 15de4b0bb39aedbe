#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tshelf/egf.hpp"
#include "tshelf/patterns.hpp"

namespace tshelf {

/// The unrestricted class (no pattern) or the avoiders of one size-3 pattern.
struct ShelfClass {
  std::optional<PatternId> avoid;

  friend bool operator==(const ShelfClass&, const ShelfClass&) = default;
};

// "all" or one of the six size-3 pattern names.
std::optional<ShelfClass> parse_shelf_class(std::string_view name);
std::string class_name(const ShelfClass& c);

enum class Method { Enumeration, Series, Grammar, Recurrence };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method m);

/// Class sizes for n = 0..n_max. Enumeration filters all shelves, Grammar
/// runs the structural generators, Series evaluates the EGF recurrences.
/// Mirrored classes share the counts of their base class.
std::vector<BigInt> class_counts(const ShelfClass& c, int n_max, Method m);

/// Left-child distribution polynomials for n = 0..n_max (Enumeration or
/// Series). For mirrored classes the series route reverses the base class's
/// polynomials: left children of mirror(t) are the right children of t.
std::vector<PolyY> class_distribution(const ShelfClass& c, int n_max, Method m);

/// Left-child popularity for n = 0..n_max (Enumeration, Series or Recurrence).
std::vector<BigInt> class_popularity(const ShelfClass& c, int n_max, Method m);

enum class Suite { All, Counts, Distributions, Bijections, Asymptotics };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the cross-check matrix of a suite with exhaustive checks up to n_max.
std::vector<CheckResult> run_suite(Suite suite, int n_max);

}  // namespace tshelf
