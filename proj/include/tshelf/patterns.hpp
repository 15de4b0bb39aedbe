#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "tshelf/polyy.hpp"
#include "tshelf/shelf.hpp"

namespace tshelf {

/// The size-2 and size-3 sub-treeshelves. Chains are rooted at a node and
/// follow the named links; sibling patterns compare the two children.
enum class PatternId {
  LeftEdge,            // node with a left child
  RightEdge,           // node with a right child
  LL,                  // left child that has a left child
  RR,                  // right child that has a right child
  LthenR,              // left child that has a right child
  RthenL,              // right child that has a left child
  SiblingsIncreasing,  // both children, left label < right label
  SiblingsDecreasing,  // both children, left label > right label
};

inline constexpr std::array<PatternId, 8> kAllPatterns = {
    PatternId::LeftEdge, PatternId::RightEdge, PatternId::LL,
    PatternId::RR,       PatternId::LthenR,    PatternId::RthenL,
    PatternId::SiblingsIncreasing, PatternId::SiblingsDecreasing};

std::string_view pattern_name(PatternId p);
// Accepts the CLI names (`left-edge`, `ll`, `l-then-r`, `siblings-inc`, ...).
std::optional<PatternId> parse_pattern(std::string_view name);

PatternId mirror(PatternId p);
int pattern_size(PatternId p);

std::size_t count_occurrences(const Treeshelf& t, PatternId p);
bool avoids(const Treeshelf& t, PatternId p);

/// Oracle generator: enumerate_shelves filtered by avoids().
void filter_avoiders(int n, PatternId p, const ShelfVisitor& visit,
                     int ceiling = kDefaultCeiling);

/// Structural generator following the recursive decompositions of each
/// avoidance class; no filtering. Supports the six size-3 patterns (the
/// mirrored ones via mirror()). Order is deterministic but not lexicographic.
void generate_avoiders(int n, PatternId p, const ShelfVisitor& visit,
                       int ceiling = kDefaultCeiling);

/// Structural generator for the unrestricted class B = eps + Z[]*(B x B).
void generate_unrestricted(int n, const ShelfVisitor& visit, int ceiling = kDefaultCeiling);

/// Coefficient of y^k = number of size-n treeshelves (avoiding `avoid`, when
/// given) with exactly k left children. Computed by enumeration.
PolyY distribution_polynomial(int n, std::optional<PatternId> avoid,
                              int ceiling = kDefaultCeiling);

/// Total number of left children over the class; equals the derivative of
/// distribution_polynomial at y = 1.
BigInt popularity(int n, std::optional<PatternId> avoid, int ceiling = kDefaultCeiling);

}  // namespace tshelf
