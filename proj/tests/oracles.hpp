#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. Nothing here calls the library's enumerators or series engine.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tshelf/patterns.hpp"
#include "tshelf/polyy.hpp"
#include "tshelf/shelf.hpp"

namespace oracle {

using tshelf::BigInt;
using tshelf::Label;
using tshelf::PatternId;
using tshelf::Treeshelf;

// Every increasing binary tree of size n arises exactly once by attaching
// label k to a free slot of a tree on 1..k-1.
inline std::vector<Treeshelf> shelves(int n) {
  std::vector<Treeshelf> out;
  std::vector<Label> left(static_cast<std::size_t>(n) + 1, 0), right(left);
  std::function<void(int)> grow = [&](int k) {
    if (k > n) {
      out.push_back(Treeshelf::from_links(left, right));
      return;
    }
    for (int v = 1; v < k; ++v) {
      for (auto* side : {&left, &right}) {
        auto& slot = (*side)[static_cast<std::size_t>(v)];
        if (slot != 0) continue;
        slot = k;
        grow(k + 1);
        slot = 0;
      }
    }
  };
  if (n == 0) {
    out.emplace_back();
  } else {
    grow(2);
  }
  return out;
}

inline std::size_t occurrences(const Treeshelf& t, PatternId p) {
  std::size_t count = 0;
  const auto n = static_cast<Label>(t.size());
  for (Label v = 1; v <= n; ++v) {
    const Label l = t.left(v);
    const Label r = t.right(v);
    switch (p) {
      case PatternId::LeftEdge: count += l != 0; break;
      case PatternId::RightEdge: count += r != 0; break;
      case PatternId::LL: count += l != 0 && t.left(l) != 0; break;
      case PatternId::RR: count += r != 0 && t.right(r) != 0; break;
      case PatternId::LthenR: count += l != 0 && t.right(l) != 0; break;
      case PatternId::RthenL: count += r != 0 && t.left(r) != 0; break;
      case PatternId::SiblingsIncreasing: count += l != 0 && r != 0 && l < r; break;
      case PatternId::SiblingsDecreasing: count += l != 0 && r != 0 && l > r; break;
    }
  }
  return count;
}

inline std::vector<Treeshelf> avoiders(int n, PatternId p) {
  std::vector<Treeshelf> out;
  for (const auto& t : shelves(n)) {
    if (occurrences(t, p) == 0) out.push_back(t);
  }
  return out;
}

inline std::vector<std::string> sorted_renders(const std::vector<Treeshelf>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(tshelf::render(t));
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Bell numbers as row sums of the Stirling numbers of the second kind.
inline std::vector<BigInt> bell(int n_max) {
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n_max) + 1);
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) {
    auto& row = s[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    row[0] = n == 0 ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
      const auto& prev = s[static_cast<std::size_t>(n - 1)];
      const BigInt stay = k <= n - 1 ? BigInt(k * prev[static_cast<std::size_t>(k)]) : BigInt(0);
      row[static_cast<std::size_t>(k)] = stay + prev[static_cast<std::size_t>(k - 1)];
    }
    BigInt total = 0;
    for (const auto& v : row) total += v;
    out.push_back(total);
  }
  return out;
}

// Zigzag numbers E_0..E_{n_max} from the Seidel-Entringer triangle.
inline std::vector<BigInt> zigzag(int n_max) {
  std::vector<BigInt> out{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      next[static_cast<std::size_t>(k)] =
          next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(n - k)];
    }
    out.push_back(next.back());
    row = std::move(next);
  }
  return out;
}

// Eulerian numbers A(n, k), k = 0..n-1 (row 0 is {1}).
inline std::vector<BigInt> eulerian_row(int n) {
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      BigInt v = 0;
      if (k < m - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) v += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row;
}

inline std::vector<BigInt> left_edge_row(int n, std::optional<PatternId> avoid) {
  std::vector<BigInt> row(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (const auto& t : shelves(n)) {
    if (avoid && occurrences(t, *avoid) != 0) continue;
    row[occurrences(t, PatternId::LeftEdge)] += 1;
  }
  while (row.size() > 1 && row.back() == 0) row.pop_back();
  return row;
}

}  // namespace oracle
