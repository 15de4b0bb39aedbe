#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tshelf/polyy.hpp"

namespace tshelf {

/// Truncated exponential generating function: entry n holds n! [z^n] F.
/// With this convention integration and differentiation are index shifts
/// and the product is the binomial convolution.
template <class R>
using EgfTable = std::vector<R>;

inline constexpr int kDefaultOrder = 40;

/// Pascal triangle rows 0..max_n as big integers.
class Binomials {
 public:
  explicit Binomials(std::size_t max_n);
  const BigInt& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }
  std::size_t max_n() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// ---------------------------------------------------------------------------
// Table operations. All tables passed to a binary operation must share the
// same truncation order (length).

template <class R>
EgfTable<R> egf_add(const EgfTable<R>& a, const EgfTable<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("egf_add: truncation orders differ");
  EgfTable<R> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] + b[n];
  return out;
}

template <class R>
EgfTable<R> egf_sub(const EgfTable<R>& a, const EgfTable<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("egf_sub: truncation orders differ");
  EgfTable<R> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] - b[n];
  return out;
}

// (F G)_n = sum_k C(n,k) F_k G_{n-k}
template <class R>
EgfTable<R> egf_mul(const EgfTable<R>& a, const EgfTable<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("egf_mul: truncation orders differ");
  if (a.empty()) return {};
  const Binomials binom(a.size() - 1);
  EgfTable<R> out(a.size(), RingTraits<R>::zero());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) out[n] += (a[k] * b[n - k]) * Rational(binom(n, k));
  }
  return out;
}

// Antiderivative vanishing at 0; keeps the truncation order.
template <class R>
EgfTable<R> egf_integrate(const EgfTable<R>& a) {
  if (a.empty()) return {};
  EgfTable<R> out(a.size(), RingTraits<R>::zero());
  for (std::size_t n = 1; n < a.size(); ++n) out[n] = a[n - 1];
  return out;
}

// Drops one order of truncation.
template <class R>
EgfTable<R> egf_differentiate(const EgfTable<R>& a) {
  if (a.empty()) return {};
  return EgfTable<R>(a.begin() + 1, a.end());
}

// exp(A) with A_0 = 0, from B' = A' B, B_0 = 1.
template <class R>
EgfTable<R> egf_exp(const EgfTable<R>& a) {
  if (a.empty()) return {};
  if (!(a[0] == RingTraits<R>::zero())) {
    throw std::invalid_argument("egf_exp: constant term must vanish");
  }
  const Binomials binom(a.size());
  EgfTable<R> out(a.size(), RingTraits<R>::zero());
  out[0] = RingTraits<R>::one();
  for (std::size_t n = 0; n + 1 < a.size(); ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t k = 0; k <= n; ++k) acc += (a[k + 1] * out[n - k]) * Rational(binom(n, k));
    out[n + 1] = acc;
  }
  return out;
}

// 1/F from F G = 1: G_n = -F_0^{-1} sum_{k>=1} C(n,k) F_k G_{n-k}.
template <class R>
EgfTable<R> egf_reciprocal(const EgfTable<R>& a) {
  if (a.empty()) return {};
  if (!RingTraits<R>::invertible(a[0])) {
    throw std::invalid_argument("egf_reciprocal: constant term is not invertible");
  }
  const R inv0 = RingTraits<R>::inverse(a[0]);
  const Binomials binom(a.size());
  EgfTable<R> out(a.size(), RingTraits<R>::zero());
  out[0] = inv0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t k = 1; k <= n; ++k) acc += (a[k] * out[n - k]) * Rational(binom(n, k));
    out[n] = RingTraits<R>::zero() - acc * inv0;
  }
  return out;
}

// e^z, sin z and z truncated to `order` entries, over any ring.
template <class R>
EgfTable<R> egf_exp_z(std::size_t order) {
  return EgfTable<R>(order, RingTraits<R>::one());
}

template <class R>
EgfTable<R> egf_sin(std::size_t order) {
  EgfTable<R> out(order, RingTraits<R>::zero());
  for (std::size_t n = 1; n < order; n += 2) {
    out[n] = RingTraits<R>::from(n % 4 == 1 ? 1 : -1);
  }
  return out;
}

template <class R>
EgfTable<R> egf_z(std::size_t order) {
  EgfTable<R> out(order, RingTraits<R>::zero());
  if (order > 1) out[1] = RingTraits<R>::one();
  return out;
}

template <class R>
EgfTable<R> egf_constant(std::size_t order, const R& c) {
  EgfTable<R> out(order, RingTraits<R>::zero());
  if (order > 0) out[0] = c;
  return out;
}

// ---------------------------------------------------------------------------
// Avoidance classes

enum class SeriesClass { Unrestricted, LthenR, LL, SiblingsIncreasing };

std::string_view series_class_name(SeriesClass c);

/// Distribution of left children over a class, entries 0..n_max, from the
/// recurrences obtained by differentiating each class's integral equation:
///   unrestricted  B*' = 1 + (1+y) B* + y B*^2,             B = 1 + B*
///   l-then-r      C'  = e^{zy} C
///   ll            E'  = E + y E I,          I = int E
///   siblings-inc  G'  = 1 + (1+y) G + y H,  H' = G' G,     B = 1 + G
/// R = PolyY gives full polynomials, R = Jet the value and y-derivative at
/// y = 1, R = Rational the counts. Throws std::logic_error if an entry is not
/// a non-negative integer combination.
template <class R>
EgfTable<R> distribution_series(SeriesClass cls, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const auto order = static_cast<std::size_t>(n_max) + 1;
  const Binomials binom(order);
  const R y = RingTraits<R>::marker();
  const R one = RingTraits<R>::one();
  const R one_plus_y = one + y;
  EgfTable<R> out(order, RingTraits<R>::zero());

  switch (cls) {
    case SeriesClass::Unrestricted: {
      EgfTable<R> b(order, RingTraits<R>::zero());  // non-empty shelves
      for (std::size_t n = 0; n + 1 < order; ++n) {
        R conv = RingTraits<R>::zero();
        for (std::size_t k = 0; k <= n; ++k) conv += (b[k] * b[n - k]) * Rational(binom(n, k));
        b[n + 1] = one_plus_y * b[n] + y * conv;
        if (n == 0) b[n + 1] += one;
      }
      out = b;
      out[0] = one;
      break;
    }
    case SeriesClass::LthenR: {
      std::vector<R> y_pow(order, one);
      for (std::size_t k = 1; k < order; ++k) y_pow[k] = y_pow[k - 1] * y;
      out[0] = one;
      for (std::size_t n = 0; n + 1 < order; ++n) {
        R acc = RingTraits<R>::zero();
        for (std::size_t k = 0; k <= n; ++k) acc += (y_pow[k] * out[n - k]) * Rational(binom(n, k));
        out[n + 1] = acc;
      }
      break;
    }
    case SeriesClass::LL: {
      EgfTable<R> integral(order, RingTraits<R>::zero());
      out[0] = one;
      for (std::size_t n = 0; n + 1 < order; ++n) {
        integral[n] = n == 0 ? RingTraits<R>::zero() : out[n - 1];
        R conv = RingTraits<R>::zero();
        for (std::size_t k = 0; k <= n; ++k) {
          conv += (out[k] * integral[n - k]) * Rational(binom(n, k));
        }
        out[n + 1] = out[n] + y * conv;
      }
      break;
    }
    case SeriesClass::SiblingsIncreasing: {
      EgfTable<R> g(order + 1, RingTraits<R>::zero());
      EgfTable<R> h(order + 1, RingTraits<R>::zero());
      for (std::size_t n = 0; n + 1 < order; ++n) {
        g[n + 1] = one_plus_y * g[n] + y * h[n];
        if (n == 0) g[n + 1] += one;
        // h_{n+1} needs g_{k+1} for k <= n, all known now.
        R conv = RingTraits<R>::zero();
        for (std::size_t k = 0; k <= n; ++k) conv += (g[k + 1] * g[n - k]) * Rational(binom(n, k));
        h[n + 1] = conv;
      }
      for (std::size_t n = 1; n < order; ++n) out[n] = g[n];
      out[0] = one;
      break;
    }
  }

  for (std::size_t n = 0; n < order; ++n) {
    if (!RingTraits<R>::is_counting(out[n])) {
      throw std::logic_error("distribution_series: entry " + std::to_string(n) +
                             " is not a non-negative integer combination");
    }
  }
  return out;
}

/// Class sizes n = 0..n_max (series evaluated at y = 1).
std::vector<BigInt> counting_series(SeriesClass cls, int n_max);

/// Popularity of left children, n = 0..n_max, as the y-derivative at y = 1
/// of the distribution series.
std::vector<BigInt> popularity_by_derivative(SeriesClass cls, int n_max);

/// Closed forms: (n+1) a_n - a_{n+1} with a the class counts for l-then-r and
/// ll, n!(n-1)/2 for the unrestricted class. Throws std::invalid_argument for
/// siblings-inc, which has no such recurrence.
std::vector<BigInt> popularity_by_recurrence(SeriesClass cls, int n_max);

/// popularity_by_derivative, cross-checked against the closed forms where
/// they exist; throws std::logic_error on disagreement.
std::vector<BigInt> popularity_series(SeriesClass cls, int n_max);

enum class NamedSequence { Bell, Euler, A131178, EulerianRow, Lah };

std::optional<NamedSequence> parse_named_sequence(std::string_view name);

/// bell, euler, a131178, lah: entries 0..n. eulerian_row: coefficients of the
/// unrestricted distribution entry n (row n of the shifted Eulerian triangle).
std::vector<BigInt> named_sequence(NamedSequence id, int n);

// n value per line, starting at `offset`.
std::string to_bfile(std::span<const BigInt> values, int offset = 0);

}  // namespace tshelf
