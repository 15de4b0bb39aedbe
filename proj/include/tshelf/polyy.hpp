#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tshelf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Polynomial in the left-child marker y with exact rational coefficients.
/// Dense storage, index = power of y; never holds a trailing zero, so the
/// zero polynomial is the empty sequence.
class PolyY {
 public:
  PolyY() = default;
  PolyY(std::initializer_list<long> coeffs);
  explicit PolyY(std::vector<Rational> coeffs);

  static PolyY constant(const Rational& c);
  static PolyY y() { return PolyY{0, 1}; }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& y) const;
  Rational derivative_at_one() const;
  // Coefficients with y^k and y^(d-k) exchanged, d = width - 1.
  PolyY reversed(std::size_t width) const;

  // True when every coefficient is a non-negative integer.
  bool is_counting() const;
  std::vector<BigInt> integer_coeffs() const;

  PolyY& operator+=(const PolyY& other);
  PolyY& operator-=(const PolyY& other);
  PolyY& operator*=(const Rational& c);

  friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
  friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
  friend PolyY operator*(const PolyY& a, const PolyY& b);
  friend PolyY operator*(PolyY a, const Rational& c) { return a *= c; }
  friend bool operator==(const PolyY&, const PolyY&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const PolyY& p);

/// First-order expansion of a y-polynomial around y = 1:
/// value = F(1), slope = dF/dy(1). Arithmetic is exact mod (y - 1)^2, which is
/// all a popularity computation needs.
struct Jet {
  Rational value;
  Rational slope;

  Jet& operator+=(const Jet& o) {
    value += o.value;
    slope += o.slope;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value -= o.value;
    slope -= o.slope;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return Jet{a.value * b.value, a.value * b.slope + a.slope * b.value};
  }
  friend Jet operator*(const Jet& a, const Rational& c) { return Jet{a.value * c, a.slope * c}; }
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.value == b.value && a.slope == b.slope;
  }
};

/// Uniform constants for the coefficient rings the series engine runs over.
/// `marker()` is the value substituted for y: y itself for PolyY, 1 + dy for
/// Jet, and 1 for plain rationals (univariate specialisation at y = 1).
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static Rational marker() { return 1; }
  static Rational from(long c) { return c; }
  static bool invertible(const Rational& a) { return a != 0; }
  static Rational inverse(const Rational& a) { return 1 / a; }
  static bool is_counting(const Rational& a) { return a.get_den() == 1 && a >= 0; }
};

template <>
struct RingTraits<PolyY> {
  static PolyY zero() { return {}; }
  static PolyY one() { return PolyY{1}; }
  static PolyY marker() { return PolyY::y(); }
  static PolyY from(long c) { return PolyY::constant(c); }
  static bool invertible(const PolyY& a) { return a.degree() == 0; }
  static PolyY inverse(const PolyY& a) { return PolyY::constant(1 / a.coeff(0)); }
  static bool is_counting(const PolyY& a) { return a.is_counting(); }
};

template <>
struct RingTraits<Jet> {
  static Jet zero() { return {0, 0}; }
  static Jet one() { return {1, 0}; }
  static Jet marker() { return {1, 1}; }
  static Jet from(long c) { return {c, 0}; }
  static bool invertible(const Jet& a) { return a.value != 0; }
  static Jet inverse(const Jet& a) {
    const Rational inv = 1 / a.value;
    return {inv, -a.slope * inv * inv};
  }
  static bool is_counting(const Jet& a) {
    return RingTraits<Rational>::is_counting(a.value) && RingTraits<Rational>::is_counting(a.slope);
  }
};

BigInt to_integer(const Rational& r);  // throws std::domain_error unless integral
BigInt factorial(unsigned n);

}  // namespace tshelf
