#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tshelf/egf.hpp"
#include "tshelf/polyy.hpp"

namespace tshelf {

/// Principal branch of the Lambert function on [0, inf): w with w e^w = x.
/// Damped Newton iteration started from ln(1 + x). Throws
/// std::domain_error for negative x.
double lambert_w(double x);

/// Natural logarithm of a positive big integer, from its leading bits and
/// bit length (never converts the value itself to double).
double log_bigint(const BigInt& value);

struct AsymptoticEstimate {
  double log_value;
  std::optional<double> value;  // present when representable as a double
};

/// Leading-order estimate of the left-child popularity of size n, n >= 2.
///   l-then-r:      sqrt(n) (n/W)^(n+1/2) e^(n/W - n - 1),  W = W(n)
///   ll:            n! 8(pi-2)/pi^3 n^2 (2/pi)^n
///   siblings-inc:  n! n (sqrt2 / ln(2 sqrt2 + 3))^(n+1)
/// The last two formulas describe [z^n] of the popularity EGF, hence the n!.
/// Throws std::invalid_argument for the unrestricted class.
AsymptoticEstimate asymptotic_popularity(SeriesClass cls, int n);

/// Bell numbers b_0..b_n via the Bell triangle.
std::vector<BigInt> bell_triangle(int n);

/// Exact popularity values 0..n_max using the cheapest exact route:
/// (n+1) b_n - b_{n+1} over the Bell triangle, (n+1) e_n - e_{n+1} over
/// the reciprocal of 1 - sin z, and the derivative series for siblings-inc.
std::vector<BigInt> exact_popularity(SeriesClass cls, int n_max);

struct AsymptoticRow {
  int n = 0;
  BigInt exact;
  double estimate_log = 0;
  double exact_log = 0;
  double log_ratio = 0;  // ln(exact / estimate)
};

struct AsymptoticReport {
  SeriesClass cls = SeriesClass::LthenR;
  std::vector<AsymptoticRow> rows;  // sorted by n

  // Header `n,exact,estimate_log,exact_log,log_ratio`, one row per n.
  std::string to_csv() const;
};

AsymptoticReport ratio_report(SeriesClass cls, std::vector<int> ns);

}  // namespace tshelf
