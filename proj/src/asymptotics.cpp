#include "tshelf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tshelf {

double lambert_w(double x) {
  if (!(x >= 0)) throw std::domain_error("lambert_w: argument must be non-negative");
  if (x == 0) return 0;
  double w = std::log1p(x);
  for (int iter = 0; iter < 200; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double step = f / (ew * (w + 1));
    // Halve the step while it would leave the principal branch.
    double damped = step;
    while (w - damped <= -1) damped /= 2;
    w -= damped;
    if (std::abs(damped) <= 1e-15 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double log_bigint(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_bigint: value must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

AsymptoticEstimate asymptotic_popularity(SeriesClass cls, int n) {
  if (n < 2) throw std::invalid_argument("asymptotic_popularity: n must be at least 2");
  const double x = n;
  const double log_factorial = std::lgamma(x + 1);
  double log_value = 0;
  switch (cls) {
    case SeriesClass::LthenR: {
      const double w = lambert_w(x);
      const double ratio = x / w;
      log_value = 0.5 * std::log(x) + (x + 0.5) * std::log(ratio) + ratio - x - 1;
      break;
    }
    case SeriesClass::LL: {
      constexpr double pi = std::numbers::pi;
      log_value = log_factorial + std::log(8 * (pi - 2) / (pi * pi * pi)) + 2 * std::log(x) +
                  x * std::log(2 / pi);
      break;
    }
    case SeriesClass::SiblingsIncreasing: {
      const double base = std::numbers::sqrt2 / std::log(2 * std::numbers::sqrt2 + 3);
      log_value = log_factorial + std::log(x) + (x + 1) * std::log(base);
      break;
    }
    case SeriesClass::Unrestricted:
      throw std::invalid_argument("no asymptotic formula for the unrestricted class");
  }
  AsymptoticEstimate out{log_value, std::nullopt};
  if (log_value < std::log(std::numeric_limits<double>::max())) out.value = std::exp(log_value);
  return out;
}

std::vector<BigInt> bell_triangle(int n) {
  if (n < 0) throw std::invalid_argument("bell_triangle: n must be non-negative");
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

std::vector<BigInt> exact_popularity(SeriesClass cls, int n_max) {
  if (n_max < 0) throw std::invalid_argument("exact_popularity: n_max must be non-negative");
  std::vector<BigInt> counts;
  switch (cls) {
    case SeriesClass::LthenR:
      counts = bell_triangle(n_max + 1);
      break;
    case SeriesClass::LL:
      counts = named_sequence(NamedSequence::Euler, n_max + 1);
      break;
    case SeriesClass::SiblingsIncreasing:
    case SeriesClass::Unrestricted:
      return popularity_by_derivative(cls, n_max);
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.push_back(BigInt((n + 1) * counts[i] - counts[i + 1]));
  }
  return out;
}

AsymptoticReport ratio_report(SeriesClass cls, std::vector<int> ns) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  AsymptoticReport report;
  report.cls = cls;
  if (ns.empty()) return report;
  const auto exact = exact_popularity(cls, ns.back());
  for (int n : ns) {
    AsymptoticRow row;
    row.n = n;
    row.exact = exact[static_cast<std::size_t>(n)];
    row.estimate_log = asymptotic_popularity(cls, n).log_value;
    row.exact_log = log_bigint(row.exact);
    row.log_ratio = row.exact_log - row.estimate_log;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string AsymptoticReport::to_csv() const {
  std::ostringstream out;
  out << "n,exact,estimate_log,exact_log,log_ratio\n";
  out << std::setprecision(12);
  for (const auto& row : rows) {
    out << row.n << ',' << row.exact.get_str() << ',' << row.estimate_log << ',' << row.exact_log
        << ',' << row.log_ratio << '\n';
  }
  return out.str();
}

}  // namespace tshelf
