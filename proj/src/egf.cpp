#include "tshelf/egf.hpp"

#include <sstream>

namespace tshelf {

Binomials::Binomials(std::size_t max_n) : rows_(max_n + 1) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

std::string_view series_class_name(SeriesClass c) {
  switch (c) {
    case SeriesClass::Unrestricted: return "all";
    case SeriesClass::LthenR: return "l-then-r";
    case SeriesClass::LL: return "ll";
    case SeriesClass::SiblingsIncreasing: return "siblings-inc";
  }
  return "?";
}

std::vector<BigInt> counting_series(SeriesClass cls, int n_max) {
  const auto table = distribution_series<Rational>(cls, n_max);
  std::vector<BigInt> out;
  out.reserve(table.size());
  for (const Rational& v : table) out.push_back(to_integer(v));
  return out;
}

std::vector<BigInt> popularity_by_derivative(SeriesClass cls, int n_max) {
  const auto table = distribution_series<Jet>(cls, n_max);
  std::vector<BigInt> out;
  out.reserve(table.size());
  for (const Jet& j : table) out.push_back(to_integer(j.slope));
  return out;
}

std::vector<BigInt> popularity_by_recurrence(SeriesClass cls, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<BigInt> out;
  switch (cls) {
    case SeriesClass::Unrestricted:
      for (int n = 0; n <= n_max; ++n) {
        out.push_back(n == 0 ? BigInt(0) : BigInt(factorial(static_cast<unsigned>(n)) * (n - 1) / 2));
      }
      return out;
    case SeriesClass::LthenR:
    case SeriesClass::LL: {
      const auto counts = counting_series(cls, n_max + 1);
      for (int n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        out.push_back(BigInt((n + 1) * counts[i] - counts[i + 1]));
      }
      return out;
    }
    case SeriesClass::SiblingsIncreasing:
      break;
  }
  throw std::invalid_argument("no closed popularity recurrence for class " +
                              std::string(series_class_name(cls)));
}

std::vector<BigInt> popularity_series(SeriesClass cls, int n_max) {
  auto by_derivative = popularity_by_derivative(cls, n_max);
  if (cls != SeriesClass::SiblingsIncreasing) {
    if (popularity_by_recurrence(cls, n_max) != by_derivative) {
      throw std::logic_error("popularity: derivative and closed form disagree for class " +
                             std::string(series_class_name(cls)));
    }
  }
  return by_derivative;
}

std::optional<NamedSequence> parse_named_sequence(std::string_view name) {
  if (name == "bell") return NamedSequence::Bell;
  if (name == "euler") return NamedSequence::Euler;
  if (name == "a131178") return NamedSequence::A131178;
  if (name == "eulerian_row") return NamedSequence::EulerianRow;
  if (name == "lah") return NamedSequence::Lah;
  return std::nullopt;
}

namespace {

std::vector<BigInt> integers(const EgfTable<Rational>& table) {
  std::vector<BigInt> out;
  out.reserve(table.size());
  for (const Rational& v : table) out.push_back(to_integer(v));
  return out;
}

}  // namespace

std::vector<BigInt> named_sequence(NamedSequence id, int n) {
  if (n < 0) throw std::invalid_argument("sequence length must be non-negative");
  const auto order = static_cast<std::size_t>(n) + 1;
  switch (id) {
    case NamedSequence::Bell: {
      auto shifted = egf_exp_z<Rational>(order);
      shifted[0] = 0;  // e^z - 1
      return integers(egf_exp(shifted));
    }
    case NamedSequence::Euler: {
      const auto one_minus_sin =
          egf_sub(egf_constant<Rational>(order, Rational(1)), egf_sin<Rational>(order));
      return integers(egf_reciprocal(one_minus_sin));
    }
    case NamedSequence::A131178:
      return counting_series(SeriesClass::SiblingsIncreasing, n);
    case NamedSequence::EulerianRow:
      return distribution_series<PolyY>(SeriesClass::Unrestricted, n).back().integer_coeffs();
    case NamedSequence::Lah:
      return popularity_by_recurrence(SeriesClass::Unrestricted, n);
  }
  throw std::invalid_argument("unknown sequence");
}

std::string to_bfile(std::span<const BigInt> values, int offset) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (offset + static_cast<int>(i)) << ' ' << values[i].get_str() << '\n';
  }
  return out.str();
}

}  // namespace tshelf
