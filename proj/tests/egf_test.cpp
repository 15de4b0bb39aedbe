#include <doctest.h>

#include "oracles.hpp"
#include "tshelf/egf.hpp"

using namespace tshelf;

namespace {

std::vector<BigInt> integers(const EgfTable<Rational>& t) {
  std::vector<BigInt> out;
  for (const auto& v : t) out.push_back(to_integer(v));
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Entries 2..9 of a sequence.
std::vector<BigInt> from_two(const std::vector<BigInt>& v) { return {v.begin() + 2, v.begin() + 10}; }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const PolyY p{1, 1};
  CHECK(p * p == PolyY{1, 2, 1});
  CHECK(p - p == PolyY{});
  CHECK((p - p).is_zero());
  CHECK(PolyY{1, 2, 0} == PolyY{1, 2});
  CHECK(PolyY{1, 4, 1}.evaluate(1) == 6);
  CHECK(PolyY{1, 4, 1}.derivative_at_one() == 6);
  CHECK(PolyY{1, 4}.reversed(3) == PolyY{0, 4, 1});
  CHECK(PolyY{1, 4, 1}.degree() == 2);
  CHECK(PolyY{}.degree() == -1);
  CHECK(PolyY{1, -1}.is_counting() == false);
  CHECK(to_string(PolyY{1, 4, 1}) == "1 + 4y + y^2");
  CHECK_THROWS_AS((PolyY{1, 2, 3}.reversed(2)), std::invalid_argument);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::domain_error);
}

TEST_CASE("jets carry value and slope at y = 1") {
  const Jet y = RingTraits<Jet>::marker();
  const Jet p = (RingTraits<Jet>::one() + y) * (RingTraits<Jet>::one() + y);
  CHECK(p.value == 4);
  CHECK(p.slope == 4);
}

TEST_CASE("table operations") {
  const auto ones = egf_exp_z<Rational>(8);
  CHECK(integers(egf_integrate(ones)) == big({0, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(integers(egf_differentiate(ones)) == big({1, 1, 1, 1, 1, 1, 1}));
  CHECK(integers(egf_mul(ones, ones)) == big({1, 2, 4, 8, 16, 32, 64, 128}));
  CHECK(integers(egf_add(ones, egf_z<Rational>(8))) == big({1, 2, 1, 1, 1, 1, 1, 1}));
  CHECK(integers(egf_sin<Rational>(8)) == big({0, 1, 0, -1, 0, 1, 0, -1}));
  CHECK(integers(egf_reciprocal(ones)) == big({1, -1, 1, -1, 1, -1, 1, -1}));
  CHECK_THROWS_AS(egf_exp(ones), std::invalid_argument);
  CHECK_THROWS_AS(egf_reciprocal(egf_z<Rational>(4)), std::invalid_argument);
  CHECK_THROWS_AS(egf_add(ones, egf_exp_z<Rational>(3)), std::invalid_argument);
}

TEST_CASE("exp(e^z - 1) and 1/(1 - sin z)") {
  constexpr std::size_t kOrder = 25;
  const auto ones = egf_exp_z<Rational>(kOrder);
  const auto bell = integers(egf_exp(egf_sub(ones, egf_constant<Rational>(kOrder, 1))));
  CHECK(bell == oracle::bell(kOrder - 1));
  const auto euler =
      integers(egf_reciprocal(egf_sub(egf_constant<Rational>(kOrder, 1), egf_sin<Rational>(kOrder))));
  const auto zig = oracle::zigzag(kOrder);
  CHECK(euler == std::vector<BigInt>(zig.begin() + 1, zig.end()));
}

TEST_CASE("distribution series examples") {
  CHECK(distribution_series<PolyY>(SeriesClass::Unrestricted, 3)[3] == PolyY{1, 4, 1});
  CHECK(distribution_series<PolyY>(SeriesClass::LthenR, 3)[3] == PolyY{1, 3, 1});
  CHECK(distribution_series<PolyY>(SeriesClass::SiblingsIncreasing, 3)[3] == PolyY{1, 3, 1});
  CHECK(distribution_series<PolyY>(SeriesClass::LL, 3)[3] == PolyY{1, 4});
  CHECK(counting_series(SeriesClass::SiblingsIncreasing, 9) ==
        big({1, 1, 2, 5, 16, 64, 308, 1730, 11104, 80176}));
  CHECK_THROWS_AS(counting_series(SeriesClass::LL, -1), std::invalid_argument);
}

TEST_CASE("unrestricted distribution rows are Eulerian rows") {
  const auto rows = distribution_series<PolyY>(SeriesClass::Unrestricted, 12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(rows[static_cast<std::size_t>(n)].integer_coeffs() == oracle::eulerian_row(n));
  }
  CHECK(named_sequence(NamedSequence::EulerianRow, 4) == big({1, 11, 11, 1}));
}

TEST_CASE("distribution series agree with the brute-force oracle") {
  const std::pair<SeriesClass, std::optional<PatternId>> cases[] = {
      {SeriesClass::Unrestricted, std::nullopt},
      {SeriesClass::LthenR, PatternId::LthenR},
      {SeriesClass::LL, PatternId::LL},
      {SeriesClass::SiblingsIncreasing, PatternId::SiblingsIncreasing},
  };
  for (const auto& [cls, pattern] : cases) {
    const auto rows = distribution_series<PolyY>(cls, 7);
    for (int n = 0; n <= 7; ++n) {
      CAPTURE(n);
      CHECK(rows[static_cast<std::size_t>(n)].integer_coeffs() == oracle::left_edge_row(n, pattern));
    }
  }
}

TEST_CASE("popularity sequences") {
  CHECK(from_two(popularity_series(SeriesClass::LthenR, 9)) ==
        big({1, 5, 23, 109, 544, 2876, 16113, 95495}));
  CHECK(from_two(popularity_series(SeriesClass::LL, 9)) ==
        big({1, 4, 19, 94, 519, 3144, 20903, 151418}));
  CHECK(from_two(popularity_series(SeriesClass::SiblingsIncreasing, 9)) ==
        big({1, 5, 24, 128, 770, 5190, 38864, 320704}));
  CHECK_THROWS_AS(popularity_by_recurrence(SeriesClass::SiblingsIncreasing, 5), std::invalid_argument);
}

TEST_CASE("derivative route agrees with closed forms at larger n") {
  for (SeriesClass cls : {SeriesClass::Unrestricted, SeriesClass::LthenR, SeriesClass::LL}) {
    CHECK(popularity_by_derivative(cls, 30) == popularity_by_recurrence(cls, 30));
  }
  const auto lah = popularity_by_derivative(SeriesClass::Unrestricted, 20);
  for (int n = 1; n <= 20; ++n) CHECK(lah[static_cast<std::size_t>(n)] == oracle::factorial(n) * (n - 1) / 2);
}

TEST_CASE("named sequences") {
  CHECK(named_sequence(NamedSequence::Bell, 9) == big({1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147}));
  CHECK(named_sequence(NamedSequence::Euler, 9) == big({1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521}));
  CHECK(named_sequence(NamedSequence::A131178, 9) == big({1, 1, 2, 5, 16, 64, 308, 1730, 11104, 80176}));
  const auto lah = named_sequence(NamedSequence::Lah, 5);
  CHECK(std::vector<BigInt>(lah.begin() + 2, lah.end()) == big({1, 6, 36, 240}));
  CHECK(parse_named_sequence("bell") == NamedSequence::Bell);
  CHECK_FALSE(parse_named_sequence("fibonacci").has_value());
}

TEST_CASE("b-file output") {
  const auto v = big({1, 1, 2});
  CHECK(to_bfile(v) == "0 1\n1 1\n2 2\n");
  CHECK(to_bfile(v, 2) == "2 1\n3 1\n4 2\n");
}
