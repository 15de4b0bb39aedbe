#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tshelf/asymptotics.hpp"

using namespace tshelf;

TEST_CASE("Lambert W") {
  CHECK(lambert_w(0) == 0);
  CHECK(lambert_w(std::numbers::e) == doctest::Approx(1).epsilon(1e-14));
  for (double x : {1e-8, 0.1, 1.0, 10.0, 123.5, 1e5, 1e9, 1e15}) {
    CAPTURE(x);
    const double w = lambert_w(x);
    CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
  }
  CHECK_THROWS_AS(lambert_w(-0.1), std::domain_error);
}

TEST_CASE("logarithm of big integers") {
  BigInt two_k = 1;
  two_k <<= 5000;
  CHECK(log_bigint(two_k) == doctest::Approx(5000 * std::numbers::ln2).epsilon(1e-14));
  CHECK(log_bigint(BigInt(151418)) == doctest::Approx(std::log(151418.0)).epsilon(1e-14));
  CHECK(log_bigint(BigInt(1)) == 0);
  CHECK_THROWS_AS(log_bigint(BigInt(0)), std::domain_error);
}

TEST_CASE("Bell triangle") { CHECK(bell_triangle(30) == oracle::bell(30)); }

TEST_CASE("exact popularity routes agree") {
  for (SeriesClass cls : {SeriesClass::LthenR, SeriesClass::LL, SeriesClass::SiblingsIncreasing}) {
    CHECK(exact_popularity(cls, 25) == popularity_by_derivative(cls, 25));
  }
}

TEST_CASE("estimates") {
  const auto ll = asymptotic_popularity(SeriesClass::LL, 9);
  REQUIRE(ll.value.has_value());
  CHECK(std::abs(std::log(151418.0) - ll.log_value) < 0.05);
  const auto sib = asymptotic_popularity(SeriesClass::SiblingsIncreasing, 9);
  CHECK(std::abs(std::log(320704.0) - sib.log_value) < 0.2);
  const auto bell = asymptotic_popularity(SeriesClass::LthenR, 9);
  CHECK(std::abs(std::log(95495.0) - bell.log_value) < 1);
  CHECK(asymptotic_popularity(SeriesClass::LthenR, 2).value.has_value());
  CHECK_FALSE(asymptotic_popularity(SeriesClass::LL, 400).value.has_value());
  CHECK_THROWS_AS(asymptotic_popularity(SeriesClass::Unrestricted, 10), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_popularity(SeriesClass::LL, 1), std::invalid_argument);
}

TEST_CASE("ratio reports improve with n") {
  for (SeriesClass cls : {SeriesClass::LL, SeriesClass::SiblingsIncreasing}) {
    const auto report = ratio_report(cls, {100, 50});
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].n == 50);
    CHECK(std::abs(report.rows[1].log_ratio) < std::abs(report.rows[0].log_ratio));
  }
  const auto bell = ratio_report(SeriesClass::LthenR, {50, 200});
  CHECK(std::abs(bell.rows[1].log_ratio) < std::abs(bell.rows[0].log_ratio));
}

TEST_CASE("CSV report") {
  const auto report = ratio_report(SeriesClass::LL, {9});
  const std::string csv = report.to_csv();
  CHECK(csv.rfind("n,exact,estimate_log,exact_log,log_ratio\n9,151418,", 0) == 0);
  CHECK(ratio_report(SeriesClass::LL, {}).rows.empty());
}
