#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tshelf/shelf.hpp"

using namespace tshelf;

namespace {

// In-order reading written against the link tables directly.
std::vector<int> inorder_values(const Treeshelf& t) {
  std::vector<int> out;
  const int n = static_cast<int>(t.size());
  std::function<void(Label)> walk = [&](Label v) {
    if (v == kNoChild) return;
    walk(t.left(v));
    out.push_back(n + 1 - v);
    walk(t.right(v));
  };
  if (n > 0) walk(1);
  return out;
}

bool is_valid(const char* text) { return validate(parse_raw(text)).valid(); }

}  // namespace

TEST_CASE("parse and render") {
  const Treeshelf t = parse_shelf("1(2,3)");
  CHECK(t.size() == 3);
  CHECK(t.root() == 1);
  CHECK(t.left(1) == 2);
  CHECK(t.right(1) == 3);
  CHECK(render(parse_shelf("1")) == "1");
  CHECK(render(parse_shelf("")) == "");
  CHECK(parse_shelf("").empty());
  CHECK(render(parse_shelf(" 1 ( 3 ( , 5 ) , 2 ( 4 , 6 ( , 7 ) ) ) ")) == "1(3(,5),2(4,6(,7)))");
  CHECK(render(parse_shelf("1(,)")) == "1");
  CHECK(render(parse_shelf("1(2(3,),)")) == "1(2(3,),)");
}

TEST_CASE("malformed text is rejected") {
  for (const char* bad : {"1(", "1(2,3", "x", "1(2,3))", "1(2)", "(", "1 2", "-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_shelf(bad), ParseError);
  }
}

TEST_CASE("validation") {
  CHECK(is_valid("1(2,3)"));
  CHECK_FALSE(is_valid("1(3,3)"));
  CHECK_FALSE(is_valid("2(,3)"));
  CHECK_FALSE(is_valid("1(,3(2,))"));
  CHECK_FALSE(is_valid("0"));
  CHECK_THROWS_AS(parse_shelf("1(3,3)"), ValidationError);
  CHECK_THROWS_AS(parse_shelf("2(,3)"), ValidationError);
  const auto report = validate(parse_raw("1(3,3)"));
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().find("duplicate") != std::string::npos);
  CHECK_THROWS_AS((Treeshelf::from_links({0, 2, 0}, {0, 2, 0})), ValidationError);
  CHECK_THROWS_AS((Treeshelf::from_links({0, 0}, {0, 0, 0})), ValidationError);
}

TEST_CASE("raw round trip") {
  const Treeshelf t = parse_shelf("1(3(,5),2(4,6(,7)))");
  CHECK(to_shelf(to_raw(t)) == t);
}

TEST_CASE("enumeration sizes") {
  CHECK(all_shelves(0).size() == 1);
  CHECK(all_shelves(0).front().empty());
  CHECK(all_shelves(3).size() == 6);
  std::size_t count = 0;
  enumerate_shelves(7, [&](const Treeshelf&) { ++count; });
  CHECK(count == 5040);
}

TEST_CASE("enumeration matches the insertion oracle") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    std::vector<std::string> seen;
    enumerate_shelves(n, [&](const Treeshelf& t) { seen.push_back(render(t)); });
    CHECK(seen == oracle::sorted_renders(oracle::shelves(n)));
  }
}

TEST_CASE("enumeration streams in strictly increasing lexicographic order") {
  for (int n = 8; n <= 10; ++n) {
    CAPTURE(n);
    std::string previous;
    std::size_t count = 0;
    bool sorted = true;
    enumerate_shelves(n, [&](const Treeshelf& t) {
      std::string s = render(t);
      if (count > 0 && !(previous < s)) sorted = false;
      previous = std::move(s);
      ++count;
    });
    CHECK(sorted);
    CHECK(BigInt(static_cast<unsigned long>(count)) == oracle::factorial(n));
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(enumerate_shelves(kDefaultCeiling + 1, [](const Treeshelf&) {}), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_shelves(-1, [](const Treeshelf&) {}), std::invalid_argument);
  CHECK_THROWS_AS(check_size(5, 4), ResourceLimitError);
  CHECK_NOTHROW(check_size(4, 4));
}

TEST_CASE("permutation examples") {
  const Treeshelf fig = parse_shelf("1(3(,5),2(4,6(,7)))");
  CHECK(render(shelf_to_permutation(fig)) == "5 3 7 4 6 2 1");
  CHECK(permutation_to_shelf(parse_permutation("5 3 7 4 6 2 1")) == fig);
  CHECK(permutation_to_shelf(parse_permutation("5,3,7,4,6,2,1")) == fig);
  CHECK(render(shelf_to_permutation(parse_shelf("1"))) == "1");
  CHECK(render(shelf_to_permutation(parse_shelf("1(2,)"))) == "1 2");
  CHECK(render(shelf_to_permutation(parse_shelf("1(,2)"))) == "2 1");
  CHECK(shelf_to_permutation(Treeshelf{}).size() == 0);
  CHECK(permutation_to_shelf(Permutation{}).empty());
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 x"), std::invalid_argument);
}

TEST_CASE("all 24 permutations of size 4 give distinct shelves") {
  std::vector<int> p{1, 2, 3, 4};
  std::set<std::string> images;
  do {
    const Treeshelf t = permutation_to_shelf(Permutation(p));
    CHECK(shelf_to_permutation(t).values() == p);
    images.insert(render(t));
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(images.size() == 24);
}

TEST_CASE("permutation bijection against the in-order oracle") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& t : oracle::shelves(n)) {
      const Permutation p = shelf_to_permutation(t);
      CHECK(p.values() == inorder_values(t));
      CHECK(permutation_to_shelf(p) == t);
    }
  }
}

TEST_CASE("mirror") {
  CHECK(render(mirror(parse_shelf("1(2,)"))) == "1(,2)");
  CHECK(render(mirror(parse_shelf("1(2(3,),)"))) == "1(,2(,3))");
  for (const auto& t : oracle::shelves(6)) CHECK(mirror(mirror(t)) == t);
}
