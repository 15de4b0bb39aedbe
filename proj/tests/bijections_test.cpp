#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tshelf/bijections.hpp"

using namespace tshelf;

namespace {

const char* const kWorkedExample = "1{2{3},4{5,6}}";

template <class T>
std::size_t count_of(void (*enumerate)(int, const std::function<void(const T&)>&, int), int n) {
  std::size_t count = 0;
  enumerate(n, [&](const T&) { ++count; }, kDefaultCeiling);
  return count;
}

}  // namespace

TEST_CASE("partition text") {
  const SetPartition p = parse_partition("1,3|2");
  REQUIRE(p.blocks().size() == 2);
  CHECK(p.blocks()[0] == std::vector<Label>{1, 3});
  CHECK(p.blocks()[1] == std::vector<Label>{2});
  CHECK(render(p) == "1,3|2");
  CHECK(parse_partition("").size() == 0);
  CHECK_THROWS_AS(parse_partition("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1;2"), ParseError);
}

TEST_CASE("partition counts are Bell numbers") {
  const auto bell = oracle::bell(8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(BigInt(static_cast<unsigned long>(all_partitions(n).size())) == bell[static_cast<std::size_t>(n)]);
  }
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(8).size() == 4140);
}

TEST_CASE("partition bijection examples") {
  CHECK(render(partition_to_shelf(parse_partition("1,2,3"))) == "1(2(3,),)");
  CHECK(render(partition_to_shelf(parse_partition("1|2|3"))) == "1(,2(,3))");
  CHECK(render(partition_to_shelf(parse_partition("1,3|2"))) == "1(3,2)");
  CHECK(render(shelf_to_partition(parse_shelf("1(2(3,),)"))) == "1,2,3");
  CHECK(render(shelf_to_partition(parse_shelf("1(3,2)"))) == "1,3|2");
  CHECK(partition_to_shelf(SetPartition{}).empty());
  CHECK_THROWS_AS(shelf_to_partition(parse_shelf("1(2(,3),)")), std::invalid_argument);
}

TEST_CASE("partition round trips") {
  for (const auto& p : all_partitions(6)) CHECK(shelf_to_partition(partition_to_shelf(p)) == p);
  for (int n = 0; n <= 7; ++n) {
    std::vector<Treeshelf> image;
    for (const auto& p : all_partitions(n)) image.push_back(partition_to_shelf(p));
    CHECK(oracle::sorted_renders(image) ==
          oracle::sorted_renders(oracle::avoiders(n, PatternId::LthenR)));
  }
}

TEST_CASE("tree text") {
  const auto u = parse_unordered(kWorkedExample);
  CHECK(u.size() == 6);
  CHECK(u.child_count(1) == 2);
  CHECK(u.child_count(2) == 1);
  CHECK(render(u) == kWorkedExample);
  CHECK(render(parse_unordered("1{3,2}")) == "1{2,3}");
  const auto j = parse_jtree("1[L:2{3,4}]");
  CHECK(j.tag(1) == Side::Left);
  CHECK(j.tag(2) == Side::None);
  CHECK(render(j) == "1[L:2{3,4}]");
  CHECK_THROWS_AS(parse_jtree("1{2}"), ParseError);
  CHECK_THROWS_AS(parse_unordered("1[L:2]"), ParseError);
  CHECK_THROWS_AS(parse_unordered("1{3}"), ValidationError);
  CHECK_THROWS_AS(parse_unordered("2{1}"), ValidationError);
}

TEST_CASE("tree counts") {
  const long jtrees[] = {1, 1, 2, 5, 16, 64, 308};
  for (int n = 0; n <= 6; ++n) CHECK(count_of<JTree>(enumerate_jtrees, n) == static_cast<std::size_t>(jtrees[n]));
  const auto zig = oracle::zigzag(8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(BigInt(static_cast<unsigned long>(count_of<UnorderedIncTree>(enumerate_unordered, n))) ==
          zig[static_cast<std::size_t>(n)]);
  }
  const auto single = all_unordered(1);
  REQUIRE(single.size() == 1);
  CHECK(render(single.front()) == "1");
}

TEST_CASE("J-tree bijection") {
  CHECK(render(jtree_to_shelf(parse_jtree("1{2,3}"))) == "1(3,2)");
  CHECK(render(jtree_to_shelf(parse_jtree("1"))) == "1");
  CHECK(render(shelf_to_jtree(parse_shelf("1(3,2)"))) == "1{2,3}");
  CHECK(render(shelf_to_jtree(parse_shelf("1(2,)"))) == "1[L:2]");
  CHECK(render(shelf_to_jtree(parse_shelf("1(,2)"))) == "1[R:2]");
  CHECK_THROWS_AS(shelf_to_jtree(parse_shelf("1(2,3)")), std::invalid_argument);
  for (int n = 0; n <= 7; ++n) {
    std::vector<Treeshelf> image;
    for (const auto& j : all_jtrees(n)) {
      const Treeshelf t = jtree_to_shelf(j);
      CHECK(shelf_to_jtree(t) == j);
      image.push_back(t);
    }
    CHECK(oracle::sorted_renders(image) ==
          oracle::sorted_renders(oracle::avoiders(n, PatternId::SiblingsIncreasing)));
  }
}

TEST_CASE("worked example stages") {
  const auto u = parse_unordered(kWorkedExample);
  const Treeshelf standard = standard_representation(u);
  CHECK(render(standard) == "1(4(6,5),2(,3))");
  const Treeshelf shifted = shift(standard);
  CHECK(render(shifted) == "1(,2(4(,5(6,)),3))");
  const Treeshelf dropped = drop_root(shifted);
  CHECK(render(dropped) == "1(3(,4(5,)),2)");
  CHECK(unordered_to_ll_avoider(u) == dropped);
  CHECK(ll_avoider_to_unordered(dropped) == u);
  CHECK(unshift(shifted) == standard);
}

TEST_CASE("standard representation and shift examples") {
  CHECK(render(standard_representation(parse_unordered("1{2{3}}"))) == "1(,2(,3))");
  CHECK(render(standard_representation(parse_unordered("1{2,3}"))) == "1(3,2)");
  CHECK(render(shift(parse_shelf("1"))) == "1");
  CHECK(render(shift(parse_shelf("1(2,)"))) == "1(2,)");
  CHECK(unordered_to_ll_avoider(parse_unordered("1")).empty());
  CHECK(render(ll_avoider_to_unordered(Treeshelf{})) == "1");
  CHECK_THROWS_AS(drop_root(parse_shelf("1(2,)")), std::invalid_argument);
  CHECK_THROWS_AS(ll_avoider_to_unordered(parse_shelf("1(2(3,),)")), std::invalid_argument);
}

TEST_CASE("unordered trees and LL avoiders") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    std::vector<Treeshelf> image;
    for (const auto& u : all_unordered(n + 1)) {
      const Treeshelf standard = standard_representation(u);
      CHECK(unshift(shift(standard)) == standard);
      const Treeshelf t = unordered_to_ll_avoider(u);
      CHECK(ll_avoider_to_unordered(t) == u);
      image.push_back(t);
    }
    const auto expected = oracle::sorted_renders(oracle::avoiders(n, PatternId::LL));
    CHECK(oracle::sorted_renders(image) == expected);
    for (const auto& text : expected) {
      const Treeshelf t = parse_shelf(text);
      CHECK(unordered_to_ll_avoider(ll_avoider_to_unordered(t)) == t);
    }
  }
}
