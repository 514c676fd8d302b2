#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "cantor/points.hpp"

using namespace cantor;

namespace {

EpPoint bp(const char* text) { return parse_point(text, 2); }

}  // namespace

TEST_CASE("construction normalizes the representation") {
  // primitive period
  REQUIRE(point_str(ep_point(2, {}, {0, 1, 0, 1})) == ";01");
  // prefix tail folded into the period
  REQUIRE(point_str(ep_point(2, {0, 1, 0}, {1, 0})) == ";01");
  // all-constant collapses fully
  REQUIRE(point_str(ep_point(2, {1, 1, 1}, {1, 1})) == ";1");
  REQUIRE(point_str(ep_point(2, {0}, {0})) == ";0");
  // rollback keeps the period aligned with the values
  const EpPoint x = ep_point(2, {1, 0, 1, 1, 0}, {1, 1, 0});
  const EpPoint y = bp("10;110");
  REQUIRE(x == y);
  for (std::uint64_t p = 0; p < 30; ++p) REQUIRE(ep_at(x, p) == ep_at(y, p));
}

TEST_CASE("construction validates input") {
  REQUIRE_THROWS_AS(ep_point(2, {0, 2}, {0}), domain_error);
  REQUIRE_THROWS_AS(ep_point(2, {}, {}), domain_error);
  REQUIRE_THROWS_AS(ep_point(3, {1}, {3}), domain_error);
}

TEST_CASE("indexing and prefixes") {
  const EpPoint x = bp("01;10");
  // values: 0 1 1 0 1 0 1 0 ...
  REQUIRE(ep_at(x, 0) == 0);
  REQUIRE(ep_at(x, 1) == 1);
  REQUIRE(ep_at(x, 2) == 1);
  REQUIRE(ep_at(x, 3) == 0);
  REQUIRE(ep_at(x, 1000001) == 0);
  REQUIRE(word_str(point_prefix(x, 6), 2) == "011010");
}

TEST_CASE("verticals restrict along one strand") {
  const EpPoint x = bp("0;10");
  // values alternate 0 1 0 1 ...; vertical n reads heights (n+j choose ...)
  for (std::uint64_t n = 0; n < 6; ++n) {
    const EpPoint v = ep_vertical(x, n);
    for (std::uint64_t j = 0; j < 40; ++j)
      REQUIRE(ep_at(v, j) == ep_at(x, pair_index(n, j)));
  }
  REQUIRE(ep_hits_forever(x, 0, 1));
  REQUIRE(ep_hits_forever(x, 0, 0));
  REQUIRE_FALSE(ep_hits_forever(bp("111;0"), 0, 1));
}

TEST_CASE("difference positions") {
  const auto d1 = ep_diff_positions(bp("010;0"), bp("000;0"));
  REQUIRE(d1.finite);
  REQUIRE(d1.positions == std::vector<std::uint64_t>{1});
  const auto d2 = ep_diff_positions(bp(";0"), bp(";0"));
  REQUIRE(d2.finite);
  REQUIRE(d2.positions.empty());
  const auto d3 = ep_diff_positions(bp(";01"), bp(";0"));
  REQUIRE_FALSE(d3.finite);
  REQUIRE_THROWS_AS(ep_diff_positions(bp(";0"), parse_point(";0", 3)), domain_error);
}

TEST_CASE("single-position update") {
  const EpPoint x = bp(";01");
  // flip inside the prefix window
  const EpPoint a = ep_set(x, 1, 0u);
  REQUIRE(point_str(a) == "00;01");
  // set to the value already there: unchanged
  REQUIRE(ep_set(x, 3, 1u) == x);
  // extension past the prefix keeps the tail aligned
  const EpPoint b = ep_set(x, 4, 1u);
  for (std::uint64_t p = 0; p < 30; ++p)
    REQUIRE(ep_at(b, p) == (p == 4 ? 1u : ep_at(x, p)));
  const EpPoint c = ep_set(bp("1;100"), 7, 0u);
  for (std::uint64_t p = 0; p < 40; ++p)
    REQUIRE(ep_at(c, p) == (p == 7 ? 0u : ep_at(bp("1;100"), p)));
}

TEST_CASE("point render and parse round trip") {
  for (const char* lit : {";0", "0;1", "0010;01", "1;100"}) {
    const EpPoint x = bp(lit);
    REQUIRE(point_str(x) == lit);
    REQUIRE(parse_point(point_str(x), 2) == x);
  }
  const EpPoint w = parse_point("4,0;2,13", kOmega);
  REQUIRE(point_str(w) == "4,0;2,13");
  REQUIRE(ep_at(w, 3) == 13);
  REQUIRE_THROWS_AS(parse_point("01", 2), domain_error);
  REQUIRE_THROWS_AS(parse_point("0;", 2), domain_error);
  REQUIRE_THROWS_AS(parse_point("0;1;0", 2), domain_error);
}
