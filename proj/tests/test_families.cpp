#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cantor/families.hpp"

using namespace cantor;

namespace {

EpPoint bp(const char* text) { return parse_point(text, 2); }
EpPoint wp(const char* text) { return parse_point(text, kOmega); }
EpPoint tp(const char* text) { return parse_point(text, 3); }

}  // namespace

TEST_CASE("dense-graph edge predicate") {
  // s_2 = 10: split after it
  REQUIRE(g0_is_edge(bp("100;0"), bp("101;0")) == 2);
  REQUIRE(g0_is_edge(bp("1001;10"), bp("1011;10")) == 2);
  // s_4 = 0100
  REQUIRE(g0_is_edge(bp("01000;0"), bp("01001;0")) == 4);
  // wrong orientation, double difference, wrong stem
  REQUIRE_FALSE(g0_is_edge(bp("101;0"), bp("100;0")).has_value());
  REQUIRE_FALSE(g0_is_edge(bp("100;0"), bp("111;0")).has_value());
  REQUIRE_FALSE(g0_is_edge(bp("000;0"), bp("001;0")).has_value());
  REQUIRE_FALSE(g0_is_edge(bp(";0"), bp(";0")).has_value());
}

TEST_CASE("level graph pinned at two levels") {
  const LevelGraph g = g0_level_graph(2);
  REQUIRE(g.n == 2);
  const std::vector<std::array<std::string, 2>> want = {
      {"00", "01"}, {"00", "10"}, {"01", "11"}};
  REQUIRE(g.edges == want);
  REQUIRE(g0_level_graph(0).edges.empty());
  REQUIRE_THROWS_AS(g0_level_graph(17), domain_error);
  const std::string dot = graph_dot(g);
  REQUIRE(dot.find("\"00\" -- \"01\"") != std::string::npos);
}

TEST_CASE("pair family edge predicate") {
  REQUIRE(a1_is_edge(bp("1;0"), bp("01;0")) == 0);
  REQUIRE(a1_is_edge(bp("001;0"), bp("0001;0")) == 1);
  REQUIRE(a1_is_edge(bp("1;0"), bp("011;01")) == 0);
  // zero counts must be consecutive even/odd
  REQUIRE_FALSE(a1_is_edge(bp("01;0"), bp("001;0")).has_value());
  REQUIRE_FALSE(a1_is_edge(bp("1;0"), bp("001;0")).has_value());
  // the all-zero centre never carries an edge
  REQUIRE_FALSE(a1_is_edge(bp(";0"), bp("1;0")).has_value());
  REQUIRE_FALSE(a1_is_edge(bp("1;0"), bp(";0")).has_value());
}

TEST_CASE("rectangle classifier") {
  REQUIRE_FALSE(a1rect_classify(bp(";0")).has_value());
  REQUIRE(a1rect_classify(bp("1;0")) == 0);
  REQUIRE(a1rect_classify(bp("001;0")) == 2);
  REQUIRE(a1rect_classify(bp("0001;011")) == 3);
}

TEST_CASE("stem coder pinned words") {
  REQUIRE(word_str(b_word(0), kOmega) == "");
  REQUIRE(word_str(b_word(1), kOmega) == "0");
  REQUIRE(word_str(b_word(2), kOmega) == "1");
  REQUIRE(word_str(b_word(3), kOmega) == "0,0");
  REQUIRE(word_str(b_word(4), kOmega) == "2");
  REQUIRE(word_str(b_word(5), kOmega) == "1,0");
  REQUIRE(word_str(b_word(9), kOmega) == "0,0,0");
}

TEST_CASE("tail family edge predicate") {
  REQUIRE(a2_is_edge(wp(";0"), wp(";1")) == Word{});
  REQUIRE(a2_is_edge(wp("1;2"), wp("1;3")) == Word{1});
  REQUIRE(a2_is_edge(wp("0,4;4"), wp("0,4;5")) == Word{0, 4});
  REQUIRE_FALSE(a2_is_edge(wp(";0"), wp(";2")).has_value());
  REQUIRE_FALSE(a2_is_edge(wp(";1"), wp(";0")).has_value());
  REQUIRE_FALSE(a2_is_edge(wp("1;2"), wp("2;3")).has_value());
  REQUIRE_FALSE(a2_is_edge(wp(";0"), wp(";0")).has_value());
}

TEST_CASE("tail family pieces") {
  // depth table starts 1,2,3,3,... driven by coded word lengths
  REQUIRE(a2_depth(0) == 1);
  REQUIRE(a2_depth(1) == 2);
  REQUIRE(a2_depth(3) == 3);
  // early pieces of the first few pairs
  REQUIRE(a2_piece_at_stage(1, 0) == 0);
  REQUIRE(a2_piece_at_stage(2, 0) == 1);
  REQUIRE(a2_piece_at_stage(3, 0) == 0);
  REQUIRE_THROWS_AS(a2_piece_at_stage(2, 2), domain_error);
  // side points sit in their own cell from stage i on
  for (std::uint64_t i = 0; i <= 6; ++i)
    for (Sym e = 0; e <= 1; ++e) {
      const EpPoint x = a2_side_point(i, e);
      REQUIRE(a2_partition_member(i, 2 * i + e, x));
      REQUIRE_FALSE(a2_partition_member(i, 2 * i + (1 - e), x));
    }
  // leftover cell catches points outside all pair cylinders
  REQUIRE(a2_partition_member(0, 2, wp("9;9")));
}

TEST_CASE("suitable words and their enumeration") {
  REQUIRE(suitable(Word{}));
  REQUIRE(suitable(parse_word("02", 3)));
  REQUIRE_FALSE(suitable(parse_word("0", 3)));
  REQUIRE_FALSE(suitable(parse_word("20", 3)));
  REQUIRE(word_str(theta_word(0), 3) == "");
  REQUIRE(word_str(theta_word(1), 3) == "2");
  REQUIRE(word_str(theta_word(2), 3) == "02");
  REQUIRE(word_str(theta_word(5), 3) == "002");
  REQUIRE(word_str(suitable_pred(parse_word("22", 3)), 3) == "2");
  REQUIRE_THROWS_AS(suitable_pred(parse_word("21", 3)), domain_error);
  REQUIRE_THROWS_AS(suitable_pred(Word{}), domain_error);
  // theta enumerates suitable words length-then-lex without repeats
  std::vector<Word> seen;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Word th = theta_word(i);
    REQUIRE(suitable(th));
    for (const Word& old : seen) REQUIRE(old != th);
    if (!seen.empty())
      REQUIRE((seen.back().size() < th.size() ||
               (seen.back().size() == th.size() &&
                std::lexicographical_compare(seen.back().begin(), seen.back().end(),
                                             th.begin(), th.end()))));
    seen.push_back(th);
  }
}

TEST_CASE("branch family membership") {
  REQUIRE(s3_family_member(0, 0, tp(";0")));
  REQUIRE(s3_family_member(0, 0, tp("0;10")));
  REQUIRE(s3_family_member(0, 1, tp("1;0")));
  REQUIRE(s3_family_member(1, 0, tp("20;0")));
  REQUIRE_FALSE(s3_family_member(0, 0, tp("1;0")));
  REQUIRE_FALSE(s3_family_member(0, 0, tp("0;20")));
  REQUIRE_FALSE(s3_family_member(1, 0, tp("200;2")));
}

TEST_CASE("branch family pieces") {
  // side samples land in their own cell from stage i on
  for (std::uint64_t i = 0; i <= 6; ++i)
    for (Sym e = 0; e <= 1; ++e) {
      Word stem = theta_word(i);
      stem.push_back(e);
      const EpPoint x = ep_point(3, stem, Word{0u});
      REQUIRE(s3_partition_member(i, 2 * i + e, x));
      REQUIRE_FALSE(s3_partition_member(i, 2 * i + (1 - e), x));
    }
  // before its stage a side tracks the unique earlier cell
  REQUIRE(s3_partition_member(0, s3_piece_at_stage(2, 0, 0),
                              ep_point(3, parse_word("020", 3), Word{0u})));
  REQUIRE_THROWS_AS(s3_piece_at_stage(2, 0, 2), domain_error);
  // a point whose branch slot always reads 2 stays in the leftover cell
  const EpPoint z2 = tp(";2");
  for (std::uint64_t q = 0; q <= 4; ++q) REQUIRE(s3_partition_member(q, 2 * q + 2, z2));
  // 2s past the slot only exclude a cell once the stage window reaches them,
  // and deeper branch prefixes can recapture the point later
  const EpPoint z = tp("0;20");
  REQUIRE(s3_partition_member(0, 0, z));
  REQUIRE(s3_partition_member(1, 4, z));
  REQUIRE(s3_partition_member(2, 4, z));
  for (std::uint64_t q = 0; q <= 6; ++q) {
    std::uint64_t hits = 0;
    for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
      if (s3_partition_member(q, p, z)) ++hits;
    REQUIRE(hits == 1);
  }
}

TEST_CASE("chunk map pinned values") {
  REQUIRE(word_str(phi_map(parse_word("0", kOmega)), 3) == "20");
  REQUIRE(word_str(phi_map(parse_word("0,0", kOmega)), 3) == "200");
  REQUIRE(word_str(phi_map(parse_word("0,0,0", kOmega)), 3) == "2000");
  REQUIRE(word_str(phi_map(parse_word("1", kOmega)), 3) == "21");
  REQUIRE(word_str(phi_map(parse_word("0,1", kOmega)), 3) == "2021");
  REQUIRE(word_str(phi_map(Word{}), 3) == "");
}

TEST_CASE("chunk map limit along a point") {
  // trace 0,0,0 then constant 6: head 2000, fresh chunk 2, zero tail
  const EpPoint gamma = wp("0,0,0;6");
  REQUIRE(word_str(phi_limit_prefix(gamma, 10), 3) == "2000200000");
  // constant 1: single fresh chunk then ones
  REQUIRE(word_str(phi_limit_prefix(wp(";1"), 6), 3) == "211111");
  // prefixes of the limit agree with the map on finite traces
  const EpPoint g2 = wp("2,0;4");
  const Word head = phi_map(parse_word("2,0", kOmega));
  const Word lim = phi_limit_prefix(g2, 20);
  for (std::size_t j = 0; j < head.size(); ++j) REQUIRE(lim[j] == head[j]);
}
