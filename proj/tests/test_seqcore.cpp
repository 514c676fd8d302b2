#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cantor/seqcore.hpp"

using namespace cantor;

namespace {

// oracle: enumerate the pairing by walking diagonals in order
std::vector<std::pair<std::uint64_t, std::uint64_t>> diagonal_order(std::uint64_t count) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t diag = 0; out.size() < count; ++diag)
    for (std::uint64_t p = 0; p <= diag && out.size() < count; ++p)
      out.emplace_back(diag - p, p);
  return out;
}

// oracle: factor v and report the exponent word when v codes one, i.e. the
// prime support is exactly an initial segment with all exponents >= 1
std::optional<Word> factor_decode(std::uint64_t v) {
  Word out;
  for (std::uint32_t p : small_primes()) {
    if (v == 1) break;
    if (v % p != 0) return std::nullopt;
    std::uint64_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.push_back(static_cast<Sym>(e - 1));
  }
  if (v != 1) return std::nullopt;
  return out;
}

}  // namespace

TEST_CASE("pairing walks the diagonals") {
  const auto order = diagonal_order(3000);
  for (std::uint64_t q = 0; q < order.size(); ++q) {
    const auto [n, p] = order[static_cast<std::size_t>(q)];
    REQUIRE(pair_index(n, p) == q);
    const Unpaired u = unpair(q);
    REQUIRE(u.n == n);
    REQUIRE(u.p == p);
    REQUIRE(u.M == n + p);
  }
}

TEST_CASE("pairing pinned values") {
  REQUIRE(pair_index(10, 0) == 55);
  const Unpaired u3 = unpair(3);
  REQUIRE(u3.n == 2);
  REQUIRE(u3.p == 0);
  REQUIRE(u3.M == 2);
  const Unpaired u4 = unpair(4);
  REQUIRE(u4.n == 1);
  REQUIRE(u4.p == 1);
  REQUIRE(u4.M == 2);
  const Unpaired u7 = unpair(7);
  REQUIRE(u7.n == 2);
  REQUIRE(u7.p == 1);
  // first heights of vertical 0
  std::vector<std::uint64_t> v0;
  for (std::uint64_t p = 0; p < 7; ++p) v0.push_back(pair_index(0, p));
  REQUIRE(v0 == std::vector<std::uint64_t>{0, 2, 5, 9, 14, 20, 27});
}

TEST_CASE("diag_of matches a linear scan") {
  std::uint64_t m = 0;
  for (std::uint64_t q = 0; q < 5000; ++q) {
    while (triangle(m + 1) <= q) ++m;
    REQUIRE(diag_of(q) == m);
  }
  REQUIRE(diag_of(55) == 10);
}

TEST_CASE("dense words pinned values") {
  REQUIRE(word_str(psi_word(1), 2) == "0");
  REQUIRE(word_str(psi_word(6), 2) == "11");
  REQUIRE(word_str(s_word(1), 2) == "0");
  REQUIRE(word_str(w_word(0), 2) == "0");
  REQUIRE(word_str(w_word(1), 2) == "00");
  REQUIRE(word_str(w_word(2), 2) == "100");
  REQUIRE(word_str(w_word(3), 2) == "0000");
  REQUIRE(word_str(w_word(4), 2) == "01000");
}

TEST_CASE("psi enumerates binary words length-then-lex") {
  // order: lengths ascending, lexicographic inside a length, 0 < 1
  std::vector<Word> all;
  for (std::uint64_t n = 0; n < (1u << 7) - 1; ++n) all.push_back(psi_word(n));
  for (std::size_t k = 1; k < all.size(); ++k) {
    const Word& a = all[k - 1];
    const Word& b = all[k];
    const bool ordered =
        a.size() < b.size() ||
        (a.size() == b.size() && std::lexicographical_compare(a.begin(), a.end(),
                                                              b.begin(), b.end()));
    REQUIRE(ordered);
  }
  // and hits every word of each length exactly once
  std::map<Word, int> seen;
  for (const Word& w : all)
    if (w.size() <= 5) ++seen[w];
  REQUIRE(seen.size() == 63);
  for (const auto& [w, c] : seen) REQUIRE(c == 1);
}

TEST_CASE("w_bit agrees with the materialized word") {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Word w = w_word(n);
    for (std::uint64_t q = 0; q <= n; ++q)
      REQUIRE(w_bit(n, q) == w[static_cast<std::size_t>(q)]);
  }
}

TEST_CASE("slice pinned values and coverage") {
  const Word u = parse_word("0010", 2);
  REQUIRE(word_str(slice(u, 0), 2) == "01");
  REQUIRE(word_str(slice(u, 2), 2) == "0");
  // every position lands in exactly one slice, at its height
  for (std::uint64_t idx = 0; idx < (1u << 6) - 1; ++idx) {
    const Word w = psi_word(idx);
    std::uint64_t covered = 0;
    for (std::uint64_t n = 0; n <= w.size(); ++n) {
      const Word sv = slice(w, n);
      covered += sv.size();
      for (std::uint64_t j = 0; j < sv.size(); ++j)
        REQUIRE(sv[static_cast<std::size_t>(j)] ==
                w[static_cast<std::size_t>(pair_index(n, j))]);
    }
    REQUIRE(covered == w.size());
  }
}

TEST_CASE("prime coder pinned image") {
  const auto img = prime_image(100);
  std::vector<std::uint64_t> values;
  for (const auto& e : img) values.push_back(e.value);
  REQUIRE(values.size() >= 10);
  values.resize(10);
  REQUIRE(values == std::vector<std::uint64_t>{1, 2, 4, 6, 8, 12, 16, 18, 24, 30});
  REQUIRE(word_str(prime_decode(0, 100), kOmega) == "");
  REQUIRE(word_str(prime_decode(1, 100), kOmega) == "0");
  REQUIRE(word_str(prime_decode(2, 100), kOmega) == "1");
  REQUIRE(word_str(prime_decode(3, 100), kOmega) == "0,0");
  REQUIRE(word_str(prime_decode(4, 100), kOmega) == "2");
  REQUIRE(word_str(prime_decode(5, 100), kOmega) == "1,0");
  REQUIRE(word_str(prime_decode(6, 100), kOmega) == "3");
  REQUIRE(word_str(prime_decode(7, 100), kOmega) == "0,1");
  REQUIRE(word_str(prime_decode(8, 100), kOmega) == "2,0");
  REQUIRE(word_str(prime_decode(9, 100), kOmega) == "0,0,0");
}

TEST_CASE("prime image matches factorization oracle") {
  const std::uint64_t bound = 20000;
  const auto img = prime_image(bound);
  // each listed value decodes by trial division to the stored word
  for (const auto& e : img) {
    const auto w = factor_decode(e.value);
    REQUIRE(w.has_value());
    REQUIRE(*w == e.word);
    REQUIRE(prime_code(e.word) == e.value);
  }
  // and no coded value below the bound is missing
  std::uint64_t found = 0;
  for (std::uint64_t v = 1; v <= bound; ++v)
    if (factor_decode(v)) ++found;
  REQUIRE(found == img.size());
}

TEST_CASE("prime coder is monotone on prefixes") {
  for (std::uint64_t idx = 0; idx < 255; ++idx) {
    Word s = psi_word(idx);  // binary exponents suffice for monotonicity
    if (s.empty()) continue;
    Word pre = s;
    pre.pop_back();
    REQUIRE(prime_code(pre) <= prime_code(s));
  }
}

TEST_CASE("prime coder overflow throws") {
  const Word big(20, 60u);
  REQUIRE_THROWS_AS(prime_code(big), domain_error);
  REQUIRE_THROWS_AS(prime_decode(100000, 100), domain_error);
}

TEST_CASE("word render and parse round trip") {
  REQUIRE(word_str(parse_word("0120", 3), 3) == "0120");
  REQUIRE(word_str(parse_word("4,0,11", kOmega), kOmega) == "4,0,11");
  REQUIRE(parse_word("", 2).empty());
  REQUIRE_THROWS_AS(parse_word("012", 2), domain_error);
  REQUIRE_THROWS_AS(parse_word("1,,2", kOmega), domain_error);
}
