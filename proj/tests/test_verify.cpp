#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>

#include "cantor/verify.hpp"

using namespace cantor;

TEST_CASE("corpus is deterministic and typed") {
  const Corpus& c = fixed_corpus();
  REQUIRE(c.bin.size() > 1000);
  REQUIRE(c.omega.size() > 200);
  REQUIRE(c.ternary.size() > 300);
  for (const EpPoint& x : c.bin) REQUIRE(x.alphabet == 2);
  for (const EpPoint& x : c.omega) REQUIRE(x.alphabet == kOmega);
  for (const EpPoint& x : c.ternary) REQUIRE(x.alphabet == 3);
  REQUIRE(fixed_corpus().bin.size() == c.bin.size());
}

TEST_CASE("every suite passes at reduced bounds") {
  REQUIRE(run_suite("lemma5.2", {{"maxlen", 8}, {"maxn", 10}}).ok());
  REQUIRE(run_suite("lemma5.4a", {{"tlen", 1}, {"entmax", 2}, {"nmax", 4}}).ok());
  REQUIRE(run_suite("lemma5.4b", {{"tlen", 1}, {"entmax", 1}, {"depth", 4}}).ok());
  REQUIRE(run_suite("lemma5.5d", {{"tlen", 2}, {"entmax", 2}}).ok());
  REQUIRE(run_suite("lemma5.6", {{"tlen", 1}, {"entmax", 2}, {"pmax", 12}}).ok());
  REQUIRE(run_suite("lemma5.8", {{"maxlen", 10}}).ok());
  REQUIRE(run_suite("lemma5.9", {{"maxlen", 10}}).ok());
  REQUIRE(run_suite("lemma5.10", {{"tlen", 1}, {"entmax", 1}}).ok());
  REQUIRE(run_suite("def4.2-a2", {{"imax", 4}, {"qmax", 5}}).ok());
  REQUIRE(run_suite("def4.8c-a2", {{"imax", 4}, {"qhorizon", 25}, {"growth", 1}}).ok());
  REQUIRE(run_suite("def4.2-s3", {{"imax", 4}, {"qmax", 5}, {"depth", 6}}).ok());
  REQUIRE(run_suite("phi-tail", {{"imax", 3}, {"depth", 20}}).ok());
  REQUIRE(run_suite("g0-tree", {{"level", 6}}).ok());
  REQUIRE(run_suite("decode-equiv", {{"maxlen", 10}}).ok());
}

TEST_CASE("suite branch counters see both sides") {
  const VerifyReport r = run_suite("lemma5.9", {{"maxlen", 12}});
  REQUIRE(r.ok());
  REQUIRE(r.branch_counts.at("eq") > 0);
  REQUIRE(r.branch_counts.at("lt") > 0);
  REQUIRE(r.branch_counts.at("gt") > 0);
  REQUIRE(r.branch_counts.at("placed") > 0);
  const VerifyReport d = run_suite("decode-equiv", {{"maxlen", 10}});
  REQUIRE(d.branch_counts.at("placed") + d.branch_counts.at("unplaced") ==
          d.cases_checked);
}

TEST_CASE("scans certify every cylinder") {
  for (const char* fam : {"g0", "a1", "a1rect"}) {
    const VerifyReport r = run_scan(fam, {{"depth", 6}});
    REQUIRE(r.ok());
    REQUIRE(r.branch_counts.at("edges") == r.cases_checked);
  }
  const VerifyReport a2 = run_scan("a2", {{"depth", 4}, {"symmax", 2}});
  REQUIRE(a2.ok());
  REQUIRE(a2.branch_counts.at("edges") == a2.cases_checked);
  const VerifyReport a3 = run_scan("a3rel", {{"tlen", 1}, {"entmax", 1}, {"depth", 4}});
  REQUIRE(a3.ok());
  REQUIRE(a3.branch_counts.at("refinements") == a3.cases_checked);
}

TEST_CASE("density suites certify every stem") {
  const VerifyReport x3 = density_x3_suite({{"maxlen", 7}});
  REQUIRE(x3.ok());
  REQUIRE(x3.branch_counts.at("witnesses") == x3.cases_checked);
  const VerifyReport ht = density_ht_suite({{"tlen", 1}, {"entmax", 2}, {"maxlen", 7}});
  REQUIRE(ht.ok());
  REQUIRE(ht.branch_counts.at("witnesses") == ht.cases_checked);
}

TEST_CASE("reports are byte-identical across worker counts") {
  const std::string a =
      report_json(run_suite("lemma5.9", {{"maxlen", 11}}, 1));
  const std::string b =
      report_json(run_suite("lemma5.9", {{"maxlen", 11}}, 3));
  REQUIRE(a == b);
  const std::string sa = report_json(run_scan("a2", {{"depth", 4}, {"symmax", 2}}, 1));
  const std::string sb = report_json(run_scan("a2", {{"depth", 4}, {"symmax", 2}}, 4));
  REQUIRE(sa == sb);
}

TEST_CASE("report serialization is pinned") {
  const VerifyReport r = run_suite("g0-tree", {{"level", 2}});
  const std::string want =
      "{\n"
      "  \"suite\": \"g0-tree\",\n"
      "  \"bounds\": {\n"
      "    \"level\": 2\n"
      "  },\n"
      "  \"cases_checked\": 4,\n"
      "  \"branch_counts\": {},\n"
      "  \"failures\": []\n"
      "}";
  REQUIRE(report_json(r) == want);
  // timings only appear when asked for
  REQUIRE(report_json(r, true).find("elapsed_ms") != std::string::npos);
  REQUIRE(report_json(r, false).find("elapsed_ms") == std::string::npos);
}

TEST_CASE("bound handling rejects junk") {
  REQUIRE_THROWS_AS(run_suite("lemma5.2", {{"bogus", 1}}), domain_error);
  REQUIRE_THROWS_AS(run_suite("lemma5.2", {{"maxlen", 99}}), domain_error);
  REQUIRE_THROWS_AS(run_suite("lemma5.2", {{"maxlen", -1}}), domain_error);
  REQUIRE_THROWS_AS(run_suite("nonesuch"), domain_error);
  REQUIRE_THROWS_AS(run_scan("nonesuch"), domain_error);
}

TEST_CASE("failures are reported, not thrown") {
  // drive the a2 scan far enough that a cooked-up bad case cannot hide:
  // instead, check the failure plumbing directly on a tampered report
  VerifyReport r;
  r.suite = "probe";
  r.failures.push_back(Failure{"k", "e", "g"});
  REQUIRE_FALSE(r.ok());
  const std::string j = report_json(r);
  REQUIRE(j.find("\"case\": \"k\"") != std::string::npos);
  REQUIRE(j.find("\"expected\": \"e\"") != std::string::npos);
}
