#pragma once
// Verification suites: exhaustive finite sweeps cross-checked against
// independent oracles, corpus-quantified set identities, partition covers,
// and cylinder scans. Reports are deterministic; worker counts partition the
// enumeration but never change the output.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <tuple>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ktree.hpp"

namespace cantor {

struct Failure {
  std::string key, expected, got;
};

struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, long long>> bounds;
  std::uint64_t cases_checked = 0;
  std::map<std::string, std::uint64_t> branch_counts;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;
  bool ok() const { return failures.empty(); }
};

// canonical JSON form; timings are opt-in so reports stay byte-identical
// across runs and worker counts
inline std::string report_json(const VerifyReport& r, bool with_timings = false) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json jb = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.bounds) jb[k] = v;
  j["bounds"] = jb;
  j["cases_checked"] = r.cases_checked;
  nlohmann::ordered_json jc = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.branch_counts) jc[k] = v;
  j["branch_counts"] = jc;
  nlohmann::ordered_json jf = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json e;
    e["case"] = f.key;
    e["expected"] = f.expected;
    e["got"] = f.got;
    jf.push_back(e);
  }
  j["failures"] = jf;
  if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

namespace detail {

struct Agg {
  std::uint64_t cases = 0;
  std::map<std::string, std::uint64_t> branch;
  std::vector<Failure> fails;
  void fail(std::string key, std::string expected, std::string got) {
    if (fails.size() < 2000)
      fails.push_back(Failure{std::move(key), std::move(expected), std::move(got)});
  }
  void hit(const char* name, std::uint64_t delta = 1) { branch[name] += delta; }
};

// evenly chunked parallel range; chunk outputs merge in index order, so the
// final report does not depend on the worker count
template <class Fn>
inline void run_chunks(std::uint64_t total, unsigned jobs, std::vector<Agg>& parts,
                       Fn fn) {
  if (jobs == 0) jobs = 1;
  if (jobs > 64) jobs = 64;
  parts.assign(jobs, Agg{});
  auto body = [&parts, &fn](unsigned c, std::uint64_t lo, std::uint64_t hi) {
    try {
      fn(parts[c], lo, hi);
    } catch (const std::exception& e) {
      parts[c].fail("chunk " + std::to_string(c), "no exception", e.what());
    }
  };
  if (jobs == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned c = 0; c < jobs; ++c)
    pool.emplace_back(body, c, total * c / jobs, total * (c + 1) / jobs);
  for (auto& th : pool) th.join();
}

inline void merge_parts(VerifyReport& r, std::vector<Agg>& parts) {
  for (auto& a : parts) {
    r.cases_checked += a.cases;
    for (const auto& [k, v] : a.branch) r.branch_counts[k] += v;
    for (auto& f : a.fails) r.failures.push_back(std::move(f));
  }
  std::stable_sort(r.failures.begin(), r.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.key < b.key; });
  if (r.failures.size() > 1000) r.failures.resize(1000);
}

struct BoundDef {
  const char* key;
  long long dflt;
  long long cap;
};

inline std::vector<std::pair<std::string, long long>> resolve_bounds(
    const std::string& suite, const std::map<std::string, long long>& given,
    std::initializer_list<BoundDef> defs) {
  for (const auto& [k, v] : given) {
    (void)v;
    bool known = false;
    for (const auto& d : defs) known = known || (k == d.key);
    if (!known)
      throw domain_error("run_suite: unknown bound '" + k + "' for " + suite);
  }
  std::vector<std::pair<std::string, long long>> out;
  for (const auto& d : defs) {
    long long v = d.dflt;
    const auto it = given.find(d.key);
    if (it != given.end()) v = it->second;
    if (v < 0) throw domain_error("run_suite: negative bound '" + std::string(d.key) + "'");
    if (v > d.cap)
      throw domain_error("run_suite: bound '" + std::string(d.key) + "' too large for " + suite);
    out.emplace_back(d.key, v);
  }
  return out;
}

inline long long bget(const std::vector<std::pair<std::string, long long>>& b,
                      const char* k) {
  for (const auto& [key, v] : b)
    if (key == k) return v;
  throw domain_error("bget: missing bound");
}

// index of a binary word in the length-then-lex enumeration (psi inverse)
inline std::uint64_t psi_index(const Word& u) {
  std::uint64_t v = 1;
  for (Sym s : u) v = v * 2 + s;
  return v - 1;
}

// least n whose padded dense word extends u
inline std::uint64_t least_dense_extension(const Word& u) {
  const std::uint64_t limit = (1ull << (u.size() + 1)) + u.size();
  for (std::uint64_t n = u.size(); n <= limit; ++n) {
    bool match = true;
    for (std::size_t j = 0; j < u.size() && match; ++j) match = (w_bit(n, j) == u[j]);
    if (match) return n;
  }
  throw domain_error("least_dense_extension: none found");
}

// all tree words with |t| <= maxlen and entries <= entmax, length-then-lex
inline std::vector<Word> t_list(std::uint64_t maxlen, Sym entmax) {
  std::vector<Word> out;
  out.push_back(Word{});
  std::size_t lo = 0;
  for (std::uint64_t len = 1; len <= maxlen; ++len) {
    const std::size_t hi = out.size();
    for (std::size_t k = lo; k < hi; ++k)
      for (Sym e = 0; e <= entmax; ++e) out.push_back(word_append(out[k], e));
    lo = hi;
  }
  return out;
}

inline std::string desc_placed(const std::optional<PlacedInfo>& d) {
  if (!d) return "none";
  return "t=" + word_str(d->t, kOmega) + " sigma=" + std::to_string(d->sigma) +
         " eps=" + std::to_string(d->eps);
}

}  // namespace detail

// ---- fixed evaluation corpus ------------------------------------------------
// deterministic mix of structured members, density witnesses, scan endpoints
// and seeded random points over each alphabet

struct Corpus {
  std::vector<EpPoint> bin, omega, ternary;
};

inline const Corpus& fixed_corpus() {
  static const Corpus corpus = [] {
    Corpus c;
    // canonical tree members, both split bits
    for (const Word& t : detail::t_list(2, 4))
      for (Sym e = 0; e <= 1; ++e) c.bin.push_back(canonical_point(t, e));
    // recurrence witnesses through every nonempty stem of length <= 6
    for (std::uint64_t idx = 1; idx < (1ull << 7) - 1; ++idx)
      c.bin.push_back(density_witness_x3(psi_word(idx)));
    // section witnesses through consistent stems of length <= 3
    for (const Word& t : detail::t_list(2, 2)) {
      const KtSpec s = kt_spec(t);
      std::vector<Word> stack{Word{}};
      while (!stack.empty()) {
        Word u = stack.back();
        stack.pop_back();
        c.bin.push_back(density_witness_ht(t, u));
        if (u.size() < 3) {
          for (Sym bit = 0; bit <= 1; ++bit) {
            const std::uint64_t m = u.size();
            const std::uint64_t n = vert_of(m);
            bool okc = true;
            if (n < s.free_v)
              okc = (constraint_value(s, n, height_of(m)) == static_cast<int>(bit));
            else if (m == s.sigma)
              okc = (bit == 0);
            if (okc) stack.push_back(word_append(u, bit));
          }
        }
      }
    }
    // dense-graph edge endpoints over stems of length <= 3
    for (std::uint64_t idx = 0; idx < (1ull << 4) - 1; ++idx) {
      const std::uint64_t n = detail::least_dense_extension(psi_word(idx));
      Word px = s_word(n);
      px.push_back(0u);
      Word py = s_word(n);
      py.push_back(1u);
      c.bin.push_back(ep_point(2, std::move(px), Word{0u}));
      c.bin.push_back(ep_point(2, std::move(py), Word{0u}));
    }
    // pair-family endpoints around the all-zero point
    for (std::uint64_t d = 0; d <= 4; ++d) {
      const std::uint64_t i = (d + 1) / 2;
      Word zx(static_cast<std::size_t>(2 * i), 0u);
      zx.push_back(1u);
      Word zy(static_cast<std::size_t>(2 * i + 1), 0u);
      zy.push_back(1u);
      c.bin.push_back(ep_point(2, std::move(zx), Word{0u}));
      c.bin.push_back(ep_point(2, std::move(zy), Word{0u}));
    }
    for (const char* lit : {";0", ";1", "0;1", "01;1", "1;0", "0;10", "0;01",
                            "10;0", "001;0", "11;01"})
      c.bin.push_back(parse_point(lit, 2));
    {
      std::mt19937 rng(0x5EEDCAFEu);
      for (int k = 0; k < 1000; ++k) {
        Word pre(rng() % 9), per(1 + rng() % 4);
        for (Sym& s : pre) s = rng() % 2;
        for (Sym& s : per) s = rng() % 2;
        c.bin.push_back(ep_point(2, std::move(pre), std::move(per)));
      }
    }
    // natural-sequence corpus
    for (std::uint64_t i = 0; i <= 8; ++i)
      for (Sym e = 0; e <= 1; ++e) c.omega.push_back(a2_side_point(i, e));
    for (std::uint64_t len = 0; len <= 2; ++len) {
      std::vector<Word> stems{Word{}};
      for (std::uint64_t l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const Word& w : stems)
          for (Sym s = 0; s <= 3; ++s) next.push_back(word_append(w, s));
        stems = std::move(next);
      }
      for (const Word& w : stems) {
        if (w.size() != len) continue;
        const Sym base = static_cast<Sym>(2 * w.size());
        c.omega.push_back(ep_point(kOmega, w, Word{base}));
        c.omega.push_back(ep_point(kOmega, w, Word{static_cast<Sym>(base + 1)}));
      }
    }
    for (const char* lit : {";0", "5;5", ";1,2", "17;0", "0,0;4", "2;3"})
      c.omega.push_back(parse_point(lit, kOmega));
    {
      std::mt19937 rng(0xA2C0FFEEu);
      for (int k = 0; k < 200; ++k) {
        Word pre(rng() % 7), per(1 + rng() % 3);
        for (Sym& s : pre) s = rng() % 7;
        for (Sym& s : per) s = rng() % 7;
        c.omega.push_back(ep_point(kOmega, std::move(pre), std::move(per)));
      }
    }
    // ternary corpus
    for (std::uint64_t i = 0; i <= 8; ++i)
      for (Sym e = 0; e <= 1; ++e) {
        Word stem = theta_word(i);
        stem.push_back(e);
        for (const Word& tail : {Word{0u}, Word{1u}, Word{0u, 1u}})
          c.ternary.push_back(ep_point(3, stem, tail));
      }
    for (const char* lit : {";0", ";2", "2;0", "02;1", "22;0", "1;2", "012;20"})
      c.ternary.push_back(parse_point(lit, 3));
    {
      std::mt19937 rng(0x7E44A17Eu);
      for (int k = 0; k < 300; ++k) {
        Word pre(rng() % 7), per(1 + rng() % 3);
        for (Sym& s : pre) s = rng() % 3;
        for (Sym& s : per) s = rng() % 3;
        c.ternary.push_back(ep_point(3, std::move(pre), std::move(per)));
      }
    }
    return c;
  }();
  return corpus;
}

// ---- suites -----------------------------------------------------------------

namespace detail {

inline VerifyReport suite_lemma52(const std::map<std::string, long long>& given,
                                  unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.2";
  r.bounds = resolve_bounds(r.suite, given, {{"maxlen", 16, 22}, {"maxn", 21, 64}});
  const std::uint64_t maxlen = bget(r.bounds, "maxlen");
  const std::uint64_t maxn = bget(r.bounds, "maxn");
  const std::uint64_t total = (1ull << (maxlen + 1)) - 1;
  std::vector<Agg> parts;
  run_chunks(total, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word u = psi_word(idx);
      const std::uint64_t len = u.size();
      Word upre = u;
      if (!upre.empty()) upre.pop_back();
      const std::uint64_t nstar = len ? vert_of(len - 1) : 0;
      for (std::uint64_t n = 0; n <= maxn; ++n) {
        ++a.cases;
        const Word sv = slice(u, n);
        const std::string key = "u=" + word_str(u, 2) + " n=" + std::to_string(n);
        if (n == 0 && sv.size() > len)
          a.fail(key, "slice at 0 no longer than the word", std::to_string(sv.size()));
        if (n <= len + 1) {
          if (sv.size() > len + 1 - n)
            a.fail(key, "slice length <= len+1-n", std::to_string(sv.size()));
        } else if (!sv.empty()) {
          a.fail(key, "empty slice past the word", std::to_string(sv.size()));
        }
        if (len > 0) {
          const Word sp = slice(upre, n);
          const bool ispref = sp.size() <= sv.size() &&
                              std::equal(sp.begin(), sp.end(), sv.begin());
          if (!ispref) a.fail(key, "prefix slice extends", "not a prefix");
          const std::uint64_t want = (n == nstar) ? 1 : 0;
          if (sv.size() - sp.size() != want)
            a.fail(key, "slice grows by " + std::to_string(want),
                   std::to_string(sv.size() - sp.size()));
        }
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_decode_equiv(const std::map<std::string, long long>& given,
                                       unsigned jobs) {
  VerifyReport r;
  r.suite = "decode-equiv";
  r.bounds = resolve_bounds(r.suite, given, {{"maxlen", 16, 24}});
  const std::uint64_t maxlen = bget(r.bounds, "maxlen");
  const std::uint64_t total = (1ull << (maxlen + 1)) - 1;
  std::vector<Agg> parts;
  run_chunks(total, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word u = psi_word(idx);
      ++a.cases;
      const auto fast = placed_decode(u);
      bool nonunique = false;
      const auto slow = placed_decode_oracle(u, nonunique);
      const std::string key = "u=" + word_str(u, 2);
      if (nonunique) {
        a.fail(key, "at most one witness", "multiple witnesses");
        continue;
      }
      if (fast.has_value() != slow.has_value() ||
          (fast && (fast->t != slow->t || fast->sigma != slow->sigma ||
                    fast->eps != slow->eps))) {
        a.fail(key, desc_placed(slow), desc_placed(fast));
        continue;
      }
      a.hit(fast ? "placed" : "unplaced");
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma54a(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.4a";
  r.bounds = resolve_bounds(r.suite, given,
                            {{"tlen", 2, 3}, {"entmax", 4, 6}, {"nmax", 8, 16}});
  const auto ts = t_list(bget(r.bounds, "tlen"),
                         static_cast<Sym>(bget(r.bounds, "entmax")));
  const std::uint64_t nmax = bget(r.bounds, "nmax");
  const auto& xs = fixed_corpus().bin;
  const std::uint64_t total = ts.size() * xs.size();
  std::vector<Agg> parts;
  run_chunks(total, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word& t = ts[static_cast<std::size_t>(idx / xs.size())];
      const EpPoint& x = xs[static_cast<std::size_t>(idx % xs.size())];
      const std::string base = "t=" + word_str(t, kOmega) + " x=" + point_str(x);
      std::vector<Sym> members;
      for (Sym n = 0; n <= nmax; ++n) {
        ++a.cases;
        const bool direct = ktn_member(t, n, x);
        const bool inductive = ktn_member_inductive(t, n, x);
        if (direct != inductive)
          a.fail(base + " n=" + std::to_string(n), direct ? "true" : "false",
                 inductive ? "true" : "false");
        if (direct) members.push_back(n);
      }
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (w_bit(members[i], 0) == w_bit(members[j], 0))
            a.fail(base, "refinements with equal lead bit disjoint",
                   "n=" + std::to_string(members[i]) + " and n=" +
                       std::to_string(members[j]));
      if (!members.empty()) {
        a.hit("refined");
        const KtSpec s = kt_spec(t);
        const EpPoint vert = ep_vertical(x, s.free_v);
        bool periodic_one = false;
        for (Sym sym : vert.per) periodic_one = periodic_one || (sym == 1);
        std::int64_t last = -1;
        for (std::size_t p = 0; p < vert.pre.size(); ++p)
          if (vert.pre[p] == 1) last = static_cast<std::int64_t>(p);
        if (periodic_one || last != static_cast<std::int64_t>(members[0]) + 1)
          a.fail(base, "top 1 of the free vertical pins n", "mismatch");
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport scan_a3rel_impl(const std::string& name,
                                    const std::map<std::string, long long>& given,
                                    unsigned jobs) {
  VerifyReport r;
  r.suite = name;
  r.bounds = resolve_bounds(r.suite, given,
                            {{"tlen", 2, 3}, {"entmax", 4, 6}, {"depth", 8, 8}});
  const auto ts = t_list(bget(r.bounds, "tlen"),
                         static_cast<Sym>(bget(r.bounds, "entmax")));
  const std::uint64_t depth = bget(r.bounds, "depth");
  const std::uint64_t stems = (1ull << (depth + 1)) - 1;
  const std::uint64_t total = ts.size() * 2 * stems;
  std::vector<Agg> parts;
  run_chunks(total, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word& t = ts[static_cast<std::size_t>(idx / (2 * stems))];
      const Sym eps = static_cast<Sym>((idx / stems) % 2);
      const Word u = psi_word(idx % stems);
      ++a.cases;
      const std::string key = "t=" + word_str(t, kOmega) + " eps=" +
                              std::to_string(eps) + " u=" + word_str(u, 2);
      try {
        const std::uint64_t n = find_ktn_in_cylinder(t, eps, u);
        a.hit("refinements");
        if (n <= 64) a.hit("materialized");
      } catch (const domain_error& e) {
        a.fail(key, "refinement inside the cylinder", e.what());
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma55d(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.5d";
  r.bounds = resolve_bounds(r.suite, given, {{"tlen", 3, 4}, {"entmax", 3, 5}});
  const auto ts = t_list(bget(r.bounds, "tlen"),
                         static_cast<Sym>(bget(r.bounds, "entmax")));
  std::vector<Agg> parts;
  run_chunks(ts.size(), jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word& t = ts[static_cast<std::size_t>(idx)];
      for (Sym e = 0; e <= 1; ++e) {
        const EpPoint x = canonical_point(t, e);
        for (std::size_t k = 1; k <= t.size(); ++k) {
          ++a.cases;
          const Word tk(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
          const KtSpec s = kt_spec(tk);
          const Word u = point_prefix(x, s.sigma + 1);
          const auto d = placed_decode(u);
          const std::string key = "t=" + word_str(t, kOmega) + " e=" +
                                  std::to_string(e) + " k=" + std::to_string(k);
          if (!d || d->t != tk)
            a.fail(key, "placed with witness " + word_str(tk, kOmega),
                   desc_placed(d));
        }
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma56(const std::map<std::string, long long>& given,
                                  unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.6";
  r.bounds = resolve_bounds(r.suite, given,
                            {{"tlen", 2, 3}, {"entmax", 4, 6}, {"pmax", 30, 64}});
  const auto ts = t_list(bget(r.bounds, "tlen"),
                         static_cast<Sym>(bget(r.bounds, "entmax")));
  const std::uint64_t pmax = bget(r.bounds, "pmax");
  const auto& xs = fixed_corpus().bin;
  std::vector<Agg> parts;
  run_chunks(xs.size(), jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const EpPoint& x = xs[static_cast<std::size_t>(xi)];
      for (const Word& t : ts) {
        if (!kt_member(t, x)) continue;
        a.hit("members");
        const KtSpec s = kt_spec(t);
        for (std::uint64_t p = s.sigma + 1; p <= pmax; ++p) {
          ++a.cases;
          const auto d = placed_decode(point_prefix(x, p));
          if (!d) continue;
          const bool extends =
              d->t.size() >= t.size() &&
              std::equal(t.begin(), t.end(), d->t.begin());
          if (!extends)
            a.fail("t=" + word_str(t, kOmega) + " x=" + point_str(x) +
                       " p=" + std::to_string(p),
                   "witness extending t", desc_placed(d));
        }
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma58(const std::map<std::string, long long>& given,
                                  unsigned jobs) {
  (void)jobs;  // single pass; output is identical for any worker count
  VerifyReport r;
  r.suite = "lemma5.8";
  r.bounds = resolve_bounds(r.suite, given, {{"maxlen", 16, 20}});
  const std::uint64_t maxlen = bget(r.bounds, "maxlen");
  const std::uint64_t total = (1ull << (maxlen + 1)) - 1;
  std::vector<Agg> parts;
  run_chunks(total, 1, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    std::unordered_map<std::uint64_t, std::uint64_t> owner[2];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word u = psi_word(idx);
      const auto d = placed_decode(u);
      if (!d) continue;
      ++a.cases;
      const Word um = mirror_word(u);
      const std::uint64_t keys[2] = {idx, psi_index(um)};
      auto& m = owner[d->eps];
      for (const std::uint64_t key : keys) {
        const auto [it, inserted] = m.try_emplace(key, idx);
        if (!inserted && it->second != idx)
          a.fail("u=" + word_str(u, 2),
                 "pair sets within one split class disjoint",
                 "collides with u'=" + word_str(psi_word(it->second), 2));
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma59(const std::map<std::string, long long>& given,
                                  unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.9";
  r.bounds = resolve_bounds(r.suite, given, {{"maxlen", 16, 24}});
  const std::uint64_t maxlen = bget(r.bounds, "maxlen");
  const std::uint64_t total = (1ull << (maxlen + 1)) - 1;
  std::vector<Agg> parts;
  run_chunks(total, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Word u = psi_word(idx);
      ++a.cases;
      const auto d = placed_decode(u);
      if (!d) {
        a.hit("unplaced");
        continue;
      }
      a.hit("placed");
      const std::string key = "u=" + word_str(u, 2);
      const std::uint64_t l = d->level();
      const Word um = mirror_word(u);
      const auto dm = placed_decode(um);
      if (!dm || dm->t != d->t || dm->eps != (d->eps ^ 1u) || dm->sigma != d->sigma) {
        a.fail(key, "mirror placed with same witness, flipped split",
               desc_placed(dm));
        continue;
      }
      if (u.size() < 2) {
        a.hit("short");
        continue;
      }
      // longest placed prefix and longest level-capped placed prefix, per side
      auto scan_side = [&](const Word& w) {
        std::optional<Word> predw, capw;
        std::optional<PlacedInfo> predd, capd;
        for (std::uint64_t n = w.size(); n-- > 1 && (!predw || !capw);) {
          Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
          const auto pd = placed_decode(prefix);
          if (!pd) continue;
          if (!predw) {
            predw = prefix;
            predd = pd;
          }
          if (!capw && pd->level() <= l) {
            capw = prefix;
            capd = pd;
          }
        }
        return std::make_tuple(predw, predd, capw, capd);
      };
      auto [pre, dpre, capA, dA] = scan_side(u);
      auto [prem, dprem, capB, dB] = scan_side(um);
      if (!pre || !prem || !capA || !capB) {
        a.fail(key, "predecessors on both sides", "missing");
        continue;
      }
      const std::uint64_t lp = dpre->level();
      const std::uint64_t lpm = dprem->level();
      // level of the capped predecessor stays within one step
      const std::uint64_t lowlevel = (l == 0) ? 0 : l - 1;
      if (dA->level() != l && dA->level() != lowlevel)
        a.fail(key, "capped predecessor level in {l-1, l}",
               std::to_string(dA->level()));
      // capped predecessors mirror each other when both sit at level l
      if ((dA->level() == l) != (dB->level() == l)) {
        a.fail(key, "capped predecessor levels agree at l", "one side only");
      } else if (dA->level() == l) {
        if (*capB != mirror_word(*capA) || dA->eps != d->eps || dB->eps != dm->eps)
          a.fail(key, "capped predecessors mirror with split preserved",
                 "mismatch");
      }
      if (lp == l && lpm == l) {
        a.hit("eq");
        if (dpre->eps != d->eps || dprem->eps != dm->eps)
          a.fail(key, "predecessor keeps the split value", "changed");
        if (*prem != mirror_word(*pre))
          a.fail(key, "side predecessors mirror each other", "differ");
      } else if (lp < l || lpm < l) {
        a.hit("lt");
        if (*pre != *prem || *capA != *pre || *capB != *pre)
          a.fail(key, "all four predecessors coincide", "differ");
        if (l == 0 || dpre->level() != l - 1)
          a.fail(key, "shared predecessor one level down",
                 std::to_string(dpre->level()));
      } else {
        a.hit("gt");
        if (lp > l && lpm == l) {
          if (*capA != mirror_word(*prem) || dA->eps != d->eps || *capB != *prem)
            a.fail(key, "capped predecessor mirrors the other side", "mismatch");
        } else if (lpm > l && lp == l) {
          if (*capB != mirror_word(*pre) || dB->eps != dm->eps || *capA != *pre)
            a.fail(key, "capped predecessor mirrors the other side", "mismatch");
        } else {
          a.fail(key, "exactly one side climbs past l",
                 "lp=" + std::to_string(lp) + " lpm=" + std::to_string(lpm));
        }
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_lemma510(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  VerifyReport r;
  r.suite = "lemma5.10";
  r.bounds = resolve_bounds(r.suite, given, {{"tlen", 2, 3}, {"entmax", 4, 6}});
  const auto ts = t_list(bget(r.bounds, "tlen"),
                         static_cast<Sym>(bget(r.bounds, "entmax")));
  const auto& xs = fixed_corpus().bin;
  std::vector<Agg> parts;
  run_chunks(xs.size(), jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const EpPoint& x = xs[static_cast<std::size_t>(xi)];
      std::uint64_t hits = 0;
      for (const Word& t : ts) {
        ++a.cases;
        const KtSpec s = kt_spec(t);
        const std::string key = "t=" + word_str(t, kOmega) + " x=" + point_str(x);
        const bool tilde = h_tilde_member(t, x);
        const bool plain = h_member(t, x);
        const bool image =
            ep_at(x, s.sigma) == 1 && h_tilde_member(t, ep_set(x, s.sigma, 0u));
        if (plain && !tilde) a.fail(key, "plain section inside the wide one", "outside");
        if (tilde || image) ++hits;
        if (plain) {
          a.hit("h_members");
          const EpPoint y = phi_t(t, x);
          const auto edge = a3_is_edge(x, y);
          if (!edge || *edge != t)
            a.fail(key, "edge decodes back to t",
                   edge ? word_str(*edge, kOmega) : "none");
          if (x3_member(x).verdict != X3Result::Verdict::IN)
            a.fail(key, "left endpoint recurrent", "not IN");
          if (x3_member(y).verdict != X3Result::Verdict::IN)
            a.fail(key, "right endpoint recurrent", "not IN");
        }
        if (tilde) {
          a.hit("htilde_members");
          const EpPoint y = phi_t(t, x);
          const auto edge = g_is_edge(x, y);
          if (!edge || *edge != t)
            a.fail(key, "wide edge decodes back to t",
                   edge ? word_str(*edge, kOmega) : "none");
        }
      }
      if (hits > 1)
        a.fail("x=" + point_str(x), "at most one section or image holds x",
               std::to_string(hits) + " hits");
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_g0_tree(const std::map<std::string, long long>& given,
                                  unsigned jobs) {
  (void)jobs;
  VerifyReport r;
  r.suite = "g0-tree";
  r.bounds = resolve_bounds(r.suite, given, {{"level", 12, 16}});
  const std::uint64_t level = bget(r.bounds, "level");
  std::vector<Agg> parts;
  run_chunks(level + 1, 1, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t lvl = lo; lvl < hi; ++lvl) {
      const LevelGraph g = g0_level_graph(static_cast<std::uint32_t>(lvl));
      const std::string key = "level=" + std::to_string(lvl);
      const std::uint64_t nverts = 1ull << lvl;
      if (g.edges.size() != nverts - 1)
        a.fail(key, std::to_string(nverts - 1) + " edges",
               std::to_string(g.edges.size()));
      auto index_of = [](const std::string& s) {
        std::uint64_t v = 0;
        for (char c : s) v = v * 2 + static_cast<std::uint64_t>(c - '0');
        return v;
      };
      // cycle check by incremental merging
      std::vector<std::uint32_t> parent(nverts);
      for (std::uint64_t v = 0; v < nverts; ++v)
        parent[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(v);
      auto find = [&](std::uint32_t v) {
        while (parent[v] != v) {
          parent[v] = parent[parent[v]];
          v = parent[v];
        }
        return v;
      };
      std::uint64_t merges = 0;
      std::vector<std::vector<std::uint32_t>> adj(nverts);
      for (const auto& e : g.edges) {
        ++a.cases;
        const std::uint32_t va = static_cast<std::uint32_t>(index_of(e[0]));
        const std::uint32_t vb = static_cast<std::uint32_t>(index_of(e[1]));
        adj[va].push_back(vb);
        adj[vb].push_back(va);
        const std::uint32_t ra = find(va), rb = find(vb);
        if (ra == rb) {
          a.fail(key + " edge " + e[0] + "--" + e[1], "no cycle", "cycle");
          continue;
        }
        parent[ra] = rb;
        ++merges;
        // lift the edge to points with zero tails and decode it back
        const EpPoint px = ep_point(2, parse_word(e[0], 2), Word{0u});
        const EpPoint py = ep_point(2, parse_word(e[1], 2), Word{0u});
        const auto en = g0_is_edge(px, py);
        const std::uint64_t diffbit =
            lvl - std::bit_width(static_cast<std::uint64_t>(va ^ vb));
        if (!en || *en != diffbit)
          a.fail(key + " edge " + e[0] + "--" + e[1], "decodes to its level",
                 en ? std::to_string(*en) : "none");
      }
      if (merges != nverts - 1) a.fail(key, "connected", "disconnected");
      // proper 2-coloring from search, compared against bit-parity
      std::vector<int> color(nverts, -1);
      std::vector<std::uint32_t> queue;
      for (std::uint64_t root = 0; root < nverts; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        queue.push_back(static_cast<std::uint32_t>(root));
        while (!queue.empty()) {
          const std::uint32_t v = queue.back();
          queue.pop_back();
          for (const std::uint32_t wv : adj[v]) {
            if (color[wv] == -1) {
              color[wv] = 1 - color[v];
              queue.push_back(wv);
            } else if (color[wv] == color[v]) {
              a.fail(key, "bipartite", "odd cycle");
            }
          }
        }
      }
      if (nverts > 0) {
        const int flip = color[0];
        for (std::uint64_t v = 0; v < nverts; ++v) {
          const int parity = static_cast<int>(std::popcount(v) & 1);
          if (color[static_cast<std::size_t>(v)] != (parity ^ flip)) {
            a.fail(key, "search coloring matches bit parity",
                   "vertex " + std::to_string(v));
            break;
          }
        }
      }
    }
  });
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_def42_a2(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  VerifyReport r;
  r.suite = "def4.2-a2";
  r.bounds = resolve_bounds(r.suite, given, {{"imax", 8, 16}, {"qmax", 8, 16}});
  const std::uint64_t imax = bget(r.bounds, "imax");
  const std::uint64_t qmax = bget(r.bounds, "qmax");
  std::vector<Agg> serial(1);
  {
    Agg& a = serial[0];
    for (std::uint64_t i = 0; i <= imax; ++i) {
      for (Sym e = 0; e <= 1; ++e) {
        const EpPoint x = a2_side_point(i, e);
        for (std::uint64_t q = i; q <= qmax; ++q) {
          ++a.cases;
          if (!a2_partition_member(q, 2 * i + e, x))
            a.fail("i=" + std::to_string(i) + " e=" + std::to_string(e) +
                       " q=" + std::to_string(q),
                   "pair point in its own piece", "outside");
        }
      }
      for (std::uint64_t q = 0; q < i && q <= qmax; ++q) {
        const std::uint64_t want = a2_piece_at_stage(i, q);
        for (Sym e = 0; e <= 1; ++e) {
          ++a.cases;
          const EpPoint x = a2_side_point(i, e);
          std::vector<std::uint64_t> got;
          for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
            if (a2_partition_member(q, p, x)) got.push_back(p);
          if (got.size() != 1 || got[0] != want)
            a.fail("i=" + std::to_string(i) + " e=" + std::to_string(e) +
                       " q=" + std::to_string(q),
                   "unique piece " + std::to_string(want),
                   got.empty() ? "none" : std::to_string(got[0]));
          else
            a.hit("early_pieces");
        }
      }
    }
  }
  const auto& xs = fixed_corpus().omega;
  std::vector<Agg> parts;
  run_chunks(xs.size(), jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      const EpPoint& x = xs[static_cast<std::size_t>(xi)];
      for (std::uint64_t q = 0; q <= qmax; ++q) {
        ++a.cases;
        std::uint64_t count = 0;
        for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
          if (a2_partition_member(q, p, x)) ++count;
        const bool beyond = a2_partition_member(q, 2 * q + 3, x);
        if (count != 1 || beyond)
          a.fail("x=" + point_str(x) + " q=" + std::to_string(q),
                 "exactly one piece", std::to_string(count) +
                     (beyond ? " and spill" : ""));
        else
          a.hit("covered");
      }
    }
  });
  merge_parts(r, serial);
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_def48c_a2(const std::map<std::string, long long>& given,
                                    unsigned jobs) {
  (void)jobs;
  VerifyReport r;
  r.suite = "def4.8c-a2";
  r.bounds = resolve_bounds(
      r.suite, given, {{"imax", 8, 16}, {"qhorizon", 40, 64}, {"growth", 2, 8}});
  const std::uint64_t imax = bget(r.bounds, "imax");
  const std::uint64_t qh = bget(r.bounds, "qhorizon");
  const std::uint64_t growth = bget(r.bounds, "growth");
  std::vector<Agg> parts(1);
  Agg& a = parts[0];
  for (std::uint64_t i = 0; i <= imax; ++i) {
    const std::uint64_t blen = b_word(i).size();
    for (Sym e = 0; e <= 1; ++e) {
      const EpPoint x = a2_side_point(i, e);
      const std::string key = "i=" + std::to_string(i) + " e=" + std::to_string(e);
      std::uint64_t first_depth = 0, last_depth = 0;
      for (std::uint64_t q = i; q <= qh; ++q) {
        ++a.cases;
        const std::uint64_t depth = a2_depth(q) - blen;
        if (q == i) first_depth = depth;
        if (depth < last_depth)
          a.fail(key + " q=" + std::to_string(q), "non-decreasing depth",
                 std::to_string(depth));
        last_depth = depth;
        const Word stem = a2_cell_stem(i, e, q);
        for (std::size_t j = 0; j < stem.size(); ++j)
          if (ep_at(x, j) != stem[j]) {
            a.fail(key + " q=" + std::to_string(q), "stem stays on the pair point",
                   "diverges at " + std::to_string(j));
            break;
          }
      }
      if (last_depth < first_depth + growth)
        a.fail(key, "depth grows by at least " + std::to_string(growth),
               std::to_string(first_depth) + " -> " + std::to_string(last_depth));
      else
        a.hit("deepened");
      // corpus points that split from the pair inside the horizon leave the cell
      for (const EpPoint& z : fixed_corpus().omega) {
        if (z == x) continue;
        const std::uint64_t scanlen = a2_depth(qh);
        std::optional<std::uint64_t> diff;
        for (std::uint64_t j = 0; j < scanlen && !diff; ++j)
          if (ep_at(z, j) != ep_at(x, j)) diff = j;
        if (!diff) continue;
        std::optional<std::uint64_t> qstar;
        for (std::uint64_t q = i; q <= qh && !qstar; ++q)
          if (a2_depth(q) - blen > *diff) qstar = q;
        if (!qstar) continue;
        ++a.cases;
        if (a2_partition_member(*qstar, 2 * i + e, z))
          a.fail(key + " z=" + point_str(z), "diverging point exits the cell",
                 "still inside at q=" + std::to_string(*qstar));
        else
          a.hit("exits");
      }
    }
  }
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_def42_s3(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  VerifyReport r;
  r.suite = "def4.2-s3";
  r.bounds = resolve_bounds(
      r.suite, given, {{"imax", 8, 12}, {"qmax", 8, 12}, {"depth", 12, 14}});
  const std::uint64_t imax = bget(r.bounds, "imax");
  const std::uint64_t qmax = bget(r.bounds, "qmax");
  const std::uint64_t depth = bget(r.bounds, "depth");
  std::vector<Agg> serial(1);
  {
    Agg& a = serial[0];
    const std::vector<Word> tails = {Word{0u}, Word{1u}, Word{0u, 1u}};
    for (std::uint64_t i = 0; i <= imax; ++i) {
      for (Sym e = 0; e <= 1; ++e) {
        Word stem = theta_word(i);
        stem.push_back(e);
        std::vector<EpPoint> samples;
        for (const Word& tail : tails) samples.push_back(ep_point(3, stem, tail));
        for (std::uint64_t q = i; q <= qmax; ++q)
          for (const EpPoint& x : samples) {
            ++a.cases;
            if (!s3_partition_member(q, 2 * i + e, x))
              a.fail("i=" + std::to_string(i) + " e=" + std::to_string(e) +
                         " q=" + std::to_string(q) + " x=" + point_str(x),
                     "family point in its own piece", "outside");
          }
        for (std::uint64_t q = 0; q < i && q <= qmax; ++q) {
          const std::uint64_t want = s3_piece_at_stage(i, e, q);
          for (const EpPoint& x : samples) {
            ++a.cases;
            std::vector<std::uint64_t> got;
            for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
              if (s3_partition_member(q, p, x)) got.push_back(p);
            if (got.size() != 1 || got[0] != want)
              a.fail("i=" + std::to_string(i) + " e=" + std::to_string(e) +
                         " q=" + std::to_string(q) + " x=" + point_str(x),
                     "unique piece " + std::to_string(want),
                     got.empty() ? "none" : std::to_string(got[0]));
            else
              a.hit("early_pieces");
          }
        }
      }
    }
    for (const EpPoint& x : fixed_corpus().ternary) {
      for (std::uint64_t q = 0; q <= qmax; ++q) {
        ++a.cases;
        std::uint64_t count = 0;
        for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
          if (s3_partition_member(q, p, x)) ++count;
        const bool beyond = s3_partition_member(q, 2 * q + 3, x);
        if (count != 1 || beyond)
          a.fail("x=" + point_str(x) + " q=" + std::to_string(q),
                 "exactly one piece",
                 std::to_string(count) + (beyond ? " and spill" : ""));
        else
          a.hit("covered");
      }
    }
  }
  // family sides are pairwise incompatible on every deep stem
  std::uint64_t pow3 = 1;
  for (std::uint64_t k = 0; k < depth; ++k) pow3 *= 3;
  std::vector<Word> thetas;
  for (std::uint64_t i = 0; i <= imax; ++i) thetas.push_back(theta_word(i));
  std::vector<Agg> parts;
  run_chunks(pow3, jobs, parts, [&](Agg& a, std::uint64_t lo, std::uint64_t hi) {
    Word w(static_cast<std::size_t>(depth), 0u);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t k = depth; k-- > 0;) {
        w[k] = static_cast<Sym>(v % 3);
        v /= 3;
      }
      ++a.cases;
      std::uint64_t compat = 0;
      for (std::uint64_t i = 0; i <= imax; ++i) {
        const Word& th = thetas[static_cast<std::size_t>(i)];
        if (th.size() + 1 > depth) continue;
        for (Sym e = 0; e <= 1; ++e) {
          bool okc = std::equal(th.begin(), th.end(), w.begin()) &&
                     w[th.size()] == e;
          for (std::size_t j = th.size() + 1; j < depth && okc; ++j)
            okc = (w[j] != 2);
          if (okc) ++compat;
        }
      }
      if (compat > 1)
        a.fail("w=" + word_str(w, 3), "at most one family side",
               std::to_string(compat));
    }
  });
  merge_parts(r, serial);
  merge_parts(r, parts);
  return r;
}

inline VerifyReport suite_phi_tail(const std::map<std::string, long long>& given,
                                   unsigned jobs) {
  (void)jobs;
  VerifyReport r;
  r.suite = "phi-tail";
  r.bounds = resolve_bounds(r.suite, given, {{"imax", 6, 10}, {"depth", 30, 200}});
  const std::uint64_t imax = bget(r.bounds, "imax");
  const std::uint64_t depth = bget(r.bounds, "depth");
  std::vector<Agg> parts(1);
  Agg& a = parts[0];
  for (std::uint64_t i = 0; i <= imax; ++i) {
    for (Sym e = 0; e <= 1; ++e) {
      const EpPoint x = a2_side_point(i, e);
      const std::string key = "i=" + std::to_string(i) + " e=" + std::to_string(e);
      Word trace;
      bool traced = true;
      for (std::uint64_t q = 0; q < i + 3; ++q) {
        ++a.cases;
        std::vector<std::uint64_t> got;
        for (std::uint64_t p = 0; p <= 2 * q + 2; ++p)
          if (a2_partition_member(q, p, x)) got.push_back(p);
        const std::uint64_t want =
            (q < i) ? a2_piece_at_stage(i, q) : 2 * i + e;
        if (got.size() != 1 || got[0] != want) {
          a.fail(key + " q=" + std::to_string(q),
                 "unique piece " + std::to_string(want),
                 got.empty() ? "none" : std::to_string(got[0]));
          traced = false;
        }
        if (q < i) trace.push_back(static_cast<Sym>(want));
      }
      if (!traced) continue;
      const EpPoint gamma =
          ep_point(kOmega, trace, Word{static_cast<Sym>(2 * i + e)});
      const Word got = phi_limit_prefix(gamma, depth);
      const Word head = phi_map(trace);
      for (std::uint64_t p = 0; p < depth; ++p) {
        ++a.cases;
        const Sym want = p < head.size()
                             ? head[static_cast<std::size_t>(p)]
                             : (p == head.size() ? 2u : e);
        if (got[static_cast<std::size_t>(p)] != want) {
          a.fail(key + " p=" + std::to_string(p),
                 std::to_string(want),
                 std::to_string(got[static_cast<std::size_t>(p)]));
          break;
        }
      }
      a.hit("tails");
    }
  }
  merge_parts(r, parts);
  return r;
}

}  // namespace detail

// ---- public entry points ----------------------------------------------------

inline VerifyReport run_suite(const std::string& name,
                              const std::map<std::string, long long>& bounds = {},
                              unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  if (name == "lemma5.2") r = detail::suite_lemma52(bounds, jobs);
  else if (name == "lemma5.4a") r = detail::suite_lemma54a(bounds, jobs);
  else if (name == "lemma5.4b") r = detail::scan_a3rel_impl("lemma5.4b", bounds, jobs);
  else if (name == "lemma5.5d") r = detail::suite_lemma55d(bounds, jobs);
  else if (name == "lemma5.6") r = detail::suite_lemma56(bounds, jobs);
  else if (name == "lemma5.8") r = detail::suite_lemma58(bounds, jobs);
  else if (name == "lemma5.9") r = detail::suite_lemma59(bounds, jobs);
  else if (name == "lemma5.10") r = detail::suite_lemma510(bounds, jobs);
  else if (name == "def4.2-a2") r = detail::suite_def42_a2(bounds, jobs);
  else if (name == "def4.8c-a2") r = detail::suite_def48c_a2(bounds, jobs);
  else if (name == "def4.2-s3") r = detail::suite_def42_s3(bounds, jobs);
  else if (name == "phi-tail") r = detail::suite_phi_tail(bounds, jobs);
  else if (name == "g0-tree") r = detail::suite_g0_tree(bounds, jobs);
  else if (name == "decode-equiv") r = detail::suite_decode_equiv(bounds, jobs);
  else throw domain_error("run_suite: unknown suite '" + name + "'");
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

// cylinder scans: every cylinder of the enumerated base receives a concrete
// verified edge (pair families scan the clopen base at their centre point)
inline VerifyReport run_scan(const std::string& family,
                             const std::map<std::string, long long>& bounds = {},
                             unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  if (family == "g0") {
    r.suite = "scan-g0";
    r.bounds = detail::resolve_bounds(r.suite, bounds, {{"depth", 8, 12}});
    const std::uint64_t depth = detail::bget(r.bounds, "depth");
    const std::uint64_t total = (1ull << (depth + 1)) - 1;
    std::vector<detail::Agg> parts;
    detail::run_chunks(total, jobs, parts,
                       [&](detail::Agg& a, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const Word u = psi_word(idx);
        ++a.cases;
        const std::string key = "u=" + word_str(u, 2);
        const std::uint64_t n = detail::least_dense_extension(u);
        Word px = s_word(n);
        px.push_back(0u);
        Word py = s_word(n);
        py.push_back(1u);
        const EpPoint x = ep_point(2, std::move(px), Word{0u});
        const EpPoint y = ep_point(2, std::move(py), Word{0u});
        const auto en = g0_is_edge(x, y);
        bool inside = true;
        for (std::size_t j = 0; j < u.size(); ++j)
          inside = inside && ep_at(x, j) == u[j] && ep_at(y, j) == u[j];
        if (!en || *en != n || !inside)
          a.fail(key, "edge at level " + std::to_string(n) + " inside cylinder",
                 en ? std::to_string(*en) : "none");
        else
          a.hit("edges");
      }
    });
    detail::merge_parts(r, parts);
  } else if (family == "a1" || family == "a1rect") {
    r.suite = "scan-" + family;
    r.bounds = detail::resolve_bounds(r.suite, bounds, {{"depth", 8, 12}});
    const std::uint64_t depth = detail::bget(r.bounds, "depth");
    std::vector<detail::Agg> parts;
    detail::run_chunks(depth + 1, 1, parts,
                       [&](detail::Agg& a, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t d = lo; d < hi; ++d) {
        ++a.cases;
        const std::string key = "u=0^" + std::to_string(d);
        if (family == "a1") {
          const std::uint64_t i = (d + 1) / 2;
          Word zx(static_cast<std::size_t>(2 * i), 0u);
          zx.push_back(1u);
          Word zy(static_cast<std::size_t>(2 * i + 1), 0u);
          zy.push_back(1u);
          const EpPoint x = ep_point(2, std::move(zx), Word{0u});
          const EpPoint y = ep_point(2, std::move(zy), Word{0u});
          bool inside = true;
          for (std::uint64_t j = 0; j < d; ++j)
            inside = inside && ep_at(x, j) == 0 && ep_at(y, j) == 0;
          const auto ei = a1_is_edge(x, y);
          if (!ei || *ei != i || !inside)
            a.fail(key, "edge with index " + std::to_string(i), "mismatch");
          else
            a.hit("edges");
        } else {
          Word zx(static_cast<std::size_t>(d), 0u);
          zx.push_back(1u);
          const EpPoint x = ep_point(2, zx, Word{0u});
          const EpPoint y = ep_point(2, zx, Word{1u});
          const auto cx = a1rect_classify(x);
          const auto cy = a1rect_classify(y);
          if (!cx || !cy || *cx != d || *cy != d || x == y)
            a.fail(key, "pair classified at index " + std::to_string(d),
                   "mismatch");
          else
            a.hit("edges");
        }
      }
    });
    detail::merge_parts(r, parts);
  } else if (family == "a2") {
    r.suite = "scan-a2";
    r.bounds =
        detail::resolve_bounds(r.suite, bounds, {{"depth", 8, 12}, {"symmax", 3, 6}});
    const std::uint64_t depth = detail::bget(r.bounds, "depth");
    const std::uint64_t base = detail::bget(r.bounds, "symmax") + 1;
    std::vector<std::uint64_t> counts(depth + 2, 0);  // stems per length
    counts[0] = 1;
    std::uint64_t total = 1;
    for (std::uint64_t l = 1; l <= depth; ++l) {
      counts[static_cast<std::size_t>(l)] =
          counts[static_cast<std::size_t>(l - 1)] * base;
      total += counts[static_cast<std::size_t>(l)];
    }
    std::vector<detail::Agg> parts;
    detail::run_chunks(total, jobs, parts,
                       [&](detail::Agg& a, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        // decode idx into a stem, length-then-lex
        std::uint64_t rest = idx, len = 0;
        while (rest >= counts[static_cast<std::size_t>(len)]) {
          rest -= counts[static_cast<std::size_t>(len)];
          ++len;
        }
        Word u(static_cast<std::size_t>(len), 0u);
        for (std::size_t k = static_cast<std::size_t>(len); k-- > 0;) {
          u[k] = static_cast<Sym>(rest % base);
          rest /= base;
        }
        ++a.cases;
        const Sym tail = static_cast<Sym>(2 * u.size());
        const EpPoint x = ep_point(kOmega, u, Word{tail});
        const EpPoint y = ep_point(kOmega, u, Word{static_cast<Sym>(tail + 1)});
        const auto eu = a2_is_edge(x, y);
        bool inside = true;
        for (std::size_t j = 0; j < u.size(); ++j)
          inside = inside && ep_at(x, j) == u[j] && ep_at(y, j) == u[j];
        if (!eu || *eu != u || !inside)
          a.fail("u=" + word_str(u, kOmega), "edge with stem u", "mismatch");
        else
          a.hit("edges");
      }
    });
    detail::merge_parts(r, parts);
  } else if (family == "a3rel") {
    r = detail::scan_a3rel_impl("scan-a3rel", bounds, jobs);
  } else {
    throw domain_error("run_scan: unknown family '" + family + "'");
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

// density of the recurrence set: every stem extends to a certified member
inline VerifyReport density_x3_suite(const std::map<std::string, long long>& bounds = {},
                                     unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = "density-x3";
  r.bounds = detail::resolve_bounds(r.suite, bounds, {{"maxlen", 12, 14}});
  const std::uint64_t maxlen = detail::bget(r.bounds, "maxlen");
  const std::uint64_t total = (1ull << (maxlen + 1)) - 2;
  std::vector<detail::Agg> parts;
  detail::run_chunks(total, jobs, parts,
                     [&](detail::Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const Word u = psi_word(k + 1);
      ++a.cases;
      const EpPoint wit = density_witness_x3(u);
      bool inside = true;
      for (std::size_t j = 0; j < u.size(); ++j)
        inside = inside && ep_at(wit, j) == u[j];
      const X3Result res = x3_member(wit);
      if (!inside || res.verdict != X3Result::Verdict::IN)
        a.fail("u=" + word_str(u, 2), "witness through u certified IN",
               inside ? "not IN" : "escapes the stem");
      else
        a.hit("witnesses");
    }
  });
  detail::merge_parts(r, parts);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

// density of the plain sections: every consistent stem extends to a member
inline VerifyReport density_ht_suite(const std::map<std::string, long long>& bounds = {},
                                     unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = "density-ht";
  r.bounds = detail::resolve_bounds(
      r.suite, bounds, {{"tlen", 2, 3}, {"entmax", 4, 6}, {"maxlen", 10, 12}});
  const auto ts = detail::t_list(detail::bget(r.bounds, "tlen"),
                                 static_cast<Sym>(detail::bget(r.bounds, "entmax")));
  const std::uint64_t maxlen = detail::bget(r.bounds, "maxlen");
  std::vector<detail::Agg> parts;
  detail::run_chunks(ts.size(), jobs, parts,
                     [&](detail::Agg& a, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t ti = lo; ti < hi; ++ti) {
      const Word& t = ts[static_cast<std::size_t>(ti)];
      const KtSpec s = kt_spec(t);
      std::vector<Word> stack{Word{}};
      while (!stack.empty()) {
        const Word u = stack.back();
        stack.pop_back();
        ++a.cases;
        const EpPoint wit = density_witness_ht(t, u);
        bool inside = true;
        for (std::size_t j = 0; j < u.size(); ++j)
          inside = inside && ep_at(wit, j) == u[j];
        if (!inside || !h_member(t, wit))
          a.fail("t=" + word_str(t, kOmega) + " u=" + word_str(u, 2),
                 "section member through u", inside ? "not a member" : "escapes");
        else
          a.hit("witnesses");
        if (u.size() < maxlen) {
          for (Sym bit = 0; bit <= 1; ++bit) {
            const std::uint64_t m = u.size();
            const std::uint64_t n = vert_of(m);
            bool okc = true;
            if (n < s.free_v)
              okc = (constraint_value(s, n, height_of(m)) == static_cast<int>(bit));
            else if (m == s.sigma)
              okc = (bit == 0);
            if (okc) stack.push_back(word_append(u, bit));
          }
        }
      }
    }
  });
  detail::merge_parts(r, parts);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace cantor
