#pragma once
// Eventually periodic points: finite preperiod + repeating period over a
// fixed alphabet. All library predicates on infinite sequences take these.
// Points are kept in a normal form (primitive period, shortest preperiod)
// so structural equality decides extensional equality.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "seqcore.hpp"

namespace cantor {

struct EpPoint {
  Sym alphabet = 2;  // 2, 3, or kOmega
  Word pre;
  Word per;  // nonempty

  bool operator==(const EpPoint&) const = default;
};

namespace detail {
inline void normalize_point(Word& pre, Word& per) {
  // shrink the period to its primitive root
  const std::size_t d = per.size();
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    bool rep = true;
    for (std::size_t i = e; i < d && rep; ++i) rep = (per[i] == per[i % e]);
    if (rep) {
      per.resize(e);
      break;
    }
  }
  // pull the period boundary as far left as it goes
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    const Sym last = per.back();
    per.pop_back();
    per.insert(per.begin(), last);
  }
}
}  // namespace detail

inline EpPoint ep_point(Sym alphabet, Word pre, Word per) {
  if (per.empty()) throw domain_error("ep_point: empty period");
  if (alphabet != kOmega) {
    for (Sym s : pre)
      if (s >= alphabet) throw domain_error("ep_point: symbol out of alphabet");
    for (Sym s : per)
      if (s >= alphabet) throw domain_error("ep_point: symbol out of alphabet");
  }
  detail::normalize_point(pre, per);
  return EpPoint{alphabet, std::move(pre), std::move(per)};
}

inline Sym ep_at(const EpPoint& x, std::uint64_t p) {
  if (p < x.pre.size()) return x.pre[static_cast<std::size_t>(p)];
  return x.per[static_cast<std::size_t>((p - x.pre.size()) % x.per.size())];
}

inline Word point_prefix(const EpPoint& x, std::uint64_t len) {
  Word out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::uint64_t p = 0; p < len; ++p) out.push_back(ep_at(x, p));
  return out;
}

// restriction of x to vertical n, itself eventually periodic: the flat
// positions pair_index(n, p) are eventually periodic mod any modulus, with
// period dividing twice the point's period
inline EpPoint ep_vertical(const EpPoint& x, std::uint64_t n) {
  const std::uint64_t d = x.per.size();
  std::uint64_t p0 = 0;
  while (pair_index(n, p0) < x.pre.size()) ++p0;
  Word pre, per;
  pre.reserve(static_cast<std::size_t>(p0));
  for (std::uint64_t p = 0; p < p0; ++p) pre.push_back(ep_at(x, pair_index(n, p)));
  per.reserve(static_cast<std::size_t>(2 * d));
  for (std::uint64_t p = p0; p < p0 + 2 * d; ++p)
    per.push_back(ep_at(x, pair_index(n, p)));
  return ep_point(x.alphabet, std::move(pre), std::move(per));
}

// does vertical n carry the symbol at infinitely many heights
inline bool ep_hits_forever(const EpPoint& x, std::uint64_t n, Sym sym) {
  const EpPoint v = ep_vertical(x, n);
  for (Sym s : v.per)
    if (s == sym) return true;
  return false;
}

struct DiffResult {
  std::vector<std::uint64_t> positions;  // all differences below the horizon
  bool finite = false;                   // tails agree past the horizon
};

inline DiffResult ep_diff_positions(const EpPoint& x, const EpPoint& y,
                                    std::uint64_t cap = 1'000'000) {
  if (x.alphabet != y.alphabet) throw domain_error("ep_diff_positions: alphabet mismatch");
  const std::uint64_t base = std::max(x.pre.size(), y.pre.size());
  const std::uint64_t horizon =
      base + std::lcm<std::uint64_t>(x.per.size(), y.per.size());
  if (horizon > cap) throw domain_error("ep_diff_positions: cap exceeded");
  DiffResult out;
  out.finite = true;
  for (std::uint64_t m = 0; m < horizon; ++m) {
    if (ep_at(x, m) != ep_at(y, m)) {
      out.positions.push_back(m);
      if (m >= base) out.finite = false;
    }
  }
  return out;
}

// literal form "pre;per", e.g. "01;0" for 01 followed by zeros
inline std::string point_str(const EpPoint& x) {
  return word_str(x.pre, x.alphabet) + ";" + word_str(x.per, x.alphabet);
}

inline EpPoint parse_point(const std::string& text, Sym alphabet) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) throw domain_error("parse_point: missing ';'");
  if (text.find(';', semi + 1) != std::string::npos)
    throw domain_error("parse_point: more than one ';'");
  Word pre = parse_word(text.substr(0, semi), alphabet);
  Word per = parse_word(text.substr(semi + 1), alphabet);
  if (per.empty()) throw domain_error("parse_point: empty period");
  return ep_point(alphabet, std::move(pre), std::move(per));
}

// copy of x with one coordinate overwritten; the period is rotated to keep
// the tail aligned when the preperiod has to grow
inline EpPoint ep_set(const EpPoint& x, std::uint64_t pos, Sym value) {
  Word pre = x.pre;
  Word per = x.per;
  if (pos >= pre.size()) {
    const std::uint64_t ext = pos + 1;
    pre.reserve(static_cast<std::size_t>(ext));
    for (std::uint64_t m = x.pre.size(); m < ext; ++m) pre.push_back(ep_at(x, m));
    const std::size_t rot =
        static_cast<std::size_t>((ext - x.pre.size()) % x.per.size());
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(rot), per.end());
  }
  pre[static_cast<std::size_t>(pos)] = value;
  return ep_point(x.alphabet, std::move(pre), std::move(per));
}

}  // namespace cantor
