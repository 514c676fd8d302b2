#pragma once
// Concrete graph and rectangle families on the sequence spaces, their edge
// decoders, the finite level graphs, the cylinder partitions attached to the
// pair/rectangle families, and the ternary coding maps phi / Phi.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "points.hpp"

namespace cantor {

// ---- the dense difference graph on binary points --------------------------
// edges: (s_n 0 g, s_n 1 g) for every n and every tail g

inline constexpr std::uint64_t kDiffCap = 1'000'000;

// returns the level n if (x, y) is an edge, in that orientation
inline std::optional<std::uint64_t> g0_is_edge(const EpPoint& x, const EpPoint& y) {
  const DiffResult d = ep_diff_positions(x, y, kDiffCap);
  if (!d.finite || d.positions.size() != 1) return std::nullopt;
  const std::uint64_t n = d.positions[0];
  if (ep_at(x, n) != 0 || ep_at(y, n) != 1) return std::nullopt;
  if (point_prefix(x, n) != s_word(n)) return std::nullopt;
  return n;
}

struct LevelGraph {
  std::uint32_t n = 0;
  std::vector<std::array<std::string, 2>> edges;  // sorted lexicographically
};

// restriction of the graph to words of length N: edge between u and v iff
// they differ in exactly one bit n, share the prefix s_n, and u(n)=0, v(n)=1
inline LevelGraph g0_level_graph(std::uint32_t n) {
  if (n > 16) throw domain_error("g0_level_graph: level too large");
  LevelGraph g;
  g.n = n;
  for (std::uint32_t lvl = 0; lvl < n; ++lvl) {
    const Word s = s_word(lvl);
    std::string stem = word_str(s, 2);
    const std::uint32_t k = n - lvl - 1;
    for (std::uint64_t t = 0; t < (1ull << k); ++t) {
      std::string tail;
      tail.reserve(k);
      for (std::uint32_t j = 0; j < k; ++j)
        tail.push_back(((t >> (k - 1 - j)) & 1u) ? '1' : '0');
      g.edges.push_back({stem + "0" + tail, stem + "1" + tail});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline std::string graph_dot(const LevelGraph& g) {
  std::string out = "graph g0_level_" + std::to_string(g.n) + " {\n";
  for (const auto& e : g.edges) out += "  \"" + e[0] + "\" -- \"" + e[1] + "\";\n";
  out += "}\n";
  return out;
}

// ---- the two rectangle families around 0^inf -------------------------------

// pair family: left sides have an even number of leading zeros before the
// first 1, right sides one more
inline std::optional<std::uint64_t> first_one(const EpPoint& x) {
  const std::uint64_t scan = x.pre.size() + x.per.size();
  for (std::uint64_t m = 0; m < scan; ++m)
    if (ep_at(x, m) == 1) return m;
  return std::nullopt;
}

inline std::optional<std::uint64_t> a1_is_edge(const EpPoint& x, const EpPoint& y) {
  const auto zx = first_one(x);
  const auto zy = first_one(y);
  if (!zx || !zy) return std::nullopt;
  if (*zx % 2 != 0 || *zy != *zx + 1) return std::nullopt;
  return *zx / 2;
}

// rectangle family: both sides share the exact count of leading zeros;
// the all-zero point is the centre and belongs to no piece
inline std::optional<std::uint64_t> a1rect_classify(const EpPoint& x) {
  return first_one(x);
}

// ---- the tail-change family on sequences of naturals ----------------------
// edges: (u (2|u|)^inf, u (2|u|+1)^inf) for every finite word u

inline std::optional<Word> a2_is_edge(const EpPoint& x, const EpPoint& y) {
  if (x == y) return std::nullopt;
  const std::uint64_t horizon = std::max(x.pre.size(), y.pre.size()) +
                                std::lcm<std::uint64_t>(x.per.size(), y.per.size());
  std::uint64_t k = 0;
  while (k < horizon && ep_at(x, k) == ep_at(y, k)) ++k;
  if (k >= horizon) return std::nullopt;
  Word u = point_prefix(x, k);
  const Sym base = static_cast<Sym>(2 * k);
  if (x != ep_point(kOmega, u, Word{base})) return std::nullopt;
  if (y != ep_point(kOmega, u, Word{static_cast<Sym>(base + 1)})) return std::nullopt;
  return u;
}

// b(i): the i-th word of naturals in prime-coder order
inline Word b_word(std::uint64_t i) {
  const auto& img = default_prime_image();
  if (i >= img.size()) throw domain_error("b_word: bound exceeded");
  return img[static_cast<std::size_t>(i)].word;
}

// max over l <= q of |b(l)| + 1
inline std::uint64_t a2_depth(std::uint64_t q) {
  std::uint64_t e = 0;
  for (std::uint64_t l = 0; l <= q; ++l)
    e = std::max<std::uint64_t>(e, b_word(l).size() + 1);
  return e;
}

// stem of the cylinder piece with index pair (i, eps) at stage q
inline Word a2_cell_stem(std::uint64_t i, Sym eps, std::uint64_t q) {
  Word stem = b_word(i);
  const Sym tail = static_cast<Sym>(2 * stem.size() + eps);
  const std::uint64_t depth = a2_depth(q);
  if (depth < stem.size() + 1) throw domain_error("a2_cell_stem: depth too small");
  for (std::uint64_t j = stem.size(); j < depth; ++j) stem.push_back(tail);
  return stem;
}

// stage-q partition of the natural-sequence space: pieces 2i+eps <= 2q+1 are
// cylinders, piece 2q+2 is the leftover, later pieces are empty
inline bool a2_partition_member(std::uint64_t q, std::uint64_t p, const EpPoint& x) {
  if (x.alphabet != kOmega) throw domain_error("a2_partition_member: expected naturals");
  if (p >= 2 * q + 3) return false;
  if (p <= 2 * q + 1) {
    const Word stem = a2_cell_stem(p / 2, static_cast<Sym>(p % 2), q);
    for (std::size_t j = 0; j < stem.size(); ++j)
      if (ep_at(x, j) != stem[j]) return false;
    return true;
  }
  for (std::uint64_t pp = 0; pp <= 2 * q + 1; ++pp)
    if (a2_partition_member(q, pp, x)) return false;
  return true;
}

// the canonical pair of points attached to index i
inline EpPoint a2_side_point(std::uint64_t i, Sym eps) {
  Word stem = b_word(i);
  const Sym tail = static_cast<Sym>(2 * stem.size() + eps);
  return ep_point(kOmega, std::move(stem), Word{tail});
}

// piece index of the pair (i, .) at an earlier stage q < i: the unique
// cylinder piece compatible with b(i) when the stem is long enough,
// otherwise the leftover piece
inline std::uint64_t a2_piece_at_stage(std::uint64_t i, std::uint64_t q) {
  if (q >= i) throw domain_error("a2_piece_at_stage: expected q < i");
  const Word bi = b_word(i);
  const std::uint64_t depth = a2_depth(q);
  std::optional<std::uint64_t> found;
  for (std::uint64_t j = 0; j <= q; ++j) {
    for (Sym e = 0; e <= 1; ++e) {
      const Word stem = a2_cell_stem(j, e, q);
      const std::size_t common = std::min(stem.size(), bi.size());
      bool comp = true;
      for (std::size_t m = 0; m < common && comp; ++m) comp = (stem[m] == bi[m]);
      if (!comp) continue;
      if (found) throw domain_error("a2_piece_at_stage: ambiguous piece");
      found = 2 * j + e;
    }
  }
  if (found && bi.size() >= depth) return *found;
  return 2 * q + 2;
}

// ---- suitable ternary words and the S-family -------------------------------
// a ternary word is suitable when it is empty or ends in 2

inline bool suitable(const Word& s) { return s.empty() || s.back() == 2; }

// theta enumerates suitable words by length then lexicographically (0<1<2)
inline Word theta_word(std::uint64_t i) {
  if (i == 0) return Word{};
  std::uint64_t r = i - 1;
  std::uint64_t len = 1, count = 1;
  while (r >= count) {
    r -= count;
    ++len;
    count *= 3;
  }
  Word out(static_cast<std::size_t>(len), 0u);
  for (std::size_t k = out.size() - 1; k-- > 0;) {
    out[k] = static_cast<Sym>(r % 3);
    r /= 3;
  }
  out.back() = 2;
  return out;
}

// longest proper suitable prefix
inline Word suitable_pred(const Word& s) {
  if (s.empty() || !suitable(s)) throw domain_error("suitable_pred: not suitable");
  for (std::size_t l = s.size(); l-- > 0;) {
    if (l == 0) return Word{};
    if (s[l - 1] == 2) return Word(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(l));
  }
  return Word{};
}

// side eps of the rectangle at index i: theta(i), then eps, then a 2-free tail
inline bool s3_family_member(std::uint64_t i, Sym eps, const EpPoint& x) {
  if (x.alphabet != 3) throw domain_error("s3_family_member: expected ternary");
  const Word th = theta_word(i);
  for (std::size_t k = 0; k < th.size(); ++k)
    if (ep_at(x, k) != th[k]) return false;
  if (ep_at(x, th.size()) != eps) return false;
  for (std::uint64_t m = th.size() + 1; m < x.pre.size(); ++m)
    if (ep_at(x, m) == 2) return false;
  for (Sym sVal : x.per)
    if (sVal == 2) return false;
  return true;
}

// stage-q partition of the ternary space mirroring the rectangle family
inline bool s3_partition_member(std::uint64_t q, std::uint64_t p, const EpPoint& x) {
  if (x.alphabet != 3) throw domain_error("s3_partition_member: expected ternary");
  if (p >= 2 * q + 3) return false;
  const std::uint64_t depth = theta_word(q).size();
  if (p <= 2 * q + 1) {
    const std::uint64_t i = p / 2;
    const Sym eps = static_cast<Sym>(p % 2);
    const Word th = theta_word(i);
    for (std::size_t k = 0; k < th.size(); ++k)
      if (ep_at(x, k) != th[k]) return false;
    if (ep_at(x, th.size()) != eps) return false;
    for (std::uint64_t m = th.size() + 1; m <= depth; ++m)
      if (ep_at(x, m) == 2) return false;
    return true;
  }
  for (std::uint64_t pp = 0; pp <= 2 * q + 1; ++pp)
    if (s3_partition_member(q, pp, x)) return false;
  return true;
}

// piece index of the whole family side (i, eps) at an earlier stage q < i:
// the unique cylinder piece containing every member, or the leftover piece.
// membership only depends on theta(i) and eps because the stage window never
// reaches past them when q < i.
inline std::uint64_t s3_piece_at_stage(std::uint64_t i, Sym eps, std::uint64_t q) {
  if (q >= i) throw domain_error("s3_piece_at_stage: expected q < i");
  const Word thi = theta_word(i);
  const std::uint64_t window = theta_word(q).size();
  auto at = [&](std::uint64_t pos) -> Sym {
    if (pos < thi.size()) return thi[static_cast<std::size_t>(pos)];
    if (pos == thi.size()) return eps;
    return 0;  // tail symbols are 2-free
  };
  std::optional<std::uint64_t> found;
  for (std::uint64_t j = 0; j <= q; ++j) {
    const Word thj = theta_word(j);
    if (thj.size() > thi.size()) continue;
    bool pref = true;
    for (std::size_t k = 0; k < thj.size() && pref; ++k) pref = (thj[k] == thi[k]);
    if (!pref) continue;
    const Sym e = at(thj.size());
    if (e >= 2) continue;
    bool clean = true;
    for (std::uint64_t pos = thj.size() + 1; pos <= window && clean; ++pos)
      clean = (at(pos) != 2);
    if (!clean) continue;
    if (found) throw domain_error("s3_piece_at_stage: ambiguous piece");
    found = 2 * j + e;
  }
  return found ? *found : 2 * q + 2;
}

// ---- the coding map into ternary space -------------------------------------
// phi rewrites a finite word of naturals symbol by symbol; writing the next
// symbol n as 2q+eps, a fresh "2 eps" chunk opens exactly when q equals the
// current length or n differs from the previous symbol, otherwise eps extends
// the current chunk

inline Word phi_map(const Word& s) {
  Word out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Sym n = s[k];
    const std::uint64_t qn = n / 2;
    const Sym eps = n % 2;
    const bool fresh = (qn == k) || (k > 0 && n != s[k - 1]);
    if (fresh) out.push_back(2u);
    out.push_back(eps);
  }
  return out;
}

// pointwise limit of phi along a point of naturals, materialized to a depth
inline Word phi_limit_prefix(const EpPoint& gamma, std::uint64_t depth) {
  if (gamma.alphabet != kOmega) throw domain_error("phi_limit_prefix: expected naturals");
  Word phiw;
  Word out;
  out.reserve(static_cast<std::size_t>(depth));
  for (std::uint64_t p = 0; p < depth; ++p) {
    const Sym n = ep_at(gamma, p);
    const std::uint64_t qn = n / 2;
    const Sym eps = n % 2;
    const bool fresh = (qn == p) || (p > 0 && n != ep_at(gamma, p - 1));
    if (fresh) phiw.push_back(2u);
    phiw.push_back(eps);
    out.push_back(phiw[static_cast<std::size_t>(p)]);
  }
  return out;
}

}  // namespace cantor
