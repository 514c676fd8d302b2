#pragma once
// Block-constraint trees over binary points, indexed by finite words of
// naturals. A word t carves out the set K_t of points whose early verticals
// follow fixed patterns built from the dense family; everything downstream
// (placed finite words, witness chains, the h / h-tilde sets, the coded
// graphs) is decoded from those patterns.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "points.hpp"

namespace cantor {

namespace detail {
struct PosTables {
  std::vector<std::uint32_t> vert, height;
  PosTables() {
    vert.resize(2048);
    height.resize(2048);
    for (std::uint64_t m = 0; m < 2048; ++m) {
      const Unpaired u = unpair(m);
      vert[static_cast<std::size_t>(m)] = static_cast<std::uint32_t>(u.n);
      height[static_cast<std::size_t>(m)] = static_cast<std::uint32_t>(u.p);
    }
  }
};
inline const PosTables& pos_tables() {
  static const PosTables t;
  return t;
}
}  // namespace detail

inline std::uint64_t vert_of(std::uint64_t m) {
  if (m < 2048) return detail::pos_tables().vert[static_cast<std::size_t>(m)];
  return unpair(m).n;
}

inline std::uint64_t height_of(std::uint64_t m) {
  if (m < 2048) return detail::pos_tables().height[static_cast<std::size_t>(m)];
  return unpair(m).p;
}

// ---- block offsets ---------------------------------------------------------

struct SigmaOffsets {
  std::vector<std::uint64_t> partials;  // partials[k] = sum of t(j)+2 over j<k
  std::uint64_t sigma = 0;              // flat position of the split coordinate
};

inline SigmaOffsets sigma_offsets(const Word& t) {
  SigmaOffsets out;
  out.partials.resize(t.size() + 1);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    out.partials[k] = acc;
    acc += t[k] + 2;
  }
  out.partials[t.size()] = acc;
  out.sigma = pair_index(acc, 0);
  return out;
}

struct KtSpec {
  Word t;
  std::vector<std::uint64_t> parts;  // block offsets, size |t|+1
  std::uint64_t free_v = 0;          // first unconstrained vertical
  std::uint64_t sigma = 0;           // flat position of (free_v, 0)
};

inline KtSpec kt_spec(const Word& t) {
  KtSpec s;
  s.t = t;
  const SigmaOffsets so = sigma_offsets(t);
  s.parts = so.partials;
  s.free_v = s.parts.back();
  s.sigma = so.sigma;
  return s;
}

// forced value of vertical n at height j: 0/1, or -1 on free verticals.
// block k (entry m = t(k)) pins verticals parts[k] .. parts[k]+m+1 to the
// slices of w_m, except that the first vertical of the block additionally
// carries a 1 at height m+1.
inline int constraint_value(const KtSpec& s, std::uint64_t n, std::uint64_t j) {
  if (n >= s.free_v) return -1;
  std::size_t k = 0;
  while (s.parts[k + 1] <= n) ++k;
  const std::uint64_t i = n - s.parts[k];
  const std::uint64_t m = s.t[k];
  if (i == 0 && j == m + 1) return 1;
  if (i == 0 && j > m + 1) return 0;
  const std::uint64_t q = pair_index(i, j);
  return q <= m ? static_cast<int>(w_bit(m, q)) : 0;
}

namespace detail {
// the full pattern of one constrained vertical, as a point
inline EpPoint vertical_target(const KtSpec& s, std::uint64_t n) {
  std::size_t k = 0;
  while (s.parts[k + 1] <= n) ++k;
  const std::uint64_t len = s.t[k] + 2;  // covers the last possible 1
  Word pre;
  pre.reserve(static_cast<std::size_t>(len));
  for (std::uint64_t j = 0; j < len; ++j)
    pre.push_back(static_cast<Sym>(constraint_value(s, n, j)));
  return ep_point(2, std::move(pre), Word{0u});
}
}  // namespace detail

// all constrained verticals with their patterns
inline std::map<std::uint64_t, EpPoint> kt_constraints(const Word& t) {
  const KtSpec s = kt_spec(t);
  std::map<std::uint64_t, EpPoint> out;
  for (std::uint64_t n = 0; n < s.free_v; ++n)
    out.emplace(n, detail::vertical_target(s, n));
  return out;
}

inline bool kt_member(const Word& t, const EpPoint& x) {
  if (x.alphabet != 2) throw domain_error("kt_member: expected binary point");
  const KtSpec s = kt_spec(t);
  for (std::uint64_t n = 0; n < s.free_v; ++n)
    if (ep_vertical(x, n) != detail::vertical_target(s, n)) return false;
  return true;
}

// does the finite word u avoid contradicting any constraint it covers
inline bool kt_prefix_consistent(const Word& t, const Word& u) {
  const KtSpec s = kt_spec(t);
  for (std::uint64_t m = 0; m < u.size(); ++m) {
    const std::uint64_t n = vert_of(m);
    if (n >= s.free_v) continue;
    if (static_cast<int>(u[static_cast<std::size_t>(m)]) !=
        constraint_value(s, n, height_of(m)))
      return false;
  }
  return true;
}

// the minimal member of K_t with the split coordinate set to eps:
// forced ones, the split bit, zeros elsewhere
inline EpPoint canonical_point(const Word& t, Sym eps) {
  const KtSpec s = kt_spec(t);
  std::vector<std::uint64_t> ones;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::uint64_t len = t[k] + 2;
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t n = s.parts[k] + i;
      for (std::uint64_t j = 0; j < len; ++j)
        if (constraint_value(s, n, j) == 1) ones.push_back(pair_index(n, j));
    }
  }
  std::uint64_t prelen = 0;
  for (std::uint64_t pos : ones) prelen = std::max(prelen, pos + 1);
  if (eps == 1) prelen = std::max(prelen, s.sigma + 1);
  Word pre(static_cast<std::size_t>(prelen), 0u);
  for (std::uint64_t pos : ones) pre[static_cast<std::size_t>(pos)] = 1u;
  if (eps == 1) pre[static_cast<std::size_t>(s.sigma)] = 1u;
  return ep_point(2, std::move(pre), Word{0u});
}

// force the split coordinate to 1 (the graph map on K_t)
inline EpPoint phi_t(const Word& t, const EpPoint& x) {
  return ep_set(x, kt_spec(t).sigma, 1u);
}

inline Word phi_t_word(const Word& t, const Word& u) {
  const KtSpec s = kt_spec(t);
  if (u.size() <= s.sigma) throw domain_error("phi_t_word: word too short");
  Word out = u;
  out[static_cast<std::size_t>(s.sigma)] = 1u;
  return out;
}

// ---- one-step refinements --------------------------------------------------

inline Word word_append(const Word& t, Sym n) {
  Word out = t;
  out.push_back(n);
  return out;
}

inline bool ktn_member(const Word& t, Sym n, const EpPoint& x) {
  return kt_member(word_append(t, n), x);
}

// same set, characterized without re-checking the old blocks as a whole:
// membership in K_t, split bit equal to w_n(0), and the fresh block patterns
inline bool ktn_member_inductive(const Word& t, Sym n, const EpPoint& x) {
  if (!kt_member(t, x)) return false;
  const KtSpec s = kt_spec(t);
  if (ep_at(x, s.sigma) != w_bit(n, 0)) return false;
  const KtSpec s2 = kt_spec(word_append(t, n));
  for (std::uint64_t v = s.free_v; v < s2.free_v; ++v)
    if (ep_vertical(x, v) != detail::vertical_target(s2, v)) return false;
  return true;
}

// ---- placed finite words ---------------------------------------------------
// u is placed when its last position sits at height on some vertical S that
// is exactly the block budget of a witness word t, u is consistent with t,
// and off-axis endings carry a 1

struct PlacedInfo {
  Word t;
  std::uint64_t sigma = 0;  // flat split position of the witness
  Sym eps = 0;              // u's value there
  std::uint64_t level() const { return t.size(); }
};

inline std::optional<PlacedInfo> placed_decode(const Word& u) {
  if (u.empty()) return std::nullopt;
  const std::uint64_t len = u.size();
  const std::uint64_t q = len - 1;
  const std::uint64_t sig_v = vert_of(q);
  // rebuild the witness block by block: on each block's first vertical the
  // pattern's highest 1 sits at entry+1
  Word t;
  std::uint64_t S = 0;
  while (S < sig_v) {
    std::int64_t last = -1;
    for (std::uint64_t p = 0;; ++p) {
      const std::uint64_t pos = pair_index(S, p);
      if (pos >= len) break;
      if (u[static_cast<std::size_t>(pos)] == 1) last = static_cast<std::int64_t>(p);
    }
    if (last < 1) return std::nullopt;
    const Sym m = static_cast<Sym>(last - 1);
    t.push_back(m);
    S += m + 2;
  }
  if (S != sig_v) return std::nullopt;
  const KtSpec s = kt_spec(t);
  for (std::uint64_t m = 0; m < len; ++m) {
    const std::uint64_t n = vert_of(m);
    if (n >= sig_v) continue;
    if (static_cast<int>(u[static_cast<std::size_t>(m)]) !=
        constraint_value(s, n, height_of(m)))
      return std::nullopt;
  }
  if (height_of(q) > 0 && u[static_cast<std::size_t>(q)] != 1) return std::nullopt;
  const std::uint64_t sigma = triangle(sig_v);
  return PlacedInfo{std::move(t), sigma, u[static_cast<std::size_t>(sigma)]};
}

namespace detail {
inline void compositions_geq2(std::uint64_t total, Word& cur, std::vector<Word>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t part = 2; part <= total; ++part) {
    if (total - part == 1) continue;  // no way to finish with parts >= 2
    cur.push_back(static_cast<Sym>(part - 2));
    compositions_geq2(total - part, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// exhaustive witness search; the fast decoder must agree with it everywhere.
// nonunique is set when two distinct witnesses survive.
inline std::optional<PlacedInfo> placed_decode_oracle(const Word& u, bool& nonunique) {
  nonunique = false;
  if (u.empty()) return std::nullopt;
  const std::uint64_t q = u.size() - 1;
  const std::uint64_t sig_v = vert_of(q);
  std::vector<Word> cands;
  Word cur;
  detail::compositions_geq2(sig_v, cur, cands);
  std::optional<PlacedInfo> found;
  for (const Word& t : cands) {
    if (!kt_prefix_consistent(t, u)) continue;
    if (height_of(q) > 0 && u[static_cast<std::size_t>(q)] != 1) continue;
    const std::uint64_t sigma = triangle(sig_v);
    PlacedInfo info{t, sigma, u[static_cast<std::size_t>(sigma)]};
    if (found) {
      nonunique = true;
      return found;
    }
    found = std::move(info);
  }
  return found;
}

// flip u at its witness split position
inline Word mirror_word(const Word& u) {
  const auto d = placed_decode(u);
  if (!d) throw domain_error("mirror_word: not placed");
  Word out = u;
  out[static_cast<std::size_t>(d->sigma)] ^= 1u;
  return out;
}

// longest placed proper prefix
inline std::optional<Word> pred_word(const Word& u) {
  for (std::uint64_t n = u.size(); n-- > 1;) {
    Word prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    if (placed_decode(prefix)) return prefix;
  }
  return std::nullopt;
}

// longest proper prefix placed with witness level at most l
inline std::optional<Word> pred_level_word(const Word& u, std::uint64_t l) {
  for (std::uint64_t n = u.size(); n-- > 1;) {
    Word prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    const auto d = placed_decode(prefix);
    if (d && d->level() <= l) return prefix;
  }
  return std::nullopt;
}

// ---- witness chains and the recurrence set ---------------------------------

// the increasing chain of tree words a point lives in, starting at the empty
// word; each step is forced by the highest 1 on the current free vertical
inline std::vector<Word> witness_chain(const EpPoint& x) {
  if (x.alphabet != 2) throw domain_error("witness_chain: expected binary point");
  std::vector<Word> chain;
  chain.push_back(Word{});
  Word t;
  for (int guard = 0; guard < 64; ++guard) {
    const KtSpec s = kt_spec(t);
    const EpPoint vert = ep_vertical(x, s.free_v);
    bool periodic_one = false;
    for (Sym sym : vert.per) periodic_one = periodic_one || (sym == 1);
    if (periodic_one) return chain;
    std::int64_t last = -1;
    for (std::size_t p = 0; p < vert.pre.size(); ++p)
      if (vert.pre[p] == 1) last = static_cast<std::int64_t>(p);
    if (last < 1) return chain;
    const Sym n = static_cast<Sym>(last - 1);
    const KtSpec s2 = kt_spec(word_append(t, n));
    bool ok = true;
    for (std::uint64_t v = s.free_v; v < s2.free_v && ok; ++v)
      ok = (ep_vertical(x, v) == detail::vertical_target(s2, v));
    if (!ok) return chain;
    t = word_append(t, n);
    chain.push_back(t);
  }
  throw domain_error("witness_chain: no stabilization");
}

struct X3Result {
  enum class Verdict { IN, OUT, UNKNOWN } verdict = Verdict::UNKNOWN;
  Word witness;                                // IN: certifying chain member
  std::vector<Word> chain;
  std::vector<std::uint64_t> placed_lengths;   // OUT/UNKNOWN: scan outcome
  std::uint64_t horizon = 0;
};

// does x have arbitrarily long placed prefixes. IN is certified by a chain
// member whose free vertical carries infinitely many 1s; OUT by an exhausted
// chain plus a clean scan past the periodic horizon; otherwise UNKNOWN.
inline X3Result x3_member(const EpPoint& x) {
  X3Result out;
  out.chain = witness_chain(x);
  for (const Word& t : out.chain) {
    const KtSpec s = kt_spec(t);
    if (ep_hits_forever(x, s.free_v, 1)) {
      out.verdict = X3Result::Verdict::IN;
      out.witness = t;
      return out;
    }
  }
  const KtSpec sk = kt_spec(out.chain.back());
  const std::uint64_t maxcv = (sk.free_v == 0) ? 0 : sk.free_v - 1;
  const std::uint64_t horizon = x.pre.size() + 2 * x.per.size() * (maxcv + 2);
  const std::uint64_t low = std::max<std::uint64_t>(sk.sigma + 1, x.pre.size());
  out.horizon = horizon;
  bool straggler = false;
  for (std::uint64_t p = 1; p <= horizon; ++p) {
    if (placed_decode(point_prefix(x, p))) {
      out.placed_lengths.push_back(p);
      if (p > low) straggler = true;
    }
  }
  out.verdict = straggler ? X3Result::Verdict::UNKNOWN : X3Result::Verdict::OUT;
  return out;
}

// ---- the two section sets and their graphs ---------------------------------

// member of K_t, split bit zero, split vertical hit infinitely often
inline bool h_member(const Word& t, const EpPoint& x) {
  const KtSpec s = kt_spec(t);
  if (!kt_member(t, x)) return false;
  if (ep_at(x, s.sigma) != 0) return false;
  return ep_hits_forever(x, s.free_v, 1);
}

// K_t with split bit zero, minus every one-step refinement reachable from
// either the point itself or its split-forced image
inline bool h_tilde_member(const Word& t, const EpPoint& x) {
  const KtSpec s = kt_spec(t);
  if (!kt_member(t, x)) return false;
  if (ep_at(x, s.sigma) != 0) return false;
  const EpPoint vert = ep_vertical(x, s.free_v);
  bool periodic_one = false;
  for (Sym sym : vert.per) periodic_one = periodic_one || (sym == 1);
  if (periodic_one) return true;  // infinite support fits no refinement
  std::int64_t last = -1;
  for (std::size_t p = 0; p < vert.pre.size(); ++p)
    if (vert.pre[p] == 1) last = static_cast<std::int64_t>(p);
  if (last >= 1) {
    const Sym n = static_cast<Sym>(last - 1);
    if (w_bit(n, 0) == 0 && ktn_member(t, n, x)) return false;
  }
  const EpPoint y = ep_set(x, s.sigma, 1u);
  const EpPoint verty = ep_vertical(y, s.free_v);
  bool periodic_one_y = false;
  for (Sym sym : verty.per) periodic_one_y = periodic_one_y || (sym == 1);
  if (!periodic_one_y) {
    std::int64_t lasty = -1;
    for (std::size_t p = 0; p < verty.pre.size(); ++p)
      if (verty.pre[p] == 1) lasty = static_cast<std::int64_t>(p);
    if (lasty >= 1) {
      const Sym n = static_cast<Sym>(lasty - 1);
      if (w_bit(n, 0) == 1 && ktn_member(t, n, y)) return false;
    }
  }
  return true;
}

// edge test for the graph glued from the split maps over the h sections;
// the witness is recovered from the chain of the left endpoint
inline std::optional<Word> a3_is_edge(const EpPoint& x, const EpPoint& y) {
  const DiffResult d = ep_diff_positions(x, y, kDiffCap);
  if (!d.finite || d.positions.size() != 1) return std::nullopt;
  const std::uint64_t m = d.positions[0];
  if (height_of(m) != 0) return std::nullopt;
  if (ep_at(x, m) != 0 || ep_at(y, m) != 1) return std::nullopt;
  const std::uint64_t v = vert_of(m);
  for (const Word& t : witness_chain(x)) {
    const KtSpec s = kt_spec(t);
    if (s.free_v != v) continue;
    if (!h_member(t, x)) return std::nullopt;
    if (y != phi_t(t, x)) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

// same glueing over the h-tilde sections
inline std::optional<Word> g_is_edge(const EpPoint& x, const EpPoint& y) {
  const DiffResult d = ep_diff_positions(x, y, kDiffCap);
  if (!d.finite || d.positions.size() != 1) return std::nullopt;
  const std::uint64_t m = d.positions[0];
  if (height_of(m) != 0) return std::nullopt;
  if (ep_at(x, m) != 0 || ep_at(y, m) != 1) return std::nullopt;
  const std::uint64_t v = vert_of(m);
  for (const Word& t : witness_chain(x)) {
    const KtSpec s = kt_spec(t);
    if (s.free_v != v) continue;
    if (!h_tilde_member(t, x)) return std::nullopt;
    if (y != phi_t(t, x)) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

// ---- density witnesses -----------------------------------------------------

// points with arbitrarily long placed prefixes are dense: u followed by all
// ones works, the all-one tail keeps hitting vertical 0
inline EpPoint density_witness_x3(const Word& u) {
  if (u.empty()) throw domain_error("density_witness_x3: empty stem");
  return ep_point(2, u, Word{1u});
}

namespace detail {
// residues mod d met by flat positions on vertical v (purely periodic in p)
inline std::uint64_t residue_mask(std::uint64_t v, std::uint64_t d) {
  const std::uint64_t period = (d % 2 == 1) ? d : 2 * d;
  std::uint64_t mask = 0;
  for (std::uint64_t p = 0; p < period; ++p)
    mask |= 1ull << ((triangle(v + p) + p) % d);
  return mask;
}

struct PeriodicSlot {
  std::uint64_t d = 1, r = 0;
};

// smallest modulus d with a residue hit by vertical V but by no vertical
// below it; the witness tail places its 1s exactly on that residue class
inline PeriodicSlot find_periodic_slot(std::uint64_t big_v) {
  for (std::uint64_t d = 1; d <= 64; ++d) {
    std::uint64_t covered = 0;
    for (std::uint64_t v = 0; v < big_v; ++v) covered |= residue_mask(v, d);
    std::uint64_t avail = residue_mask(big_v, d) & ~covered;
    if (d < 64) avail &= (1ull << d) - 1;
    if (avail) {
      std::uint64_t r = 0;
      while (!((avail >> r) & 1ull)) ++r;
      return PeriodicSlot{d, r};
    }
  }
  for (std::uint64_t d = 65; d <= 2048; ++d) {
    std::vector<bool> covered(static_cast<std::size_t>(d), false);
    const std::uint64_t period = (d % 2 == 1) ? d : 2 * d;
    for (std::uint64_t v = 0; v < big_v; ++v)
      for (std::uint64_t p = 0; p < period; ++p)
        covered[static_cast<std::size_t>((triangle(v + p) + p) % d)] = true;
    for (std::uint64_t p = 0; p < period; ++p) {
      const std::uint64_t r = (triangle(big_v + p) + p) % d;
      if (!covered[static_cast<std::size_t>(r)]) return PeriodicSlot{d, r};
    }
  }
  throw domain_error("density_witness_ht: no periodic slot found");
}
}  // namespace detail

// a member of the h section through any consistent finite stem u: keep u,
// honor the constraints, and lay the recurring 1s of the free vertical on a
// residue class no constrained vertical ever meets
inline EpPoint density_witness_ht(const Word& t, const Word& u) {
  const KtSpec s = kt_spec(t);
  for (std::uint64_t m = 0; m < u.size(); ++m) {
    const std::uint64_t n = vert_of(m);
    const Sym bit = u[static_cast<std::size_t>(m)];
    if (n < s.free_v) {
      if (static_cast<int>(bit) != constraint_value(s, n, height_of(m)))
        throw domain_error("density_witness_ht: stem breaks a constraint");
    } else if (m == s.sigma && bit != 0) {
      throw domain_error("density_witness_ht: stem sets the split bit");
    }
  }
  const detail::PeriodicSlot slot = detail::find_periodic_slot(s.free_v);
  const std::uint64_t m0 = std::max<std::uint64_t>(u.size(), s.sigma + 1);
  Word pre;
  pre.reserve(static_cast<std::size_t>(m0));
  for (std::uint64_t m = 0; m < m0; ++m) {
    const std::uint64_t n = vert_of(m);
    Sym bit;
    if (n < s.free_v)
      bit = static_cast<Sym>(constraint_value(s, n, height_of(m)));
    else if (m < u.size())
      bit = u[static_cast<std::size_t>(m)];
    else if (m == s.sigma)
      bit = 0;
    else
      bit = (m % slot.d == slot.r) ? 1u : 0u;
    pre.push_back(bit);
  }
  Word per;
  per.reserve(static_cast<std::size_t>(slot.d));
  for (std::uint64_t j = 0; j < slot.d; ++j)
    per.push_back(((m0 + j) % slot.d == slot.r) ? 1u : 0u);
  return ep_point(2, std::move(pre), std::move(per));
}

// ---- relative cylinders ----------------------------------------------------

// least n whose padded dense word extends eps.u; the n-refined tree then
// lies inside the eps side of the relative cylinder, which is verified on
// the block values (and on materialized minimal points for small n)
inline std::uint64_t find_ktn_in_cylinder(const Word& t, Sym eps, const Word& u) {
  if (u.size() > 24) throw domain_error("find_ktn_in_cylinder: cylinder too deep");
  const KtSpec s = kt_spec(t);
  Word target;
  target.push_back(eps);
  target.insert(target.end(), u.begin(), u.end());
  const std::uint64_t limit = 1ull << (target.size() + 2);
  std::optional<std::uint64_t> found;
  for (std::uint64_t n = target.size() - 1; n < limit && !found; ++n) {
    bool match = true;
    for (std::size_t j = 0; j < target.size() && match; ++j)
      match = (w_bit(n, j) == target[j]);
    if (match) found = n;
  }
  if (!found) throw domain_error("find_ktn_in_cylinder: no dense extension");
  const std::uint64_t n = *found;
  const KtSpec s2 = kt_spec(word_append(t, static_cast<Sym>(n)));
  if (constraint_value(s2, s.free_v, 0) != static_cast<int>(eps))
    throw domain_error("find_ktn_in_cylinder: split bit mismatch");
  for (std::uint64_t m = 0; m < target.size(); ++m) {
    const std::uint64_t vm = s.free_v + vert_of(m);
    if (constraint_value(s2, vm, height_of(m)) !=
        static_cast<int>(target[static_cast<std::size_t>(m)]))
      throw domain_error("find_ktn_in_cylinder: containment failed");
  }
  if (n <= 64) {
    for (Sym e2 = 0; e2 <= 1; ++e2) {
      const EpPoint cp = canonical_point(word_append(t, static_cast<Sym>(n)), e2);
      if (!kt_member(t, cp))
        throw domain_error("find_ktn_in_cylinder: refinement left the tree");
      if (ep_at(cp, s.sigma) != eps)
        throw domain_error("find_ktn_in_cylinder: witness split mismatch");
      for (std::uint64_t m = 0; m < target.size(); ++m) {
        const std::uint64_t pos = pair_index(s.free_v + vert_of(m), height_of(m));
        if (ep_at(cp, pos) != target[static_cast<std::size_t>(m)])
          throw domain_error("find_ktn_in_cylinder: witness outside cylinder");
      }
    }
  }
  return n;
}

// ---- the stagewise partition attached to the trees --------------------------

// stage-q pieces: 2i+eps <= 2q+1 selects the eps side of the i-th tree minus
// its refinements pointed at by longer coder words up to q; 2q+2 is the
// leftover inside the recurrence set; later pieces are empty
inline bool kt_partition_member(std::uint64_t q, std::uint64_t p, const EpPoint& x,
                                std::uint64_t bound = kDefaultPrimeBound) {
  if (x.alphabet != 2) throw domain_error("kt_partition_member: expected binary point");
  const std::vector<ImageEntry>& img =
      (bound == kDefaultPrimeBound) ? default_prime_image() : prime_image(bound);
  const std::uint64_t need = std::max<std::uint64_t>(q, p <= 2 * q + 1 ? p / 2 : 0);
  if (need >= img.size()) throw domain_error("kt_partition_member: bound exceeded");
  if (p >= 2 * q + 3) return false;
  if (p <= 2 * q + 1) {
    const Word& ti = img[static_cast<std::size_t>(p / 2)].word;
    const Sym e = static_cast<Sym>(p % 2);
    const KtSpec s = kt_spec(ti);
    if (!kt_member(ti, x)) return false;
    if (ep_at(x, s.sigma) != e) return false;
    for (std::uint64_t l = 0; l <= q; ++l) {
      const Word& bl = img[static_cast<std::size_t>(l)].word;
      if (bl.size() <= ti.size()) continue;
      bool ext = true;
      for (std::size_t k = 0; k < ti.size() && ext; ++k) ext = (bl[k] == ti[k]);
      if (!ext) continue;
      const Sym n = bl[ti.size()];
      if (w_bit(n, 0) == e && ktn_member(ti, n, x)) return false;
    }
    return true;
  }
  for (std::uint64_t pp = 0; pp <= 2 * q + 1; ++pp)
    if (kt_partition_member(q, pp, x, bound)) return false;
  const X3Result r = x3_member(x);
  if (r.verdict == X3Result::Verdict::UNKNOWN)
    throw domain_error("kt_partition_member: recurrence undecided");
  return r.verdict == X3Result::Verdict::IN;
}

}  // namespace cantor
