#pragma once
// Core encodings shared by everything else: the diagonal pairing of
// (vertical, height) positions, the length-then-lex dense word family,
// vertical slices of finite words, and the prime-power coder enumerating
// finite sequences of naturals.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantor {

using Sym = std::uint32_t;
using Word = std::vector<Sym>;

// alphabet tag: 2 or 3 for the bounded spaces, 0 for unbounded naturals
inline constexpr Sym kOmega = 0;

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::uint64_t triangle(std::uint64_t m) { return m * (m + 1) / 2; }

// flat position of height p on vertical n; consecutive indices walk
// antidiagonals: (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
inline std::uint64_t pair_index(std::uint64_t n, std::uint64_t p) {
  return triangle(n + p) + p;
}

// largest m with triangle(m) <= q
inline std::uint64_t diag_of(std::uint64_t q) {
  auto m = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(q) + 1.0) - 1.0) / 2.0);
  while (triangle(m + 1) <= q) ++m;
  while (m > 0 && triangle(m) > q) --m;
  return m;
}

struct Unpaired {
  std::uint64_t n = 0;  // vertical
  std::uint64_t p = 0;  // height
  std::uint64_t M = 0;  // antidiagonal, n + p
};

inline Unpaired unpair(std::uint64_t q) {
  const std::uint64_t M = diag_of(q);
  const std::uint64_t p = q - triangle(M);
  return Unpaired{M - p, p, M};
}

// ---- dense binary family ----------------------------------------------
// psi enumerates all finite binary words by length, then lexicographically
// with 0 < 1: empty, 0, 1, 00, 01, 10, 11, 000, ...
// psi(n) is the binary expansion of n+1 with the leading bit dropped.

inline Word psi_word(std::uint64_t n) {
  Word out;
  if (n == 0) return out;
  const std::uint64_t v = n + 1;
  const int top = std::bit_width(v) - 1;
  out.reserve(static_cast<std::size_t>(top));
  for (int b = top - 1; b >= 0; --b) out.push_back(static_cast<Sym>((v >> b) & 1u));
  return out;
}

// psi(n) padded with zeros to length exactly n
inline Word s_word(std::uint64_t n) {
  Word out = psi_word(n);
  if (out.size() > n) throw domain_error("s_word: psi longer than n");
  out.resize(static_cast<std::size_t>(n), 0u);
  return out;
}

// s(n) with one extra zero appended, length n+1
inline Word w_word(std::uint64_t n) {
  Word out = s_word(n);
  out.push_back(0u);
  return out;
}

struct DenseWords {
  Word psi, s, w;
};

inline DenseWords dense_words(std::uint64_t n) {
  return DenseWords{psi_word(n), s_word(n), w_word(n)};
}

// w_n(q) for q <= n without materializing the word
inline Sym w_bit(std::uint64_t n, std::uint64_t q) {
  if (n == 0) return 0u;
  const std::uint64_t v = n + 1;
  const std::uint64_t L = static_cast<std::uint64_t>(std::bit_width(v)) - 1;
  if (q >= L) return 0u;
  return static_cast<Sym>((v >> (L - 1 - q)) & 1u);
}

// ---- vertical slices ----------------------------------------------------

// the part of u lying on vertical n, read bottom-up
inline Word slice(const Word& u, std::uint64_t n) {
  Word out;
  for (std::uint64_t p = 0;; ++p) {
    const std::uint64_t q = pair_index(n, p);
    if (q >= u.size()) break;
    out.push_back(u[static_cast<std::size_t>(q)]);
  }
  return out;
}

// ---- prime-power coder ---------------------------------------------------
// code(s) = prod p_k^(s(k)+1); its image, sorted, enumerates all finite
// words of naturals. decode(i, bound) walks that enumeration.

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> ps = {2,  3,  5,  7,  11, 13, 17,
                                                19, 23, 29, 31, 37, 41, 43,
                                                47, 53, 59, 61, 67, 71};
  return ps;
}

inline std::uint64_t prime_code(const Word& s) {
  if (s.size() > small_primes().size())
    throw domain_error("prime_code: word too long");
  std::uint64_t v = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::uint64_t p = small_primes()[k];
    for (Sym e = 0; e <= s[k]; ++e) {
      if (v > UINT64_MAX / p) throw domain_error("prime_code: overflow");
      v *= p;
    }
  }
  return v;
}

struct ImageEntry {
  std::uint64_t value = 0;
  Word word;
};

namespace detail {
inline void prime_image_rec(std::uint64_t bound, Word& w, std::uint64_t v,
                            std::vector<ImageEntry>& out) {
  out.push_back(ImageEntry{v, w});
  if (w.size() >= small_primes().size()) return;
  const std::uint64_t p = small_primes()[w.size()];
  std::uint64_t nv = v;
  Sym sym = 0;
  while (nv <= bound / p) {
    nv *= p;
    w.push_back(sym);
    prime_image_rec(bound, w, nv, out);
    w.pop_back();
    ++sym;
  }
}
}  // namespace detail

// every code value <= bound, with its preimage word, sorted by value
inline std::vector<ImageEntry> prime_image(std::uint64_t bound) {
  std::vector<ImageEntry> out;
  if (bound == 0) return out;
  Word w;
  detail::prime_image_rec(bound, w, 1, out);
  std::sort(out.begin(), out.end(),
            [](const ImageEntry& a, const ImageEntry& b) { return a.value < b.value; });
  return out;
}

inline Word prime_decode(std::uint64_t i, std::uint64_t bound) {
  const std::vector<ImageEntry> img = prime_image(bound);
  if (i >= img.size()) throw domain_error("prime_decode: bound exceeded");
  return img[static_cast<std::size_t>(i)].word;
}

inline constexpr std::uint64_t kDefaultPrimeBound = 10'000'000ull;

// shared enumeration for the default bound; built once
inline const std::vector<ImageEntry>& default_prime_image() {
  static const std::vector<ImageEntry> img = prime_image(kDefaultPrimeBound);
  return img;
}

// ---- word parsing / printing --------------------------------------------
// binary and ternary words print as digit strings ("0010"); words of
// naturals print comma-separated ("3,0,1"); empty word prints as "".

inline std::string word_str(const Word& w, Sym alphabet) {
  std::string out;
  if (alphabet == kOmega) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  } else {
    out.reserve(w.size());
    for (Sym s : w) out.push_back(static_cast<char>('0' + s));
  }
  return out;
}

inline Word parse_word(const std::string& text, Sym alphabet) {
  Word out;
  if (alphabet == kOmega) {
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string part = text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (part.empty()) throw domain_error("parse_word: empty entry");
      for (char c : part)
        if (c < '0' || c > '9') throw domain_error("parse_word: bad digit");
      out.push_back(static_cast<Sym>(std::stoul(part)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c >= static_cast<char>('0' + alphabet))
        throw domain_error("parse_word: symbol out of alphabet");
      out.push_back(static_cast<Sym>(c - '0'));
    }
  }
  return out;
}

}  // namespace cantor
