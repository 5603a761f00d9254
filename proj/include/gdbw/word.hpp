#pragma once

// Circular words over the alphabet {0,...,k-1}: rotations, circular factor
// complexity, and the generalized de Bruijn predicate.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace gdbw {

using i64 = std::int64_t;

// k^e, asserting the result fits in a signed 64-bit integer.
inline i64 ipow(i64 k, i64 e) {
  assert(k >= 0 && e >= 0);
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    assert(r <= INT64_MAX / (k == 0 ? 1 : k));
    r *= k;
  }
  return r;
}

// True iff k^e <= cap, evaluated without overflow.
inline bool pow_at_most(i64 k, i64 e, i64 cap) {
  assert(k >= 1 && e >= 0 && cap >= 0);
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (r > cap / k) return false;
    r *= k;
  }
  return r <= cap;
}

// min(k^e, cap) without overflow.
inline i64 pow_capped(i64 k, i64 e, i64 cap) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (r > cap / k) return cap;
    r *= k;
  }
  return std::min(r, cap);
}

// Largest r with k^r <= n. Integer arithmetic only: floating-point log
// misclassifies exact powers.
inline i64 floor_log(i64 k, i64 n) {
  if (k < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  if (n < 1) throw std::invalid_argument("floor_log: argument must be >= 1");
  i64 r = 0, p = 1;
  while (p <= n / k) {
    p *= k;
    ++r;
  }
  return r;
}

struct Alphabet {
  i64 k;
  explicit Alphabet(i64 k_) : k(k_) {
    if (k < 2) throw std::invalid_argument("Alphabet: need at least 2 letters");
  }
};

// Fixed-length word read circularly. Letters are integers in [0, k).
class CircularWord {
 public:
  CircularWord(std::vector<int> letters, Alphabet alphabet)
      : letters_(std::move(letters)), k_(alphabet.k) {
    if (letters_.empty())
      throw std::invalid_argument("CircularWord: length must be >= 1");
    for (int a : letters_)
      if (a < 0 || a >= k_)
        throw std::invalid_argument("CircularWord: letter out of range");
  }
  CircularWord(std::vector<int> letters, i64 k)
      : CircularWord(std::move(letters), Alphabet(k)) {}

  i64 size() const { return static_cast<i64>(letters_.size()); }
  i64 alphabet_size() const { return k_; }
  int operator[](i64 i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  // Left rotation: result[i] = (*this)[(i + j) mod N].
  CircularWord rotated(i64 j) const {
    const i64 n = size();
    j = ((j % n) + n) % n;
    std::vector<int> out(letters_.size());
    for (i64 i = 0; i < n; ++i) out[i] = letters_[(i + j) % n];
    return CircularWord(std::move(out), k_);
  }

  friend bool operator==(const CircularWord& a, const CircularWord& b) {
    return a.k_ == b.k_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const CircularWord& a, const CircularWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<int> letters_;
  i64 k_;
};

// Index of the lexicographically least rotation (Booth's algorithm).
// Cross-checked against the all-rotations minimum in the test suite.
inline i64 least_rotation_index(const std::vector<int>& s) {
  const i64 n = static_cast<i64>(s.size());
  assert(n >= 1);
  std::vector<i64> f(2 * n, -1);
  i64 least = 0;
  for (i64 j = 1; j < 2 * n; ++j) {
    const int sj = s[j % n];
    i64 i = f[j - least - 1];
    while (i != -1 && sj != s[(least + i + 1) % n]) {
      if (sj < s[(least + i + 1) % n]) least = j - i - 1;
      i = f[i];
    }
    if (sj != s[(least + i + 1) % n]) {
      if (sj < s[least % n]) least = j;
      f[j - least] = -1;
    } else {
      f[j - least] = i + 1;
    }
  }
  return least % n;
}

inline CircularWord canonical_rotation(const CircularWord& w) {
  return w.rotated(least_rotation_index(w.letters()));
}

// All distinct rotations of w, sorted. Size is N divided by the smallest
// period of w that divides N.
inline std::vector<CircularWord> conjugates(const CircularWord& w) {
  std::vector<CircularWord> out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (i64 j = 0; j < w.size(); ++j) out.push_back(w.rotated(j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All distinct length-i windows of w read circularly.
inline std::set<std::vector<int>> circular_factors(const CircularWord& w, i64 i) {
  const i64 n = w.size();
  if (i < 0 || i > n)
    throw std::out_of_range("circular_factors: length out of range");
  std::set<std::vector<int>> out;
  std::vector<int> window(static_cast<std::size_t>(i));
  for (i64 j = 0; j < n; ++j) {
    for (i64 t = 0; t < i; ++t) window[t] = w[(j + t) % n];
    out.insert(window);
    if (i == 0) break;
  }
  return out;
}

// gamma_i(w): number of distinct circular factors of length i.
// Small k^i uses a direct table indexed by the base-k window value; larger i
// hashes the N windows instead (gamma_i never exceeds N).
inline i64 gamma(const CircularWord& w, i64 len) {
  const i64 n = w.size();
  const i64 k = w.alphabet_size();
  if (len < 0 || len > n) throw std::out_of_range("gamma: length out of range");
  if (len == 0) return 1;
  constexpr i64 direct_cap = i64{1} << 22;
  if (pow_at_most(k, len, direct_cap)) {
    const i64 m = ipow(k, len);
    const i64 lead = m / k;  // k^(len-1)
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    i64 code = 0;
    for (i64 t = 0; t < len; ++t) code = code * k + w[t];
    i64 count = 0;
    for (i64 j = 0; j < n; ++j) {
      if (!seen[code]) {
        seen[code] = 1;
        ++count;
      }
      code = (code - w[j] * lead) * k + w[(j + len) % n];
    }
    return count;
  }
  if (k <= 256) {
    std::string doubled(static_cast<std::size_t>(n + len), '\0');
    for (i64 j = 0; j < n + len; ++j)
      doubled[j] = static_cast<char>(w[j % n]);
    std::unordered_set<std::string_view> seen;
    seen.reserve(static_cast<std::size_t>(n) * 2);
    for (i64 j = 0; j < n; ++j)
      seen.insert(std::string_view(doubled).substr(j, len));
    return static_cast<i64>(seen.size());
  }
  return static_cast<i64>(circular_factors(w, len).size());
}

struct GammaProfile {
  std::vector<i64> values;  // values[i] = gamma_i(w), i = 0..N
};

inline GammaProfile gamma_profile(const CircularWord& w) {
  GammaProfile p;
  p.values.reserve(static_cast<std::size_t>(w.size()) + 1);
  for (i64 i = 0; i <= w.size(); ++i) p.values.push_back(gamma(w, i));
  return p;
}

// Literal check: gamma_i(w) = min(k^i, N) for all 0 <= i <= N. Used as the
// test oracle for the two-condition predicate below.
inline bool is_generalized_de_bruijn_by_definition(const CircularWord& w) {
  const i64 n = w.size(), k = w.alphabet_size();
  for (i64 i = 0; i <= n; ++i)
    if (gamma(w, i) != pow_capped(k, i, n)) return false;
  return true;
}

// Two-condition form: gamma_r = k^r and gamma_{r+1} = N, r = floor(log_k N).
// Equivalent to the full definition; the equivalence is cross-checked in
// debug builds for short words and exhaustively in the test suite.
inline bool is_generalized_de_bruijn(const CircularWord& w) {
  const i64 n = w.size(), k = w.alphabet_size();
  const i64 r = floor_log(k, n);
  const bool ok = gamma(w, r) == ipow(k, r) && gamma(w, r + 1) == n;
#ifndef NDEBUG
  if (n <= 12) assert(ok == is_generalized_de_bruijn_by_definition(w));
#endif
  return ok;
}

// Sum of gamma_i over 0 <= i <= N.
inline i64 factor_sum(const CircularWord& w) {
  i64 total = 0;
  for (i64 i = 0; i <= w.size(); ++i) total += gamma(w, i);
  return total;
}

// Closed form of the factor sum attained by every generalized de Bruijn word:
// (k^(r+1) - 1)/(k - 1) + N(N - r), r = floor(log_k N).
inline i64 expected_factor_sum(i64 n, i64 k) {
  if (n < 1) throw std::invalid_argument("expected_factor_sum: N must be >= 1");
  if (k < 2) throw std::invalid_argument("expected_factor_sum: k must be >= 2");
  const i64 r = floor_log(k, n);
  return (ipow(k, r + 1) - 1) / (k - 1) + n * (n - r);
}

// Packed form for binary words of length <= 64; bit i holds letter i.
// The enumeration engine stores candidates this way.
inline std::uint64_t pack_bits(const CircularWord& w) {
  if (w.alphabet_size() != 2 || w.size() > 64)
    throw std::invalid_argument("pack_bits: needs k = 2 and N <= 64");
  std::uint64_t bits = 0;
  for (i64 i = 0; i < w.size(); ++i)
    if (w[i]) bits |= std::uint64_t{1} << i;
  return bits;
}

inline CircularWord unpack_bits(std::uint64_t bits, i64 n) {
  if (n < 1 || n > 64) throw std::invalid_argument("unpack_bits: bad length");
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (i64 i = 0; i < n; ++i) letters[i] = (bits >> i) & 1;
  return CircularWord(std::move(letters), 2);
}

// Text form: digit string for k <= 10, comma-separated integers otherwise.
inline std::string to_string(const CircularWord& w) {
  std::string out;
  if (w.alphabet_size() <= 10) {
    out.reserve(static_cast<std::size_t>(w.size()));
    for (i64 i = 0; i < w.size(); ++i)
      out.push_back(static_cast<char>('0' + w[i]));
  } else {
    for (i64 i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

// Parse the text form. Without an explicit alphabet size the smallest valid
// one is used: max(2, largest letter + 1).
inline CircularWord parse_word(std::string_view text, std::optional<i64> k = {}) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("parse_word: empty input");
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string token(text.substr(pos, next - pos));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad letter '" + token + "'");
      }
      if (used != token.size() || value < 0)
        throw std::invalid_argument("parse_word: bad letter '" + token + "'");
      letters.push_back(value);
      pos = next + 1;
    }
  } else {
    letters.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument(std::string("parse_word: bad digit '") + c +
                                    "'");
      letters.push_back(c - '0');
    }
  }
  const int max_letter = *std::max_element(letters.begin(), letters.end());
  const i64 kk = k.value_or(std::max<i64>(2, max_letter + 1));
  if (max_letter >= kk)
    throw std::invalid_argument("parse_word: letter " +
                                std::to_string(max_letter) +
                                " out of range for k = " + std::to_string(kk));
  return CircularWord(std::move(letters), kk);
}

}  // namespace gdbw
