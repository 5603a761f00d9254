#pragma once

// Test-only oracles and generators. These deliberately avoid the library's
// fast paths: windows are materialized, rotations are enumerated, quotients
// are collected as explicit word sets.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gdbw/automaton.hpp"
#include "gdbw/word.hpp"

namespace gdbw::testing {

inline CircularWord naive_least_rotation(const CircularWord& w) {
  CircularWord best = w;
  for (i64 j = 1; j < w.size(); ++j) {
    CircularWord r = w.rotated(j);
    if (r < best) best = r;
  }
  return best;
}

inline i64 naive_gamma(const CircularWord& w, i64 len) {
  std::set<std::vector<int>> windows;
  std::vector<int> window(static_cast<std::size_t>(len));
  for (i64 j = 0; j < w.size(); ++j) {
    for (i64 t = 0; t < len; ++t)
      window[static_cast<std::size_t>(t)] = w[(j + t) % w.size()];
    windows.insert(window);
  }
  return len == 0 ? 1 : static_cast<i64>(windows.size());
}

inline bool naive_is_gdb(const CircularWord& w) {
  for (i64 i = 0; i <= w.size(); ++i)
    if (naive_gamma(w, i) != pow_capped(w.alphabet_size(), i, w.size()))
      return false;
  return true;
}

inline CircularWord random_word(std::mt19937_64& rng, i64 n, i64 k) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(k) - 1);
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (auto& a : letters) a = dist(rng);
  return CircularWord(std::move(letters), k);
}

inline UniformLanguage random_language(std::mt19937_64& rng, i64 n, i64 k, i64 m) {
  std::set<std::vector<int>> words;
  std::uniform_int_distribution<int> dist(0, static_cast<int>(k) - 1);
  while (static_cast<i64>(words.size()) < m) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& a : w) a = dist(rng);
    words.insert(std::move(w));
  }
  return UniformLanguage::from_words({words.begin(), words.end()}, k);
}

inline UniformLanguage language_from_strings(const std::vector<std::string>& strs,
                                             i64 k) {
  std::vector<std::vector<int>> words;
  for (const auto& s : strs) words.push_back(parse_word(s, k).letters());
  return UniformLanguage::from_words(std::move(words), k);
}

// State complexity by definition: the number of distinct left quotients
// p^{-1}L over p of length 0..N, plus the empty quotient if none of those
// prefixes produced it.
inline i64 naive_state_complexity(const UniformLanguage& lang) {
  std::set<std::set<std::vector<int>>> quotients;
  bool saw_empty = false;
  std::vector<int> prefix;
  auto visit = [&](auto&& self) -> void {
    std::set<std::vector<int>> quotient;
    for (const auto& w : lang.words)
      if (std::equal(prefix.begin(), prefix.end(), w.begin()))
        quotient.emplace(w.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                         w.end());
    if (quotient.empty()) saw_empty = true;
    quotients.insert(std::move(quotient));
    if (static_cast<i64>(prefix.size()) == lang.word_length) return;
    for (int a = 0; a < lang.k; ++a) {
      prefix.push_back(a);
      self(self);
      prefix.pop_back();
    }
  };
  visit(visit);
  return static_cast<i64>(quotients.size()) + (saw_empty ? 0 : 1);
}

// Moore partition refinement; the class count of a minimal DFA equals its
// state count.
inline i64 moore_class_count(const Dfa& dfa) {
  std::vector<i64> cls(static_cast<std::size_t>(dfa.num_states));
  for (i64 s = 0; s < dfa.num_states; ++s) cls[s] = dfa.is_accepting(s) ? 1 : 0;
  while (true) {
    std::map<std::vector<i64>, i64> next_ids;
    std::vector<i64> next(static_cast<std::size_t>(dfa.num_states));
    for (i64 s = 0; s < dfa.num_states; ++s) {
      std::vector<i64> sig{cls[static_cast<std::size_t>(s)]};
      for (int a = 0; a < dfa.k; ++a)
        sig.push_back(cls[static_cast<std::size_t>(dfa.step(s, a))]);
      auto [it, _] = next_ids.emplace(std::move(sig),
                                      static_cast<i64>(next_ids.size()));
      next[static_cast<std::size_t>(s)] = it->second;
    }
    if (next == cls) return static_cast<i64>(next_ids.size());
    cls = std::move(next);
  }
}

}  // namespace gdbw::testing
