#pragma once

// Minimal complete DFAs for uniform-length finite languages, state
// complexity, prefix/suffix counts, and the state-complexity bounds for
// such languages and for conjugate sets of a single word.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdbw/word.hpp"

namespace gdbw {

// Nonempty set of words sharing one length N over {0..k-1}. Words are kept
// sorted and deduplicated.
struct UniformLanguage {
  std::vector<std::vector<int>> words;
  i64 word_length = 0;
  i64 k = 0;

  static UniformLanguage from_words(std::vector<std::vector<int>> input, i64 k) {
    if (k < 2) throw std::invalid_argument("UniformLanguage: k must be >= 2");
    if (input.empty())
      throw std::invalid_argument("UniformLanguage: language must be nonempty");
    const std::size_t len = input.front().size();
    if (len == 0)
      throw std::invalid_argument("UniformLanguage: word length must be >= 1");
    for (const auto& w : input) {
      if (w.size() != len)
        throw std::invalid_argument("UniformLanguage: words have mixed lengths");
      for (int a : w)
        if (a < 0 || a >= k)
          throw std::invalid_argument("UniformLanguage: letter out of range");
    }
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    UniformLanguage lang;
    lang.words = std::move(input);
    lang.word_length = static_cast<i64>(len);
    lang.k = k;
    return lang;
  }

  static UniformLanguage conjugates_of(const CircularWord& w) {
    std::vector<std::vector<int>> words;
    for (const CircularWord& c : conjugates(w)) words.push_back(c.letters());
    return from_words(std::move(words), w.alphabet_size());
  }

  i64 m() const { return static_cast<i64>(words.size()); }
};

// Complete DFA: the transition function is total; exactly one state accepts
// iff it is listed in `accepting`.
struct Dfa {
  i64 k = 0;
  i64 num_states = 0;
  std::vector<i64> delta;  // num_states * k, row-major by state
  i64 initial = 0;
  std::vector<i64> accepting;  // sorted

  i64 step(i64 state, int letter) const {
    return delta[static_cast<std::size_t>(state * k + letter)];
  }
  bool is_accepting(i64 state) const {
    return std::binary_search(accepting.begin(), accepting.end(), state);
  }
  bool accepts(std::span<const int> word) const {
    i64 s = initial;
    for (int a : word) s = step(s, a);
    return is_accepting(s);
  }
};

// Minimal complete DFA for L. States are the distinct left quotients of L;
// since all words share length N the prefix trie is leveled, and one
// bottom-up pass that merges nodes with identical child signatures yields
// the quotient automaton directly. The dead state is always materialized.
inline Dfa minimal_dfa(const UniformLanguage& lang) {
  const i64 k = lang.k;
  const i64 n = lang.word_length;

  // Leveled trie; children index into the next level, -1 = absent.
  std::vector<std::vector<std::vector<i64>>> level(static_cast<std::size_t>(n) + 1);
  level[0].emplace_back(static_cast<std::size_t>(k), -1);
  for (const auto& w : lang.words) {
    i64 node = 0;
    for (i64 i = 0; i < n; ++i) {
      auto& children = level[static_cast<std::size_t>(i)][static_cast<std::size_t>(node)];
      const int a = w[static_cast<std::size_t>(i)];
      if (children[static_cast<std::size_t>(a)] == -1) {
        children[static_cast<std::size_t>(a)] =
            static_cast<i64>(level[static_cast<std::size_t>(i) + 1].size());
        level[static_cast<std::size_t>(i) + 1].emplace_back(
            static_cast<std::size_t>(k), -1);
      }
      node = children[static_cast<std::size_t>(a)];
    }
  }

  // Bottom-up identification of nodes with equal residual languages. Two
  // same-level nodes are equivalent iff their merged child signatures match;
  // nodes of different levels hold words of different lengths and never merge.
  std::vector<std::vector<i64>> merged(static_cast<std::size_t>(n) + 1);
  std::vector<i64> class_count(static_cast<std::size_t>(n) + 1, 0);
  merged[static_cast<std::size_t>(n)].assign(level[static_cast<std::size_t>(n)].size(), 0);
  class_count[static_cast<std::size_t>(n)] = 1;  // every full word ends in {epsilon}
  std::vector<std::vector<i64>> representative(static_cast<std::size_t>(n) + 1);
  representative[static_cast<std::size_t>(n)].push_back(0);
  for (i64 ell = n - 1; ell >= 0; --ell) {
    std::map<std::vector<i64>, i64> classes;
    auto& ids = merged[static_cast<std::size_t>(ell)];
    ids.assign(level[static_cast<std::size_t>(ell)].size(), -1);
    for (std::size_t node = 0; node < level[static_cast<std::size_t>(ell)].size(); ++node) {
      std::vector<i64> sig(static_cast<std::size_t>(k), -1);
      for (i64 a = 0; a < k; ++a) {
        const i64 child = level[static_cast<std::size_t>(ell)][node][static_cast<std::size_t>(a)];
        if (child != -1)
          sig[static_cast<std::size_t>(a)] =
              merged[static_cast<std::size_t>(ell) + 1][static_cast<std::size_t>(child)];
      }
      auto [it, inserted] = classes.emplace(std::move(sig), class_count[static_cast<std::size_t>(ell)]);
      if (inserted) {
        ++class_count[static_cast<std::size_t>(ell)];
        representative[static_cast<std::size_t>(ell)].push_back(static_cast<i64>(node));
      }
      ids[node] = it->second;
    }
  }

  // Number states level by level, then the dead state last.
  std::vector<i64> offset(static_cast<std::size_t>(n) + 2, 0);
  for (i64 ell = 0; ell <= n; ++ell)
    offset[static_cast<std::size_t>(ell) + 1] =
        offset[static_cast<std::size_t>(ell)] + class_count[static_cast<std::size_t>(ell)];
  const i64 dead = offset[static_cast<std::size_t>(n) + 1];

  Dfa dfa;
  dfa.k = k;
  dfa.num_states = dead + 1;
  dfa.initial = 0;
  dfa.accepting = {offset[static_cast<std::size_t>(n)]};
  dfa.delta.assign(static_cast<std::size_t>(dfa.num_states * k), dead);
  for (i64 ell = 0; ell < n; ++ell) {
    for (i64 cls = 0; cls < class_count[static_cast<std::size_t>(ell)]; ++cls) {
      const i64 node = representative[static_cast<std::size_t>(ell)][static_cast<std::size_t>(cls)];
      const i64 state = offset[static_cast<std::size_t>(ell)] + cls;
      for (i64 a = 0; a < k; ++a) {
        const i64 child =
            level[static_cast<std::size_t>(ell)][static_cast<std::size_t>(node)][static_cast<std::size_t>(a)];
        if (child != -1)
          dfa.delta[static_cast<std::size_t>(state * k + a)] =
              offset[static_cast<std::size_t>(ell) + 1] +
              merged[static_cast<std::size_t>(ell) + 1][static_cast<std::size_t>(child)];
      }
    }
  }
  return dfa;
}

inline i64 state_complexity(const UniformLanguage& lang) {
  return minimal_dfa(lang).num_states;
}

// Number of distinct length-i prefixes of L.
inline i64 prefix_count(const UniformLanguage& lang, i64 i) {
  if (i < 0 || i > lang.word_length)
    throw std::out_of_range("prefix_count: length out of range");
  if (i == 0) return 1;
  i64 count = 0;
  const std::vector<int>* prev = nullptr;
  for (const auto& w : lang.words) {  // sorted, so equal prefixes are adjacent
    if (!prev || !std::equal(w.begin(), w.begin() + i, prev->begin())) ++count;
    prev = &w;
  }
  return count;
}

// Number of distinct length-i suffixes of L.
inline i64 suffix_count(const UniformLanguage& lang, i64 i) {
  if (i < 0 || i > lang.word_length)
    throw std::out_of_range("suffix_count: length out of range");
  if (i == 0) return 1;
  std::set<std::vector<int>> seen;
  for (const auto& w : lang.words)
    seen.emplace(w.end() - i, w.end());
  return static_cast<i64>(seen.size());
}

// 2v + m(N - 2r - 1) + 1 with r = floor(log_k m), v = 1 + k + ... + k^r.
// Valid as an upper bound on sc(L) when N >= 3r + 1; computed regardless.
inline i64 sc_bound(i64 m, i64 n, i64 k) {
  if (m < 1 || n < 1 || k < 2) throw std::invalid_argument("sc_bound: bad arguments");
  const i64 r = floor_log(k, m);
  const i64 v = (ipow(k, r + 1) - 1) / (k - 1);
  return 2 * v + m * (n - 2 * r - 1) + 1;
}

// 2v + N(N - 2r - 1) + 1 with r = floor(log_k N); upper bound on sc(C(w))
// for every word w of length N, attained exactly by generalized de Bruijn
// words.
inline i64 conjugate_sc_bound(i64 n, i64 k) {
  if (n < 1 || k < 2)
    throw std::invalid_argument("conjugate_sc_bound: bad arguments");
  const i64 r = floor_log(k, n);
  const i64 v = (ipow(k, r + 1) - 1) / (k - 1);
  return 2 * v + n * (n - 2 * r - 1) + 1;
}

struct MaxConditions {
  bool a;  // sigma_r = pi_r = k^r
  bool b;  // sigma_{r+1} = pi_{r+1} = m
};

// The two equalities characterizing languages that attain the bound (for
// N > 3r + 1), with r = floor(log_k m).
inline MaxConditions meets_max_conditions(const UniformLanguage& lang) {
  const i64 r = floor_log(lang.k, lang.m());
  if (r + 1 > lang.word_length)
    throw std::invalid_argument("meets_max_conditions: r + 1 exceeds word length");
  const i64 kr = ipow(lang.k, r);
  MaxConditions c;
  c.a = suffix_count(lang, r) == kr && prefix_count(lang, r) == kr;
  c.b = suffix_count(lang, r + 1) == lang.m() && prefix_count(lang, r + 1) == lang.m();
  return c;
}

struct BoundReport {
  i64 m = 0, n = 0, k = 0;
  i64 r = 0;  // floor(log_k m); floor(log_k N) for the conjugate bound
  i64 v = 0;
  i64 bound = 0;
  i64 sc = 0;
  bool bound_applicable = false;  // N >= 3r + 1
  bool equality = false;          // sc == bound
  std::optional<i64> d;           // m - pi_{N-r-1}, when the index is valid
  std::optional<i64> refined_bound;  // bound - d(N - 3r - 1)
  std::optional<MaxConditions> conditions;  // absent when r + 1 > N

  friend bool operator==(const BoundReport& x, const BoundReport& y) {
    auto cond = [](const std::optional<MaxConditions>& c) {
      return c ? std::optional<std::pair<bool, bool>>({c->a, c->b}) : std::nullopt;
    };
    return x.m == y.m && x.n == y.n && x.k == y.k && x.r == y.r && x.v == y.v &&
           x.bound == y.bound && x.sc == y.sc &&
           x.bound_applicable == y.bound_applicable && x.equality == y.equality &&
           x.d == y.d && x.refined_bound == y.refined_bound &&
           cond(x.conditions) == cond(y.conditions);
  }
};

namespace detail {

inline void fill_theorem_fields(BoundReport& rep, const UniformLanguage& lang) {
  const i64 rm = floor_log(lang.k, lang.m());
  if (lang.word_length - rm - 1 >= 0) {
    rep.d = lang.m() - prefix_count(lang, lang.word_length - rm - 1);
    const i64 eq2 = sc_bound(lang.m(), lang.word_length, lang.k);
    rep.refined_bound = eq2 - *rep.d * (lang.word_length - 3 * rm - 1);
  }
  if (rm + 1 <= lang.word_length) rep.conditions = meets_max_conditions(lang);
}

}  // namespace detail

// Evaluates the uniform-language bound on L and checks the claims it makes:
// for N >= 3r+1, sc <= refined bound <= bound; for N > 3r+1, equality holds
// exactly when both maximality conditions do. A violation is an internal
// error.
inline BoundReport verify_theorem1(const UniformLanguage& lang) {
  BoundReport rep;
  rep.m = lang.m();
  rep.n = lang.word_length;
  rep.k = lang.k;
  rep.r = floor_log(lang.k, rep.m);
  rep.v = (ipow(lang.k, rep.r + 1) - 1) / (lang.k - 1);
  rep.bound = sc_bound(rep.m, rep.n, rep.k);
  rep.sc = state_complexity(lang);
  rep.bound_applicable = rep.n >= 3 * rep.r + 1;
  rep.equality = rep.sc == rep.bound;
  detail::fill_theorem_fields(rep, lang);

  if (rep.bound_applicable) {
    if (!rep.refined_bound || rep.sc > *rep.refined_bound || *rep.refined_bound > rep.bound)
      throw std::logic_error("verify_theorem1: bound violated");
    if (rep.n > 3 * rep.r + 1) {
      if (!rep.conditions)
        throw std::logic_error("verify_theorem1: conditions not evaluable");
      const bool both = rep.conditions->a && rep.conditions->b;
      if (rep.equality != both)
        throw std::logic_error("verify_theorem1: equality characterization violated");
    }
  }
  return rep;
}

// Evaluates the conjugate-set bound on C(w) and checks that equality holds
// exactly when w is a generalized de Bruijn word.
inline BoundReport verify_conjugate_theorem(const CircularWord& w) {
  const UniformLanguage lang = UniformLanguage::conjugates_of(w);
  BoundReport rep;
  rep.m = lang.m();
  rep.n = w.size();
  rep.k = w.alphabet_size();
  rep.r = floor_log(rep.k, rep.n);
  rep.v = (ipow(rep.k, rep.r + 1) - 1) / (rep.k - 1);
  rep.bound = conjugate_sc_bound(rep.n, rep.k);
  rep.sc = state_complexity(lang);
  rep.bound_applicable = true;  // holds for every word length
  rep.equality = rep.sc == rep.bound;
  detail::fill_theorem_fields(rep, lang);

  if (rep.sc > rep.bound)
    throw std::logic_error("verify_conjugate_theorem: bound violated");
  if (rep.equality != is_generalized_de_bruijn(w))
    throw std::logic_error("verify_conjugate_theorem: equality characterization violated");
  return rep;
}

// DOT rendering; the dead state (non-accepting, all transitions to itself)
// can be suppressed the way minimal-automaton figures usually draw it.
inline std::string dfa_to_dot(const Dfa& dfa, bool suppress_dead = true) {
  i64 dead = -1;
  if (suppress_dead) {
    for (i64 s = 0; s < dfa.num_states && dead == -1; ++s) {
      if (dfa.is_accepting(s)) continue;
      bool self_only = true;
      for (i64 a = 0; a < dfa.k && self_only; ++a) self_only = dfa.step(s, static_cast<int>(a)) == s;
      if (self_only) dead = s;
    }
  }
  std::string out = "digraph dfa {\n  rankdir=LR;\n  start [shape=none, label=\"\"];\n";
  for (i64 s = 0; s < dfa.num_states; ++s) {
    if (s == dead) continue;
    out += "  q" + std::to_string(s) +
           (dfa.is_accepting(s) ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  }
  out += "  start -> q" + std::to_string(dfa.initial) + ";\n";
  for (i64 s = 0; s < dfa.num_states; ++s) {
    if (s == dead) continue;
    for (i64 a = 0; a < dfa.k; ++a) {
      const i64 to = dfa.step(s, static_cast<int>(a));
      if (to == dead) continue;
      out += "  q" + std::to_string(s) + " -> q" + std::to_string(to) +
             " [label=\"" + std::to_string(a) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace gdbw
