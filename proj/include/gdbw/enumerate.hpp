#pragma once

// Exhaustive search engines: counting and listing generalized de Bruijn
// words by pruned necklace generation, the exact count at N = k^n, and the
// maximum state complexity of conjugate sets over all length-N words.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdbw/automaton.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

using BigInt = boost::multiprecision::cpp_int;

struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

enum class SearchStatus { complete, node_limit_reached, time_limit_reached };

namespace detail {

// Shared abort control for sharded searches. Workers flush node counts in
// batches; a completed run is unaffected by the sharding, so merged results
// are deterministic.
struct RunControl {
  explicit RunControl(Budget b)
      : budget(b), start(std::chrono::steady_clock::now()) {}

  Budget budget;
  std::chrono::steady_clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> stop{0};  // 0 = run, 1 = node limit, 2 = time limit

  bool stopped() const { return stop.load(std::memory_order_relaxed) != 0; }

  bool charge(std::uint64_t batch) {
    const auto total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (total > budget.max_nodes) {
      int expected = 0;
      stop.compare_exchange_strong(expected, 1);
      return false;
    }
    if (budget.max_seconds != std::numeric_limits<double>::infinity()) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (elapsed.count() > budget.max_seconds) {
        int expected = 0;
        stop.compare_exchange_strong(expected, 2);
        return false;
      }
    }
    return true;
  }

  SearchStatus status() const {
    switch (stop.load()) {
      case 1: return SearchStatus::node_limit_reached;
      case 2: return SearchStatus::time_limit_reached;
      default: return SearchStatus::complete;
    }
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Leaf test used on top of the window pruning: the DFS already guarantees
// that the N - r non-wrapping (r+1)-windows are distinct, so only the r
// wrapping windows and the gamma_r = k^r condition remain to be checked.
struct GdbLeafCheck {
  i64 n, k, r, wmod, rmod;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<i64> wrap_codes;

  GdbLeafCheck(i64 n_, i64 k_, i64 r_)
      : n(n_), k(k_), r(r_), wmod(ipow(k_, r_ + 1)), rmod(ipow(k_, r_)),
        stamp(static_cast<std::size_t>(rmod), 0) {
    wrap_codes.reserve(static_cast<std::size_t>(r));
  }

  // a is 1-indexed (a[1..n]); seen holds the non-wrap window marks.
  bool is_gdb(const std::vector<int>& a, std::vector<std::uint8_t>& seen) {
    wrap_codes.clear();
    bool distinct = true;
    for (i64 s = n - r; s < n && distinct; ++s) {
      i64 code = 0;
      for (i64 t = 0; t <= r; ++t) code = code * k + a[1 + (s + t) % n];
      if (seen[static_cast<std::size_t>(code)]) {
        distinct = false;
      } else {
        seen[static_cast<std::size_t>(code)] = 1;
        wrap_codes.push_back(code);
      }
    }
    for (i64 code : wrap_codes) seen[static_cast<std::size_t>(code)] = 0;
    if (!distinct) return false;
    if (r == 0) return true;
    ++epoch;
    i64 found = 0;
    i64 code = 0;
    const i64 lead = rmod / k;
    for (i64 t = 0; t < r; ++t) code = code * k + a[1 + t];
    for (i64 s = 0; s < n; ++s) {
      auto& st = stamp[static_cast<std::size_t>(code)];
      if (st != epoch) {
        st = epoch;
        ++found;
      }
      code = (code - a[1 + s] * lead) * k + a[1 + (s + r) % n];
    }
    return found == rmod;
  }
};

struct Task {
  std::vector<int> prefix;  // a[1..len]
  i64 period;
};

// Necklace generation in lexicographic order (the classic recursive scheme
// over pre-necklaces), optionally pruned so that no completed non-wrapping
// (r+1)-window ever repeats. Each visited leaf with n mod p == 0 is the
// least rotation of its class.
template <typename Leaf>
class NecklaceDfs {
 public:
  NecklaceDfs(i64 n, i64 k, bool prune, RunControl& ctl, Leaf& leaf)
      : n_(n), k_(k), prune_(prune), r_(floor_log(k, n)),
        wmod_(ipow(k, r_ + 1)), ctl_(&ctl), leaf_(&leaf),
        a_(static_cast<std::size_t>(n) + 1, 0) {
    if (prune_) seen_.assign(static_cast<std::size_t>(wmod_), 0);
  }

  void run_root() { gen(1, 1, 0); flush(); }

  void run_task(const Task& task) {
    const i64 len = static_cast<i64>(task.prefix.size());
    i64 code = 0;
    for (i64 t = 1; t <= len; ++t) {
      a_[static_cast<std::size_t>(t)] = task.prefix[static_cast<std::size_t>(t - 1)];
      if (prune_) {
        code = (code * k_ + a_[static_cast<std::size_t>(t)]) % wmod_;
        if (t >= r_ + 1) seen_[static_cast<std::size_t>(code)] = 1;
      }
    }
    gen(len + 1, task.period, code);
    flush();
  }

  // Walks the same tree but stops at the given prefix length, recording the
  // frontier; the visited subtrees partition the full search.
  static std::vector<Task> collect_tasks(i64 n, i64 k, bool prune, i64 len) {
    struct Collector {
      std::vector<Task>* out;
      i64 len;
    };
    std::vector<Task> tasks;
    RunControl ctl{Budget{}};
    struct NoLeaf {
      bool leaf(const std::vector<int>&, i64, std::vector<std::uint8_t>&) {
        return true;
      }
    } no_leaf;
    NecklaceDfs<NoLeaf> walker(n, k, prune, ctl, no_leaf);
    walker.capture_len_ = len;
    walker.tasks_ = &tasks;
    walker.run_root();
    return tasks;
  }

 private:
  void flush() {
    if (local_nodes_) {
      ctl_->charge(local_nodes_);
      local_nodes_ = 0;
    }
  }

  void gen(i64 t, i64 p, i64 code) {
    if (++local_nodes_ >= 4096) {
      if (!ctl_->charge(local_nodes_)) {
        local_nodes_ = 0;
        return;
      }
      local_nodes_ = 0;
    }
    if (ctl_->stopped()) return;
    if (t > n_) {
      if (n_ % p == 0) {
        if (!leaf_->leaf(a_, p, seen_)) ctl_->stop.store(3);  // caller-requested halt
      }
      return;
    }
    if (tasks_ && t == capture_len_ + 1) {
      tasks_->push_back(Task{std::vector<int>(a_.begin() + 1, a_.begin() + t), p});
      return;
    }
    const int forced = a_[static_cast<std::size_t>(t - p)];
    for (int j = forced; j < static_cast<int>(k_); ++j) {
      a_[static_cast<std::size_t>(t)] = j;
      const i64 p2 = (j == forced) ? p : t;
      if (prune_) {
        const i64 c2 = (code * k_ + j) % wmod_;
        if (t >= r_ + 1) {
          auto& mark = seen_[static_cast<std::size_t>(c2)];
          if (mark) continue;
          mark = 1;
          gen(t + 1, p2, c2);
          mark = 0;
        } else {
          gen(t + 1, p2, c2);
        }
      } else {
        gen(t + 1, p2, 0);
      }
      if (ctl_->stopped()) return;
    }
  }

  i64 n_, k_;
  bool prune_;
  i64 r_, wmod_;
  RunControl* ctl_;
  Leaf* leaf_;
  std::vector<int> a_;
  std::vector<std::uint8_t> seen_;
  std::uint64_t local_nodes_ = 0;
  i64 capture_len_ = -2;
  std::vector<Task>* tasks_ = nullptr;

  template <typename L>
  friend class NecklaceDfs;
};

inline i64 task_split_length(i64 n, i64 k) {
  i64 len = 0, leaves = 1;
  while (len < n - 1 && leaves < 512) {
    ++len;
    leaves *= k;
  }
  return len;
}

// Runs one visitor per shard over a deterministic task decomposition and
// hands the per-task visitors to the caller in task order.
template <typename VisitorFactory, typename MergeFn>
void run_sharded(i64 n, i64 k, bool prune, int jobs, RunControl& ctl,
                 VisitorFactory&& make_visitor, MergeFn&& merge) {
  using Visitor = decltype(make_visitor());
  if (jobs <= 1 || n <= 2) {
    Visitor v = make_visitor();
    NecklaceDfs<Visitor> dfs(n, k, prune, ctl, v);
    dfs.run_root();
    merge(v);
    return;
  }
  struct NoLeafTag {};
  const i64 len = task_split_length(n, k);
  std::vector<Task> tasks = NecklaceDfs<NoLeafTag>::collect_tasks(n, k, prune, len);
  std::vector<std::optional<Visitor>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      Visitor v = make_visitor();
      NecklaceDfs<Visitor> dfs(n, k, prune, ctl, v);
      dfs.run_task(tasks[i]);
      results[i].emplace(std::move(v));
    }
  };
  std::vector<std::thread> pool;
  const int thread_count = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& v : results) merge(*v);
}

}  // namespace detail

struct CountResult {
  i64 n = 0;
  i64 k = 0;
  std::uint64_t count = 0;  // rotation classes; letter exchange not quotiented
  std::optional<CircularWord> least;
  std::uint64_t nodes = 0;
  double seconds = 0;
  SearchStatus status = SearchStatus::complete;
};

namespace detail {

struct CountVisitor {
  GdbLeafCheck check;
  std::uint64_t count = 0;
  std::optional<std::vector<int>> least;

  CountVisitor(i64 n, i64 k) : check(n, k, floor_log(k, n)) {}

  bool leaf(const std::vector<int>& a, i64, std::vector<std::uint8_t>& seen) {
    if (check.is_gdb(a, seen)) {
      ++count;
      if (!least) least.emplace(a.begin() + 1, a.end());
    }
    return true;
  }
};

}  // namespace detail

// Number of generalized de Bruijn words of length N over k letters, counted
// up to rotation, together with the lexicographically least one. Exceeding
// the budget yields a flagged partial result, never a silently wrong count.
inline CountResult count_gdb(i64 n, i64 k, Budget budget = {}, int jobs = 1) {
  if (n < 1 || k < 2) throw std::invalid_argument("count_gdb: bad arguments");
  detail::RunControl ctl(budget);
  CountResult out;
  out.n = n;
  out.k = k;
  detail::run_sharded(
      n, k, /*prune=*/true, jobs, ctl,
      [&] { return detail::CountVisitor(n, k); },
      [&](const detail::CountVisitor& v) {
        out.count += v.count;
        if (!out.least && v.least) out.least = CircularWord(*v.least, k);
      });
  out.nodes = ctl.nodes.load();
  out.seconds = ctl.elapsed_seconds();
  out.status = ctl.status();
  return out;
}

struct ListResult {
  i64 n = 0;
  i64 k = 0;
  std::vector<CircularWord> words;  // canonical rotations, lexicographic order
  bool truncated = false;           // hit the requested limit
  std::uint64_t nodes = 0;
  double seconds = 0;
  SearchStatus status = SearchStatus::complete;
};

namespace detail {

struct ListVisitor {
  GdbLeafCheck check;
  std::size_t limit;  // 0 = unlimited
  bool packed;
  std::vector<std::uint64_t> packed_words;
  std::vector<std::vector<int>> plain_words;

  ListVisitor(i64 n, i64 k, std::size_t limit_)
      : check(n, k, floor_log(k, n)), limit(limit_), packed(k == 2 && n <= 64) {}

  std::size_t size() const {
    return packed ? packed_words.size() : plain_words.size();
  }

  bool leaf(const std::vector<int>& a, i64, std::vector<std::uint8_t>& seen) {
    if (!check.is_gdb(a, seen)) return true;
    if (packed) {
      std::uint64_t bits = 0;
      for (i64 i = 0; i < check.n; ++i)
        if (a[static_cast<std::size_t>(i) + 1]) bits |= std::uint64_t{1} << i;
      packed_words.push_back(bits);
    } else {
      plain_words.emplace_back(a.begin() + 1, a.end());
    }
    return limit == 0 || size() < limit;
  }
};

}  // namespace detail

// The generalized de Bruijn words of length N over k letters, one canonical
// rotation per class, in lexicographic order, truncated at `limit` if given.
inline ListResult list_gdb(i64 n, i64 k, std::size_t limit = 0, Budget budget = {},
                           int jobs = 1) {
  if (n < 1 || k < 2) throw std::invalid_argument("list_gdb: bad arguments");
  detail::RunControl ctl(budget);
  ListResult out;
  out.n = n;
  out.k = k;
  detail::run_sharded(
      n, k, /*prune=*/true, jobs, ctl,
      [&] { return detail::ListVisitor(n, k, limit); },
      [&](const detail::ListVisitor& v) {
        if (v.packed) {
          for (std::uint64_t bits : v.packed_words)
            out.words.push_back(unpack_bits(bits, n));
        } else {
          for (const auto& w : v.plain_words) out.words.push_back(CircularWord(w, k));
        }
      });
  if (limit > 0 && out.words.size() >= limit) {
    out.words.erase(out.words.begin() + static_cast<std::ptrdiff_t>(limit),
                    out.words.end());
    out.truncated = true;
  }
  out.nodes = ctl.nodes.load();
  out.seconds = ctl.elapsed_seconds();
  out.status = ctl.status();
  return out;
}

// Exact number of (ordinary) de Bruijn words of length k^n, up to rotation:
// (k!)^(k^(n-1)) / k^n.
inline BigInt debruijn_count_formula(i64 n, i64 k) {
  if (n < 1 || k < 2)
    throw std::invalid_argument("debruijn_count_formula: bad arguments");
  if (!pow_at_most(k, n - 1, i64{1} << 20))
    throw std::invalid_argument("debruijn_count_formula: exponent too large");
  BigInt factorial = 1;
  for (i64 i = 2; i <= k; ++i) factorial *= i;
  BigInt numerator = boost::multiprecision::pow(
      factorial, static_cast<unsigned>(ipow(k, n - 1)));
  const BigInt denominator = boost::multiprecision::pow(
      BigInt(k), static_cast<unsigned>(n));
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("debruijn_count_formula: non-integral result");
  return quotient;
}

// Canonical form of a word up to rotation and letter exchange: relabel each
// rotation by first occurrence and take the lexicographic minimum. The
// greedy relabeling realizes the best letter permutation for any fixed
// rotation.
inline CircularWord exchange_rotation_canonical(const CircularWord& w) {
  const i64 n = w.size();
  const i64 k = w.alphabet_size();
  std::vector<int> best;
  std::vector<int> relabeled(static_cast<std::size_t>(n));
  std::vector<int> map(static_cast<std::size_t>(k));
  for (i64 j = 0; j < n; ++j) {
    std::fill(map.begin(), map.end(), -1);
    int next = 0;
    for (i64 i = 0; i < n; ++i) {
      const int a = w[(i + j) % n];
      if (map[static_cast<std::size_t>(a)] == -1)
        map[static_cast<std::size_t>(a)] = next++;
      relabeled[static_cast<std::size_t>(i)] = map[static_cast<std::size_t>(a)];
    }
    if (best.empty() || relabeled < best) best = relabeled;
  }
  return CircularWord(std::move(best), k);
}

struct MaxScResult {
  i64 n = 0;
  i64 k = 0;
  i64 max_sc = 0;
  std::vector<CircularWord> words;  // maximizers up to rotation and exchange
  std::uint64_t nodes = 0;
  double seconds = 0;
  SearchStatus status = SearchStatus::complete;
};

namespace detail {

struct MaxScVisitor {
  i64 n, k;
  i64 best = 0;
  std::vector<std::vector<int>> argmax;

  MaxScVisitor(i64 n_, i64 k_) : n(n_), k(k_) {}

  bool leaf(const std::vector<int>& a, i64, std::vector<std::uint8_t>&) {
    const CircularWord w(std::vector<int>(a.begin() + 1, a.end()), k);
    const i64 sc = state_complexity(UniformLanguage::conjugates_of(w));
    if (sc > best) {
      best = sc;
      argmax.clear();
    }
    if (sc == best) argmax.push_back(w.letters());
    return true;
  }
};

}  // namespace detail

// Maximum of sc(C(w)) over all w of length N, with the maximizing words
// normalized up to rotation and letter exchange. Enumerates one word per
// rotation class; sc(C(w)) is rotation-invariant because C(w) is.
inline MaxScResult max_sc_search(i64 n, i64 k, Budget budget = {}, int jobs = 1) {
  if (n < 1 || k < 2) throw std::invalid_argument("max_sc_search: bad arguments");
  detail::RunControl ctl(budget);
  MaxScResult out;
  out.n = n;
  out.k = k;
  std::vector<std::vector<int>> argmax;
  detail::run_sharded(
      n, k, /*prune=*/false, jobs, ctl,
      [&] { return detail::MaxScVisitor(n, k); },
      [&](const detail::MaxScVisitor& v) {
        if (v.best > out.max_sc) {
          out.max_sc = v.best;
          argmax.clear();
        }
        if (v.best == out.max_sc)
          argmax.insert(argmax.end(), v.argmax.begin(), v.argmax.end());
      });
  std::vector<CircularWord> canon;
  for (const auto& letters : argmax)
    canon.push_back(exchange_rotation_canonical(CircularWord(letters, k)));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  out.words = std::move(canon);
  out.nodes = ctl.nodes.load();
  out.seconds = ctl.elapsed_seconds();
  out.status = ctl.status();
  return out;
}

struct TernarySpotReport {
  CountResult length8, length9, length10;
  bool ok = false;
};

// Known ternary counts: 36 words of length 8, 24 of length 9 (the ordinary
// de Bruijn case), 108 of length 10.
inline TernarySpotReport ternary_spot_checks(Budget budget = {}, int jobs = 1) {
  TernarySpotReport rep;
  rep.length8 = count_gdb(8, 3, budget, jobs);
  rep.length9 = count_gdb(9, 3, budget, jobs);
  rep.length10 = count_gdb(10, 3, budget, jobs);
  rep.ok = rep.length8.status == SearchStatus::complete && rep.length8.count == 36 &&
           rep.length9.status == SearchStatus::complete && rep.length9.count == 24 &&
           rep.length10.status == SearchStatus::complete && rep.length10.count == 108;
  return rep;
}

}  // namespace gdbw
