#pragma once

// Construction of a generalized de Bruijn word of any length N over any
// alphabet of size k >= 2: cycle completion to a 2-factor, Petersen
// 2-factorization of regular subgraphs, component reconnection by edge
// swaps, and the recursive assembly of a connected balanced N-edge subgraph.

#include <stdexcept>
#include <vector>

#include "gdbw/debruijn_graph.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

// Completes a cycle of G_n^k to a factor. For n = 1 the uncovered vertices
// take their loops. For n >= 2 the cycle projects to a circuit in
// G_{n-1}^k; the complement of that circuit's edges is balanced, and the
// Eulerian circuit of each of its components lifts to a cycle covering the
// remaining vertices.
inline Factor complete_to_factor(const Cycle& c) {
  const DeBruijnGraphId id = c.id;
  if (id.n < 1)
    throw std::invalid_argument("complete_to_factor: order must be >= 1");
  std::vector<Cycle> cycles{c};
  if (id.n == 1) {
    std::vector<char> covered(static_cast<std::size_t>(id.k), 0);
    for (i64 v : c.vertices) covered[static_cast<std::size_t>(v)] = 1;
    for (i64 a = 0; a < id.k; ++a)
      if (!covered[static_cast<std::size_t>(a)])
        cycles.push_back(make_cycle(id, {a}));
    return make_factor(id, std::move(cycles));
  }
  const DeBruijnGraphId down(id.k, id.n - 1);
  DeBruijnSubgraph complement = DeBruijnSubgraph::full(down);
  for (i64 v : c.vertices) {
    // vertex a.t.b of G_n <-> edge (a.t, t.b) of G_{n-1}
    const bool removed = complement.remove_edge(v / id.k, static_cast<int>(v % id.k));
    assert(removed);
    (void)removed;
  }
  for (const auto& comp : edge_components(complement)) {
    DeBruijnSubgraph sub(down);
    for (i64 v : comp)
      for (i64 b = 0; b < down.k; ++b)
        if (complement.has_edge(v, static_cast<int>(b)))
          sub.add_edge(v, static_cast<int>(b));
    cycles.push_back(lift(eulerian_circuit(sub)));
  }
  return make_factor(id, std::move(cycles));
}

namespace detail {

// One perfect matching of the tails-vs-heads bipartite view of g, found by
// augmenting paths with vertices scanned in increasing encoding. Returns the
// chosen out-letter per tail. g must be d-regular with d >= 1, which
// guarantees the matching exists.
inline std::vector<int> perfect_out_matching(const DeBruijnSubgraph& g) {
  const i64 nv = g.id().vertex_count();
  const i64 k = g.id().k;
  std::vector<i64> head_match(static_cast<std::size_t>(nv), -1);
  std::vector<int> tail_letter(static_cast<std::size_t>(nv), -1);
  std::vector<char> visited(static_cast<std::size_t>(nv), 0);

  auto augment = [&](auto&& self, i64 v) -> bool {
    for (int b = 0; b < k; ++b) {
      if (!g.has_edge(v, b)) continue;
      const i64 u = g.id().head(v, b);
      if (visited[static_cast<std::size_t>(u)]) continue;
      visited[static_cast<std::size_t>(u)] = 1;
      if (head_match[static_cast<std::size_t>(u)] == -1 ||
          self(self, head_match[static_cast<std::size_t>(u)])) {
        head_match[static_cast<std::size_t>(u)] = v;
        tail_letter[static_cast<std::size_t>(v)] = b;
        return true;
      }
    }
    return false;
  };

  for (i64 v = 0; v < nv; ++v) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, v))
      throw std::logic_error("perfect_out_matching: no augmenting path");
  }
  return tail_letter;
}

// Splits a spanning 1-in/1-out edge set (out-letter per vertex) into its
// vertex-disjoint cycles.
inline Factor factor_from_matching(const DeBruijnGraphId& id,
                                   const std::vector<int>& tail_letter) {
  const i64 nv = id.vertex_count();
  std::vector<char> visited(static_cast<std::size_t>(nv), 0);
  std::vector<Cycle> cycles;
  for (i64 v = 0; v < nv; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    std::vector<i64> vertices;
    i64 cur = v;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      vertices.push_back(cur);
      cur = id.head(cur, tail_letter[static_cast<std::size_t>(cur)]);
    } while (cur != v);
    cycles.push_back(make_cycle(id, std::move(vertices)));
  }
  return make_factor(id, std::move(cycles));
}

}  // namespace detail

// Partitions the edges of a subgraph with indegree = outdegree = d at every
// vertex into d factors, by repeatedly extracting a perfect matching from
// the bipartite out/in view and deleting it.
inline std::vector<Factor> petersen_factorize(const DeBruijnSubgraph& g, i64 d) {
  if (d < 1) throw std::invalid_argument("petersen_factorize: degree must be >= 1");
  for (i64 v = 0; v < g.id().vertex_count(); ++v)
    if (g.out_degree(v) != d || g.in_degree(v) != d)
      throw std::invalid_argument(
          "petersen_factorize: graph is not d-regular in both directions");
  DeBruijnSubgraph remaining = g;
  std::vector<Factor> factors;
  factors.reserve(static_cast<std::size_t>(d));
  for (i64 round = 0; round < d; ++round) {
    const auto tail_letter = detail::perfect_out_matching(remaining);
    factors.push_back(detail::factor_from_matching(g.id(), tail_letter));
    for (i64 v = 0; v < g.id().vertex_count(); ++v)
      remaining.remove_edge(v, tail_letter[static_cast<std::size_t>(v)]);
  }
  assert(remaining.edge_count() == 0);
  return factors;
}

// Turns a balanced subgraph in which every vertex of G_n^k has indegree and
// outdegree at least 1 into a connected one with identical per-vertex
// degrees, by repeated edge swaps: with a.t in one component and t.b in
// another, edges (a.t, t.c) and (d.t, t.b) become (a.t, t.b) and (d.t, t.c).
// Each swap strictly reduces the number of components. Search order is t
// ascending, then a, b, c, d ascending.
inline DeBruijnSubgraph connect_components(DeBruijnSubgraph g) {
  const DeBruijnGraphId id = g.id();
  if (!is_balanced(g))
    throw std::invalid_argument("connect_components: graph is not balanced");
  for (i64 v = 0; v < id.vertex_count(); ++v)
    if (g.out_degree(v) < 1 || g.in_degree(v) < 1)
      throw std::invalid_argument(
          "connect_components: every vertex needs degree at least two");
  if (id.n == 0) return g;

  const i64 overlap_count = ipow(id.k, id.n - 1);
  while (true) {
    const i64 nv = id.vertex_count();
    detail::UnionFind uf(static_cast<std::size_t>(nv));
    for (i64 v = 0; v < nv; ++v)
      for (i64 b = 0; b < id.k; ++b)
        if (g.has_edge(v, static_cast<int>(b)))
          uf.unite(static_cast<std::size_t>(v),
                   static_cast<std::size_t>(id.head(v, b)));
    const auto root0 = uf.find(0);
    bool connected = true;
    for (i64 v = 1; v < nv && connected; ++v)
      connected = uf.find(static_cast<std::size_t>(v)) == root0;
    if (connected) return g;

    bool swapped = false;
    for (i64 t = 0; t < overlap_count && !swapped; ++t) {
      for (i64 a = 0; a < id.k && !swapped; ++a) {
        const i64 at = a * overlap_count + t;
        for (i64 b = 0; b < id.k && !swapped; ++b) {
          const i64 tb = t * id.k + b;
          if (uf.find(static_cast<std::size_t>(at)) ==
              uf.find(static_cast<std::size_t>(tb)))
            continue;
          int c = 0;
          while (!g.has_edge(at, c)) ++c;
          i64 d = 0;
          while (!g.has_edge(d * overlap_count + t, static_cast<int>(b))) ++d;
          const i64 dt = d * overlap_count + t;
          g.remove_edge(at, c);
          g.remove_edge(dt, static_cast<int>(b));
          bool ok = g.add_edge(at, static_cast<int>(b));
          ok = g.add_edge(dt, c) && ok;
          assert(ok);  // cross edges cannot pre-exist between distinct components
          (void)ok;
          swapped = true;
        }
      }
    }
    if (!swapped)
      throw std::logic_error("connect_components: no swap found for a disconnected graph");
  }
}

inline DeBruijnSubgraph construct_subgraph(i64 edge_count, i64 n, i64 k);

// A cycle of length N in G_n^k, 1 <= N <= k^n. Order 1 takes the cycle
// 0 -> 1 -> ... -> N-1 in the clique with loops; higher orders lift the
// Eulerian circuit of the order-(n-1) construction.
inline Cycle construct_cycle(i64 length, i64 n, i64 k) {
  const DeBruijnGraphId id(k, n);
  if (n < 1) throw std::invalid_argument("construct_cycle: order must be >= 1");
  if (length < 1 || length > id.vertex_count())
    throw std::invalid_argument("construct_cycle: length out of range");
  if (n == 1) {
    std::vector<i64> vertices(static_cast<std::size_t>(length));
    for (i64 i = 0; i < length; ++i) vertices[static_cast<std::size_t>(i)] = i;
    return make_cycle(id, std::move(vertices));
  }
  return lift(eulerian_circuit(construct_subgraph(length, n - 1, k)));
}

// Connected balanced subgraph of G_n^k with N edges and min(k^n, N) vertices
// of nonzero degree, 1 <= N <= k^(n+1). For N <= k^n this is a cycle. For
// N = j*k^n + N' the cycle of length N' is completed to a factor, the
// factor's complement is 2-factorized, j of those factors are added, and the
// result is reconnected degree-preservingly.
inline DeBruijnSubgraph construct_subgraph(i64 edge_count, i64 n, i64 k) {
  const DeBruijnGraphId id(k, n);
  if (n < 1) throw std::invalid_argument("construct_subgraph: order must be >= 1");
  const i64 nv = id.vertex_count();
  if (edge_count < 1 || edge_count > nv * k)
    throw std::invalid_argument("construct_subgraph: edge count out of range");

  if (edge_count <= nv) {
    const Cycle c = construct_cycle(edge_count, n, k);
    DeBruijnSubgraph g(id);
    const std::size_t len = c.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const i64 next = c.vertices[(i + 1) % len];
      g.add_edge(c.vertices[i], static_cast<int>(next % k));
    }
    return g;
  }

  const i64 j = (edge_count - 1) / nv;  // N = j*k^n + N', 0 < N' <= k^n
  const i64 rest = edge_count - j * nv;
  const Cycle c = construct_cycle(rest, n, k);
  const Factor completed = complete_to_factor(c);

  DeBruijnSubgraph complement = DeBruijnSubgraph::full(id);
  for (const Cycle& cyc : completed.cycles) {
    const std::size_t len = cyc.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const i64 next = cyc.vertices[(i + 1) % len];
      complement.remove_edge(cyc.vertices[i], static_cast<int>(next % k));
    }
  }
  const std::vector<Factor> factors = petersen_factorize(complement, k - 1);

  DeBruijnSubgraph merged(id);
  {
    const std::size_t len = c.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const i64 next = c.vertices[(i + 1) % len];
      merged.add_edge(c.vertices[i], static_cast<int>(next % k));
    }
  }
  for (i64 f = 0; f < j; ++f) {
    for (const Cycle& cyc : factors[static_cast<std::size_t>(f)].cycles) {
      const std::size_t len = cyc.vertices.size();
      for (std::size_t i = 0; i < len; ++i) {
        const i64 next = cyc.vertices[(i + 1) % len];
        const bool added = merged.add_edge(cyc.vertices[i], static_cast<int>(next % k));
        assert(added);
        (void)added;
      }
    }
  }
  assert(merged.edge_count() == edge_count);
  return connect_components(std::move(merged));
}

// A generalized de Bruijn word of length N over k letters. Deterministic for
// fixed (N, k). For N < k the word 01...(N-1) already has all gamma values
// maximal; otherwise the word is spelled off the Eulerian circuit of the
// constructed subgraph of order r = floor(log_k N).
inline CircularWord generate(i64 n, i64 k) {
  if (k < 2) throw std::invalid_argument("generate: k must be >= 2");
  if (n < 1) throw std::invalid_argument("generate: N must be >= 1");
  const i64 r = floor_log(k, n);
  if (r == 0) {
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = static_cast<int>(i);
    return CircularWord(std::move(letters), k);
  }
  return spell(eulerian_circuit(construct_subgraph(n, r, k)));
}

}  // namespace gdbw
