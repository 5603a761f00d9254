#pragma once

// De Bruijn graphs G_n^k and their edge subgraphs: balance and connectivity
// queries, Eulerian circuits, the circuit <-> cycle correspondence between
// consecutive orders, and spelling walks back into circular words.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdbw/word.hpp"

namespace gdbw {

struct unbalanced_graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct disconnected_graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Identifies G_n^k. Vertices are the k-ary words of length n, encoded in
// base k with the first letter most significant; n = 0 has the single empty
// word as its vertex.
struct DeBruijnGraphId {
  i64 k;
  i64 n;

  DeBruijnGraphId(i64 k_, i64 n_) : k(k_), n(n_) {
    if (k < 2) throw std::invalid_argument("DeBruijnGraphId: k must be >= 2");
    if (n < 0) throw std::invalid_argument("DeBruijnGraphId: n must be >= 0");
    // k^n * k bytes of adjacency storage; keep instantiations at desk scale.
    if (!pow_at_most(k, n + 1, i64{1} << 28))
      throw std::invalid_argument("DeBruijnGraphId: graph too large");
  }

  i64 vertex_count() const { return ipow(k, n); }
  // Edge (v, b) runs from v = a.t to head = t.b.
  i64 head(i64 v, i64 b) const { return n == 0 ? 0 : (v % ipow(k, n - 1)) * k + b; }
  // Tail of the edge into v labeled by v's last letter, given first letter a.
  i64 tail(i64 v, i64 a) const { return n == 0 ? 0 : a * ipow(k, n - 1) + v / k; }

  friend bool operator==(const DeBruijnGraphId&, const DeBruijnGraphId&) = default;
};

struct Edge {
  i64 tail;
  int letter;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Heads of the k outgoing edges of v, in letter order.
inline std::vector<i64> successors(const DeBruijnGraphId& id, i64 v) {
  if (v < 0 || v >= id.vertex_count())
    throw std::out_of_range("successors: vertex out of range");
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(id.k));
  for (i64 b = 0; b < id.k; ++b) out.push_back(id.head(v, b));
  return out;
}

// Tails of the k incoming edges of v, in order of their first letter.
inline std::vector<i64> predecessors(const DeBruijnGraphId& id, i64 v) {
  if (v < 0 || v >= id.vertex_count())
    throw std::out_of_range("predecessors: vertex out of range");
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(id.k));
  for (i64 a = 0; a < id.k; ++a) out.push_back(id.tail(v, a));
  return out;
}

// Vertex rendered as its base-k word, e.g. 4 in G_3^2 -> "100".
inline std::string vertex_name(const DeBruijnGraphId& id, i64 v) {
  if (id.n == 0) return "e";  // empty word
  std::string s(static_cast<std::size_t>(id.n), '0');
  for (i64 i = id.n - 1; i >= 0; --i) {
    i64 d = v % id.k;
    s[i] = d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
    v /= id.k;
  }
  return s;
}

// Edge subset of G_n^k. One presence slot per (vertex, letter) pair; G_n^k is
// simple for n >= 1 and for n = 0 the k loops are distinguished by letter, so
// slots capture every subgraph with no duplicate edges.
class DeBruijnSubgraph {
 public:
  explicit DeBruijnSubgraph(DeBruijnGraphId id)
      : id_(id),
        present_(static_cast<std::size_t>(id.vertex_count() * id.k), 0),
        outdeg_(static_cast<std::size_t>(id.vertex_count()), 0),
        indeg_(static_cast<std::size_t>(id.vertex_count()), 0) {}

  static DeBruijnSubgraph full(DeBruijnGraphId id) {
    DeBruijnSubgraph g(id);
    for (i64 v = 0; v < id.vertex_count(); ++v)
      for (i64 b = 0; b < id.k; ++b) g.add_edge(v, static_cast<int>(b));
    return g;
  }

  const DeBruijnGraphId& id() const { return id_; }
  i64 edge_count() const { return edges_; }

  bool has_edge(i64 v, int b) const { return present_[slot(v, b)] != 0; }

  bool add_edge(i64 v, int b) {
    auto s = slot(v, b);
    if (present_[s]) return false;
    present_[s] = 1;
    ++outdeg_[static_cast<std::size_t>(v)];
    ++indeg_[static_cast<std::size_t>(id_.head(v, b))];
    ++edges_;
    return true;
  }

  bool remove_edge(i64 v, int b) {
    auto s = slot(v, b);
    if (!present_[s]) return false;
    present_[s] = 0;
    --outdeg_[static_cast<std::size_t>(v)];
    --indeg_[static_cast<std::size_t>(id_.head(v, b))];
    --edges_;
    return true;
  }

  i64 out_degree(i64 v) const { return outdeg_[static_cast<std::size_t>(v)]; }
  i64 in_degree(i64 v) const { return indeg_[static_cast<std::size_t>(v)]; }

  // All edges, ascending by (tail, letter).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (i64 v = 0; v < id_.vertex_count(); ++v)
      for (i64 b = 0; b < id_.k; ++b)
        if (has_edge(v, static_cast<int>(b))) out.push_back({v, static_cast<int>(b)});
    return out;
  }

  friend bool operator==(const DeBruijnSubgraph& a, const DeBruijnSubgraph& b) {
    return a.id_ == b.id_ && a.present_ == b.present_;
  }

 private:
  std::size_t slot(i64 v, int b) const {
    if (v < 0 || v >= id_.vertex_count())
      throw std::out_of_range("DeBruijnSubgraph: vertex out of range");
    if (b < 0 || b >= id_.k)
      throw std::out_of_range("DeBruijnSubgraph: letter out of range");
    return static_cast<std::size_t>(v * id_.k + b);
  }

  DeBruijnGraphId id_;
  std::vector<std::uint8_t> present_;
  std::vector<std::int32_t> outdeg_, indeg_;
  i64 edges_ = 0;
};

inline bool is_balanced(const DeBruijnSubgraph& g) {
  for (i64 v = 0; v < g.id().vertex_count(); ++v)
    if (g.in_degree(v) != g.out_degree(v)) return false;
  return true;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Weakly connected components of the vertices with nonzero degree, each
// sorted, ordered by smallest member. For balanced graphs weak and strong
// connectivity coincide on the support.
inline std::vector<std::vector<i64>> edge_components(const DeBruijnSubgraph& g) {
  const i64 nv = g.id().vertex_count();
  detail::UnionFind uf(static_cast<std::size_t>(nv));
  for (i64 v = 0; v < nv; ++v)
    for (i64 b = 0; b < g.id().k; ++b)
      if (g.has_edge(v, static_cast<int>(b)))
        uf.unite(static_cast<std::size_t>(v),
                 static_cast<std::size_t>(g.id().head(v, b)));
  std::vector<std::vector<i64>> comps;
  std::vector<i64> comp_of(static_cast<std::size_t>(nv), -1);
  for (i64 v = 0; v < nv; ++v) {
    if (g.out_degree(v) + g.in_degree(v) == 0) continue;
    const auto root = uf.find(static_cast<std::size_t>(v));
    if (comp_of[root] == -1) {
      comp_of[root] = static_cast<i64>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(comp_of[root])].push_back(v);
  }
  return comps;
}

// Closed edge-distinct walk. Vertices may repeat.
struct Circuit {
  DeBruijnGraphId id;
  std::vector<Edge> edges;
};

// Closed vertex-distinct walk; a loop is a cycle of length 1.
struct Cycle {
  DeBruijnGraphId id;
  std::vector<i64> vertices;
};

inline Circuit make_circuit(DeBruijnGraphId id, std::vector<Edge> edges) {
  if (edges.empty()) throw std::invalid_argument("make_circuit: no edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.tail < 0 || e.tail >= id.vertex_count() || e.letter < 0 || e.letter >= id.k)
      throw std::invalid_argument("make_circuit: edge out of range");
    const Edge& next = edges[(i + 1) % edges.size()];
    if (id.head(e.tail, e.letter) != next.tail)
      throw std::invalid_argument("make_circuit: walk is not closed");
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("make_circuit: repeated edge");
  return Circuit{id, std::move(edges)};
}

inline Cycle make_cycle(DeBruijnGraphId id, std::vector<i64> vertices) {
  if (vertices.empty()) throw std::invalid_argument("make_cycle: no vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const i64 v = vertices[i];
    if (v < 0 || v >= id.vertex_count())
      throw std::invalid_argument("make_cycle: vertex out of range");
    const i64 next = vertices[(i + 1) % vertices.size()];
    // v = a.t must reach next = t.b for some letter b.
    if (id.n >= 1 && id.head(v, next % id.k) != next)
      throw std::invalid_argument("make_cycle: consecutive words do not overlap");
  }
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("make_cycle: repeated vertex");
  if (id.n == 0 && vertices.size() > 1)
    throw std::invalid_argument("make_cycle: repeated vertex");
  return Cycle{id, std::move(vertices)};
}

// Set of vertex-disjoint cycles covering every vertex of G_n^k.
struct Factor {
  DeBruijnGraphId id;
  std::vector<Cycle> cycles;
};

inline Factor make_factor(DeBruijnGraphId id, std::vector<Cycle> cycles) {
  std::vector<char> covered(static_cast<std::size_t>(id.vertex_count()), 0);
  i64 total = 0;
  for (const Cycle& c : cycles) {
    if (!(c.id == id)) throw std::invalid_argument("make_factor: order mismatch");
    for (i64 v : c.vertices) {
      if (covered[static_cast<std::size_t>(v)])
        throw std::invalid_argument("make_factor: cycles are not disjoint");
      covered[static_cast<std::size_t>(v)] = 1;
      ++total;
    }
  }
  if (total != id.vertex_count())
    throw std::invalid_argument("make_factor: cycles do not cover all vertices");
  return Factor{id, std::move(cycles)};
}

// Eulerian circuit of a balanced, connected, nonempty subgraph. Deterministic:
// Hierholzer from the smallest vertex of nonzero degree, consuming unused
// edges in increasing letter order.
inline Circuit eulerian_circuit(const DeBruijnSubgraph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("eulerian_circuit: graph has no edges");
  if (!is_balanced(g))
    throw unbalanced_graph_error("eulerian_circuit: graph is not balanced");
  if (edge_components(g).size() != 1)
    throw disconnected_graph_error("eulerian_circuit: edge support is disconnected");

  const i64 nv = g.id().vertex_count();
  const i64 k = g.id().k;
  i64 start = 0;
  while (g.out_degree(start) == 0) ++start;

  std::vector<int> cursor(static_cast<std::size_t>(nv), 0);
  std::vector<i64> vstack{start};
  std::vector<Edge> estack, out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  while (!vstack.empty()) {
    const i64 v = vstack.back();
    int& b = cursor[static_cast<std::size_t>(v)];
    while (b < k && !g.has_edge(v, b)) ++b;
    if (b < k) {
      estack.push_back({v, b});
      vstack.push_back(g.id().head(v, b));
      ++b;  // each edge is present once, so advancing the cursor consumes it
    } else {
      vstack.pop_back();
      if (!estack.empty()) {
        out.push_back(estack.back());
        estack.pop_back();
      }
    }
  }
  std::reverse(out.begin(), out.end());
  assert(static_cast<i64>(out.size()) == g.edge_count());
  return make_circuit(g.id(), std::move(out));
}

// Edges of G_{n-1}^k correspond to vertices of G_n^k: (a.t, t.b) <-> a.t.b.
// An edge-distinct circuit therefore lifts to a vertex-distinct cycle one
// order up.
inline Cycle lift(const Circuit& c) {
  const DeBruijnGraphId up(c.id.k, c.id.n + 1);
  std::vector<i64> vertices;
  vertices.reserve(c.edges.size());
  for (const Edge& e : c.edges) vertices.push_back(e.tail * c.id.k + e.letter);
  return make_cycle(up, std::move(vertices));
}

namespace detail {

inline CircularWord spell_vertices(const DeBruijnGraphId& id,
                                   const std::vector<i64>& vertices) {
  assert(id.n >= 1);
  const i64 msb = ipow(id.k, id.n - 1);
  std::vector<int> letters;
  letters.reserve(vertices.size());
  for (i64 v : vertices) letters.push_back(static_cast<int>(v / msb));
  return CircularWord(std::move(letters), id.k);
}

}  // namespace detail

// Word spelled by a closed walk: the first letters of the visited vertices.
// Its circular length-n windows are exactly the walk's vertices.
inline CircularWord spell(const Cycle& c) {
  if (c.id.n == 0)
    throw std::invalid_argument("spell: cycles in order 0 carry no letters");
  return detail::spell_vertices(c.id, c.vertices);
}

inline CircularWord spell(const Circuit& c) {
  if (c.id.n == 0) {
    std::vector<int> letters;
    letters.reserve(c.edges.size());
    for (const Edge& e : c.edges) letters.push_back(e.letter);
    return CircularWord(std::move(letters), c.id.k);
  }
  std::vector<i64> tails;
  tails.reserve(c.edges.size());
  for (const Edge& e : c.edges) tails.push_back(e.tail);
  return detail::spell_vertices(c.id, tails);
}

// The label sequence of a circuit; a rotation of spell() on the same circuit.
inline CircularWord edge_label_word(const Circuit& c) {
  std::vector<int> letters;
  letters.reserve(c.edges.size());
  for (const Edge& e : c.edges) letters.push_back(e.letter);
  return CircularWord(std::move(letters), c.id.k);
}

// DOT rendering with vertices shown as base-k words and edges labeled by
// letter.
inline std::string to_dot(const DeBruijnSubgraph& g, std::string_view name = "G") {
  std::string out = "digraph ";
  out += name;
  out += " {\n  rankdir=LR;\n";
  for (i64 v = 0; v < g.id().vertex_count(); ++v)
    out += "  \"" + vertex_name(g.id(), v) + "\";\n";
  for (const Edge& e : g.edges()) {
    out += "  \"" + vertex_name(g.id(), e.tail) + "\" -> \"" +
           vertex_name(g.id(), g.id().head(e.tail, e.letter)) + "\" [label=\"" +
           std::to_string(e.letter) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gdbw
