#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gdbw/debruijn_graph.hpp"
#include "helpers.hpp"

using namespace gdbw;

namespace {

// Edge set of the closed walk spelled by a word: windows of length n become
// vertices, consecutive windows become edges.
DeBruijnSubgraph circuit_graph_of_word(const CircularWord& w, i64 order) {
  const DeBruijnGraphId id(w.alphabet_size(), order);
  DeBruijnSubgraph g(id);
  const i64 n = w.size();
  for (i64 j = 0; j < n; ++j) {
    i64 v = 0;
    for (i64 t = 0; t < order; ++t) v = v * id.k + w[(j + t) % n];
    g.add_edge(v, w[(j + order) % n]);
  }
  return g;
}

}  // namespace

TEST_CASE("vertex encoding and neighborhoods", "[graph]") {
  const DeBruijnGraphId id(2, 3);
  CHECK(id.vertex_count() == 8);
  CHECK(vertex_name(id, 4) == "100");
  CHECK(successors(id, 4) == std::vector<i64>{0, 1});  // 100 -> 000, 001
  CHECK(predecessors(id, 1) == std::vector<i64>{0, 4});

  const DeBruijnGraphId clique(2, 1);
  CHECK(successors(clique, 0) == std::vector<i64>{0, 1});

  const DeBruijnGraphId point(2, 0);
  CHECK(point.vertex_count() == 1);
  CHECK(successors(point, 0) == std::vector<i64>{0, 0});  // both loops

  CHECK_THROWS_AS(successors(id, 8), std::out_of_range);
  CHECK_THROWS_AS(DeBruijnGraphId(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DeBruijnGraphId(2, -1), std::invalid_argument);
}

TEST_CASE("successors and predecessors are mutually consistent", "[graph]") {
  for (i64 k = 2; k <= 3; ++k) {
    for (i64 n = 1; n <= 3; ++n) {
      const DeBruijnGraphId id(k, n);
      for (i64 v = 0; v < id.vertex_count(); ++v) {
        for (i64 u : successors(id, v)) {
          const auto preds = predecessors(id, u);
          REQUIRE(std::count(preds.begin(), preds.end(), v) == 1);
        }
      }
    }
  }
}

TEST_CASE("subgraph edge bookkeeping", "[graph]") {
  DeBruijnSubgraph g{DeBruijnGraphId(2, 2)};
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(0, 1));  // no parallel edges
  CHECK(g.edge_count() == 1);
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_degree(1) == 1);
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.add_edge(4, 0), std::out_of_range);
}

TEST_CASE("balance and components", "[graph]") {
  const auto full = DeBruijnSubgraph::full(DeBruijnGraphId(2, 3));
  CHECK(is_balanced(full));
  CHECK(edge_components(full).size() == 1);

  // the 11-edge circuit of the word 10011110000 in G_3^2
  const auto fig = circuit_graph_of_word(parse_word("10011110000", 2), 3);
  CHECK(fig.edge_count() == 11);
  CHECK(is_balanced(fig));
  CHECK(edge_components(fig).size() == 1);

  DeBruijnSubgraph loops{DeBruijnGraphId(2, 1)};
  loops.add_edge(0, 0);
  loops.add_edge(1, 1);
  CHECK(is_balanced(loops));
  CHECK(edge_components(loops) == std::vector<std::vector<i64>>{{0}, {1}});
}

TEST_CASE("eulerian circuit of the full order-1 graph", "[graph]") {
  const auto g = DeBruijnSubgraph::full(DeBruijnGraphId(2, 1));
  const Circuit c = eulerian_circuit(g);
  REQUIRE(c.edges.size() == 4);
  CHECK(to_string(canonical_rotation(spell(c))) == "0011");

  // Independent check: every permutation of the four edges that chains up
  // into a closed circuit spells a rotation of 0011.
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  int circuits = 0;
  do {
    bool closed = true;
    for (std::size_t i = 0; i < edges.size() && closed; ++i)
      closed = g.id().head(edges[i].tail, edges[i].letter) ==
               edges[(i + 1) % edges.size()].tail;
    if (!closed) continue;
    ++circuits;
    const Circuit perm = make_circuit(g.id(), edges);
    REQUIRE(to_string(canonical_rotation(spell(perm))) == "0011");
  } while (std::next_permutation(edges.begin(), edges.end()));
  CHECK(circuits > 0);
}

TEST_CASE("eulerian circuit edge cases and errors", "[graph]") {
  DeBruijnSubgraph loop{DeBruijnGraphId(2, 1)};
  loop.add_edge(0, 0);
  const Circuit c = eulerian_circuit(loop);
  CHECK(c.edges == std::vector<Edge>{{0, 0}});
  CHECK(to_string(spell(c)) == "0");

  DeBruijnSubgraph empty{DeBruijnGraphId(2, 1)};
  CHECK_THROWS_AS(eulerian_circuit(empty), std::invalid_argument);

  DeBruijnSubgraph unbalanced{DeBruijnGraphId(2, 2)};
  unbalanced.add_edge(0, 1);
  CHECK_THROWS_AS(eulerian_circuit(unbalanced), unbalanced_graph_error);

  DeBruijnSubgraph split{DeBruijnGraphId(2, 1)};
  split.add_edge(0, 0);
  split.add_edge(1, 1);
  CHECK_THROWS_AS(eulerian_circuit(split), disconnected_graph_error);
}

TEST_CASE("eulerian circuit covers each edge once", "[graph]") {
  for (i64 k = 2; k <= 3; ++k) {
    for (i64 n = 1; n <= 3; ++n) {
      const auto g = DeBruijnSubgraph::full(DeBruijnGraphId(k, n));
      const Circuit c = eulerian_circuit(g);  // make_circuit validates chaining
      REQUIRE(static_cast<i64>(c.edges.size()) == g.edge_count());
      auto edges = c.edges;
      std::sort(edges.begin(), edges.end());
      REQUIRE(edges == g.edges());
    }
  }
}

TEST_CASE("eulerian circuit of the 11-edge circuit graph", "[graph]") {
  const CircularWord w = parse_word("10011110000", 2);
  const auto g = circuit_graph_of_word(w, 3);
  const Circuit c = eulerian_circuit(g);
  CHECK(canonical_rotation(spell(c)) == canonical_rotation(w));
}

TEST_CASE("lift and spell", "[graph]") {
  const DeBruijnGraphId id(2, 1);
  const Circuit c =
      make_circuit(id, {Edge{0, 0}, Edge{0, 1}, Edge{1, 1}, Edge{1, 0}});
  const Cycle lifted = lift(c);
  CHECK(lifted.id.n == 2);
  CHECK(lifted.vertices == std::vector<i64>{0, 1, 3, 2});  // 00 01 11 10
  CHECK(to_string(spell(lifted)) == "0011");

  const Cycle loop = make_cycle(id, {0});
  CHECK(to_string(spell(loop)) == "0");
}

TEST_CASE("spell of a lifted circuit is a rotation of its label word", "[graph]") {
  for (i64 k = 2; k <= 3; ++k) {
    for (i64 n = 1; n <= 3; ++n) {
      const auto g = DeBruijnSubgraph::full(DeBruijnGraphId(k, n));
      const Circuit c = eulerian_circuit(g);
      CHECK(canonical_rotation(spell(lift(c))) ==
            canonical_rotation(edge_label_word(c)));
      CHECK(canonical_rotation(spell(c)) ==
            canonical_rotation(edge_label_word(c)));
    }
  }
}

TEST_CASE("spelled eulerian words hit the gamma bounds", "[graph]") {
  // Any Eulerian subgraph whose support is all of G_n^k spells a word with
  // gamma_n = k^n and gamma_{n+1} = edge count.
  for (i64 k = 2; k <= 3; ++k) {
    for (i64 n = 1; n <= 3; ++n) {
      const auto g = DeBruijnSubgraph::full(DeBruijnGraphId(k, n));
      const CircularWord w = spell(eulerian_circuit(g));
      REQUIRE(gamma(w, n) == ipow(k, n));
      REQUIRE(gamma(w, n + 1) == g.edge_count());
    }
  }
}

TEST_CASE("walk validation", "[graph]") {
  const DeBruijnGraphId id(2, 2);
  CHECK_THROWS_AS(make_circuit(id, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_circuit(id, {Edge{0, 1}}), std::invalid_argument);  // open
  CHECK_THROWS_AS(make_cycle(id, {0, 1, 0, 2}), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(make_cycle(id, {0, 3}), std::invalid_argument);  // no overlap
  CHECK_NOTHROW(make_cycle(id, {1, 2}));  // 01 -> 10 -> 01
}

TEST_CASE("dot export", "[graph]") {
  const auto g = DeBruijnSubgraph::full(DeBruijnGraphId(2, 3));
  const std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"100\" -> \"000\" [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("\"100\" -> \"001\" [label=\"1\"]") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 16);
}
