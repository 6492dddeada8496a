#include <doctest.h>

#include "support/fixtures.hpp"
#include "transversals/core.hpp"
#include "transversals/errors.hpp"

using namespace transversals;

TEST_CASE("graph stores sorted, deduplicated adjacency") {
  const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 0}, {3, 2}};
  Graph g(4, edges);
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2});
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 1);
  const std::vector<Edge> bad{{0, 4}};
  CHECK_THROWS_AS(Graph(4, bad), std::out_of_range);
}

TEST_CASE("relabel and induce") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  Graph g(3, edges);
  const std::vector<Vertex> perm{2, 0, 1};
  Graph r = g.relabeled(perm);
  CHECK(r.has_edge(2, 0));
  CHECK(r.has_edge(0, 1));
  const std::vector<Vertex> keep{1, 2};
  Graph h = g.induced(keep);
  CHECK(h.num_vertices() == 2);
  CHECK(h.has_edge(0, 1));
}

TEST_CASE("validate_family") {
  SUBCASE("K4 with four copies of K4 is valid") { CHECK(validate_family(fixtures::k4_all_equal()).ok()); }
  SUBCASE("wrong subgraph count") {
    const auto k4 = fixtures::complete_edges(4);
    auto f = SubgraphFamily::from_edge_lists(4, FamilyKind::hamiltonian, {k4, k4, k4});
    auto rep = validate_family(f);
    REQUIRE(rep.has(ViolationKind::subgraph_count));
    CHECK(rep.summary().find("subgraph count 3 ≠ 4") != std::string::npos);
  }
  SUBCASE("subgraph edge missing from base names the edge") {
    auto f = fixtures::k4_all_equal();
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    f.base = Graph(4, path);
    auto rep = validate_family(f);
    REQUIRE(rep.has(ViolationKind::edge_not_in_base));
    CHECK(rep.summary().find("(0,2)") != std::string::npos);
  }
  SUBCASE("matching family with odd vertex count") {
    SubgraphFamily f = SubgraphFamily::from_edge_lists(3, FamilyKind::matching, {{Edge::of(0, 1)}});
    CHECK(validate_family(f).has(ViolationKind::odd_vertex_count));
  }
  SUBCASE("loops are reported") {
    SubgraphFamily f = SubgraphFamily::from_edge_lists(3, FamilyKind::hamiltonian,
                                                       {{Edge::of(1, 1)}, {Edge::of(0, 1)}, {Edge::of(1, 2)}});
    CHECK(validate_family(f).has(ViolationKind::loop));
  }
}

TEST_CASE("validate_transversal") {
  // 4-cycle, G_i = {(i, i+1)} plus a chord so colors can be shuffled
  std::vector<std::vector<Edge>> g(4);
  for (Vertex i = 0; i < 4; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, (i + 1) % 4));
  g[0].push_back(Edge::of(1, 2));
  auto f = SubgraphFamily::from_edge_lists(4, FamilyKind::hamiltonian, g);

  CHECK(validate_transversal(f, canonical_cycle(4)).ok());

  SUBCASE("colors not injective") {
    Transversal t = canonical_cycle(4);
    t.edges[1].color = 0;  // edge (1,2)
    auto rep = validate_transversal(f, t);
    CHECK(rep.has(ViolationKind::colors_not_injective));
    CHECK(rep.summary().find("colors not injective") != std::string::npos);
  }
  SUBCASE("edge outside its subgraph") {
    Transversal t = canonical_cycle(4);
    std::swap(t.edges[2].color, t.edges[3].color);
    CHECK(validate_transversal(f, t).has(ViolationKind::edge_not_in_subgraph));
  }
  SUBCASE("not a Hamiltonian cycle") {
    auto k5 = fixtures::complete_edges(5);
    auto f5 = SubgraphFamily::from_edge_lists(5, FamilyKind::hamiltonian, {k5, k5, k5, k5, k5});
    Transversal t;
    t.kind = TransversalKind::cycle;
    // triangle + a doubled-up pair is not a spanning cycle
    t.edges = {{Edge::of(0, 1), 0}, {Edge::of(1, 2), 1}, {Edge::of(0, 2), 2}, {Edge::of(3, 4), 3}, {Edge::of(2, 3), 4}};
    CHECK(validate_transversal(f5, t).has(ViolationKind::not_hamiltonian_cycle));
  }
  SUBCASE("matching with a shared vertex") {
    const auto k4 = fixtures::complete_edges(4);
    auto fm = SubgraphFamily::from_edge_lists(4, FamilyKind::matching, {k4, k4});
    Transversal t;
    t.kind = TransversalKind::matching;
    t.edges = {{Edge::of(0, 1), 0}, {Edge::of(1, 2), 1}};
    auto rep = validate_transversal(fm, t);
    CHECK(rep.has(ViolationKind::not_a_matching));
    CHECK(rep.summary().find("not a matching") != std::string::npos);
  }
  SUBCASE("wrong kind") {
    CHECK(validate_transversal(f, canonical_matching(2)).has(ViolationKind::wrong_kind));
  }
}

TEST_CASE("transversal identity includes colors") {
  Transversal a = canonical_cycle(4);
  Transversal b = a;
  std::reverse(b.edges.begin(), b.edges.end());
  CHECK(a == b);
  b.edges[0].color = 5;
  CHECK_FALSE(a == b);
  std::vector<Transversal> v{a, a, b};
  sort_unique(v);
  CHECK(v.size() == 2);
}

TEST_CASE("naturally_index") {
  SUBCASE("canonical input gives identity permutations") {
    auto f = fixtures::k4_all_equal();
    auto inst = naturally_index(f, canonical_cycle(4));
    CHECK(inst.indexing.is_identity());
    CHECK(inst.transversal == canonical_cycle(4));
  }
  SUBCASE("rotated cycle with shifted colors") {
    const int n = 6;
    std::vector<std::vector<Edge>> g(n);
    // cycle 2,3,4,5,0,1 where edge (2+k, 3+k) has color k
    Transversal t;
    t.kind = TransversalKind::cycle;
    for (int k = 0; k < n; ++k) {
      Edge e = Edge::of((2 + k) % n, (3 + k) % n);
      g[static_cast<std::size_t>(k)].push_back(e);
      t.edges.push_back({e, k});
    }
    g[1].push_back(Edge::of(0, 3));
    auto f = SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, g);
    auto inst = naturally_index(f, t);
    CHECK(inst.transversal == canonical_cycle(n));
    CHECK(is_naturally_indexed(inst.family, inst.transversal));
    CHECK(validate_transversal(inst.family, inst.transversal).ok());
    CHECK(inst.indexing.map_vertex(2) == 0);
    // round trip
    auto back = inst.indexing.inverse();
    CHECK(back.apply(inst.transversal) == t.canonical());
    auto fam_back = back.apply(inst.family);
    for (Color c = 0; c < n; ++c) CHECK(fam_back.subgraph(c) == f.subgraph(c));
  }
  SUBCASE("matching with interleaved pairs") {
    // pairs (0,1) color 1 and (2,3) color 0
    auto f = SubgraphFamily::from_edge_lists(4, FamilyKind::matching,
                                             {{Edge::of(2, 3), Edge::of(0, 3)}, {Edge::of(0, 1)}});
    Transversal t{TransversalKind::matching, {{Edge::of(0, 1), 1}, {Edge::of(2, 3), 0}}};
    auto inst = naturally_index(f, t);
    CHECK(inst.transversal == canonical_matching(2));
    CHECK(validate_transversal(inst.family, inst.transversal).ok());
    auto back = inst.indexing.inverse();
    CHECK(back.apply(inst.transversal) == t.canonical());
  }
  SUBCASE("invalid input throws") {
    auto f = fixtures::k4_all_equal();
    Transversal t = canonical_cycle(4);
    t.edges[0].color = 1;
    try {
      naturally_index(f, t);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_transversal);
    }
  }
}
