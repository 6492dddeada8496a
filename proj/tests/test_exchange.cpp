#include <doctest.h>

#include <algorithm>
#include <functional>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "transversals/errors.hpp"
#include "transversals/exchange.hpp"
#include "transversals/generators.hpp"

using namespace transversals;

namespace {

/// Hamiltonian paths of g that start with (a, b), by plain DFS.
std::vector<std::vector<Vertex>> ham_paths_from(const Graph& g, Vertex a, Vertex b) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a, b};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
  std::function<void()> go = [&] {
    if (static_cast<int>(path.size()) == n) {
      out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      go();
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  go();
  return out;
}

std::set<Edge> cycle_edges(const std::vector<Vertex>& c) {
  std::set<Edge> out;
  for (std::size_t k = 0; k < c.size(); ++k) out.insert(Edge::of(c[k], c[(k + 1) % c.size()]));
  return out;
}

}  // namespace

TEST_CASE("prune keeps one arc per requirement") {
  auto f = fixtures::two_member_instance();
  auto h = build_full_ryb(f, canonical_cycle(6));
  CandidateSet s(6, {0, 3});
  auto jp = prune(h, s);
  CHECK(jp.yellow_arcs.size() == 2);
  CHECK(jp.blue_arcs.size() == 2);
  CHECK(jp.digraph.num_arcs() == 4);
  Graph g = jp.underlying();
  CHECK(g.num_edges() == 10);
  for (Vertex v : {1, 2, 4, 5}) CHECK((g.degree(v) == 2 || g.degree(v) == 3));

  SUBCASE("lower head wins a tie") {
    auto j = RybDigraph::empty(9);
    CandidateSet s3(9, {0, 3, 6});
    for (Vertex i : s3.members()) {
      for (Vertex o : s3.members()) {
        if (o == i) continue;
        j.yellow[static_cast<std::size_t>(j.pred(i))].push_back(o);
        j.blue[static_cast<std::size_t>(j.succ(i))].push_back(o);
      }
    }
    for (auto& v : j.yellow) std::sort(v.begin(), v.end());
    for (auto& v : j.blue) std::sort(v.begin(), v.end());
    auto p = prune(j, s3);
    CHECK(p.yellow_arcs[0] == Arc{8, 3});
    CHECK(p.blue_arcs[0] == Arc{1, 3});
    CHECK(p.yellow_arcs[1] == Arc{2, 0});
  }
  SUBCASE("empty S") { CHECK_THROWS_AS(prune(h, CandidateSet(6, {})), Error); }
}

TEST_CASE("lollipop walk on the two-member instance") {
  auto f = fixtures::two_member_instance();
  auto h = build_full_ryb(f, canonical_cycle(6));
  CandidateSet s(6, {0, 3});
  auto jp = prune(h, s);
  const Graph g = jp.underlying();
  LollipopTrace trace;
  auto cstar = lollipop_second_cycle(jp, Edge::of(0, 1), &trace);

  // closable Hamiltonian paths starting with the anchor are the degree-1 states
  auto paths = ham_paths_from(g, 0, 1);
  std::vector<std::vector<Vertex>> closable;
  for (const auto& p : paths) {
    if (g.has_edge(p.back(), 0)) closable.push_back(p);
  }
  CHECK(closable.size() % 2 == 0);
  REQUIRE(closable.size() == 2);
  const std::vector<Vertex> base_path{0, 1, 2, 3, 4, 5};
  auto other = closable[0] == base_path ? closable[1] : closable[0];
  CHECK(cstar == other);
  CHECK(cycle_edges(cstar) != cycle_edges(base_path));
  CHECK(trace.states.front() == base_path);
  CHECK(trace.states.back() == cstar);
  CHECK(trace.pivots.size() + 1 == trace.states.size());

  CHECK_THROWS_AS(lollipop_second_cycle(jp, Edge::of(1, 2)), Error);
}

TEST_CASE("recolor") {
  auto f = fixtures::two_member_instance();
  auto h = build_full_ryb(f, canonical_cycle(6));
  CandidateSet s(6, {0, 3});
  auto jp = prune(h, s);
  SUBCASE("base cycle keeps base colors") {
    CHECK(recolor_ham({0, 1, 2, 3, 4, 5}, jp, canonical_cycle(6)) == canonical_cycle(6));
  }
  SUBCASE("yellow arc 5 -> 3 gets color 5") {
    auto cstar = lollipop_second_cycle(jp, Edge::of(0, 1));
    auto t = recolor_ham(cstar, jp, canonical_cycle(6));
    CHECK(validate_transversal(f, t).ok());
    CHECK(omega_member_ham(canonical_cycle(6), s, t));
    CHECK(brute::in_omega_ham(6, s.members(), t));
    if (t.contains(Edge::of(3, 5))) CHECK(t.color_of(Edge::of(3, 5)) == 5);
  }
}

TEST_CASE("second_ham_transversal") {
  auto f = fixtures::two_member_instance();
  auto h = build_full_ryb(f, canonical_cycle(6));
  CandidateSet s(6, {0, 3});
  auto t = second_ham_transversal(f, canonical_cycle(6), s, h);
  CHECK_FALSE(t == canonical_cycle(6));
  CHECK(validate_transversal(f, t).ok());
  CHECK(second_ham_transversal(f, canonical_cycle(6), s, h) == t);

  auto all = brute::ham_transversals(f);
  CHECK(std::find(all.begin(), all.end(), t) != all.end());

  try {
    second_ham_transversal(f, canonical_cycle(6), CandidateSet(6, {}), h);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_locally_dominating);
  }
}

TEST_CASE("alternating cycle on the swap instance") {
  auto f = fixtures::pm_swap();
  auto h = build_full_rb(f, canonical_matching(2));
  CandidateSet s(4, {0, 1});
  auto cyc = find_alternating_cycle(h, s);
  // x0 = 0, x1 = 1, y0 = 2, y1 = 3: red y0x0, blue x0->y1, red y1x1, blue x1->y0
  CHECK(cyc.vertices == std::vector<Vertex>{2, 0, 3, 1});
  CHECK(cyc.length() % 2 == 0);
  AlternatingCycle out;
  auto t = second_pm_transversal(f, canonical_matching(2), s, h, &out);
  Transversal expected{TransversalKind::matching, {{Edge::of(0, 3), 0}, {Edge::of(1, 2), 1}}};
  CHECK(t == expected.canonical());
  CHECK(out.vertices == cyc.vertices);
}

TEST_CASE("alternating cycle through three pairs") {
  // x_i -> y_{i+1}: x0 = 0.. x2 = 2, y0 = 3.. y2 = 5
  std::vector<std::vector<Edge>> g(3);
  for (int i = 0; i < 3; ++i) {
    g[static_cast<std::size_t>(i)].push_back(Edge::of(i, 3 + i));
    g[static_cast<std::size_t>(i)].push_back(Edge::of(i, 3 + (i + 1) % 3));
  }
  auto f = SubgraphFamily::from_edge_lists(6, FamilyKind::matching, g);
  auto h = build_full_rb(f, canonical_matching(3));
  CandidateSet s(6, {0, 1, 2});
  auto cyc = find_alternating_cycle(h, s);
  CHECK(cyc.length() == 6);
  auto t = second_pm_transversal(f, canonical_matching(3), s, h);
  CHECK(validate_transversal(f, t).ok());
  CHECK(omega_member_pm(canonical_matching(3), s, t));
}

TEST_CASE("switching is the identity off the cycle") {
  // pairs 0 and 1 swap, pairs 2..4 have no alternatives
  const int n = 5;
  std::vector<std::vector<Edge>> g(n);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, n + i));
  g[0].push_back(Edge::of(0, n + 1));
  g[1].push_back(Edge::of(1, n + 0));
  g[2].push_back(Edge::of(2, n + 0));
  auto f = SubgraphFamily::from_edge_lists(2 * n, FamilyKind::matching, g);
  auto h = build_full_rb(f, canonical_matching(n));
  CandidateSet s(2 * n, {0, 1, 2, 3, 4});
  // the walk starts at pair 0 and closes before reaching pairs 2..4
  auto cyc = find_alternating_cycle(h, s);
  CHECK(cyc.length() == 4);
  auto t = second_pm_transversal(f, canonical_matching(n), s, h);
  for (int i = 2; i < n; ++i) CHECK(t.color_of(Edge::of(i, n + i)) == i);
}

TEST_CASE("a member without an escape arc stops the walk") {
  auto h = RbDigraph::empty(2);
  h.blue[0] = {3};
  try {
    find_alternating_cycle(h, CandidateSet(4, {0, 1}));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_blue_escape);
  }
}
