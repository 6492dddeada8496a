#include "transversals/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "transversals/digraphs.hpp"
#include "transversals/errors.hpp"
#include "transversals/rng.hpp"

namespace transversals {

namespace {

constexpr int kCompletionAttempts = 200;

/// Adds edges to `g` until every vertex has degree k, avoiding loops and
/// existing edges: random stub pairing, then random two-pair swaps to repair
/// bad pairs.
std::vector<Edge> regular_completion(const Graph& g, int k, Rng& rng) {
  const int n = g.num_vertices();
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v) {
    const int missing = k - g.degree(v);
    if (missing < 0) throw Error(ErrorCode::infeasible_degree, "vertex already above the target degree");
    stubs.insert(stubs.end(), static_cast<std::size_t>(missing), v);
  }
  if (stubs.size() % 2 != 0) throw Error(ErrorCode::infeasible_degree, "odd number of free degree slots");
  if (stubs.empty()) return {};

  for (int attempt = 0; attempt < kCompletionAttempts; ++attempt) {
    rng.shuffle(stubs.begin(), stubs.end());
    const std::size_t pairs = stubs.size() / 2;
    std::vector<int> uses(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto slot = [&](Vertex a, Vertex b) -> int& { return uses[static_cast<std::size_t>(a * n + b)]; };
    for (const Edge& e : g.edges()) slot(e.u, e.v) = slot(e.v, e.u) = 1;
    std::vector<Edge> pe(pairs);
    for (std::size_t j = 0; j < pairs; ++j) {
      pe[j] = Edge::of(stubs[2 * j], stubs[2 * j + 1]);
      if (!pe[j].is_loop()) ++slot(pe[j].u, pe[j].v), ++slot(pe[j].v, pe[j].u);
    }
    auto good = [&](const Edge& e) { return !e.is_loop() && slot(e.u, e.v) == 1; };
    auto add = [&](const Edge& e, int delta) {
      if (!e.is_loop()) slot(e.u, e.v) += delta, slot(e.v, e.u) += delta;
    };

    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j < pairs; ++j) {
      if (!good(pe[j])) bad.push_back(j);
    }
    const std::int64_t max_steps = 100 * static_cast<std::int64_t>(pairs) + 1000;
    for (std::int64_t step = 0; step < max_steps && !bad.empty() && pairs >= 2; ++step) {
      const std::size_t pick = rng.below(bad.size());
      const std::size_t i = bad[pick];
      if (good(pe[i])) {
        bad[pick] = bad.back();
        bad.pop_back();
        continue;
      }
      std::size_t j = rng.below(pairs - 1);
      if (j >= i) ++j;
      const Edge a = pe[i], b = pe[j];
      const bool flip = rng.bernoulli(0.5);
      const Edge na = Edge::of(a.u, flip ? b.u : b.v);
      const Edge nb = Edge::of(a.v, flip ? b.v : b.u);
      add(a, -1), add(b, -1), add(na, 1), add(nb, 1);
      if (good(na) && good(nb)) {
        pe[i] = na;
        pe[j] = nb;
      } else {
        add(na, -1), add(nb, -1), add(a, 1), add(b, 1);
      }
    }
    if (bad.empty() || std::all_of(bad.begin(), bad.end(), [&](std::size_t j) { return good(pe[j]); })) return pe;
  }
  throw Error(ErrorCode::generation_failed, "could not complete the graph to a simple regular graph");
}

std::vector<Edge> cycle_edges(int n) {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n; ++i) out.push_back(Edge::of(i, (i + 1) % n));
  return out;
}

std::vector<Edge> matching_edges(int n) {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n; ++i) out.push_back(Edge::of(i, n + i));
  return out;
}

}  // namespace

GeneratedInstance gen_planted_ham_family(int n, int extra_degree, std::uint64_t seed) {
  if (n < 3 || extra_degree < 0 || extra_degree > n - 3 || (n * extra_degree) % 2 != 0) {
    throw Error(ErrorCode::infeasible_degree, "need n >= 3, 0 <= extra <= n-3 and n*extra even");
  }
  Rng rng(seed);
  const auto cycle = cycle_edges(n);
  const auto chords = regular_completion(Graph(n, cycle), 2 + extra_degree, rng);
  std::vector<std::vector<Edge>> subgraphs(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) subgraphs[static_cast<std::size_t>(i)].push_back(cycle[static_cast<std::size_t>(i)]);
  for (const Edge& e : chords) {
    for (Vertex end : {e.u, e.v}) {
      // chord at i lands in G_i and G_{i-1}
      subgraphs[static_cast<std::size_t>(end)].push_back(e);
      subgraphs[static_cast<std::size_t>((end + n - 1) % n)].push_back(e);
    }
  }
  return {SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, subgraphs), canonical_cycle(n)};
}

SubgraphFamily gen_dirac_family(int n, double c, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::infeasible_degree, "need n >= 3");
  if (!(c >= 0.5 && c <= 1.0)) throw Error(ErrorCode::infeasible_degree, "need 1/2 <= c <= 1");
  const int target = std::min(n - 1, static_cast<int>(std::ceil(c * n - 1e-9)));
  std::vector<Edge> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
  }
  std::vector<std::vector<Edge>> subgraphs;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng(seed).split(static_cast<std::uint64_t>(i));
    std::vector<Edge> order = all;
    rng.shuffle(order.begin(), order.end());
    std::vector<int> deg(static_cast<std::size_t>(n), n - 1);
    std::vector<Edge> kept;
    for (const Edge& e : order) {
      if (deg[static_cast<std::size_t>(e.u)] > target && deg[static_cast<std::size_t>(e.v)] > target) {
        --deg[static_cast<std::size_t>(e.u)];
        --deg[static_cast<std::size_t>(e.v)];
      } else {
        kept.push_back(e);
      }
    }
    subgraphs.push_back(std::move(kept));
  }
  return SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, subgraphs, all);
}

GeneratedInstance gen_regular_all_equal(int n, int m, std::uint64_t seed) {
  if (m < 2 || m >= n || (n * m) % 2 != 0) {
    throw Error(ErrorCode::infeasible_degree, "need 2 <= m < n and n*m even");
  }
  Rng rng(seed);
  auto edges = cycle_edges(n);
  const auto extra = regular_completion(Graph(n, edges), m, rng);
  edges.insert(edges.end(), extra.begin(), extra.end());
  GeneratedInstance out;
  out.family.kind = FamilyKind::hamiltonian;
  out.family.base = Graph(n, edges);
  auto shared = std::make_shared<const Graph>(out.family.base);
  out.family.subgraphs.assign(static_cast<std::size_t>(n), shared);
  out.planted = canonical_cycle(n);
  return out;
}

GeneratedInstance gen_planted_pm_family(int n, int extra_degree, std::uint64_t seed) {
  if (n < 1 || extra_degree < 0 || extra_degree > 2 * n - 2) {
    throw Error(ErrorCode::infeasible_degree, "need n >= 1 and 0 <= extra <= 2n-2");
  }
  Rng rng(seed);
  const auto matching = matching_edges(n);
  const auto extra = regular_completion(Graph(2 * n, matching), 1 + extra_degree, rng);
  std::vector<std::vector<Edge>> subgraphs(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) subgraphs[static_cast<std::size_t>(i)].push_back(matching[static_cast<std::size_t>(i)]);
  for (const Edge& e : extra) {
    const int pu = e.u < n ? e.u : e.u - n;
    const int pv = e.v < n ? e.v : e.v - n;
    subgraphs[static_cast<std::size_t>(pu)].push_back(e);
    if (pv != pu) subgraphs[static_cast<std::size_t>(pv)].push_back(e);
  }
  return {SubgraphFamily::from_edge_lists(2 * n, FamilyKind::matching, subgraphs), canonical_matching(n)};
}

GeneratedInstance gen_witness_instance_ham(int n, const std::vector<Vertex>& s_in, int d, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::infeasible_witness, "need n >= 3");
  for (Vertex v : s_in) {
    if (v < 0 || v >= n) throw Error(ErrorCode::infeasible_witness, "S member out of range");
  }
  const CandidateSet s(n, s_in);
  const RybDigraph frame = RybDigraph::empty(n);
  if (!is_red_independent(frame, s)) {
    throw Error(ErrorCode::infeasible_witness, "S members must be at circular distance >= 3");
  }
  if (d < 1 || s.size() < d + 1) throw Error(ErrorCode::infeasible_witness, "need d >= 1 and |S| >= d + 1");

  Rng rng(seed);
  std::vector<std::vector<Edge>> subgraphs(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) subgraphs[static_cast<std::size_t>(i)].push_back(Edge::of(i, frame.succ(i)));
  for (Vertex i : s.members()) {
    std::vector<Vertex> others;
    for (Vertex j : s.members()) {
      if (j != i) others.push_back(j);
    }
    // yellow side: i-1 into S, in G_{i-1}; blue side: i+1 into S, in G_i
    for (auto [tail, color] : {std::pair{frame.pred(i), frame.pred(i)}, std::pair{frame.succ(i), i}}) {
      rng.shuffle(others.begin(), others.end());
      for (int k = 0; k < d; ++k) {
        subgraphs[static_cast<std::size_t>(color)].push_back(Edge::of(tail, others[static_cast<std::size_t>(k)]));
      }
    }
  }
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) outside.push_back(v);
  }
  for (std::size_t k = 0; k < static_cast<std::size_t>(n / 2) && outside.size() >= 2; ++k) {
    const Vertex a = outside[rng.below(outside.size())];
    const Vertex b = outside[rng.below(outside.size())];
    if (frame.circular_distance(a, b) < 2) continue;
    subgraphs[static_cast<std::size_t>(rng.bernoulli(0.5) ? a : frame.pred(a))].push_back(Edge::of(a, b));
  }
  return {SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, subgraphs), canonical_cycle(n)};
}

GeneratedInstance gen_witness_instance_pm(int n, const std::vector<Vertex>& s_in, int d, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::infeasible_witness, "need n >= 1");
  for (Vertex v : s_in) {
    if (v < 0 || v >= 2 * n) throw Error(ErrorCode::infeasible_witness, "S member out of range");
  }
  const CandidateSet s(2 * n, s_in);
  const RbDigraph frame = RbDigraph::empty(n);
  if (!is_maximal_red_independent(frame, s)) {
    throw Error(ErrorCode::infeasible_witness, "S must hold exactly one endpoint of every pair");
  }
  if (d < 0 || d > n - 1) throw Error(ErrorCode::infeasible_witness, "need 0 <= d <= n - 1");

  Rng rng(seed);
  std::vector<std::vector<Edge>> subgraphs(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) subgraphs[static_cast<std::size_t>(i)].push_back(Edge::of(i, n + i));
  for (Vertex v : s.members()) {
    const int pair = frame.pair_of(v);
    std::vector<Vertex> escape;
    for (Vertex w = 0; w < 2 * n; ++w) {
      if (!s.contains(w) && w != frame.partner(v)) escape.push_back(w);
    }
    rng.shuffle(escape.begin(), escape.end());
    for (int k = 0; k < d; ++k) {
      subgraphs[static_cast<std::size_t>(pair)].push_back(Edge::of(v, escape[static_cast<std::size_t>(k)]));
    }
    // noise at the partner, which lies outside S
    const Vertex u = frame.partner(v);
    const Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(2 * n)));
    if (w != u && w != v) subgraphs[static_cast<std::size_t>(pair)].push_back(Edge::of(u, w));
  }
  return {SubgraphFamily::from_edge_lists(2 * n, FamilyKind::matching, subgraphs), canonical_matching(n)};
}

}  // namespace transversals
