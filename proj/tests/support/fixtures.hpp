#pragma once

#include <vector>

#include "transversals/core.hpp"

namespace fixtures {

using namespace transversals;

/// n = 6, S = {0, 3}: yellow(5) = {3}, blue(1) = {3}, yellow(2) = {0},
/// blue(4) = {0}, nothing else off the cycle.
inline SubgraphFamily two_member_instance() {
  std::vector<std::vector<Edge>> g(6);
  for (Vertex i = 0; i < 6; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, (i + 1) % 6));
  g[5].push_back(Edge::of(5, 3));
  g[0].push_back(Edge::of(1, 3));
  g[2].push_back(Edge::of(2, 0));
  g[3].push_back(Edge::of(4, 0));
  return SubgraphFamily::from_edge_lists(6, FamilyKind::hamiltonian, g);
}

inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) out.push_back({a, b});
  }
  return out;
}

inline SubgraphFamily k4_all_equal() {
  const auto k4 = complete_edges(4);
  return SubgraphFamily::from_edge_lists(4, FamilyKind::hamiltonian, {k4, k4, k4, k4});
}

/// Matching family on 2n vertices with only the planted edges.
inline SubgraphFamily forced_matching(int n) {
  std::vector<std::vector<Edge>> g(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, n + i));
  return SubgraphFamily::from_edge_lists(2 * n, FamilyKind::matching, g);
}

/// n = 2: G_0 = {x0y0, x0y1}, G_1 = {x1y1, x1y0}; S = {x0, x1} swaps.
inline SubgraphFamily pm_swap() {
  return SubgraphFamily::from_edge_lists(4, FamilyKind::matching,
                                         {{Edge::of(0, 2), Edge::of(0, 3)}, {Edge::of(1, 3), Edge::of(1, 2)}});
}

}  // namespace fixtures
