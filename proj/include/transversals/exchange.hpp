#pragma once

// Second-transversal constructions. For cycles: prune the RYB-digraph to one
// arc per neighbor of S, walk Hamiltonian paths by rotations until a second
// closable path appears, then recolor. For matchings: follow red/blue arcs out
// of S until a red pair repeats and switch along the resulting cycle.

#include <vector>

#include "transversals/core.hpp"
#include "transversals/digraphs.hpp"

namespace transversals {

/// J' of the second-cycle construction. Only the cycle edges are red here (the
/// distance-2 pairs are dropped); for each i in S exactly one yellow arc from
/// i-1 into S and one blue arc from i+1 into S survive.
struct PrunedDigraph {
  RybDigraph digraph;
  CandidateSet set;
  std::vector<Arc> yellow_arcs;  // one per member of S, in member order
  std::vector<Arc> blue_arcs;

  int n() const { return digraph.n; }
  /// Cycle edges plus the retained arcs, undirected.
  Graph underlying() const;
};

/// Vertex order of a Hamiltonian cycle; consecutive entries (and last, first)
/// are adjacent.
using VertexCycle = std::vector<Vertex>;

struct LollipopTrace {
  /// Hamiltonian paths visited, each starting with the anchor edge.
  std::vector<std::vector<Vertex>> states;
  /// pivots[k] is the vertex whose edge to the path end produced states[k+1].
  std::vector<Vertex> pivots;
};

/// Throws Error(not_locally_dominating) when some i in S lacks a yellow arc
/// from i-1 or a blue arc from i+1 into S. Lowest head wins ties.
PrunedDigraph prune(const RybDigraph& j, const CandidateSet& s);

/// `anchor` must be (s, s+1) for some s in S. Throws Error(walk_stuck) if the
/// rotation graph does not have the expected shape.
VertexCycle lollipop_second_cycle(const PrunedDigraph& jp, const Edge& anchor,
                                  LollipopTrace* trace = nullptr);

/// Colors cycle edges by tail index: red (i,i+1) -> i, yellow i->j -> i,
/// blue i->j -> i-1; the closing edge takes the one unused color.
Transversal recolor_ham(const VertexCycle& cstar, const PrunedDigraph& jp, const Transversal& base);

/// Second Hamiltonian transversal inside the constrained space around S,
/// using only edges of J. Deterministic.
Transversal second_ham_transversal(const SubgraphFamily& family, const Transversal& base,
                                   const CandidateSet& s, const RybDigraph& j);

/// Even cycle alternating red pairs and blue arcs leaving S. `vertices` lists
/// (outside, inside) per visited pair: (vertices[2k], vertices[2k+1]) is red
/// and vertices[2k+1] -> vertices[2k+2] (cyclically) is blue.
struct AlternatingCycle {
  std::vector<Vertex> vertices;
  /// Length of the full walk before the prefix was cut, in red pairs.
  int walk_pairs = 0;

  int length() const { return static_cast<int>(vertices.size()); }
  std::vector<Edge> red_edges() const;
  std::vector<Arc> blue_arcs() const;
};

/// Throws Error(no_blue_escape) if a reached member of S has no blue arc
/// leaving S, Error(not_maximal_red_independent) for a bad S.
AlternatingCycle find_alternating_cycle(const RbDigraph& j, const CandidateSet& s);

/// Base matching switched along the alternating cycle, colored so each member
/// of S keeps its base color.
Transversal second_pm_transversal(const SubgraphFamily& family, const Transversal& base,
                                  const CandidateSet& s, const RbDigraph& j,
                                  AlternatingCycle* cycle_out = nullptr);

}  // namespace transversals
