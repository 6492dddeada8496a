#pragma once

// Growing one transversal into at least (d+1)! of them. The existence step of
// the recursion ("some neighbor of S has every candidate edge realized") is
// made constructive by accumulating witnesses from repeated second-transversal
// calls on digraphs built from still-unrealized edges.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "transversals/core.hpp"
#include "transversals/digraphs.hpp"

namespace transversals {

/// Every member of the constrained space Omega(C, phi, S), sorted canonically.
/// Exponential in |S|; the caller keeps S small.
std::vector<Transversal> enumerate_omega_ham(const SubgraphFamily& family, const Transversal& base,
                                             const CandidateSet& s);

/// Perfect matchings between S and V\S with s-w admissible iff (s,w) lies in
/// the subgraph of s's base color.
std::vector<Transversal> enumerate_omega_pm(const SubgraphFamily& family, const Transversal& base,
                                            const CandidateSet& s);

struct WitnessTable {
  /// (v, w) -> a member of Omega containing edge vw, w the S-side endpoint
  /// (Hamiltonian) or the outside endpoint (matching).
  std::map<std::pair<Vertex, Vertex>, Transversal> witnesses;
  /// Candidate targets of v (including its base partner), sorted.
  std::map<Vertex, std::vector<Vertex>> targets;
  /// Targets not yet realized when the loop stopped.
  std::map<Vertex, std::vector<Vertex>> unrealized;
  int iterations = 0;

  const Transversal* witness(Vertex v, Vertex w) const;
};

struct SaturatedVertex {
  Vertex vertex = -1;
  WitnessTable table;
};

SaturatedVertex find_saturated_vertex_ham(const SubgraphFamily& family, const Transversal& base,
                                          const CandidateSet& s, const RybDigraph& h);

SaturatedVertex find_saturated_vertex_pm(const SubgraphFamily& family, const Transversal& base,
                                         const CandidateSet& s, const RbDigraph& h);

struct MultiplyStats {
  int recursion_nodes = 0;
  int witness_iterations = 0;
  /// (level, d before, d after) for every recursive call made.
  std::vector<std::tuple<int, int, int>> level_checks;
};

/// At least (d*+1)! distinct transversals, all in Omega(base, S). Throws
/// Error(d_star_too_small) when d* = 0.
std::vector<Transversal> many_ham_transversals(const SubgraphFamily& family, const Transversal& base,
                                               const CandidateSet& s, MultiplyStats* stats = nullptr);

/// At least (dx+1)! distinct perfect matching transversals.
std::vector<Transversal> many_pm_transversals(const SubgraphFamily& family, const Transversal& base,
                                              const CandidateSet& s, MultiplyStats* stats = nullptr);

}  // namespace transversals
