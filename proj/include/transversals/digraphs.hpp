#pragma once

// Auxiliary red/yellow/blue digraphs built from a naturally indexed
// transversal, and the set predicates and metrics defined on them.

#include <vector>

#include "transversals/core.hpp"

namespace transversals {

/// Sorted vertex subset with an O(1) membership mask.
class CandidateSet {
 public:
  CandidateSet() = default;
  CandidateSet(int num_vertices, std::vector<Vertex> members);

  int num_vertices() const { return static_cast<int>(mask_.size()); }
  const std::vector<Vertex>& members() const { return members_; }
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices() && mask_[static_cast<std::size_t>(v)]; }
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }

  CandidateSet without(Vertex v) const;
  bool operator==(const CandidateSet& other) const { return members_ == other.members_; }

 private:
  std::vector<Vertex> members_;
  std::vector<char> mask_;
};

/// Red edges are the cycle pairs at circular distance 1 and 2. Yellow and blue
/// arcs are stored as sorted head lists per tail. Sub-digraphs J use the same
/// type with fewer arcs.
struct RybDigraph {
  int n = 0;
  std::vector<std::vector<Vertex>> yellow;
  std::vector<std::vector<Vertex>> blue;

  static RybDigraph empty(int n);

  Vertex succ(Vertex v) const { return (v + 1) % n; }
  Vertex pred(Vertex v) const { return (v + n - 1) % n; }
  int circular_distance(Vertex a, Vertex b) const;
  bool has_red(Vertex a, Vertex b) const;
  std::vector<Edge> red_edges() const;
  bool has_yellow(Vertex tail, Vertex head) const;
  bool has_blue(Vertex tail, Vertex head) const;
  int num_arcs() const;
  /// True when every arc of *this is an arc of `other` (red sets always agree).
  bool is_subdigraph_of(const RybDigraph& other) const;
};

/// Matching analogue on 2n vertices: red edges are the pairs (i, n+i).
struct RbDigraph {
  int n = 0;
  std::vector<std::vector<Vertex>> blue;

  static RbDigraph empty(int n);

  int num_vertices() const { return 2 * n; }
  Vertex partner(Vertex v) const { return v < n ? v + n : v - n; }
  int pair_of(Vertex v) const { return v < n ? v : v - n; }
  bool has_blue(Vertex tail, Vertex head) const;
  int num_arcs() const;
  bool is_subdigraph_of(const RbDigraph& other) const;
};

/// yellow(i) = {j : (i,j) in G_i, j != i±1}; blue(i) = {j : (i,j) in G_{i-1}, j != i±1}.
/// Throws Error(not_naturally_indexed) unless `t` is the canonical cycle.
RybDigraph build_full_ryb(const SubgraphFamily& family, const Transversal& t);

/// blue(v) for v in pair i = {w outside pair i : (v,w) in G_i}. Reduces to the
/// x_i -> y_j / y_i -> x_j arcs when G is bipartite between the two sides.
RbDigraph build_full_rb(const SubgraphFamily& family, const Transversal& t);

bool is_red_independent(const RybDigraph& j, const CandidateSet& s);
bool is_red_independent(const RbDigraph& j, const CandidateSet& s);
/// One endpoint of every red pair.
bool is_maximal_red_independent(const RbDigraph& j, const CandidateSet& s);

/// For every i in S, yellow(i-1) and blue(i+1) both meet S. False for empty S.
/// Throws Error(not_red_independent).
bool is_locally_dominating(const RybDigraph& j, const CandidateSet& s);

struct HamSetMetrics {
  bool red_independent = false;
  int d_star = 0;
  /// Indexed like S.members(): |yellow(i-1) ∩ S| and |blue(i+1) ∩ S|.
  std::vector<int> yellow_counts;
  std::vector<int> blue_counts;
};

struct PmSetMetrics {
  bool maximal_red_independent = false;
  int d_cross = 0;
  /// Indexed like S.members(): |blue(v) \ S|.
  std::vector<int> escape_counts;
};

HamSetMetrics ham_metrics(const RybDigraph& h, const CandidateSet& s);
PmSetMetrics pm_metrics(const RbDigraph& h, const CandidateSet& s);

/// min over i in S of min(|yellow(i-1) ∩ S|, |blue(i+1) ∩ S|); 0 for empty S.
int d_star(const RybDigraph& h, const CandidateSet& s);
/// min over v in S of |blue(v) \ S|.
int d_cross(const RbDigraph& h, const CandidateSet& s);

/// Membership in the constrained transversal space around S: cand keeps every
/// path of base on V\S, agrees in color on those paths, and each path end
/// reconnects to S with the color of its original S-edge.
bool omega_member_ham(const Transversal& base, const CandidateSet& s, const Transversal& cand);

/// cand matches S to V\S and keeps the base color at every vertex of S.
bool omega_member_pm(const Transversal& base, const CandidateSet& s, const Transversal& cand);

/// d* of S measured against an arbitrary cycle transversal `t` of `family`
/// (naturally indexes first and maps S along).
int d_star_for(const SubgraphFamily& family, const Transversal& t, const CandidateSet& s);
int d_cross_for(const SubgraphFamily& family, const Transversal& t, const CandidateSet& s);

}  // namespace transversals
