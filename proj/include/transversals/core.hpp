#pragma once

// Graph, family and transversal data model.
//
// Vertices and colors are 0-based. For Hamiltonian families the canonical
// transversal is the cycle 0,1,...,n-1 with edge (i, i+1 mod n) colored i.
// For matching families on 2n vertices, vertex i (the "x" side) is paired
// with vertex n+i (the "y" side) and that edge is colored i.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace transversals {

using Vertex = int;
using Color = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalized so that u <= v. Loops are representable so that validation
  /// can report them.
  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool is_loop() const { return u == v; }
  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Edge underlying() const { return Edge::of(tail, head); }
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph with sorted adjacency lists. Duplicate edges are
/// merged on construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices) : adj_(static_cast<std::size_t>(num_vertices)) {}
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  int num_edges() const;
  int max_degree() const;
  int min_degree() const;
  bool has_loop() const;

  /// All edges with u <= v, sorted.
  std::vector<Edge> edges() const;

  /// Relabels vertices: vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph induced on `keep` (sorted), with vertices renumbered 0..k-1 in
  /// the order given.
  Graph induced(std::span<const Vertex> keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

enum class FamilyKind { hamiltonian, matching };
enum class TransversalKind { cycle, matching };

std::string_view to_string(FamilyKind kind);

/// Base graph plus an ordered list of subgraphs G_0..G_{s-1}; subgraph c is
/// the color class c. Subgraphs are shared so that families in which many
/// members coincide stay cheap.
struct SubgraphFamily {
  Graph base;
  std::vector<std::shared_ptr<const Graph>> subgraphs;
  FamilyKind kind = FamilyKind::hamiltonian;

  int num_vertices() const { return base.num_vertices(); }
  int num_colors() const { return static_cast<int>(subgraphs.size()); }
  const Graph& subgraph(Color c) const { return *subgraphs[static_cast<std::size_t>(c)]; }
  bool in_subgraph(Color c, const Edge& e) const {
    return c >= 0 && c < num_colors() && subgraph(c).has_edge(e);
  }

  /// Builds a family whose base graph is the union of the subgraphs plus
  /// `extra_base_edges`.
  static SubgraphFamily from_edge_lists(int num_vertices, FamilyKind kind,
                                        const std::vector<std::vector<Edge>>& subgraph_edges,
                                        std::span<const Edge> extra_base_edges = {});
};

struct ColoredEdge {
  Edge edge;
  Color color = 0;
  auto operator<=>(const ColoredEdge&) const = default;
};

/// Edge set with its color assignment. Canonical form keeps `edges` sorted
/// by edge; identity of a transversal is the (edge, color) set.
struct Transversal {
  TransversalKind kind = TransversalKind::cycle;
  std::vector<ColoredEdge> edges;

  /// -1 when the edge is absent.
  Color color_of(const Edge& e) const;
  bool contains(const Edge& e) const { return color_of(e) >= 0; }

  Transversal canonical() const;

  friend bool operator==(const Transversal& a, const Transversal& b);
  friend bool operator<(const Transversal& a, const Transversal& b);
};

/// The cycle 0..n-1 with edge (i, i+1) colored i.
Transversal canonical_cycle(int n);
/// The matching {(i, n+i)} on 2n vertices with edge (i, n+i) colored i.
Transversal canonical_matching(int n);

bool is_naturally_indexed(const SubgraphFamily& family, const Transversal& t);

/// Sorts canonically and drops duplicates.
void sort_unique(std::vector<Transversal>& ts);

enum class ViolationKind {
  subgraph_count,
  odd_vertex_count,
  loop,
  edge_not_in_base,
  wrong_kind,
  wrong_edge_count,
  color_out_of_range,
  colors_not_injective,
  edge_not_in_subgraph,
  not_hamiltonian_cycle,
  not_a_matching,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<Edge> edge;
  std::optional<Color> color;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

ValidationReport validate_family(const SubgraphFamily& family);
ValidationReport validate_transversal(const SubgraphFamily& family, const Transversal& t);

/// vertex_perm[old] = new, color_perm[old] = new.
struct NaturalIndexing {
  std::vector<Vertex> vertex_perm;
  std::vector<Color> color_perm;

  NaturalIndexing inverse() const;
  Vertex map_vertex(Vertex v) const { return vertex_perm[static_cast<std::size_t>(v)]; }
  std::vector<Vertex> map_vertices(std::span<const Vertex> vs) const;
  SubgraphFamily apply(const SubgraphFamily& family) const;
  Transversal apply(const Transversal& t) const;
  bool is_identity() const;
};

struct IndexedInstance {
  SubgraphFamily family;
  Transversal transversal;
  NaturalIndexing indexing;
};

/// Relabels vertices and colors so that `t` becomes canonical. Throws
/// Error(invalid_transversal) when `t` fails validation.
IndexedInstance naturally_index(const SubgraphFamily& family, const Transversal& t);

}  // namespace transversals
