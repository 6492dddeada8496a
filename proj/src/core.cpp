#include "transversals/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "transversals/errors.hpp"

namespace transversals {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_transversal: return "InvalidTransversal";
    case ErrorCode::not_naturally_indexed: return "NotNaturallyIndexed";
    case ErrorCode::not_red_independent: return "NotRedIndependent";
    case ErrorCode::not_locally_dominating: return "NotLocallyDominating";
    case ErrorCode::not_maximal_red_independent: return "NotMaximalRedIndependent";
    case ErrorCode::walk_stuck: return "WalkStuck";
    case ErrorCode::recolor_conflict: return "RecolorConflict";
    case ErrorCode::no_blue_escape: return "NoBlueEscape";
    case ErrorCode::d_star_too_small: return "DStarTooSmall";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::resample_budget_exceeded: return "ResampleBudgetExceeded";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::infeasible_degree: return "InfeasibleDegree";
    case ErrorCode::infeasible_witness: return "InfeasibleWitness";
    case ErrorCode::generation_failed: return "GenerationFailed";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::hamiltonian ? "hamiltonian" : "perfect_matching";
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int num_vertices, std::span<const Edge> edges) : Graph(num_vertices) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw std::out_of_range("edge " + to_string(e) + " outside vertex range " +
                              std::to_string(num_vertices));
    }
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (!e.is_loop()) adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= num_vertices()) return false;
  const auto& n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

int Graph::num_edges() const {
  int twice = 0;
  int loops = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    twice += degree(v);
    if (has_edge(v, v)) ++loops;
  }
  return (twice + loops) / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& n : adj_) best = std::max(best, static_cast<int>(n.size()));
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = degree(0);
  for (const auto& n : adj_) best = std::min(best, static_cast<int>(n.size()));
  return best;
}

bool Graph::has_loop() const {
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (has_edge(v, v)) return true;
  }
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    for (Vertex w : neighbors(v)) {
      if (v <= w) out.push_back(Edge{v, w});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  Graph g(num_vertices());
  for (Vertex v = 0; v < num_vertices(); ++v) {
    auto& target = g.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    for (Vertex w : neighbors(v)) target.push_back(perm[static_cast<std::size_t>(w)]);
    std::sort(target.begin(), target.end());
  }
  return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(adj_.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) index[static_cast<std::size_t>(keep[k])] = static_cast<Vertex>(k);
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (Vertex w : neighbors(keep[k])) {
      Vertex mapped = index[static_cast<std::size_t>(w)];
      if (mapped >= 0) g.adj_[k].push_back(mapped);
    }
    std::sort(g.adj_[k].begin(), g.adj_[k].end());
  }
  return g;
}

// ---------------------------------------------------------------- family

SubgraphFamily SubgraphFamily::from_edge_lists(int num_vertices, FamilyKind kind,
                                               const std::vector<std::vector<Edge>>& subgraph_edges,
                                               std::span<const Edge> extra_base_edges) {
  SubgraphFamily family;
  family.kind = kind;
  std::vector<Edge> all(extra_base_edges.begin(), extra_base_edges.end());
  for (const auto& list : subgraph_edges) {
    family.subgraphs.push_back(std::make_shared<const Graph>(num_vertices, list));
    all.insert(all.end(), list.begin(), list.end());
  }
  family.base = Graph(num_vertices, all);
  return family;
}

// ---------------------------------------------------------------- transversal

Color Transversal::color_of(const Edge& e) const {
  for (const auto& ce : edges) {
    if (ce.edge == e) return ce.color;
  }
  return -1;
}

Transversal Transversal::canonical() const {
  Transversal t = *this;
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

bool operator==(const Transversal& a, const Transversal& b) {
  if (a.kind != b.kind || a.edges.size() != b.edges.size()) return false;
  if (std::is_sorted(a.edges.begin(), a.edges.end()) && std::is_sorted(b.edges.begin(), b.edges.end())) {
    return a.edges == b.edges;
  }
  return a.canonical().edges == b.canonical().edges;
}

bool operator<(const Transversal& a, const Transversal& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.edges < cb.edges;
}

Transversal canonical_cycle(int n) {
  Transversal t;
  t.kind = TransversalKind::cycle;
  for (int i = 0; i < n; ++i) t.edges.push_back({Edge::of(i, (i + 1) % n), i});
  return t.canonical();
}

Transversal canonical_matching(int n) {
  Transversal t;
  t.kind = TransversalKind::matching;
  for (int i = 0; i < n; ++i) t.edges.push_back({Edge::of(i, n + i), i});
  return t;
}

bool is_naturally_indexed(const SubgraphFamily& family, const Transversal& t) {
  if (family.kind == FamilyKind::hamiltonian) {
    return t.kind == TransversalKind::cycle && t == canonical_cycle(family.num_vertices());
  }
  return t.kind == TransversalKind::matching && family.num_vertices() % 2 == 0 &&
         t == canonical_matching(family.num_vertices() / 2);
}

void sort_unique(std::vector<Transversal>& ts) {
  for (auto& t : ts) t = t.canonical();
  std::sort(ts.begin(), ts.end(), [](const Transversal& a, const Transversal& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.edges < b.edges;
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// ---------------------------------------------------------------- validation

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

ValidationReport validate_family(const SubgraphFamily& family) {
  ValidationReport report;
  const int n = family.num_vertices();
  const int s = family.num_colors();
  auto add = [&](ViolationKind kind, std::string msg, std::optional<Edge> e = {},
                 std::optional<Color> c = {}) {
    report.violations.push_back({kind, std::move(msg), e, c});
  };

  if (family.kind == FamilyKind::hamiltonian) {
    if (s != n) add(ViolationKind::subgraph_count, "subgraph count " + std::to_string(s) + " ≠ " + std::to_string(n));
  } else {
    if (n % 2 != 0) add(ViolationKind::odd_vertex_count, "vertex count " + std::to_string(n) + " is odd");
    if (s * 2 != n) {
      add(ViolationKind::subgraph_count, "subgraph count " + std::to_string(s) + " ≠ " + std::to_string(n / 2));
    }
  }
  for (const Edge& e : family.base.edges()) {
    if (e.is_loop()) add(ViolationKind::loop, "loop at vertex " + std::to_string(e.u) + " in base", e);
  }
  for (Color c = 0; c < s; ++c) {
    const Graph& g = family.subgraph(c);
    if (g.num_vertices() != n) {
      add(ViolationKind::edge_not_in_base, "subgraph " + std::to_string(c) + " has wrong vertex count", {}, c);
      continue;
    }
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        add(ViolationKind::loop, "loop at vertex " + std::to_string(e.u) + " in subgraph " + std::to_string(c), e, c);
      } else if (!family.base.has_edge(e)) {
        add(ViolationKind::edge_not_in_base,
            "edge " + to_string(e) + " of subgraph " + std::to_string(c) + " not in base", e, c);
      }
    }
  }
  return report;
}

namespace {

bool forms_hamiltonian_cycle(int n, const std::vector<Edge>& edges) {
  if (n < 3 || static_cast<int>(edges.size()) != n) return false;
  Graph g(n, edges);
  if (g.num_edges() != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2 || g.has_edge(v, v)) return false;
  }
  Vertex prev = -1;
  Vertex cur = 0;
  for (int steps = 0; steps < n; ++steps) {
    const auto& nb = g.neighbors(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    if (cur == 0) return steps == n - 1;
  }
  return false;
}

bool forms_perfect_matching(int num_vertices, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) * 2 != num_vertices) return false;
  std::vector<char> seen(static_cast<std::size_t>(num_vertices), 0);
  for (const Edge& e : edges) {
    if (e.is_loop() || seen[static_cast<std::size_t>(e.u)] || seen[static_cast<std::size_t>(e.v)]) return false;
    seen[static_cast<std::size_t>(e.u)] = seen[static_cast<std::size_t>(e.v)] = 1;
  }
  return true;
}

}  // namespace

ValidationReport validate_transversal(const SubgraphFamily& family, const Transversal& t) {
  ValidationReport report;
  const int n = family.num_vertices();
  const int s = family.num_colors();
  auto add = [&](ViolationKind kind, std::string msg, std::optional<Edge> e = {},
                 std::optional<Color> c = {}) {
    report.violations.push_back({kind, std::move(msg), e, c});
  };

  const bool cycle_family = family.kind == FamilyKind::hamiltonian;
  if (cycle_family != (t.kind == TransversalKind::cycle)) {
    add(ViolationKind::wrong_kind, "transversal kind does not match family kind");
  }
  if (static_cast<int>(t.edges.size()) != s) {
    add(ViolationKind::wrong_edge_count,
        "edge count " + std::to_string(t.edges.size()) + " ≠ " + std::to_string(s));
  }

  std::vector<int> uses(static_cast<std::size_t>(std::max(s, 0)), 0);
  std::vector<Edge> plain;
  for (const auto& [e, c] : t.edges) {
    plain.push_back(e);
    if (e.u < 0 || e.v >= n) {
      add(ViolationKind::edge_not_in_base, "edge " + to_string(e) + " outside vertex range", e);
      continue;
    }
    if (!family.base.has_edge(e)) add(ViolationKind::edge_not_in_base, "edge " + to_string(e) + " not in base", e);
    if (c < 0 || c >= s) {
      add(ViolationKind::color_out_of_range, "color " + std::to_string(c) + " out of range", e, c);
      continue;
    }
    if (++uses[static_cast<std::size_t>(c)] == 2) {
      add(ViolationKind::colors_not_injective, "colors not injective (color " + std::to_string(c) + " repeated)", e, c);
    }
    if (!family.in_subgraph(c, e)) {
      add(ViolationKind::edge_not_in_subgraph,
          "edge " + to_string(e) + " not in subgraph " + std::to_string(c), e, c);
    }
  }

  std::vector<Edge> distinct = plain;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const bool duplicates = distinct.size() != plain.size();
  const bool in_range = std::all_of(plain.begin(), plain.end(),
                                    [n](const Edge& e) { return e.u >= 0 && e.v < n; });
  if (t.kind == TransversalKind::cycle) {
    if (duplicates || !in_range || !forms_hamiltonian_cycle(n, plain)) {
      add(ViolationKind::not_hamiltonian_cycle, "edges do not form a Hamiltonian cycle");
    }
  } else {
    if (duplicates || !in_range || !forms_perfect_matching(n, plain)) {
      add(ViolationKind::not_a_matching, "not a matching: edges do not form a perfect matching");
    }
  }
  return report;
}

// ---------------------------------------------------------------- indexing

NaturalIndexing NaturalIndexing::inverse() const {
  NaturalIndexing inv;
  inv.vertex_perm.resize(vertex_perm.size());
  inv.color_perm.resize(color_perm.size());
  for (std::size_t v = 0; v < vertex_perm.size(); ++v) inv.vertex_perm[static_cast<std::size_t>(vertex_perm[v])] = static_cast<Vertex>(v);
  for (std::size_t c = 0; c < color_perm.size(); ++c) inv.color_perm[static_cast<std::size_t>(color_perm[c])] = static_cast<Color>(c);
  return inv;
}

std::vector<Vertex> NaturalIndexing::map_vertices(std::span<const Vertex> vs) const {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(map_vertex(v));
  std::sort(out.begin(), out.end());
  return out;
}

SubgraphFamily NaturalIndexing::apply(const SubgraphFamily& family) const {
  SubgraphFamily out;
  out.kind = family.kind;
  out.base = family.base.relabeled(vertex_perm);
  out.subgraphs.resize(family.subgraphs.size());
  std::map<const Graph*, std::shared_ptr<const Graph>> cache;
  for (std::size_t c = 0; c < family.subgraphs.size(); ++c) {
    const Graph* key = family.subgraphs[c].get();
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, std::make_shared<const Graph>(key->relabeled(vertex_perm))).first;
    }
    out.subgraphs[static_cast<std::size_t>(color_perm[c])] = it->second;
  }
  return out;
}

Transversal NaturalIndexing::apply(const Transversal& t) const {
  Transversal out;
  out.kind = t.kind;
  for (const auto& [e, c] : t.edges) {
    out.edges.push_back({Edge::of(map_vertex(e.u), map_vertex(e.v)), color_perm[static_cast<std::size_t>(c)]});
  }
  return out.canonical();
}

bool NaturalIndexing::is_identity() const {
  for (std::size_t v = 0; v < vertex_perm.size(); ++v) {
    if (vertex_perm[v] != static_cast<Vertex>(v)) return false;
  }
  for (std::size_t c = 0; c < color_perm.size(); ++c) {
    if (color_perm[c] != static_cast<Color>(c)) return false;
  }
  return true;
}

IndexedInstance naturally_index(const SubgraphFamily& family, const Transversal& t) {
  if (auto report = validate_transversal(family, t); !report.ok()) {
    throw Error(ErrorCode::invalid_transversal, report.summary());
  }
  const int n = family.num_vertices();
  const int s = family.num_colors();
  NaturalIndexing idx;
  idx.vertex_perm.assign(static_cast<std::size_t>(n), -1);
  idx.color_perm.assign(static_cast<std::size_t>(s), -1);

  if (t.kind == TransversalKind::cycle) {
    // Walk the cycle starting with the color-0 edge. Start at the endpoint
    // whose other edge has the larger color so canonical input maps to itself.
    std::vector<std::vector<std::pair<Vertex, Color>>> nbrs(static_cast<std::size_t>(n));
    Edge first{};
    for (const auto& [e, c] : t.edges) {
      nbrs[static_cast<std::size_t>(e.u)].push_back({e.v, c});
      nbrs[static_cast<std::size_t>(e.v)].push_back({e.u, c});
      if (c == 0) first = e;
    }
    auto other_color = [&](Vertex v) {
      const auto& nb = nbrs[static_cast<std::size_t>(v)];
      return nb[0].second == 0 ? nb[1].second : nb[0].second;
    };
    Vertex start = other_color(first.u) > other_color(first.v) ? first.u : first.v;
    Vertex prev = start;
    Vertex cur = first.other(start);
    idx.vertex_perm[static_cast<std::size_t>(start)] = 0;
    idx.color_perm[0] = 0;
    for (int pos = 1; pos < n; ++pos) {
      idx.vertex_perm[static_cast<std::size_t>(cur)] = pos;
      const auto& nb = nbrs[static_cast<std::size_t>(cur)];
      const auto& step = nb[0].first != prev ? nb[0] : nb[1];
      idx.color_perm[static_cast<std::size_t>(step.second)] = pos;
      prev = cur;
      cur = step.first;
    }
  } else {
    const int pairs = n / 2;
    for (const auto& [e, c] : t.edges) {
      idx.vertex_perm[static_cast<std::size_t>(e.u)] = c;
      idx.vertex_perm[static_cast<std::size_t>(e.v)] = pairs + c;
    }
    std::iota(idx.color_perm.begin(), idx.color_perm.end(), 0);
  }

  IndexedInstance out{idx.apply(family), idx.apply(t), idx};
  return out;
}

}  // namespace transversals
