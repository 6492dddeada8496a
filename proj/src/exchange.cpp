#include "transversals/exchange.hpp"

#include <algorithm>
#include <map>

#include "transversals/errors.hpp"

namespace transversals {

Graph PrunedDigraph::underlying() const {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n(); ++i) edges.push_back(Edge::of(i, digraph.succ(i)));
  for (const Arc& a : yellow_arcs) edges.push_back(a.underlying());
  for (const Arc& a : blue_arcs) edges.push_back(a.underlying());
  return Graph(n(), edges);
}

PrunedDigraph prune(const RybDigraph& j, const CandidateSet& s) {
  if (s.empty()) throw Error(ErrorCode::not_locally_dominating, "S is empty");
  if (!is_red_independent(j, s)) throw Error(ErrorCode::not_red_independent, "S has two members within distance 2");
  PrunedDigraph jp;
  jp.digraph = RybDigraph::empty(j.n);
  jp.set = s;
  for (Vertex i : s.members()) {
    const Vertex before = j.pred(i);
    const Vertex after = j.succ(i);
    const auto& ys = j.yellow[static_cast<std::size_t>(before)];
    const auto& bs = j.blue[static_cast<std::size_t>(after)];
    auto y = std::find_if(ys.begin(), ys.end(), [&](Vertex h) { return s.contains(h); });
    auto b = std::find_if(bs.begin(), bs.end(), [&](Vertex h) { return s.contains(h); });
    if (y == ys.end() || b == bs.end()) {
      throw Error(ErrorCode::not_locally_dominating,
                  "member " + std::to_string(i) + " lacks a " + (y == ys.end() ? "yellow" : "blue") +
                      " arc into S");
    }
    jp.yellow_arcs.push_back({before, *y});
    jp.blue_arcs.push_back({after, *b});
    jp.digraph.yellow[static_cast<std::size_t>(before)].push_back(*y);
    jp.digraph.blue[static_cast<std::size_t>(after)].push_back(*b);
  }
  return jp;
}

VertexCycle lollipop_second_cycle(const PrunedDigraph& jp, const Edge& anchor, LollipopTrace* trace) {
  const int n = jp.n();
  Vertex first = -1;
  if (jp.set.contains(anchor.u) && jp.digraph.succ(anchor.u) == anchor.v) first = anchor.u;
  if (jp.set.contains(anchor.v) && jp.digraph.succ(anchor.v) == anchor.u) first = anchor.v;
  if (first < 0) {
    throw Error(ErrorCode::domain_error, "anchor " + to_string(anchor) + " is not (s, s+1) for a member s");
  }
  const Graph g = jp.underlying();

  std::vector<Vertex> path(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    path[static_cast<std::size_t>(k)] = (first + k) % n;
    pos[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])] = k;
  }
  if (trace) {
    trace->states.assign(1, path);
    trace->pivots.clear();
  }

  Vertex came_through = -1;
  // A has maximum degree 2, so the walk from Q0 is a simple path; the cap only
  // guards against an upstream invariant bug.
  const long long max_steps = 1LL << 40;
  for (long long step = 0; step < max_steps; ++step) {
    const Vertex end = path[static_cast<std::size_t>(n - 1)];
    const Vertex before_end = path[static_cast<std::size_t>(n - 2)];
    if (g.degree(end) != 3) {
      throw Error(ErrorCode::walk_stuck, "path end " + std::to_string(end) + " has degree " +
                                             std::to_string(g.degree(end)) + ", expected 3");
    }
    bool closes = false;
    std::vector<Vertex> pivots;
    for (Vertex u : g.neighbors(end)) {
      if (u == before_end) continue;
      if (u == first) {
        closes = true;
      } else {
        pivots.push_back(u);
      }
    }
    if (closes && step > 0) {
      if (pivots.size() != 1 || pivots[0] != came_through) {
        throw Error(ErrorCode::walk_stuck, "degree-1 state reached through an unexpected pivot");
      }
      return path;
    }
    Vertex pivot = -1;
    for (Vertex u : pivots) {
      if (u != came_through) {
        if (pivot >= 0) throw Error(ErrorCode::walk_stuck, "rotation pivot is ambiguous");
        pivot = u;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::walk_stuck, "no rotation pivot available");

    const int at = pos[static_cast<std::size_t>(pivot)];
    std::reverse(path.begin() + at + 1, path.end());
    for (int k = at + 1; k < n; ++k) pos[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])] = k;
    came_through = pivot;
    if (trace) {
      trace->pivots.push_back(pivot);
      trace->states.push_back(path);
    }
  }
  throw Error(ErrorCode::walk_stuck, "step cap reached");
}

Transversal recolor_ham(const VertexCycle& cstar, const PrunedDigraph& jp, const Transversal& base) {
  const int n = jp.n();
  if (static_cast<int>(cstar.size()) != n || static_cast<int>(base.edges.size()) != n) {
    throw Error(ErrorCode::recolor_conflict, "cycle length does not match the instance");
  }
  std::map<Edge, Color> rule;
  for (Vertex i = 0; i < n; ++i) rule[Edge::of(i, jp.digraph.succ(i))] = i;
  for (const Arc& a : jp.yellow_arcs) rule[a.underlying()] = a.tail;
  for (const Arc& a : jp.blue_arcs) rule[a.underlying()] = jp.digraph.pred(a.tail);

  Transversal out;
  out.kind = TransversalKind::cycle;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int k = 0; k + 1 < n; ++k) {
    Edge e = Edge::of(cstar[static_cast<std::size_t>(k)], cstar[static_cast<std::size_t>(k + 1)]);
    auto it = rule.find(e);
    if (it == rule.end()) throw Error(ErrorCode::recolor_conflict, "edge " + to_string(e) + " is not in J'");
    if (used[static_cast<std::size_t>(it->second)]++) {
      throw Error(ErrorCode::recolor_conflict, "color " + std::to_string(it->second) + " assigned twice");
    }
    out.edges.push_back({e, it->second});
  }
  std::vector<Color> missing;
  for (Color c = 0; c < n; ++c) {
    if (!used[static_cast<std::size_t>(c)]) missing.push_back(c);
  }
  if (missing.size() != 1) {
    throw Error(ErrorCode::recolor_conflict, std::to_string(missing.size()) + " colors left for the closing edge");
  }
  out.edges.push_back({Edge::of(cstar.back(), cstar.front()), missing[0]});
  return out.canonical();
}

Transversal second_ham_transversal(const SubgraphFamily& family, const Transversal& base,
                                   const CandidateSet& s, const RybDigraph& j) {
  const RybDigraph full = build_full_ryb(family, base);
  if (!j.is_subdigraph_of(full)) {
    throw Error(ErrorCode::domain_error, "J is not an RYB-digraph of the base transversal");
  }
  if (!is_locally_dominating(j, s)) {
    throw Error(ErrorCode::not_locally_dominating, "S is not locally J-dominating");
  }
  const PrunedDigraph jp = prune(j, s);
  const Vertex first = s.members().front();
  const VertexCycle cstar = lollipop_second_cycle(jp, Edge::of(first, full.succ(first)));
  Transversal out = recolor_ham(cstar, jp, base);
  if (auto report = validate_transversal(family, out); !report.ok()) {
    throw Error(ErrorCode::recolor_conflict, "second transversal invalid: " + report.summary());
  }
  return out;
}

// ---------------------------------------------------------------- matchings

std::vector<Edge> AlternatingCycle::red_edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k + 1 < vertices.size(); k += 2) out.push_back(Edge::of(vertices[k], vertices[k + 1]));
  return out;
}

std::vector<Arc> AlternatingCycle::blue_arcs() const {
  std::vector<Arc> out;
  for (std::size_t k = 1; k < vertices.size(); k += 2) {
    out.push_back({vertices[k], vertices[(k + 1) % vertices.size()]});
  }
  return out;
}

AlternatingCycle find_alternating_cycle(const RbDigraph& j, const CandidateSet& s) {
  if (!is_maximal_red_independent(j, s)) {
    throw Error(ErrorCode::not_maximal_red_independent, "S must hold exactly one endpoint of every red pair");
  }
  if (j.n == 0) throw Error(ErrorCode::no_blue_escape, "no red pairs");
  std::vector<int> seen_at(static_cast<std::size_t>(j.n), -1);
  std::vector<Vertex> walk;  // (outside, inside) per pair
  Vertex inside = s.contains(0) ? 0 : j.partner(0);
  walk.push_back(j.partner(inside));
  walk.push_back(inside);
  seen_at[0] = 0;
  for (;;) {
    const auto& heads = j.blue[static_cast<std::size_t>(inside)];
    auto it = std::find_if(heads.begin(), heads.end(), [&](Vertex h) { return !s.contains(h); });
    if (it == heads.end()) {
      throw Error(ErrorCode::no_blue_escape, "member " + std::to_string(inside) + " has no blue arc leaving S");
    }
    const Vertex w = *it;
    const int pair = j.pair_of(w);
    if (seen_at[static_cast<std::size_t>(pair)] >= 0) {
      AlternatingCycle cycle;
      cycle.walk_pairs = static_cast<int>(walk.size() / 2);
      cycle.vertices.assign(walk.begin() + 2 * seen_at[static_cast<std::size_t>(pair)], walk.end());
      return cycle;
    }
    seen_at[static_cast<std::size_t>(pair)] = static_cast<int>(walk.size() / 2);
    inside = j.partner(w);
    walk.push_back(w);
    walk.push_back(inside);
  }
}

Transversal second_pm_transversal(const SubgraphFamily& family, const Transversal& base,
                                  const CandidateSet& s, const RbDigraph& j, AlternatingCycle* cycle_out) {
  const RbDigraph full = build_full_rb(family, base);
  if (!j.is_subdigraph_of(full)) {
    throw Error(ErrorCode::domain_error, "J is not an RB-digraph of the base transversal");
  }
  const AlternatingCycle cycle = find_alternating_cycle(j, s);
  std::vector<char> switched(static_cast<std::size_t>(j.n), 0);
  for (const Edge& e : cycle.red_edges()) switched[static_cast<std::size_t>(j.pair_of(e.u))] = 1;

  Transversal out;
  out.kind = TransversalKind::matching;
  for (const auto& ce : base.edges) {
    if (!switched[static_cast<std::size_t>(j.pair_of(ce.edge.u))]) out.edges.push_back(ce);
  }
  for (const Arc& a : cycle.blue_arcs()) out.edges.push_back({a.underlying(), j.pair_of(a.tail)});
  out = out.canonical();
  if (auto report = validate_transversal(family, out); !report.ok()) {
    throw Error(ErrorCode::recolor_conflict, "switched matching invalid: " + report.summary());
  }
  if (cycle_out) *cycle_out = cycle;
  return out;
}

}  // namespace transversals
