#include "transversals/multiplier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "transversals/errors.hpp"
#include "transversals/exchange.hpp"

namespace transversals {

const Transversal* WitnessTable::witness(Vertex v, Vertex w) const {
  auto it = witnesses.find({v, w});
  return it == witnesses.end() ? nullptr : &it->second;
}

namespace {

void require_natural(const SubgraphFamily& family, const Transversal& base) {
  if (!is_naturally_indexed(family, base)) {
    throw Error(ErrorCode::not_naturally_indexed, "base transversal must be canonical");
  }
}

std::vector<Vertex> set_heads(const std::vector<Vertex>& heads, const CandidateSet& s, bool inside) {
  std::vector<Vertex> out;
  for (Vertex h : heads) {
    if (s.contains(h) == inside) out.push_back(h);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Omega enumeration

std::vector<Transversal> enumerate_omega_ham(const SubgraphFamily& family, const Transversal& base,
                                             const CandidateSet& s) {
  require_natural(family, base);
  const int n = family.num_vertices();
  const RybDigraph frame = RybDigraph::empty(n);
  if (!is_red_independent(frame, s)) throw Error(ErrorCode::not_red_independent, "S is not red-independent");
  if (s.empty()) return {base};

  struct Segment {
    std::vector<Vertex> vertices;  // base order, from s_j + 1 to s_{j+1} - 1
  };
  const auto& members = s.members();
  const int k = s.size();
  std::vector<Segment> segments;
  for (int j = 0; j < k; ++j) {
    Segment seg;
    Vertex stop = members[static_cast<std::size_t>((j + 1) % k)];
    for (Vertex v = frame.succ(members[static_cast<std::size_t>(j)]); v != stop; v = frame.succ(v)) {
      seg.vertices.push_back(v);
    }
    segments.push_back(std::move(seg));
  }
  // Color carried by a path end: the base color of its edge into S.
  auto end_color = [&](Vertex v) { return s.contains(frame.succ(v)) ? v : frame.pred(v); };
  auto admissible = [&](Vertex end, Vertex member) {
    return family.in_subgraph(end_color(end), Edge::of(end, member));
  };

  std::vector<Transversal> out;
  std::vector<char> seg_used(static_cast<std::size_t>(k), 0);
  std::vector<char> member_used(static_cast<std::size_t>(k), 0);
  std::vector<ColoredEdge> links;

  auto emit = [&]() {
    Transversal t;
    t.kind = TransversalKind::cycle;
    for (const auto& seg : segments) {
      for (std::size_t a = 0; a + 1 < seg.vertices.size(); ++a) {
        Vertex v = seg.vertices[a];
        t.edges.push_back({Edge::of(v, seg.vertices[a + 1]), v});
      }
    }
    t.edges.insert(t.edges.end(), links.begin(), links.end());
    out.push_back(t.canonical());
  };

  const Vertex start = members[0];
  member_used[0] = 1;
  std::function<void(Vertex, int)> extend = [&](Vertex at_member, int placed) {
    for (int j = 0; j < k; ++j) {
      if (seg_used[static_cast<std::size_t>(j)]) continue;
      const auto& vs = segments[static_cast<std::size_t>(j)].vertices;
      for (int flip = 0; flip < 2; ++flip) {
        if (flip == 1 && vs.size() == 1) break;
        Vertex enter = flip ? vs.back() : vs.front();
        Vertex leave = flip ? vs.front() : vs.back();
        if (!admissible(enter, at_member)) continue;
        seg_used[static_cast<std::size_t>(j)] = 1;
        links.push_back({Edge::of(enter, at_member), end_color(enter)});
        if (placed + 1 == k) {
          if (admissible(leave, start)) {
            links.push_back({Edge::of(leave, start), end_color(leave)});
            emit();
            links.pop_back();
          }
        } else {
          for (int m = 1; m < k; ++m) {
            if (member_used[static_cast<std::size_t>(m)]) continue;
            Vertex next = members[static_cast<std::size_t>(m)];
            if (!admissible(leave, next)) continue;
            member_used[static_cast<std::size_t>(m)] = 1;
            links.push_back({Edge::of(leave, next), end_color(leave)});
            extend(next, placed + 1);
            links.pop_back();
            member_used[static_cast<std::size_t>(m)] = 0;
          }
        }
        links.pop_back();
        seg_used[static_cast<std::size_t>(j)] = 0;
      }
    }
  };
  extend(start, 0);
  sort_unique(out);
  return out;
}

std::vector<Transversal> enumerate_omega_pm(const SubgraphFamily& family, const Transversal& base,
                                            const CandidateSet& s) {
  require_natural(family, base);
  const RbDigraph frame = RbDigraph::empty(family.num_vertices() / 2);
  if (!is_maximal_red_independent(frame, s)) {
    throw Error(ErrorCode::not_maximal_red_independent, "S must hold exactly one endpoint of every red pair");
  }
  const auto& members = s.members();
  std::vector<std::vector<Vertex>> options;
  for (Vertex v : members) {
    std::vector<Vertex> opts;
    for (Vertex w : family.subgraph(frame.pair_of(v)).neighbors(v)) {
      if (!s.contains(w)) opts.push_back(w);
    }
    options.push_back(std::move(opts));
  }
  std::vector<Transversal> out;
  std::vector<char> taken(static_cast<std::size_t>(family.num_vertices()), 0);
  std::vector<ColoredEdge> chosen;
  std::function<void(std::size_t)> assign = [&](std::size_t idx) {
    if (idx == members.size()) {
      Transversal t{TransversalKind::matching, chosen};
      out.push_back(t.canonical());
      return;
    }
    for (Vertex w : options[idx]) {
      if (taken[static_cast<std::size_t>(w)]) continue;
      taken[static_cast<std::size_t>(w)] = 1;
      chosen.push_back({Edge::of(members[idx], w), frame.pair_of(members[idx])});
      assign(idx + 1);
      chosen.pop_back();
      taken[static_cast<std::size_t>(w)] = 0;
    }
  };
  assign(0);
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- saturated vertices

SaturatedVertex find_saturated_vertex_ham(const SubgraphFamily& family, const Transversal& base,
                                          const CandidateSet& s, const RybDigraph& h) {
  require_natural(family, base);
  if (!is_red_independent(h, s)) throw Error(ErrorCode::not_red_independent, "S is not red-independent");
  SaturatedVertex out;
  WitnessTable& table = out.table;

  // v -> (S-neighbor on the base cycle, yellow?)
  std::map<Vertex, std::pair<Vertex, bool>> ends;
  for (Vertex i : s.members()) {
    ends[h.pred(i)] = {i, true};
    ends[h.succ(i)] = {i, false};
  }
  for (const auto& [v, info] : ends) {
    const auto& [member, yellow] = info;
    const auto& heads = yellow ? h.yellow[static_cast<std::size_t>(v)] : h.blue[static_cast<std::size_t>(v)];
    auto u = set_heads(heads, s, true);
    table.unrealized[v] = u;
    u.push_back(member);
    std::sort(u.begin(), u.end());
    table.targets[v] = u;
    table.witnesses.emplace(std::make_pair(v, member), base);
  }

  auto any_empty = [&]() {
    return std::any_of(table.unrealized.begin(), table.unrealized.end(),
                       [](const auto& kv) { return kv.second.empty(); });
  };
  while (!any_empty()) {
    RybDigraph j = RybDigraph::empty(h.n);
    for (const auto& [v, u] : table.unrealized) {
      auto& list = ends[v].second ? j.yellow[static_cast<std::size_t>(v)] : j.blue[static_cast<std::size_t>(v)];
      list.push_back(u.front());
    }
    Transversal second = second_ham_transversal(family, base, s, j);
    ++table.iterations;
    bool progressed = false;
    for (auto& [v, u] : table.unrealized) {
      if (second.contains(Edge::of(v, u.front()))) {
        table.witnesses.emplace(std::make_pair(v, u.front()), second);
        u.erase(u.begin());
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("second transversal used no unrealized edge");
  }
  for (const auto& [v, u] : table.unrealized) {
    if (u.empty()) {
      out.vertex = v;
      break;
    }
  }
  return out;
}

SaturatedVertex find_saturated_vertex_pm(const SubgraphFamily& family, const Transversal& base,
                                         const CandidateSet& s, const RbDigraph& h) {
  require_natural(family, base);
  if (!is_maximal_red_independent(h, s)) {
    throw Error(ErrorCode::not_maximal_red_independent, "S must hold exactly one endpoint of every red pair");
  }
  SaturatedVertex out;
  WitnessTable& table = out.table;
  for (Vertex v : s.members()) {
    auto u = set_heads(h.blue[static_cast<std::size_t>(v)], s, false);
    table.unrealized[v] = u;
    u.push_back(h.partner(v));
    std::sort(u.begin(), u.end());
    table.targets[v] = u;
    table.witnesses.emplace(std::make_pair(v, h.partner(v)), base);
  }
  auto any_empty = [&]() {
    return std::any_of(table.unrealized.begin(), table.unrealized.end(),
                       [](const auto& kv) { return kv.second.empty(); });
  };
  while (!any_empty()) {
    RbDigraph j = RbDigraph::empty(h.n);
    for (const auto& [v, u] : table.unrealized) j.blue[static_cast<std::size_t>(v)].push_back(u.front());
    Transversal second = second_pm_transversal(family, base, s, j);
    ++table.iterations;
    bool progressed = false;
    for (auto& [v, u] : table.unrealized) {
      if (second.contains(Edge::of(v, u.front()))) {
        table.witnesses.emplace(std::make_pair(v, u.front()), second);
        u.erase(u.begin());
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("switched matching used no unrealized arc");
  }
  for (const auto& [v, u] : table.unrealized) {
    if (u.empty()) {
      out.vertex = v;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- recursions

namespace {

std::vector<Transversal> many_ham_impl(const SubgraphFamily& family, const Transversal& base,
                                       const CandidateSet& s, int level, MultiplyStats& stats) {
  ++stats.recursion_nodes;
  const RybDigraph h = build_full_ryb(family, base);
  const int d = d_star(h, s);
  if (d == 0) return {base};

  const SaturatedVertex sat = find_saturated_vertex_ham(family, base, s, h);
  stats.witness_iterations += sat.table.iterations;
  const Vertex v0 = sat.vertex;
  const auto& targets = sat.table.targets.at(v0);
  if (static_cast<int>(targets.size()) < d + 1) {
    throw std::logic_error("saturated vertex has fewer than d+1 edges into S");
  }

  std::vector<Transversal> out;
  for (Vertex w : targets) {
    const Transversal* branch = sat.table.witness(v0, w);
    if (!branch) throw std::logic_error("saturated vertex is missing a witness");
    auto inst = naturally_index(family, *branch);
    CandidateSet reduced(s.num_vertices(), inst.indexing.map_vertices(s.without(w).members()));
    const int d_next = d_star(build_full_ryb(inst.family, inst.transversal), reduced);
    stats.level_checks.emplace_back(level, d, d_next);
    if (d_next < d - 1) throw std::logic_error("d* dropped by more than one across a recursion level");
    const NaturalIndexing back = inst.indexing.inverse();
    for (const Transversal& t : many_ham_impl(inst.family, inst.transversal, reduced, level + 1, stats)) {
      out.push_back(back.apply(t));
    }
  }
  sort_unique(out);
  return out;
}

struct ReducedInstance {
  SubgraphFamily family;
  Transversal transversal;
  std::vector<Vertex> old_vertex;  // new -> old
  std::vector<Color> old_color;    // new -> old
};

// Deletes vertices {a, b} and color c; the remaining colors keep their order.
ReducedInstance remove_pair(const SubgraphFamily& family, const Transversal& t, Vertex a, Vertex b, Color c) {
  ReducedInstance out;
  std::vector<Vertex> new_vertex(static_cast<std::size_t>(family.num_vertices()), -1);
  for (Vertex v = 0; v < family.num_vertices(); ++v) {
    if (v == a || v == b) continue;
    new_vertex[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.old_vertex.size());
    out.old_vertex.push_back(v);
  }
  std::vector<Color> new_color(static_cast<std::size_t>(family.num_colors()), -1);
  out.family.kind = family.kind;
  out.family.base = family.base.induced(out.old_vertex);
  std::map<const Graph*, std::shared_ptr<const Graph>> cache;
  for (Color k = 0; k < family.num_colors(); ++k) {
    if (k == c) continue;
    new_color[static_cast<std::size_t>(k)] = static_cast<Color>(out.old_color.size());
    out.old_color.push_back(k);
    const Graph* key = family.subgraphs[static_cast<std::size_t>(k)].get();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<const Graph>(key->induced(out.old_vertex))).first;
    out.family.subgraphs.push_back(it->second);
  }
  out.transversal.kind = t.kind;
  for (const auto& [e, col] : t.edges) {
    if (e.touches(a) || e.touches(b)) continue;
    out.transversal.edges.push_back({Edge::of(new_vertex[static_cast<std::size_t>(e.u)],
                                              new_vertex[static_cast<std::size_t>(e.v)]),
                                     new_color[static_cast<std::size_t>(col)]});
  }
  out.transversal = out.transversal.canonical();
  return out;
}

std::vector<Transversal> many_pm_impl(const SubgraphFamily& family, const Transversal& base,
                                      const CandidateSet& s, int level, MultiplyStats& stats) {
  ++stats.recursion_nodes;
  const RbDigraph h = build_full_rb(family, base);
  if (h.n <= 1) return {base};
  const int d = d_cross(h, s);
  if (d == 0) return {base};

  const SaturatedVertex sat = find_saturated_vertex_pm(family, base, s, h);
  stats.witness_iterations += sat.table.iterations;
  const Vertex v0 = sat.vertex;
  const auto& targets = sat.table.targets.at(v0);
  if (static_cast<int>(targets.size()) < d + 1) {
    throw std::logic_error("saturated vertex has fewer than d+1 escaping arcs");
  }

  std::vector<Transversal> out;
  for (Vertex w : targets) {
    const Transversal* branch = sat.table.witness(v0, w);
    if (!branch) throw std::logic_error("saturated vertex is missing a witness");
    const Edge kept = Edge::of(v0, w);
    const Color c = branch->color_of(kept);
    ReducedInstance red = remove_pair(family, *branch, v0, w, c);

    std::vector<Vertex> rest;
    for (std::size_t nv = 0; nv < red.old_vertex.size(); ++nv) {
      if (s.contains(red.old_vertex[nv])) rest.push_back(static_cast<Vertex>(nv));
    }
    auto inst = naturally_index(red.family, red.transversal);
    CandidateSet reduced(red.family.num_vertices(), inst.indexing.map_vertices(rest));
    const int d_next = d_cross(build_full_rb(inst.family, inst.transversal), reduced);
    stats.level_checks.emplace_back(level, d, d_next);
    if (d_next < d - 1) throw std::logic_error("dx dropped by more than one across a recursion level");

    const NaturalIndexing back = inst.indexing.inverse();
    for (const Transversal& sub : many_pm_impl(inst.family, inst.transversal, reduced, level + 1, stats)) {
      const Transversal local = back.apply(sub);
      Transversal full;
      full.kind = TransversalKind::matching;
      for (const auto& [e, col] : local.edges) {
        full.edges.push_back({Edge::of(red.old_vertex[static_cast<std::size_t>(e.u)],
                                       red.old_vertex[static_cast<std::size_t>(e.v)]),
                              red.old_color[static_cast<std::size_t>(col)]});
      }
      full.edges.push_back({kept, c});
      out.push_back(full.canonical());
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<Transversal> many_ham_transversals(const SubgraphFamily& family, const Transversal& base,
                                               const CandidateSet& s, MultiplyStats* stats) {
  const RybDigraph h = build_full_ryb(family, base);
  if (d_star(h, s) == 0) throw Error(ErrorCode::d_star_too_small, "d* = 0; no multiplication possible");
  MultiplyStats local;
  auto out = many_ham_impl(family, base, s, 0, stats ? *stats : local);
  return out;
}

std::vector<Transversal> many_pm_transversals(const SubgraphFamily& family, const Transversal& base,
                                              const CandidateSet& s, MultiplyStats* stats) {
  const RbDigraph h = build_full_rb(family, base);
  if (!is_maximal_red_independent(h, s)) {
    throw Error(ErrorCode::not_maximal_red_independent, "S must hold exactly one endpoint of every red pair");
  }
  MultiplyStats local;
  return many_pm_impl(family, base, s, 0, stats ? *stats : local);
}

}  // namespace transversals
