#include "transversals/digraphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "transversals/errors.hpp"

namespace transversals {

CandidateSet::CandidateSet(int num_vertices, std::vector<Vertex> members)
    : members_(std::move(members)), mask_(static_cast<std::size_t>(num_vertices), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) {
    if (v < 0 || v >= num_vertices) {
      throw Error(ErrorCode::domain_error, "set member " + std::to_string(v) + " outside [0, " +
                                               std::to_string(num_vertices) + ")");
    }
    mask_[static_cast<std::size_t>(v)] = 1;
  }
}

CandidateSet CandidateSet::without(Vertex v) const {
  std::vector<Vertex> rest;
  for (Vertex w : members_) {
    if (w != v) rest.push_back(w);
  }
  return CandidateSet(num_vertices(), std::move(rest));
}

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool subset_lists(const std::vector<std::vector<Vertex>>& a, const std::vector<std::vector<Vertex>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::includes(b[i].begin(), b[i].end(), a[i].begin(), a[i].end())) return false;
  }
  return true;
}

int count_in(const std::vector<Vertex>& heads, const CandidateSet& s) {
  int k = 0;
  for (Vertex h : heads) k += s.contains(h) ? 1 : 0;
  return k;
}

}  // namespace

// ---------------------------------------------------------------- RYB

RybDigraph RybDigraph::empty(int n) {
  RybDigraph d;
  d.n = n;
  d.yellow.assign(static_cast<std::size_t>(n), {});
  d.blue.assign(static_cast<std::size_t>(n), {});
  return d;
}

int RybDigraph::circular_distance(Vertex a, Vertex b) const {
  int diff = std::abs(a - b) % n;
  return std::min(diff, n - diff);
}

bool RybDigraph::has_red(Vertex a, Vertex b) const {
  if (a == b) return false;
  int dist = circular_distance(a, b);
  return dist == 1 || dist == 2;
}

std::vector<Edge> RybDigraph::red_edges() const {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n; ++i) {
    out.push_back(Edge::of(i, (i + 1) % n));
    out.push_back(Edge::of(i, (i + 2) % n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove_if(out.begin(), out.end(), [](const Edge& e) { return e.is_loop(); }), out.end());
  return out;
}

bool RybDigraph::has_yellow(Vertex tail, Vertex head) const {
  return sorted_contains(yellow[static_cast<std::size_t>(tail)], head);
}

bool RybDigraph::has_blue(Vertex tail, Vertex head) const {
  return sorted_contains(blue[static_cast<std::size_t>(tail)], head);
}

int RybDigraph::num_arcs() const {
  int k = 0;
  for (Vertex v = 0; v < n; ++v) {
    k += static_cast<int>(yellow[static_cast<std::size_t>(v)].size() + blue[static_cast<std::size_t>(v)].size());
  }
  return k;
}

bool RybDigraph::is_subdigraph_of(const RybDigraph& other) const {
  return n == other.n && subset_lists(yellow, other.yellow) && subset_lists(blue, other.blue);
}

RybDigraph build_full_ryb(const SubgraphFamily& family, const Transversal& t) {
  if (family.kind != FamilyKind::hamiltonian || !is_naturally_indexed(family, t)) {
    throw Error(ErrorCode::not_naturally_indexed, "transversal is not the canonical cycle 0..n-1");
  }
  const int n = family.num_vertices();
  RybDigraph h = RybDigraph::empty(n);
  for (Vertex i = 0; i < n; ++i) {
    const Vertex before = h.pred(i);
    const Vertex after = h.succ(i);
    for (Vertex j : family.subgraph(i).neighbors(i)) {
      if (j != before && j != after && j != i) h.yellow[static_cast<std::size_t>(i)].push_back(j);
    }
    for (Vertex j : family.subgraph(before).neighbors(i)) {
      if (j != before && j != after && j != i) h.blue[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return h;
}

// ---------------------------------------------------------------- RB

RbDigraph RbDigraph::empty(int n) {
  RbDigraph d;
  d.n = n;
  d.blue.assign(static_cast<std::size_t>(2 * n), {});
  return d;
}

bool RbDigraph::has_blue(Vertex tail, Vertex head) const {
  return sorted_contains(blue[static_cast<std::size_t>(tail)], head);
}

int RbDigraph::num_arcs() const {
  int k = 0;
  for (const auto& b : blue) k += static_cast<int>(b.size());
  return k;
}

bool RbDigraph::is_subdigraph_of(const RbDigraph& other) const {
  return n == other.n && subset_lists(blue, other.blue);
}

RbDigraph build_full_rb(const SubgraphFamily& family, const Transversal& t) {
  if (family.kind != FamilyKind::matching || !is_naturally_indexed(family, t)) {
    throw Error(ErrorCode::not_naturally_indexed, "transversal is not the canonical matching {(i, n+i)}");
  }
  const int n = family.num_vertices() / 2;
  RbDigraph h = RbDigraph::empty(n);
  for (Vertex v = 0; v < 2 * n; ++v) {
    const int pair = h.pair_of(v);
    for (Vertex w : family.subgraph(pair).neighbors(v)) {
      if (h.pair_of(w) != pair) h.blue[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  return h;
}

// ---------------------------------------------------------------- predicates

bool is_red_independent(const RybDigraph& j, const CandidateSet& s) {
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (j.circular_distance(m[a], m[b]) < 3) return false;
    }
  }
  return true;
}

bool is_red_independent(const RbDigraph& j, const CandidateSet& s) {
  for (Vertex v : s.members()) {
    if (v < j.n && s.contains(j.partner(v))) return false;
  }
  return true;
}

bool is_maximal_red_independent(const RbDigraph& j, const CandidateSet& s) {
  if (s.num_vertices() != j.num_vertices()) return false;
  for (Vertex i = 0; i < j.n; ++i) {
    if (s.contains(i) == s.contains(j.partner(i))) return false;
  }
  return true;
}

HamSetMetrics ham_metrics(const RybDigraph& h, const CandidateSet& s) {
  HamSetMetrics m;
  m.red_independent = is_red_independent(h, s);
  int best = s.empty() ? 0 : std::numeric_limits<int>::max();
  for (Vertex i : s.members()) {
    int y = count_in(h.yellow[static_cast<std::size_t>(h.pred(i))], s);
    int b = count_in(h.blue[static_cast<std::size_t>(h.succ(i))], s);
    m.yellow_counts.push_back(y);
    m.blue_counts.push_back(b);
    best = std::min({best, y, b});
  }
  m.d_star = best;
  return m;
}

PmSetMetrics pm_metrics(const RbDigraph& h, const CandidateSet& s) {
  PmSetMetrics m;
  m.maximal_red_independent = is_maximal_red_independent(h, s);
  int best = s.empty() ? 0 : std::numeric_limits<int>::max();
  for (Vertex v : s.members()) {
    const auto& heads = h.blue[static_cast<std::size_t>(v)];
    int k = static_cast<int>(heads.size()) - count_in(heads, s);
    m.escape_counts.push_back(k);
    best = std::min(best, k);
  }
  m.d_cross = best;
  return m;
}

bool is_locally_dominating(const RybDigraph& j, const CandidateSet& s) {
  if (!is_red_independent(j, s)) throw Error(ErrorCode::not_red_independent, "S has two members within distance 2");
  if (s.empty()) return false;
  return ham_metrics(j, s).d_star >= 1;
}

int d_star(const RybDigraph& h, const CandidateSet& s) {
  if (!is_red_independent(h, s)) throw Error(ErrorCode::not_red_independent, "S has two members within distance 2");
  return ham_metrics(h, s).d_star;
}

int d_cross(const RbDigraph& h, const CandidateSet& s) {
  if (!is_maximal_red_independent(h, s)) {
    throw Error(ErrorCode::not_maximal_red_independent, "S must hold exactly one endpoint of every red pair");
  }
  return pm_metrics(h, s).d_cross;
}

// ---------------------------------------------------------------- Omega

namespace {

// Per vertex, the (neighbor, color) entries of a transversal.
std::vector<std::vector<std::pair<Vertex, Color>>> incidence(const Transversal& t, int num_vertices) {
  std::vector<std::vector<std::pair<Vertex, Color>>> inc(static_cast<std::size_t>(num_vertices));
  for (const auto& [e, c] : t.edges) {
    if (e.u < 0 || e.v >= num_vertices) continue;
    inc[static_cast<std::size_t>(e.u)].push_back({e.v, c});
    if (!e.is_loop()) inc[static_cast<std::size_t>(e.v)].push_back({e.u, c});
  }
  return inc;
}

}  // namespace

bool omega_member_ham(const Transversal& base, const CandidateSet& s, const Transversal& cand) {
  const int n = s.num_vertices();
  if (cand.kind != TransversalKind::cycle || static_cast<int>(cand.edges.size()) != n) return false;
  const auto base_inc = incidence(base, n);
  const auto cand_inc = incidence(cand, n);
  for (const auto& nb : cand_inc) {
    if (nb.size() != 2) return false;
  }
  for (const auto& [e, c] : base.edges) {
    const bool touches_s = s.contains(e.u) || s.contains(e.v);
    if (!touches_s && cand.color_of(e) != c) return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    Color want = -1;
    for (const auto& [w, c] : base_inc[static_cast<std::size_t>(v)]) {
      if (s.contains(w)) want = c;
    }
    if (want < 0) continue;
    int to_s = 0;
    Color got = -1;
    for (const auto& [w, c] : cand_inc[static_cast<std::size_t>(v)]) {
      if (s.contains(w)) {
        ++to_s;
        got = c;
      }
    }
    if (to_s != 1 || got != want) return false;
  }
  // Connectivity: one cycle through all vertices.
  Vertex prev = -1;
  Vertex cur = 0;
  for (int steps = 0; steps < n; ++steps) {
    const auto& nb = cand_inc[static_cast<std::size_t>(cur)];
    Vertex next = nb[0].first != prev ? nb[0].first : nb[1].first;
    prev = cur;
    cur = next;
    if (cur == 0) return steps == n - 1;
  }
  return false;
}

bool omega_member_pm(const Transversal& base, const CandidateSet& s, const Transversal& cand) {
  const int num_vertices = s.num_vertices();
  if (cand.kind != TransversalKind::matching || static_cast<int>(cand.edges.size()) * 2 != num_vertices) {
    return false;
  }
  const auto base_inc = incidence(base, num_vertices);
  const auto cand_inc = incidence(cand, num_vertices);
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (cand_inc[static_cast<std::size_t>(v)].size() != 1) return false;
  }
  for (const auto& [e, c] : cand.edges) {
    if (s.contains(e.u) == s.contains(e.v)) return false;
  }
  for (Vertex v : s.members()) {
    const auto& b = base_inc[static_cast<std::size_t>(v)];
    if (b.size() != 1) return false;
    if (cand_inc[static_cast<std::size_t>(v)][0].second != b[0].second) return false;
  }
  return true;
}

int d_star_for(const SubgraphFamily& family, const Transversal& t, const CandidateSet& s) {
  auto inst = naturally_index(family, t);
  CandidateSet mapped(s.num_vertices(), inst.indexing.map_vertices(s.members()));
  return d_star(build_full_ryb(inst.family, inst.transversal), mapped);
}

int d_cross_for(const SubgraphFamily& family, const Transversal& t, const CandidateSet& s) {
  auto inst = naturally_index(family, t);
  CandidateSet mapped(s.num_vertices(), inst.indexing.map_vertices(s.members()));
  return d_cross(build_full_rb(inst.family, inst.transversal), mapped);
}

}  // namespace transversals
