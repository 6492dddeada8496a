#include "transversals/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "transversals/errors.hpp"
#include "transversals/rng.hpp"

namespace transversals {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::x_event: return "x_event";
    case EventKind::y_yellow: return "y_yellow";
    case EventKind::y_blue: return "y_blue";
    case EventKind::b_i: return "b_i";
    case EventKind::chernoff_fail: return "chernoff_fail";
  }
  return "?";
}

namespace {

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::domain_error, "probability must lie in (0, 1)");
}

std::vector<Vertex> members_of(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<std::vector<Vertex>> reverse_lists(const std::vector<std::vector<Vertex>>& lists) {
  std::vector<std::vector<Vertex>> rev(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    for (Vertex w : lists[v]) rev[static_cast<std::size_t>(w)].push_back(static_cast<Vertex>(v));
  }
  return rev;
}

// Red neighbors at circular distance 1 and 2, deduplicated for tiny n.
std::vector<Vertex> red_neighbors(const RybDigraph& h, Vertex v) {
  std::vector<Vertex> out;
  for (int k : {-2, -1, 1, 2}) {
    Vertex w = ((v + k) % h.n + h.n) % h.n;
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- lll-ham

double lll_ham_probability(int m) {
  if (m < 2) throw Error(ErrorCode::domain_error, "m must be at least 2");
  return 0.5 * std::sqrt(std::log(static_cast<double>(m)) / m);
}

int lll_ham_guarantee(double p, int r) { return static_cast<int>(std::ceil(p * r / 400.0)); }

std::vector<BadEventReport> ham_events(const RybDigraph& h, const CandidateSet& s, double threshold) {
  std::vector<BadEventReport> out;
  for (const Edge& e : h.red_edges()) {
    int outside = static_cast<int>(!s.contains(e.u)) + static_cast<int>(!s.contains(e.v));
    out.push_back({EventKind::x_event, {e.u, e.v}, outside, 1.0});
  }
  for (int kind = 0; kind < 2; ++kind) {
    const auto& lists = kind == 0 ? h.yellow : h.blue;
    for (Vertex v = 0; v < h.n; ++v) {
      int inside = 0;
      for (Vertex w : lists[static_cast<std::size_t>(v)]) inside += s.contains(w) ? 1 : 0;
      out.push_back({kind == 0 ? EventKind::y_yellow : EventKind::y_blue, {v, -1}, inside, threshold});
    }
  }
  return out;
}

SampleResult sample_set_lll_ham(const RybDigraph& h, const SamplerConfig& cfg) {
  check_probability(cfg.p);
  if (cfg.r < 1) throw Error(ErrorCode::domain_error, "r must be at least 1");
  for (Vertex v = 0; v < h.n; ++v) {
    if (static_cast<int>(h.yellow[static_cast<std::size_t>(v)].size()) < cfg.r ||
        static_cast<int>(h.blue[static_cast<std::size_t>(v)].size()) < cfg.r) {
      throw Error(ErrorCode::domain_error, "vertex " + std::to_string(v) + " has yellow or blue out-degree below r");
    }
  }
  const int n = h.n;
  const double threshold = cfg.p * cfg.r / 400.0;
  const auto yellow_in = reverse_lists(h.yellow);
  const auto blue_in = reverse_lists(h.blue);

  Rng rng(cfg.seed);
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (auto& b : in) b = rng.bernoulli(cfg.p) ? 1 : 0;

  std::vector<int> yc(static_cast<std::size_t>(n), 0), bc(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : h.yellow[static_cast<std::size_t>(v)]) yc[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(w)];
    for (Vertex w : h.blue[static_cast<std::size_t>(v)]) bc[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(w)];
  }

  using Key = std::tuple<int, int, int>;  // (kind, a, b)
  std::set<Key> flagged;
  auto refresh_y = [&](Vertex v) {
    const Key ky{static_cast<int>(EventKind::y_yellow), v, -1};
    const Key kb{static_cast<int>(EventKind::y_blue), v, -1};
    if (yc[static_cast<std::size_t>(v)] < threshold) flagged.insert(ky); else flagged.erase(ky);
    if (bc[static_cast<std::size_t>(v)] < threshold) flagged.insert(kb); else flagged.erase(kb);
  };
  auto refresh_x = [&](Vertex v) {
    for (Vertex w : red_neighbors(h, v)) {
      const Key k{static_cast<int>(EventKind::x_event), std::min(v, w), std::max(v, w)};
      if (in[static_cast<std::size_t>(v)] && in[static_cast<std::size_t>(w)]) flagged.insert(k); else flagged.erase(k);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    refresh_y(v);
    refresh_x(v);
  }

  auto set_var = [&](Vertex u, bool value) {
    const char nv = value ? 1 : 0;
    if (in[static_cast<std::size_t>(u)] == nv) return;
    const int delta = nv ? 1 : -1;
    in[static_cast<std::size_t>(u)] = nv;
    for (Vertex v : yellow_in[static_cast<std::size_t>(u)]) {
      yc[static_cast<std::size_t>(v)] += delta;
      refresh_y(v);
    }
    for (Vertex v : blue_in[static_cast<std::size_t>(u)]) {
      bc[static_cast<std::size_t>(v)] += delta;
      refresh_y(v);
    }
    refresh_x(u);
  };

  SampleResult result;
  while (!flagged.empty()) {
    if (result.resamples >= cfg.max_resamples) {
      throw Error(ErrorCode::resample_budget_exceeded,
                  "still " + std::to_string(flagged.size()) + " flagged events after " +
                      std::to_string(result.resamples) + " resamples");
    }
    const auto [kind, a, b] = *flagged.begin();
    std::vector<Vertex> scope;
    if (kind == static_cast<int>(EventKind::x_event)) {
      scope = {a, b};
    } else {
      scope = (kind == static_cast<int>(EventKind::y_yellow) ? h.yellow : h.blue)[static_cast<std::size_t>(a)];
    }
    for (Vertex u : scope) set_var(u, rng.bernoulli(cfg.p));
    result.log.push_back({result.resamples, static_cast<EventKind>(kind), {a, b}, scope});
    ++result.resamples;
  }
  result.set = CandidateSet(n, members_of(in));
  if (result.set.empty()) throw Error(ErrorCode::domain_error, "sampled set is empty");
  return result;
}

// ---------------------------------------------------------------- dirac

double dirac_threshold(int n, double c) {
  const double nn = n;
  return c * c * nn / 16.0 - (15.0 * c * c / 8.0) * std::sqrt(nn * std::log(nn));
}

int dirac_acceptance(int n, double c) {
  return std::max(1, static_cast<int>(std::ceil(dirac_threshold(n, c))));
}

SampleResult sample_set_dirac(const RybDigraph& h, const SamplerConfig& cfg) {
  if (cfg.c < 0.5 || cfg.c > 1.0) throw Error(ErrorCode::domain_error, "c must lie in [1/2, 1]");
  const int n = h.n;
  const double need = cfg.c * n - 2.0;
  for (Vertex v = 0; v < n; ++v) {
    if (h.yellow[static_cast<std::size_t>(v)].size() < need || h.blue[static_cast<std::size_t>(v)].size() < need) {
      throw Error(ErrorCode::domain_error, "vertex " + std::to_string(v) + " has yellow or blue out-degree below cn-2");
    }
  }
  const double p = cfg.c / 8.0;
  const int accept = dirac_acceptance(n, cfg.c);
  Rng rng(cfg.seed);
  SampleResult result;
  for (;;) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (auto& b : in) b = rng.bernoulli(p) ? 1 : 0;
    std::vector<char> drop(static_cast<std::size_t>(n), 0);
    for (const Edge& e : h.red_edges()) {
      if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) {
        drop[static_cast<std::size_t>(e.u)] = drop[static_cast<std::size_t>(e.v)] = 1;
      }
    }
    for (std::size_t v = 0; v < in.size(); ++v) {
      if (drop[v]) in[v] = 0;
    }
    CandidateSet s(n, members_of(in));
    if (!s.empty() && d_star(h, s) >= accept) {
      result.set = std::move(s);
      return result;
    }
    if (result.resamples >= cfg.max_resamples) {
      throw Error(ErrorCode::resample_budget_exceeded,
                  "no accepted draw after " + std::to_string(result.resamples + 1) + " draws");
    }
    ++result.resamples;
  }
}

// ---------------------------------------------------------------- pm

std::vector<BadEventReport> pm_events(const RbDigraph& h, const CandidateSet& s, double threshold) {
  std::vector<BadEventReport> out;
  for (int i = 0; i < h.n; ++i) {
    const Vertex z = s.contains(i) ? i : h.partner(i);
    int escape = 0;
    for (Vertex w : h.blue[static_cast<std::size_t>(z)]) escape += s.contains(w) ? 0 : 1;
    out.push_back({EventKind::b_i, {i, -1}, escape, threshold});
  }
  return out;
}

SampleResult sample_set_pm(const RbDigraph& h, const SamplerConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw Error(ErrorCode::domain_error, "alpha must lie in (0, 1)");
  if (cfg.r < 1) throw Error(ErrorCode::domain_error, "r must be at least 1");
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (static_cast<int>(h.blue[static_cast<std::size_t>(v)].size()) < cfg.r) {
      throw Error(ErrorCode::domain_error, "vertex " + std::to_string(v) + " has blue out-degree below r");
    }
  }
  if (cfg.check_hypotheses && cfg.r < pm_r_threshold(cfg.alpha, cfg.m)) {
    throw Error(ErrorCode::domain_error, "r = " + std::to_string(cfg.r) + " is below the threshold " +
                                             std::to_string(pm_r_threshold(cfg.alpha, cfg.m)));
  }
  const int n = h.n;
  const double threshold = cfg.alpha * cfg.r / 2.0;

  // Pairs whose choice bits an event B_i reads: i itself and every pair owning
  // a vertex of blue(x_i) or blue(y_i).
  std::vector<std::vector<int>> scope(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> readers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& sc = scope[static_cast<std::size_t>(i)];
    sc.push_back(i);
    for (Vertex z : {i, h.partner(i)}) {
      for (Vertex w : h.blue[static_cast<std::size_t>(z)]) sc.push_back(h.pair_of(w));
    }
    std::sort(sc.begin(), sc.end());
    sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
    for (int j : sc) readers[static_cast<std::size_t>(j)].push_back(i);
  }

  Rng rng(cfg.seed);
  std::vector<char> pick_y(static_cast<std::size_t>(n), 0);
  for (auto& b : pick_y) b = rng.bernoulli(0.5) ? 1 : 0;
  auto in_s = [&](Vertex v) { return v < n ? !pick_y[static_cast<std::size_t>(v)] : pick_y[static_cast<std::size_t>(v - n)] != 0; };
  auto bad = [&](int i) {
    const Vertex z = pick_y[static_cast<std::size_t>(i)] ? i + n : i;
    int escape = 0;
    for (Vertex w : h.blue[static_cast<std::size_t>(z)]) escape += in_s(w) ? 0 : 1;
    return escape < threshold;
  };
  std::set<int> flagged;
  for (int i = 0; i < n; ++i) {
    if (bad(i)) flagged.insert(i);
  }

  SampleResult result;
  while (!flagged.empty()) {
    if (result.resamples >= cfg.max_resamples) {
      throw Error(ErrorCode::resample_budget_exceeded,
                  "still " + std::to_string(flagged.size()) + " flagged events after " +
                      std::to_string(result.resamples) + " resamples");
    }
    const int i = *flagged.begin();
    const auto& sc = scope[static_cast<std::size_t>(i)];
    for (int j : sc) pick_y[static_cast<std::size_t>(j)] = rng.bernoulli(0.5) ? 1 : 0;
    std::set<int> touched;
    for (int j : sc) touched.insert(readers[static_cast<std::size_t>(j)].begin(), readers[static_cast<std::size_t>(j)].end());
    for (int k : touched) {
      if (bad(k)) flagged.insert(k); else flagged.erase(k);
    }
    result.log.push_back({result.resamples, EventKind::b_i, {i, -1}, sc});
    ++result.resamples;
  }
  std::vector<Vertex> members;
  for (int i = 0; i < n; ++i) members.push_back(pick_y[static_cast<std::size_t>(i)] ? i + n : i);
  result.set = CandidateSet(2 * n, members);
  return result;
}

// ---------------------------------------------------------------- numerics

ChernoffBounds chernoff_bounds(double mu, double delta) {
  if (!(mu > 0.0)) throw Error(ErrorCode::domain_error, "mu must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::domain_error, "delta must lie in (0, 1)");
  ChernoffBounds b;
  b.bound1 = std::exp(mu * (-delta - (1.0 - delta) * std::log1p(-delta)));
  b.bound2 = std::exp(-0.5 * delta * delta * mu);
  return b;
}

double lll_xi() { return std::exp(-399.0 / 400.0) / std::pow(1.0 / 400.0, 1.0 / 400.0); }

InequalityReport lll_condition_ham(int m) {
  if (m < 3) throw Error(ErrorCode::domain_error, "m must be at least 3");
  InequalityReport rep;
  const double md = m;
  const double logm = std::log(md);
  rep.m = m;
  rep.p = 0.5 * std::sqrt(logm / md);
  const double p2 = logm / (4.0 * md);
  rep.x = 1.05 * p2;
  rep.y = 1.0 / (md * md);
  rep.r = 7.0 * std::sqrt(md * logm) + 2.0;
  rep.xi = lll_xi();

  const double log1mx = std::log1p(-rep.x);
  const double log1my = std::log1p(-rep.y);
  const double first_lhs = std::exp(std::log(rep.x) + 6.0 * log1mx + (4.0 * md - 4.0) * log1my);
  rep.first_margin = first_lhs - p2;
  rep.first_holds = rep.first_margin > 0.0;

  rep.second_lhs_log = rep.p * rep.r * std::log(rep.xi);
  rep.second_rhs_log = std::log(rep.y) + (4.0 * md - 4.0) * log1mx + 2.0 * (md - 1.0) * (md - 1.0) * log1my;
  rep.second_margin = rep.second_rhs_log - rep.second_lhs_log;
  rep.second_holds = rep.second_margin > 0.0;
  return rep;
}

LllScan scan_lll_conditions(int lo, int hi) {
  if (lo < 3 || hi < lo) throw Error(ErrorCode::domain_error, "scan range must satisfy 3 <= lo <= hi");
  LllScan scan;
  scan.lo = lo;
  scan.hi = hi;
  std::optional<bool> prev_first, prev_second;
  for (int m = lo; m <= hi; ++m) {
    const auto rep = lll_condition_ham(m);
    if (rep.first_holds && !scan.first_min) scan.first_min = m;
    if (rep.second_holds && !scan.second_min) scan.second_min = m;
    if (prev_first && *prev_first != rep.first_holds) ++scan.first_sign_changes;
    if (prev_second && *prev_second != rep.second_holds) ++scan.second_sign_changes;
    if (rep.first_holds && (!prev_first || !*prev_first)) scan.first_stable_from = m;
    if (rep.second_holds && (!prev_second || !*prev_second)) scan.second_stable_from = m;
    if (!rep.first_holds) scan.first_stable_from.reset();
    if (!rep.second_holds) scan.second_stable_from.reset();
    prev_first = rep.first_holds;
    prev_second = rep.second_holds;
  }
  return scan;
}

double pm_r_threshold(double alpha, int m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::domain_error, "alpha must lie in (0, 1)");
  if (m < 2) throw Error(ErrorCode::domain_error, "m must be at least 2");
  const double md = m;
  return 4.0 * (1.0 + std::log(2.0 * md * md - 2.0 * md + 1.0)) / ((1.0 - alpha) * (1.0 - alpha));
}

double pm_degree_threshold(double alpha, int m) { return pm_r_threshold(alpha, m) + 1.0; }

double pm_log_degree(int m) {
  if (m < 2) throw Error(ErrorCode::domain_error, "m must be at least 2");
  return 10.0 * std::log(static_cast<double>(m)) + 6.0;
}

// ---------------------------------------------------------------- factorial counts

namespace {

constexpr std::pair<BoundTheorem, std::string_view> kBoundNames[] = {
    {BoundTheorem::ham_log, "ham-log"},
    {BoundTheorem::ham_dirac, "ham-dirac"},
    {BoundTheorem::pm_log, "pm-log"},
    {BoundTheorem::pm_dirac, "pm-dirac"},
    {BoundTheorem::ham_min_degree, "ham-min-degree"},
    {BoundTheorem::pm_min_degree, "pm-min-degree"},
};

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::domain_error, what);
}

std::int64_t to_k(double v) {
  require(std::isfinite(v) && v < 1e7, "count exponent out of range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string_view to_string(BoundTheorem id) {
  for (const auto& [k, name] : kBoundNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<BoundTheorem> parse_bound_theorem(std::string_view name) {
  for (const auto& [k, n] : kBoundNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

FactorialBound factorial_bounds(BoundTheorem id, const BoundParams& q) {
  FactorialBound out;
  switch (id) {
    case BoundTheorem::ham_log:
      require(q.m >= 262, "requires m >= 262");
      out.k = to_k(std::ceil(std::log(static_cast<double>(q.m)) / 60.0));
      break;
    case BoundTheorem::ham_dirac:
      require(q.c >= 0.5 && q.epsilon > 0.0 && q.n >= 1, "requires c >= 1/2, eps > 0, n >= 1");
      out.k = to_k(std::ceil(q.c * q.c * q.n / (16.0 + q.epsilon)));
      break;
    case BoundTheorem::pm_log:
      require(q.m >= 44, "requires m >= 44");
      out.k = to_k(std::ceil(0.5 * std::log(static_cast<double>(q.m))));
      break;
    case BoundTheorem::pm_dirac:
      require(q.c >= 0.5 && q.epsilon > 0.0 && q.n >= 1, "requires c >= 1/2, eps > 0, n >= 1");
      out.k = to_k(std::floor(q.c * q.n / (2.0 + q.epsilon)));
      break;
    case BoundTheorem::ham_min_degree: {
      require(q.m >= 262, "requires m >= 262");
      const double md = q.m;
      require(q.t >= 7.0 * std::sqrt(md * std::log(md)), "requires t >= 7 sqrt(m log m)");
      out.k = to_k(std::floor((q.t - 2.0) / 400.0 * std::sqrt(std::log(md) / md) + 1.0));
      break;
    }
    case BoundTheorem::pm_min_degree:
      require(q.m >= 37, "requires m >= 37");
      require(q.t >= pm_degree_threshold(q.alpha, q.m), "requires t >= the degree threshold for alpha");
      out.k = to_k(std::floor(0.5 * q.alpha * (q.t - 1.0) + 1.0));
      break;
  }
  out.log10_value = std::lgamma(static_cast<double>(out.k) + 1.0) / std::log(10.0);
  if (out.k <= kExactFactorialLimit) {
    boost::multiprecision::cpp_int f = 1;
    for (std::int64_t j = 2; j <= out.k; ++j) f *= j;
    out.exact = f.str();
  }
  return out;
}

}  // namespace transversals
