// transversals: generate instances, count transversals, and run the
// second-transversal, set-sampling and multiplication pipelines.
//
// Exit codes: 0 success, 2 input error, 3 budget exhausted / inconclusive,
// 4 precondition failure. Reports are JSON on stdout; only the "timing"
// field varies between identical runs.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "transversals/core.hpp"
#include "transversals/digraphs.hpp"
#include "transversals/errors.hpp"
#include "transversals/exchange.hpp"
#include "transversals/generators.hpp"
#include "transversals/instance_io.hpp"
#include "transversals/multiplier.hpp"
#include "transversals/oracle.hpp"
#include "transversals/sampler.hpp"

using json = nlohmann::json;
using namespace transversals;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
    case ErrorCode::invalid_transversal:
    case ErrorCode::infeasible_degree:
    case ErrorCode::infeasible_witness:
    case ErrorCode::domain_error:
      return kExitInput;
    case ErrorCode::budget_exceeded:
    case ErrorCode::resample_budget_exceeded:
    case ErrorCode::generation_failed:
      return kExitBudget;
    default:
      return kExitPrecondition;
  }
}

struct Report {
  std::string command;
  json parameters = json::object();
  std::optional<std::uint64_t> seed;
  json results = json::object();
  json warnings = json::array();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json to_json() const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {{"command", command},
            {"parameters", parameters},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"results", results},
            {"warnings", warnings},
            {"timing", {{"wall_ms", ms}}}};
  }
};

void emit(const Report& r) { std::cout << r.to_json().dump(2) << '\n'; }

int fail(Report& r, const Error& e) {
  r.results["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  emit(r);
  std::cerr << e.what() << '\n';
  return exit_code_for(e.code());
}

std::uint64_t factorial_u64(int k) {
  std::uint64_t f = 1;
  for (int j = 2; j <= k; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

// "0,3,7"; matching sets may also use x3 / y3 (y3 = n + 3 for n pairs).
std::vector<Vertex> parse_set_spec(const std::string& spec, const SubgraphFamily& family) {
  std::vector<Vertex> out;
  std::stringstream ss(spec);
  std::string tok;
  const int pairs = family.num_vertices() / 2;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    int offset = 0;
    if (tok[0] == 'x' || tok[0] == 'y') {
      if (family.kind != FamilyKind::matching) throw Error(ErrorCode::parse_error, "x/y aliases need a matching family");
      offset = tok[0] == 'y' ? pairs : 0;
      tok = tok.substr(1);
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "bad set member '" + tok + "'");
    }
    if (used != tok.size() || v < 0 || (offset == 0 ? v >= family.num_vertices() : v >= pairs)) {
      throw Error(ErrorCode::parse_error, "set member '" + tok + "' out of range");
    }
    out.push_back(v + offset);
  }
  return out;
}

json vertices_json(const std::vector<Vertex>& vs) { return json(vs); }

// Instance with a planted transversal, naturally indexed, S mapped along.
struct Prepared {
  InstanceFile file;
  IndexedInstance indexed;
  CandidateSet set;

  std::vector<Vertex> to_original(const std::vector<Vertex>& vs) const {
    return indexed.indexing.inverse().map_vertices(vs);
  }
  Transversal to_original(const Transversal& t) const { return indexed.indexing.inverse().apply(t); }
};

Prepared prepare(const std::string& path, const std::optional<std::string>& set_spec) {
  Prepared p;
  p.file = read_instance_file(path);
  if (!p.file.planted) throw Error(ErrorCode::parse_error, "instance has no planted transversal");
  p.indexed = naturally_index(p.file.family, *p.file.planted);
  if (set_spec) {
    const auto raw = parse_set_spec(*set_spec, p.file.family);
    p.set = CandidateSet(p.file.family.num_vertices(), p.indexed.indexing.map_vertices(raw));
  }
  return p;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string model;
  int n = 0;
  int extra = 0;
  int m = 0;
  double c = 0.5;
  int d = 1;
  std::string set;
  std::uint64_t seed = 0;
  std::string out;
  std::int64_t oracle_nodes = 10'000'000;
};

int cmd_gen(const GenOptions& o) {
  Report r;
  r.command = "gen";
  r.seed = o.seed;
  r.parameters = {{"model", o.model}, {"n", o.n}, {"out", o.out}};
  try {
    InstanceFile inst;
    if (o.model == "planted-ham") {
      r.parameters["extra"] = o.extra;
      auto g = gen_planted_ham_family(o.n, o.extra, o.seed);
      inst.family = std::move(g.family);
      inst.planted = std::move(g.planted);
    } else if (o.model == "planted-pm") {
      r.parameters["extra"] = o.extra;
      auto g = gen_planted_pm_family(o.n, o.extra, o.seed);
      inst.family = std::move(g.family);
      inst.planted = std::move(g.planted);
    } else if (o.model == "dirac") {
      r.parameters["c"] = o.c;
      inst.family = gen_dirac_family(o.n, o.c, o.seed);
      try {
        SearchBudget b;
        b.max_nodes = o.oracle_nodes;
        if (auto t = exists_ham_transversal(inst.family, b)) {
          inst.planted = *t;
        } else {
          r.warnings.push_back("no Hamiltonian transversal exists; instance written without one");
        }
      } catch (const BudgetExceeded&) {
        r.warnings.push_back("transversal search budget exhausted; instance written without a planted transversal");
      }
    } else if (o.model == "regular-all-equal") {
      r.parameters["m"] = o.m;
      auto g = gen_regular_all_equal(o.n, o.m, o.seed);
      inst.family = std::move(g.family);
      inst.planted = std::move(g.planted);
    } else if (o.model == "witness" || o.model == "witness-pm") {
      r.parameters["d"] = o.d;
      r.parameters["set"] = o.set;
      const bool pm = o.model == "witness-pm";
      SubgraphFamily frame;
      frame.kind = pm ? FamilyKind::matching : FamilyKind::hamiltonian;
      frame.base = Graph(pm ? 2 * o.n : o.n);
      const auto s = parse_set_spec(o.set, frame);
      auto g = pm ? gen_witness_instance_pm(o.n, s, o.d, o.seed) : gen_witness_instance_ham(o.n, s, o.d, o.seed);
      inst.family = std::move(g.family);
      inst.planted = std::move(g.planted);
      inst.metadata["set"] = o.set;
    } else {
      throw Error(ErrorCode::parse_error, "unknown model '" + o.model + "'");
    }
    inst.metadata["model"] = o.model;
    inst.metadata["seed"] = std::to_string(o.seed);
    write_instance_file(o.out, inst);
    r.results = {{"kind", std::string(to_string(inst.family.kind))},
                 {"num_vertices", inst.family.num_vertices()},
                 {"num_subgraphs", inst.family.num_colors()},
                 {"base_edges", inst.family.base.num_edges()},
                 {"base_max_degree", inst.family.base.max_degree()},
                 {"planted", inst.planted.has_value()}};
    if (o.model == "witness" && inst.planted) {
      const auto prepared = prepare(o.out, o.set);
      r.results["d_star"] = d_star(build_full_ryb(prepared.indexed.family, prepared.indexed.transversal), prepared.set);
    } else if (o.model == "witness-pm" && inst.planted) {
      const auto prepared = prepare(o.out, o.set);
      r.results["d_cross"] = d_cross(build_full_rb(prepared.indexed.family, prepared.indexed.transversal), prepared.set);
    }
    emit(r);
    return kExitOk;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

// ---------------------------------------------------------------- validate / count

int cmd_validate(const std::string& in) {
  Report r;
  r.command = "validate";
  r.parameters = {{"in", in}};
  try {
    const auto inst = read_instance_file(in);
    r.results = {{"kind", std::string(to_string(inst.family.kind))},
                 {"num_vertices", inst.family.num_vertices()},
                 {"num_subgraphs", inst.family.num_colors()},
                 {"planted", inst.planted.has_value()}};
    if (inst.planted) r.results["naturally_indexed"] = is_naturally_indexed(inst.family, *inst.planted);
    emit(r);
    return kExitOk;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

int cmd_count(const std::string& in, std::int64_t max_nodes, std::optional<std::int64_t> time_ms, bool list) {
  Report r;
  r.command = "count";
  r.parameters = {{"in", in}, {"max_nodes", max_nodes}};
  if (time_ms) r.parameters["time_limit_ms"] = *time_ms;
  try {
    const auto inst = read_instance_file(in);
    SearchBudget b;
    b.max_nodes = max_nodes;
    if (time_ms) b.time_limit = std::chrono::milliseconds(*time_ms);
    const bool ham = inst.family.kind == FamilyKind::hamiltonian;
    if (list) {
      const auto all = ham ? enumerate_all_ham_transversals(inst.family, b) : enumerate_all_pm_transversals(inst.family, b);
      r.results["count"] = all.size();
      json listing = json::array();
      for (const auto& t : all) listing.push_back(transversal_to_json(t));
      r.results["transversals"] = listing;
    } else {
      r.results["count"] = ham ? count_ham_transversals(inst.family, b) : count_pm_transversals(inst.family, b);
    }
    r.results["complete"] = true;
    emit(r);
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    r.results = {{"complete", false}, {"lower_bound", e.partial_count}, {"nodes", e.nodes}};
    r.warnings.push_back("search budget exhausted; count is a lower bound");
    emit(r);
    std::cerr << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

// ---------------------------------------------------------------- second

int cmd_second(const std::string& in, const std::string& set_spec) {
  Report r;
  r.command = "second";
  r.parameters = {{"in", in}, {"set", set_spec}};
  try {
    const auto p = prepare(in, set_spec);
    const auto& fam = p.indexed.family;
    const auto& base = p.indexed.transversal;
    r.results["set"] = vertices_json(p.to_original(p.set.members()));
    Transversal second;
    bool omega = false;
    if (fam.kind == FamilyKind::hamiltonian) {
      const auto h = build_full_ryb(fam, base);
      second = second_ham_transversal(fam, base, p.set, h);
      omega = omega_member_ham(base, p.set, second);
      r.results["d_star"] = d_star(h, p.set);
    } else {
      const auto h = build_full_rb(fam, base);
      AlternatingCycle cycle;
      second = second_pm_transversal(fam, base, p.set, h, &cycle);
      omega = omega_member_pm(base, p.set, second);
      r.results["d_cross"] = d_cross(h, p.set);
      r.results["alternating_cycle"] = {{"vertices", vertices_json(p.to_original(cycle.vertices))},
                                        {"length", cycle.length()},
                                        {"walk_pairs", cycle.walk_pairs}};
    }
    const Transversal original = p.to_original(second);
    r.results["second"] = transversal_to_json(original);
    r.results["valid"] = validate_transversal(p.file.family, original).ok();
    r.results["omega_member"] = omega;
    r.results["distinct_from_planted"] = !(original == *p.file.planted);
    emit(r);
    return kExitOk;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

// ---------------------------------------------------------------- sample-set

struct SampleOptions {
  std::string in;
  std::string method;
  std::uint64_t seed = 0;
  std::int64_t max_resamples = 1'000'000;
  std::optional<double> p;
  std::optional<int> r;
  double alpha = 0.5;
  double c = 0.5;
  std::string debug_log;
};

void write_debug_log(const std::string& path, const SampleResult& res) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + path);
  for (const auto& rec : res.log) {
    json line = {{"step", rec.step},
                 {"event", std::string(to_string(rec.kind))},
                 {"location", {rec.location.first, rec.location.second}},
                 {"redrawn", rec.redrawn}};
    out << line.dump() << '\n';
  }
}

int min_out_degree(const std::vector<std::vector<Vertex>>& lists) {
  int best = std::numeric_limits<int>::max();
  for (const auto& l : lists) best = std::min(best, static_cast<int>(l.size()));
  return lists.empty() ? 0 : best;
}

int cmd_sample_set(const SampleOptions& o) {
  Report rep;
  rep.command = "sample-set";
  rep.seed = o.seed;
  rep.parameters = {{"in", o.in}, {"method", o.method}, {"max_resamples", o.max_resamples}};
  try {
    const auto p = prepare(o.in, std::nullopt);
    const auto& fam = p.indexed.family;
    const auto& base = p.indexed.transversal;
    const int m = fam.base.max_degree();
    SamplerConfig cfg;
    cfg.seed = o.seed;
    cfg.max_resamples = o.max_resamples;
    cfg.m = m;
    SampleResult res;
    if (o.method == "lll-ham" || o.method == "dirac") {
      if (fam.kind != FamilyKind::hamiltonian) throw Error(ErrorCode::parse_error, o.method + " needs a Hamiltonian instance");
      const auto h = build_full_ryb(fam, base);
      if (o.method == "lll-ham") {
        cfg.p = o.p ? *o.p : lll_ham_probability(m);
        cfg.r = o.r ? *o.r : std::min(min_out_degree(h.yellow), min_out_degree(h.blue));
        rep.parameters["p"] = cfg.p;
        rep.parameters["r"] = cfg.r;
        rep.parameters["m"] = m;
        if (m < 262) rep.warnings.push_back("m = " + std::to_string(m) + " < 262: the local-lemma inequalities are not guaranteed");
        const double needed = 7.0 * std::sqrt(m * std::log(static_cast<double>(m))) + 2.0;
        if (cfg.r < needed) {
          rep.warnings.push_back("r = " + std::to_string(cfg.r) + " is below 7 sqrt(m log m) + 2 = " + std::to_string(needed));
        }
        res = sample_set_lll_ham(h, cfg);
        const double sq = std::sqrt(std::log(static_cast<double>(m)) / m);
        rep.results["guarantee"] = {{"d_star_at_least", lll_ham_guarantee(cfg.p, cfg.r)},
                                    {"r_over_800_form", cfg.r / 800.0 * sq},
                                    {"r_over_400_form", cfg.r / 400.0 * sq}};
      } else {
        cfg.c = o.c;
        rep.parameters["c"] = cfg.c;
        res = sample_set_dirac(h, cfg);
        rep.results["guarantee"] = {{"threshold", dirac_threshold(fam.num_vertices(), cfg.c)},
                                    {"d_star_at_least", dirac_acceptance(fam.num_vertices(), cfg.c)}};
        if (dirac_threshold(fam.num_vertices(), cfg.c) <= 0) {
          rep.warnings.push_back("the degree bound is not positive at this n; acceptance uses d* >= 1");
        }
      }
      rep.results["d_star"] = d_star(h, res.set);
    } else if (o.method == "pm") {
      if (fam.kind != FamilyKind::matching) throw Error(ErrorCode::parse_error, "pm needs a matching instance");
      const auto h = build_full_rb(fam, base);
      cfg.alpha = o.alpha;
      cfg.r = o.r ? *o.r : min_out_degree(h.blue);
      cfg.check_hypotheses = false;
      rep.parameters["alpha"] = cfg.alpha;
      rep.parameters["r"] = cfg.r;
      rep.parameters["m"] = m;
      const double needed = pm_r_threshold(cfg.alpha, std::max(m, 2));
      if (cfg.r < needed) {
        rep.warnings.push_back("r = " + std::to_string(cfg.r) + " is below the local-lemma threshold " + std::to_string(needed));
      }
      res = sample_set_pm(h, cfg);
      rep.results["d_cross"] = d_cross(h, res.set);
      rep.results["guarantee"] = {{"d_cross_at_least", static_cast<int>(std::ceil(cfg.alpha * cfg.r / 2.0))},
                                  {"r_threshold", needed}};
    } else {
      throw Error(ErrorCode::parse_error, "unknown method '" + o.method + "'");
    }
    write_debug_log(o.debug_log, res);
    rep.results["set"] = vertices_json(p.to_original(res.set.members()));
    rep.results["set_size"] = res.set.size();
    rep.results["resamples"] = res.resamples;
    emit(rep);
    return kExitOk;
  } catch (const Error& e) {
    return fail(rep, e);
  }
}

// ---------------------------------------------------------------- multiply

int cmd_multiply(const std::string& in, const std::string& set_spec, int oracle_max_n, bool list) {
  Report r;
  r.command = "multiply";
  r.parameters = {{"in", in}, {"set", set_spec}, {"oracle_max_n", oracle_max_n}};
  try {
    const auto p = prepare(in, set_spec);
    const auto& fam = p.indexed.family;
    const auto& base = p.indexed.transversal;
    const bool ham = fam.kind == FamilyKind::hamiltonian;
    int d = 0;
    std::vector<Transversal> many;
    MultiplyStats stats;
    if (ham) {
      d = d_star(build_full_ryb(fam, base), p.set);
      many = many_ham_transversals(fam, base, p.set, &stats);
    } else {
      d = d_cross(build_full_rb(fam, base), p.set);
      if (d == 0) throw Error(ErrorCode::d_star_too_small, "dx = 0; no multiplication possible");
      many = many_pm_transversals(fam, base, p.set, &stats);
    }
    std::vector<Transversal> original;
    for (const auto& t : many) original.push_back(p.to_original(t));
    sort_unique(original);
    r.results[ham ? "d_star" : "d_cross"] = d;
    r.results["factorial_bound"] = factorial_u64(d + 1);
    r.results["count"] = original.size();
    r.results["recursion_nodes"] = stats.recursion_nodes;
    r.results["witness_iterations"] = stats.witness_iterations;
    bool all_valid = true;
    for (const auto& t : original) all_valid = all_valid && validate_transversal(p.file.family, t).ok();
    r.results["all_valid"] = all_valid;
    if (list) {
      json listing = json::array();
      for (const auto& t : original) listing.push_back(transversal_to_json(t));
      r.results["transversals"] = listing;
    }
    if (fam.num_vertices() <= oracle_max_n) {
      const auto all = ham ? enumerate_all_ham_transversals(p.file.family) : enumerate_all_pm_transversals(p.file.family);
      const std::set<Transversal> known(all.begin(), all.end());
      bool contained = true;
      for (const auto& t : original) contained = contained && known.count(t) > 0;
      r.results["oracle"] = {{"total_transversals", all.size()}, {"outputs_confirmed", contained}};
    } else {
      r.warnings.push_back("instance too large for the oracle cross-check");
    }
    emit(r);
    return kExitOk;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string theorem;
  int m = 0;
  int n = 0;
  double c = 0.5;
  double eps = 1.0;
  double t = 0.0;
  double alpha = 0.5;
  double mu = 0.0;
  double delta = 0.5;
  int lo = 3;
  int hi = 5000;
};

json lll_json(const InequalityReport& rep) {
  return {{"m", rep.m},
          {"p", rep.p},
          {"x", rep.x},
          {"y", rep.y},
          {"r", rep.r},
          {"xi", rep.xi},
          {"first", {{"margin", rep.first_margin}, {"holds", rep.first_holds}}},
          {"second",
           {{"lhs_log", rep.second_lhs_log},
            {"rhs_log", rep.second_rhs_log},
            {"margin", rep.second_margin},
            {"holds", rep.second_holds}}}};
}

int cmd_bounds(const BoundsOptions& o) {
  Report r;
  r.command = "bounds";
  r.parameters = {{"theorem", o.theorem}};
  try {
    if (o.theorem == "lll-cond") {
      r.parameters["m"] = o.m;
      r.results = lll_json(lll_condition_ham(o.m));
    } else if (o.theorem == "lll-scan") {
      r.parameters["lo"] = o.lo;
      r.parameters["hi"] = o.hi;
      const auto s = scan_lll_conditions(o.lo, o.hi);
      auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
      r.results = {{"first", {{"min", opt(s.first_min)}, {"stable_from", opt(s.first_stable_from)}, {"sign_changes", s.first_sign_changes}}},
                   {"second", {{"min", opt(s.second_min)}, {"stable_from", opt(s.second_stable_from)}, {"sign_changes", s.second_sign_changes}}}};
    } else if (o.theorem == "pm-threshold") {
      r.parameters["m"] = o.m;
      r.parameters["alpha"] = o.alpha;
      r.results = {{"r_threshold", pm_r_threshold(o.alpha, o.m)},
                   {"degree_threshold", pm_degree_threshold(o.alpha, o.m)},
                   {"log_form_alpha", kPmLogAlpha},
                   {"log_form_degree", pm_log_degree(o.m)}};
    } else if (o.theorem == "chernoff") {
      r.parameters["mu"] = o.mu;
      r.parameters["delta"] = o.delta;
      const auto b = chernoff_bounds(o.mu, o.delta);
      r.results = {{"bound1", b.bound1}, {"bound2", b.bound2}};
    } else if (o.theorem == "dirac-threshold") {
      r.parameters["n"] = o.n;
      r.parameters["c"] = o.c;
      r.results = {{"threshold", dirac_threshold(o.n, o.c)}, {"acceptance", dirac_acceptance(o.n, o.c)}};
    } else if (auto id = parse_bound_theorem(o.theorem)) {
      r.parameters.update({{"m", o.m}, {"n", o.n}, {"c", o.c}, {"eps", o.eps}, {"t", o.t}, {"alpha", o.alpha}});
      const auto fb = factorial_bounds(*id, {o.m, o.n, o.c, o.eps, o.t, o.alpha});
      r.results = {{"k", fb.k}, {"bound", std::to_string(fb.k) + "!"}, {"log10", fb.log10_value}};
      if (!fb.exact.empty()) r.results["exact"] = fb.exact;
    } else {
      throw Error(ErrorCode::parse_error, "unknown theorem id '" + o.theorem + "'");
    }
    emit(r);
    return kExitOk;
  } catch (const Error& e) {
    return fail(r, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal enumeration and multiplication toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance file");
  g->add_option("--model", gen.model, "planted-ham | planted-pm | dirac | regular-all-equal | witness | witness-pm")->required();
  g->add_option("--n", gen.n, "Vertices (pairs for matching models)")->required();
  g->add_option("--extra", gen.extra, "Extra degree for planted models");
  g->add_option("--m", gen.m, "Degree for regular-all-equal");
  g->add_option("--c", gen.c, "Degree ratio for dirac");
  g->add_option("--d", gen.d, "Target d for witness models");
  g->add_option("--set", gen.set, "Set S for witness models");
  g->add_option("--seed", gen.seed, "Random seed")->required();
  g->add_option("--out", gen.out, "Output path")->required();
  g->add_option("--oracle-max-nodes", gen.oracle_nodes, "Budget for finding a dirac transversal");

  std::string in;
  auto* v = app.add_subcommand("validate", "Parse and validate an instance file");
  v->add_option("--in", in)->required();

  std::int64_t max_nodes = 100'000'000;
  std::optional<std::int64_t> time_ms;
  bool list = false;
  auto* c = app.add_subcommand("count", "Count all transversals by exhaustive search");
  c->add_option("--in", in)->required();
  c->add_option("--max-nodes", max_nodes);
  c->add_option("--time-limit-ms", time_ms);
  c->add_flag("--list", list, "Also list every transversal");

  std::string set_spec;
  auto* s = app.add_subcommand("second", "Construct a second transversal around S");
  s->add_option("--in", in)->required();
  s->add_option("--set", set_spec, "Comma-separated S; x3/y3 allowed for matchings")->required();

  SampleOptions so;
  std::optional<double> p_opt;
  std::optional<int> r_opt;
  auto* ss = app.add_subcommand("sample-set", "Sample a set S with large d* or dx");
  ss->add_option("--in", so.in)->required();
  ss->add_option("--method", so.method, "lll-ham | dirac | pm")->required();
  ss->add_option("--seed", so.seed)->required();
  ss->add_option("--max-resamples", so.max_resamples);
  ss->add_option("--p", p_opt, "Inclusion probability (lll-ham)");
  ss->add_option("--r", r_opt, "Out-degree parameter r");
  ss->add_option("--alpha", so.alpha);
  ss->add_option("--c", so.c);
  ss->add_option("--debug-log", so.debug_log, "Write the resample log as JSON lines");

  int oracle_max_n = 10;
  auto* mu = app.add_subcommand("multiply", "Produce at least (d+1)! transversals");
  mu->add_option("--in", in)->required();
  mu->add_option("--set", set_spec)->required();
  mu->add_option("--oracle-max-n", oracle_max_n, "Cross-check with the oracle up to this many vertices");
  mu->add_flag("--list", list);

  BoundsOptions bo;
  auto* b = app.add_subcommand("bounds", "Evaluate numeric bounds and inequalities");
  b->add_option("--theorem", bo.theorem,
                "lll-cond | lll-scan | pm-threshold | chernoff | dirac-threshold | ham-log | ham-dirac | pm-log | "
                "pm-dirac | ham-min-degree | pm-min-degree")
      ->required();
  b->add_option("--m", bo.m);
  b->add_option("--n", bo.n);
  b->add_option("--c", bo.c);
  b->add_option("--eps", bo.eps);
  b->add_option("--t", bo.t);
  b->add_option("--alpha", bo.alpha);
  b->add_option("--mu", bo.mu);
  b->add_option("--delta", bo.delta);
  b->add_option("--lo", bo.lo);
  b->add_option("--hi", bo.hi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*v) return cmd_validate(in);
    if (*c) return cmd_count(in, max_nodes, time_ms, list);
    if (*s) return cmd_second(in, set_spec);
    if (*ss) {
      so.p = p_opt;
      so.r = r_opt;
      return cmd_sample_set(so);
    }
    if (*mu) return cmd_multiply(in, set_spec, oracle_max_n, list);
    if (*b) return cmd_bounds(bo);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitInput;
}
