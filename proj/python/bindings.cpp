#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "transversals/core.hpp"
#include "transversals/digraphs.hpp"
#include "transversals/errors.hpp"
#include "transversals/exchange.hpp"
#include "transversals/generators.hpp"
#include "transversals/instance_io.hpp"
#include "transversals/multiplier.hpp"
#include "transversals/oracle.hpp"
#include "transversals/sampler.hpp"

namespace py = pybind11;
using namespace transversals;

namespace {

std::vector<std::string> messages(const ValidationReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.violations) out.push_back(v.message);
  return out;
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back(Edge::of(u, v));
  return out;
}

std::vector<std::pair<int, int>> from_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

SearchBudget budget(std::int64_t max_nodes) {
  SearchBudget b;
  b.max_nodes = max_nodes;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transversal enumeration, exchange and sampling";

  static py::exception<Error> error(m, "TransversalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::enum_<FamilyKind>(m, "FamilyKind")
      .value("hamiltonian", FamilyKind::hamiltonian)
      .value("matching", FamilyKind::matching);
  py::enum_<TransversalKind>(m, "TransversalKind")
      .value("cycle", TransversalKind::cycle)
      .value("matching", TransversalKind::matching);

  py::class_<Transversal>(m, "Transversal")
      .def_property_readonly("kind", [](const Transversal& t) { return t.kind; })
      .def_property_readonly("edges",
                             [](const Transversal& t) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const auto& ce : t.edges) out.emplace_back(ce.edge.u, ce.edge.v, ce.color);
                               return out;
                             })
      .def("color_of", [](const Transversal& t, int u, int v) { return t.color_of(Edge::of(u, v)); })
      .def("__eq__", [](const Transversal& a, const Transversal& b) { return a == b; })
      .def("__hash__", [](const Transversal& t) { return py::hash(py::str(transversal_to_json(t).dump())); })
      .def("__repr__", [](const Transversal& t) { return "Transversal(" + transversal_to_json(t).dump() + ")"; });

  py::class_<SubgraphFamily>(m, "SubgraphFamily")
      .def(py::init([](int n, FamilyKind kind, const std::vector<std::vector<std::pair<int, int>>>& subgraphs) {
             std::vector<std::vector<Edge>> lists;
             for (const auto& s : subgraphs) lists.push_back(to_edges(s));
             return SubgraphFamily::from_edge_lists(n, kind, lists);
           }),
           py::arg("num_vertices"), py::arg("kind"), py::arg("subgraphs"))
      .def_property_readonly("num_vertices", &SubgraphFamily::num_vertices)
      .def_property_readonly("num_colors", &SubgraphFamily::num_colors)
      .def_property_readonly("kind", [](const SubgraphFamily& f) { return f.kind; })
      .def("subgraph_edges", [](const SubgraphFamily& f, int c) { return from_edges(f.subgraph(c).edges()); })
      .def("base_edges", [](const SubgraphFamily& f) { return from_edges(f.base.edges()); })
      .def("validate", [](const SubgraphFamily& f) { return messages(validate_family(f)); })
      .def("to_json",
           [](const SubgraphFamily& f, const std::optional<Transversal>& planted) {
             return instance_to_json({f, planted, {}}).dump();
           },
           py::arg("planted") = std::nullopt);

  m.def("canonical_cycle", &canonical_cycle);
  m.def("canonical_matching", &canonical_matching);
  m.def("make_transversal", [](TransversalKind kind, const std::vector<std::tuple<int, int, int>>& edges) {
    Transversal t;
    t.kind = kind;
    for (auto [u, v, c] : edges) t.edges.push_back({Edge::of(u, v), c});
    return t.canonical();
  });
  m.def("validate_transversal",
        [](const SubgraphFamily& f, const Transversal& t) { return messages(validate_transversal(f, t)); });
  m.def("load_instance", [](const std::string& text) {
    auto inst = instance_from_json(nlohmann::json::parse(text));
    return py::make_tuple(inst.family, inst.planted);
  });

  m.def("gen_planted_ham_family", [](int n, int extra, std::uint64_t seed) {
    auto g = gen_planted_ham_family(n, extra, seed);
    return py::make_tuple(g.family, g.planted);
  });
  m.def("gen_planted_pm_family", [](int n, int extra, std::uint64_t seed) {
    auto g = gen_planted_pm_family(n, extra, seed);
    return py::make_tuple(g.family, g.planted);
  });
  m.def("gen_regular_all_equal", [](int n, int deg, std::uint64_t seed) {
    auto g = gen_regular_all_equal(n, deg, seed);
    return py::make_tuple(g.family, g.planted);
  });
  m.def("gen_dirac_family", &gen_dirac_family, py::arg("n"), py::arg("c"), py::arg("seed"));
  m.def("gen_witness_instance_ham", [](int n, const std::vector<int>& s, int d, std::uint64_t seed) {
    auto g = gen_witness_instance_ham(n, s, d, seed);
    return py::make_tuple(g.family, g.planted);
  });
  m.def("gen_witness_instance_pm", [](int n, const std::vector<int>& s, int d, std::uint64_t seed) {
    auto g = gen_witness_instance_pm(n, s, d, seed);
    return py::make_tuple(g.family, g.planted);
  });

  m.def("count_ham_transversals",
        [](const SubgraphFamily& f, std::int64_t max_nodes) { return count_ham_transversals(f, budget(max_nodes)); },
        py::arg("family"), py::arg("max_nodes") = 100'000'000);
  m.def("count_pm_transversals",
        [](const SubgraphFamily& f, std::int64_t max_nodes) { return count_pm_transversals(f, budget(max_nodes)); },
        py::arg("family"), py::arg("max_nodes") = 100'000'000);
  m.def("enumerate_all_ham_transversals",
        [](const SubgraphFamily& f, std::int64_t max_nodes) {
          return enumerate_all_ham_transversals(f, budget(max_nodes));
        },
        py::arg("family"), py::arg("max_nodes") = 100'000'000);
  m.def("enumerate_all_pm_transversals",
        [](const SubgraphFamily& f, std::int64_t max_nodes) {
          return enumerate_all_pm_transversals(f, budget(max_nodes));
        },
        py::arg("family"), py::arg("max_nodes") = 100'000'000);

  // Set-level operations take a naturally indexed (family, base) pair.
  m.def("d_star", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return d_star(build_full_ryb(f, t), CandidateSet(f.num_vertices(), s));
  });
  m.def("d_cross", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return d_cross(build_full_rb(f, t), CandidateSet(f.num_vertices(), s));
  });
  m.def("second_ham_transversal", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return second_ham_transversal(f, t, CandidateSet(f.num_vertices(), s), build_full_ryb(f, t));
  });
  m.def("second_pm_transversal", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return second_pm_transversal(f, t, CandidateSet(f.num_vertices(), s), build_full_rb(f, t));
  });
  m.def("many_ham_transversals", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return many_ham_transversals(f, t, CandidateSet(f.num_vertices(), s));
  });
  m.def("many_pm_transversals", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return many_pm_transversals(f, t, CandidateSet(f.num_vertices(), s));
  });
  m.def("enumerate_omega_ham", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return enumerate_omega_ham(f, t, CandidateSet(f.num_vertices(), s));
  });
  m.def("enumerate_omega_pm", [](const SubgraphFamily& f, const Transversal& t, const std::vector<int>& s) {
    return enumerate_omega_pm(f, t, CandidateSet(f.num_vertices(), s));
  });

  m.def(
      "sample_set_pm",
      [](const SubgraphFamily& f, const Transversal& t, int r, double alpha, int max_degree, std::uint64_t seed,
         bool check_hypotheses) {
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.r = r;
        cfg.alpha = alpha;
        cfg.m = max_degree;
        cfg.check_hypotheses = check_hypotheses;
        auto res = sample_set_pm(build_full_rb(f, t), cfg);
        return py::make_tuple(res.set.members(), res.resamples);
      },
      py::arg("family"), py::arg("base"), py::arg("r"), py::arg("alpha"), py::arg("max_degree"), py::arg("seed"),
      py::arg("check_hypotheses") = true);
  m.def(
      "sample_set_lll_ham",
      [](const SubgraphFamily& f, const Transversal& t, int r, int max_degree, std::uint64_t seed) {
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.r = r;
        cfg.m = max_degree;
        cfg.p = lll_ham_probability(max_degree);
        auto res = sample_set_lll_ham(build_full_ryb(f, t), cfg);
        return py::make_tuple(res.set.members(), res.resamples);
      },
      py::arg("family"), py::arg("base"), py::arg("r"), py::arg("max_degree"), py::arg("seed"));

  m.def("chernoff_bounds", [](double mu, double delta) {
    auto b = chernoff_bounds(mu, delta);
    return py::make_tuple(b.bound1, b.bound2);
  });
  m.def("lll_condition_ham", [](int mm) {
    auto r = lll_condition_ham(mm);
    py::dict d;
    d["first_margin"] = r.first_margin;
    d["first_holds"] = r.first_holds;
    d["second_margin"] = r.second_margin;
    d["second_holds"] = r.second_holds;
    return d;
  });
  m.def("pm_r_threshold", &pm_r_threshold);
  m.def("pm_degree_threshold", &pm_degree_threshold);
  m.def("dirac_threshold", &dirac_threshold);
  m.def(
      "factorial_bound",
      [](const std::string& theorem, int mm, int n, double c, double epsilon, double t, double alpha) {
        auto id = parse_bound_theorem(theorem);
        if (!id) throw Error(ErrorCode::domain_error, "unknown bound " + theorem);
        BoundParams p{mm, n, c, epsilon, t, alpha};
        auto b = factorial_bounds(*id, p);
        return py::make_tuple(b.k, b.log10_value);
      },
      py::arg("theorem"), py::arg("m") = 0, py::arg("n") = 0, py::arg("c") = 0.5, py::arg("epsilon") = 1.0,
      py::arg("t") = 0.0, py::arg("alpha") = 0.5);
}
