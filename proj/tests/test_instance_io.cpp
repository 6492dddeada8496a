#include <doctest.h>

#include "support/fixtures.hpp"
#include "transversals/errors.hpp"
#include "transversals/generators.hpp"
#include "transversals/instance_io.hpp"

using namespace transversals;
using nlohmann::json;

TEST_CASE("round trip") {
  auto inst = gen_planted_ham_family(10, 3 - 1, 4);
  InstanceFile file{inst.family, inst.planted, {{"model", "planted-ham"}}};
  auto back = instance_from_json(instance_to_json(file));
  CHECK(back.family.base == inst.family.base);
  for (Color c = 0; c < 10; ++c) CHECK(back.family.subgraph(c) == inst.family.subgraph(c));
  REQUIRE(back.planted.has_value());
  CHECK(*back.planted == inst.planted);
  CHECK(back.metadata.at("model") == "planted-ham");
}

TEST_CASE("shared subgraphs are written once") {
  auto inst = gen_regular_all_equal(12, 4, 2);
  json j = instance_to_json({inst.family, inst.planted, {}});
  CHECK(j["subgraphs"][0].is_array());
  for (std::size_t c = 1; c < 12; ++c) CHECK(j["subgraphs"][c] == 0);
  auto back = instance_from_json(j);
  CHECK(back.family.subgraph(11) == inst.family.subgraph(0));
}

TEST_CASE("base edges outside every subgraph survive") {
  auto f = SubgraphFamily::from_edge_lists(4, FamilyKind::matching, {{Edge::of(0, 2)}, {Edge::of(1, 3)}},
                                           std::vector<Edge>{Edge::of(0, 1)});
  auto back = instance_from_json(instance_to_json({f, std::nullopt, {}}));
  CHECK(back.family.base.has_edge(0, 1));
  CHECK(back.family.kind == FamilyKind::matching);
}

TEST_CASE("malformed input") {
  auto expect_code = [](const json& j, ErrorCode code) {
    try {
      instance_from_json(j);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code(json::parse(R"({"kind": "hamiltonian"})"), ErrorCode::parse_error);
  expect_code(json::parse(R"({"kind": "triangle", "num_vertices": 3, "subgraphs": []})"), ErrorCode::parse_error);
  expect_code(json::parse(R"({"kind": "hamiltonian", "num_vertices": 3, "subgraphs": [[[0, 1]], [[1, 2]]]})"),
              ErrorCode::parse_error);
  expect_code(json::parse(R"({"kind": "hamiltonian", "num_vertices": 3, "subgraphs": [[[0, 1]], 5, [[0, 2]]]})"),
              ErrorCode::parse_error);
  expect_code(json::parse(R"({"kind": "hamiltonian", "num_vertices": 3,
                              "subgraphs": [[[0, 1]], [[1, 2]], [[0, 2]]],
                              "planted": {"edges": [[0, 1], [1, 2], [0, 2]], "colors": [0, 0, 2]}})"),
              ErrorCode::invalid_transversal);
}

TEST_CASE("transversal json") {
  auto t = canonical_cycle(4);
  json j = transversal_to_json(t);
  CHECK(j["edges"].size() == 4);
  CHECK(transversal_from_json(j, TransversalKind::cycle) == t);
}
