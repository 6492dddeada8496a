#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "transversals/digraphs.hpp"
#include "transversals/errors.hpp"
#include "transversals/generators.hpp"
#include "transversals/instance_io.hpp"
#include "transversals/oracle.hpp"

using namespace transversals;

TEST_CASE("planted families validate") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto h = gen_planted_ham_family(12, 4, seed);
    CHECK(validate_family(h.family).ok());
    CHECK(validate_transversal(h.family, h.planted).ok());
    for (Vertex v = 0; v < 12; ++v) CHECK(h.family.base.degree(v) == 6);
    auto p = gen_planted_pm_family(10, 3, seed);
    CHECK(validate_family(p.family).ok());
    CHECK(validate_transversal(p.family, p.planted).ok());
    for (Vertex v = 0; v < 20; ++v) CHECK(p.family.base.degree(v) == 4);
  }
  CHECK(count_pm_transversals(gen_planted_pm_family(5, 0, 2).family) == 1);
  CHECK(count_ham_transversals(gen_planted_ham_family(8, 0, 2).family) == 1);
}

TEST_CASE("planted Hamiltonian family matches its snapshot") {
  auto inst = gen_planted_ham_family(12, 4, 7);
  const std::filesystem::path golden = std::filesystem::path(TRANSVERSALS_TEST_DATA) / "planted_ham_n12_e4_s7.json";
  REQUIRE(std::filesystem::exists(golden));
  auto stored = read_instance_file(golden);
  for (Color c = 0; c < 12; ++c) CHECK(stored.family.subgraph(c) == inst.family.subgraph(c));
  CHECK(stored.family.base == inst.family.base);
}

TEST_CASE("dirac families") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto f = gen_dirac_family(8, 0.5, seed);
    CHECK(validate_family(f).ok());
    for (Color c = 0; c < 8; ++c) CHECK(f.subgraph(c).min_degree() >= 4);
  }
  auto full = gen_dirac_family(6, 1.0, 1);
  for (Color c = 0; c < 6; ++c) CHECK(full.subgraph(c).num_edges() == 15);
  CHECK_THROWS_AS(gen_dirac_family(8, 0.4, 1), Error);
}

TEST_CASE("regular all-equal") {
  auto two = gen_regular_all_equal(10, 2, 1);
  CHECK(count_ham_transversals(two.family) > 0);
  CHECK(two.family.base.num_edges() == 10);
  int with_two_cycles = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = gen_regular_all_equal(20, 4, seed);
    for (Vertex v = 0; v < 20; ++v) CHECK(inst.family.base.degree(v) == 4);
    CHECK(inst.family.subgraphs[0] == inst.family.subgraphs[19]);
    // two Hamiltonian cycles give at least 2 * 20! transversals, so stop early
    SearchBudget b;
    b.max_results = 2;
    auto some = enumerate_all_ham_transversals(inst.family, b);
    if (some.size() == 2) ++with_two_cycles;
  }
  CHECK(with_two_cycles >= 8);
}

TEST_CASE("witness instances") {
  auto one = gen_witness_instance_ham(6, {0, 3}, 1, 5);
  CHECK(d_star(build_full_ryb(one.family, one.planted), CandidateSet(6, {0, 3})) == 1);
  auto two = gen_witness_instance_ham(9, {0, 3, 6}, 2, 5);
  CHECK(d_star(build_full_ryb(two.family, two.planted), CandidateSet(9, {0, 3, 6})) >= 2);
  try {
    gen_witness_instance_ham(9, {0, 2}, 1, 5);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible_witness);
  }
  CHECK_THROWS_AS(gen_witness_instance_ham(9, {0, 3}, 2, 5), Error);

  const std::vector<Vertex> s{0, 5, 2, 7};  // x0, y1, x2, y3 for n = 4
  auto pm = gen_witness_instance_pm(4, s, 3, 9);
  CHECK(d_cross(build_full_rb(pm.family, pm.planted), CandidateSet(8, s)) == 3);
}

TEST_CASE("generators are deterministic") {
  auto a = gen_planted_pm_family(30, 5, 11);
  auto b = gen_planted_pm_family(30, 5, 11);
  CHECK(instance_to_json({a.family, a.planted, {}}) == instance_to_json({b.family, b.planted, {}}));
  auto c = gen_dirac_family(12, 0.6, 4);
  auto d = gen_dirac_family(12, 0.6, 4);
  CHECK(instance_to_json({c, std::nullopt, {}}) == instance_to_json({d, std::nullopt, {}}));
}
