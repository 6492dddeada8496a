#include <doctest.h>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "transversals/errors.hpp"
#include "transversals/generators.hpp"
#include "transversals/multiplier.hpp"

using namespace transversals;

namespace {

std::vector<Transversal> brute_omega_ham(const SubgraphFamily& f, const std::vector<Vertex>& s) {
  std::vector<Transversal> out;
  for (const auto& t : brute::ham_transversals(f)) {
    if (brute::in_omega_ham(f.num_vertices(), s, t)) out.push_back(t);
  }
  return out;
}

std::vector<Transversal> brute_omega_pm(const SubgraphFamily& f, const std::vector<Vertex>& s) {
  std::vector<Transversal> out;
  for (const auto& t : brute::pm_transversals(f)) {
    if (brute::in_omega_pm(f.num_vertices() / 2, s, t)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_omega_ham") {
  SUBCASE("no arcs into S gives only the base") {
    const int n = 6;
    std::vector<std::vector<Edge>> g(n);
    for (Vertex i = 0; i < n; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, (i + 1) % n));
    g[1].push_back(Edge::of(1, 4));  // chord avoiding S = {0}
    auto f = SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, g);
    auto omega = enumerate_omega_ham(f, canonical_cycle(n), CandidateSet(n, {0}));
    REQUIRE(omega.size() == 1);
    CHECK(omega[0] == canonical_cycle(n));
  }
  SUBCASE("two-member instance agrees with brute force") {
    auto f = fixtures::two_member_instance();
    CandidateSet s(6, {0, 3});
    auto omega = enumerate_omega_ham(f, canonical_cycle(6), s);
    CHECK(omega.size() >= 2);
    CHECK(omega == brute_omega_ham(f, s.members()));
    for (const auto& t : omega) CHECK(omega_member_ham(canonical_cycle(6), s, t));
  }
  SUBCASE("witness instances agree with brute force") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const std::vector<Vertex> s{0, 3, 6};
      auto inst = gen_witness_instance_ham(9, s, 2, seed);
      auto omega = enumerate_omega_ham(inst.family, inst.planted, CandidateSet(9, s));
      CHECK(omega == brute_omega_ham(inst.family, s));
    }
  }
}

TEST_CASE("enumerate_omega_pm") {
  CandidateSet s(4, {0, 1});
  CHECK(enumerate_omega_pm(fixtures::forced_matching(2), canonical_matching(2), s).size() == 1);
  CHECK(enumerate_omega_pm(fixtures::pm_swap(), canonical_matching(2), s).size() == 2);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 6;
    std::vector<Vertex> sm;
    for (int i = 0; i < n; ++i) sm.push_back(i % 2 ? i : n + i);
    auto inst = gen_witness_instance_pm(n, sm, 2, seed);
    auto omega = enumerate_omega_pm(inst.family, inst.planted, CandidateSet(2 * n, sm));
    CHECK(omega == brute_omega_pm(inst.family, sm));
  }
}

TEST_CASE("find_saturated_vertex_pm on the swap instance") {
  auto f = fixtures::pm_swap();
  auto h = build_full_rb(f, canonical_matching(2));
  CandidateSet s(4, {0, 1});
  auto sat = find_saturated_vertex_pm(f, canonical_matching(2), s, h);
  CHECK(sat.vertex == 0);
  REQUIRE(sat.table.witness(0, 2) != nullptr);
  REQUIRE(sat.table.witness(0, 3) != nullptr);
  CHECK(*sat.table.witness(0, 2) == canonical_matching(2));
  Transversal swapped{TransversalKind::matching, {{Edge::of(0, 3), 0}, {Edge::of(1, 2), 1}}};
  CHECK(*sat.table.witness(0, 3) == swapped.canonical());
  CHECK(sat.table.iterations <= 2);
}

TEST_CASE("find_saturated_vertex_ham table invariants") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::vector<Vertex> s{0, 3, 6};
    auto inst = gen_witness_instance_ham(10, s, 2, seed);
    CandidateSet cs(10, s);
    auto h = build_full_ryb(inst.family, inst.planted);
    auto sat = find_saturated_vertex_ham(inst.family, inst.planted, cs, h);
    REQUIRE(sat.vertex >= 0);
    CHECK(sat.table.unrealized.at(sat.vertex).empty());
    int total = 0;
    for (const auto& [v, u] : sat.table.targets) total += static_cast<int>(u.size());
    CHECK(sat.table.iterations <= total);
    auto omega = enumerate_omega_ham(inst.family, inst.planted, cs);
    for (const auto& [key, t] : sat.table.witnesses) {
      CHECK(t.contains(Edge::of(key.first, key.second)));
      CHECK(omega_member_ham(inst.planted, cs, t));
      CHECK(std::binary_search(omega.begin(), omega.end(), t));
    }
    // every target of v0 really is realized somewhere in Omega
    for (Vertex w : sat.table.targets.at(sat.vertex)) {
      CHECK(std::any_of(omega.begin(), omega.end(),
                        [&](const Transversal& t) { return t.contains(Edge::of(sat.vertex, w)); }));
    }
  }
}

TEST_CASE("many_ham_transversals") {
  SUBCASE("d = 1") {
    auto f = fixtures::two_member_instance();
    CandidateSet s(6, {0, 3});
    auto out = many_ham_transversals(f, canonical_cycle(6), s);
    CHECK(out.size() >= 2);
  }
  SUBCASE("d = 2, n = 9..12") {
    for (int n : {9, 10, 11, 12}) {
      const std::vector<Vertex> s{0, 3, 6};
      auto inst = gen_witness_instance_ham(n, s, 2, static_cast<std::uint64_t>(n));
      CandidateSet cs(n, s);
      REQUIRE(d_star(build_full_ryb(inst.family, inst.planted), cs) >= 2);
      MultiplyStats stats;
      auto out = many_ham_transversals(inst.family, inst.planted, cs, &stats);
      CHECK(out.size() >= 6);
      auto copy = out;
      sort_unique(copy);
      CHECK(copy.size() == out.size());
      auto omega = enumerate_omega_ham(inst.family, inst.planted, cs);
      for (const auto& t : out) {
        CHECK(validate_transversal(inst.family, t).ok());
        CHECK(std::binary_search(omega.begin(), omega.end(), t));
      }
      for (auto [level, before, after] : stats.level_checks) CHECK(after >= before - 1);
    }
  }
  SUBCASE("d = 0 is rejected") {
    const int n = 6;
    std::vector<std::vector<Edge>> g(n);
    for (Vertex i = 0; i < n; ++i) g[static_cast<std::size_t>(i)].push_back(Edge::of(i, (i + 1) % n));
    auto f = SubgraphFamily::from_edge_lists(n, FamilyKind::hamiltonian, g);
    try {
      many_ham_transversals(f, canonical_cycle(n), CandidateSet(n, {0, 3}));
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::d_star_too_small);
    }
  }
}

TEST_CASE("many_pm_transversals") {
  SUBCASE("n = 2 swap") {
    auto out = many_pm_transversals(fixtures::pm_swap(), canonical_matching(2), CandidateSet(4, {0, 1}));
    CHECK(out.size() == 2);
  }
  SUBCASE("n = 1 with d = 0") {
    auto out = many_pm_transversals(fixtures::forced_matching(1), canonical_matching(1), CandidateSet(2, {0}));
    CHECK(out.size() == 1);
  }
  SUBCASE("d = 2, n = 8") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const int n = 8;
      std::vector<Vertex> sm;
      for (int i = 0; i < n; ++i) sm.push_back((i + static_cast<int>(seed)) % 3 == 0 ? n + i : i);
      auto inst = gen_witness_instance_pm(n, sm, 2, seed);
      CandidateSet cs(2 * n, sm);
      auto out = many_pm_transversals(inst.family, inst.planted, cs);
      CHECK(out.size() >= 6);
      auto copy = out;
      sort_unique(copy);
      CHECK(copy.size() == out.size());
      for (const auto& t : out) {
        CHECK(validate_transversal(inst.family, t).ok());
        CHECK(brute::in_omega_pm(n, sm, t));
      }
    }
  }
  SUBCASE("bad S") {
    CHECK_THROWS_AS(many_pm_transversals(fixtures::pm_swap(), canonical_matching(2), CandidateSet(4, {0, 2})), Error);
  }
}
