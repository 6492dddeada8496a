#include <doctest.h>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "transversals/generators.hpp"
#include "transversals/oracle.hpp"

using namespace transversals;

TEST_CASE("K4 all-equal count") {
  // 3 Hamiltonian cycles of K4, 4! colorings each
  auto f = fixtures::k4_all_equal();
  const auto brute_all = brute::ham_transversals(f);
  REQUIRE(brute_all.size() == 3 * 24);
  CHECK(count_ham_transversals(f) == 72);
  CHECK(enumerate_all_ham_transversals(f) == brute_all);
}

TEST_CASE("forced and empty families") {
  auto inst = gen_planted_ham_family(7, 0, 1);
  CHECK(count_ham_transversals(inst.family) == 1);
  CHECK(count_pm_transversals(fixtures::forced_matching(4)) == 1);

  std::vector<std::vector<Edge>> g(5, fixtures::complete_edges(5));
  g[0].clear();
  auto f = SubgraphFamily::from_edge_lists(5, FamilyKind::hamiltonian, g);
  CHECK(count_ham_transversals(f) == 0);
  CHECK_FALSE(exists_ham_transversal(f).has_value());
}

TEST_CASE("matching counts") {
  const auto k4 = fixtures::complete_edges(4);
  auto f = SubgraphFamily::from_edge_lists(4, FamilyKind::matching, {k4, k4});
  CHECK(count_pm_transversals(f) == 6);
  CHECK(enumerate_all_pm_transversals(f) == brute::pm_transversals(f));
  CHECK(count_pm_transversals(fixtures::pm_swap()) == 2);
}

TEST_CASE("oracle agrees with brute force on random families") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto f = gen_dirac_family(7, 0.5, seed);
    auto all = enumerate_all_ham_transversals(f);
    CHECK(all == brute::ham_transversals(f));
    CHECK(count_ham_transversals(f) == static_cast<std::int64_t>(all.size()));
    for (const auto& t : all) CHECK(validate_transversal(f, t).ok());
  }
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto inst = gen_planted_pm_family(4, 3, seed);
    CHECK(enumerate_all_pm_transversals(inst.family) == brute::pm_transversals(inst.family));
  }
}

TEST_CASE("Dirac families on 8 vertices have a transversal") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = gen_dirac_family(8, 0.5, seed);
    auto t = exists_ham_transversal(f);
    if (t && validate_transversal(f, *t).ok()) ++found;
  }
  CHECK(found == 50);
}

TEST_CASE("budgets") {
  auto f = gen_dirac_family(9, 0.8, 3);
  SearchBudget tiny;
  tiny.max_nodes = 50;
  try {
    count_ham_transversals(f, tiny);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
    CHECK(e.nodes >= 50);
  }
  SearchBudget few;
  few.max_results = 5;
  auto some = enumerate_all_ham_transversals(f, few);
  CHECK(some.size() == 5);
}
