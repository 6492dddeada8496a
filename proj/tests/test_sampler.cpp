#include <doctest.h>

#include <cmath>

#include "transversals/errors.hpp"
#include "transversals/generators.hpp"
#include "transversals/rng.hpp"
#include "transversals/sampler.hpp"

using namespace transversals;

TEST_CASE("rng is reproducible and portable") {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  // first output of mt19937_64 seeded with 5489 is fixed by the standard
  CHECK(Rng(5489).next() == 14514284786278117030ULL);
  Rng c(1);
  for (int k = 0; k < 1000; ++k) {
    const auto x = c.below(7);
    CHECK(x < 7);
    const double u = c.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
  CHECK(Rng(3).split(1).next() != Rng(3).split(2).next());
  CHECK(Rng(3).split(1).next() == Rng(3).split(1).next());
}

TEST_CASE("lll-ham sampler on an all-equal regular family") {
  auto inst = gen_regular_all_equal(700, 300, 1);
  auto h = build_full_ryb(inst.family, inst.planted);
  SamplerConfig cfg;
  cfg.seed = 3;
  cfg.m = 300;
  cfg.r = 298;
  cfg.p = lll_ham_probability(cfg.m);
  auto res = sample_set_lll_ham(h, cfg);
  CHECK(is_red_independent(h, res.set));
  CHECK(d_star(h, res.set) >= lll_ham_guarantee(cfg.p, cfg.r));
  auto again = sample_set_lll_ham(h, cfg);
  CHECK(again.set == res.set);
  CHECK(again.resamples == res.resamples);

  cfg.r = 0;
  CHECK_THROWS_AS(sample_set_lll_ham(h, cfg), Error);
}

TEST_CASE("dirac sampler") {
  CHECK(dirac_threshold(10000, 0.5) == doctest::Approx(13.99).epsilon(0.001));
  CHECK(dirac_threshold(8000, 0.5) < 0);
  CHECK(dirac_acceptance(8000, 0.5) == 1);
  auto f = gen_dirac_family(40, 0.5, 2);
  auto t = canonical_cycle(40);
  // K_n base: the planted cycle has to live in the family, so plant it first
  std::vector<std::vector<Edge>> g(40);
  for (Color c = 0; c < 40; ++c) {
    g[static_cast<std::size_t>(c)] = f.subgraph(c).edges();
    g[static_cast<std::size_t>(c)].push_back(Edge::of(c, (c + 1) % 40));
  }
  auto fam = SubgraphFamily::from_edge_lists(40, FamilyKind::hamiltonian, g);
  auto h = build_full_ryb(fam, t);
  SamplerConfig cfg;
  cfg.seed = 9;
  cfg.c = 0.5;
  auto res = sample_set_dirac(h, cfg);
  CHECK(is_red_independent(h, res.set));
  CHECK(d_star(h, res.set) >= dirac_acceptance(40, 0.5));
  CHECK(sample_set_dirac(h, cfg).set == res.set);
  cfg.c = 0.3;
  CHECK_THROWS_AS(sample_set_dirac(h, cfg), Error);
}

TEST_CASE("pm sampler") {
  CHECK(pm_r_threshold(0.5, 100) == doctest::Approx(16.0 * (1.0 + std::log(19801.0))));
  CHECK(pm_degree_threshold(0.5, 100) == doctest::Approx(175.296).epsilon(1e-5));
  CHECK(pm_degree_threshold(0.6, 100) > pm_degree_threshold(0.5, 100));
  CHECK(pm_degree_threshold(0.5, 101) > pm_degree_threshold(0.5, 100));
  CHECK(pm_log_degree(100) == doctest::Approx(10.0 * std::log(100.0) + 6.0));

  auto inst = gen_planted_pm_family(60, 40, 5);
  auto h = build_full_rb(inst.family, inst.planted);
  SamplerConfig cfg;
  cfg.seed = 1;
  cfg.alpha = 0.5;
  cfg.r = 40;
  cfg.m = 41;
  cfg.check_hypotheses = false;
  auto res = sample_set_pm(h, cfg);
  CHECK(is_maximal_red_independent(h, res.set));
  CHECK(d_cross(h, res.set) >= 10);
  for (const auto& e : pm_events(h, res.set, 10.0)) CHECK_FALSE(e.flagged());
  CHECK(sample_set_pm(h, cfg).set == res.set);

  cfg.check_hypotheses = true;
  CHECK_THROWS_AS(sample_set_pm(h, cfg), Error);
}

TEST_CASE("chernoff bounds") {
  auto b = chernoff_bounds(100.0, 0.5);
  CHECK(b.bound2 == doctest::Approx(std::exp(-12.5)));
  auto tiny = chernoff_bounds(100.0, 1e-9);
  CHECK(tiny.bound1 == doctest::Approx(1.0));
  CHECK(tiny.bound2 == doctest::Approx(1.0));
}

TEST_CASE("local lemma inequalities") {
  CHECK(lll_condition_ham(262).first_holds);
  CHECK(lll_condition_ham(262).first_margin > 0);
  CHECK(lll_condition_ham(194).second_holds);
  auto at50 = lll_condition_ham(50);
  CHECK_FALSE((at50.first_holds && at50.second_holds));
  CHECK(lll_xi() == doctest::Approx(0.374366).epsilon(1e-5));
}

TEST_CASE("factorial bounds") {
  BoundParams p;
  p.m = 262;
  CHECK(factorial_bounds(BoundTheorem::ham_log, p).k == 1);
  p.n = 100;
  p.c = 0.5;
  p.epsilon = 1.0;
  auto pm = factorial_bounds(BoundTheorem::pm_dirac, p);
  CHECK(pm.k == 16);
  CHECK(pm.exact == "20922789888000");
  p.n = 10000;
  CHECK(factorial_bounds(BoundTheorem::ham_dirac, p).k == 148);
  p.m = 100;
  CHECK_THROWS_AS(factorial_bounds(BoundTheorem::ham_log, p), Error);
  CHECK(parse_bound_theorem("pm-dirac") == BoundTheorem::pm_dirac);
  CHECK_FALSE(parse_bound_theorem("nope").has_value());
}
