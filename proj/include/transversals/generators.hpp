#pragma once

// Seeded instance construction. Every generator is a pure function of its
// arguments; the same seed always yields the same instance.

#include <cstdint>
#include <vector>

#include "transversals/core.hpp"

namespace transversals {

struct GeneratedInstance {
  SubgraphFamily family;
  /// Canonical for the family as returned.
  Transversal planted;
};

/// Cycle 0..n-1 plus random chords making the base (2 + extra_degree)-regular.
/// G_i holds edge (i, i+1) and every chord at i or i+1.
/// Requires n >= 3, 0 <= extra_degree <= n - 3 and n * extra_degree even.
GeneratedInstance gen_planted_ham_family(int n, int extra_degree, std::uint64_t seed);

/// Base K_n; each G_i deletes edges of K_n in random order while both ends stay
/// above ceil(cn) (capped at n - 1, so c = 1 gives K_n). Requires 1/2 <= c <= 1.
SubgraphFamily gen_dirac_family(int n, double c, std::uint64_t seed);

/// Random m-regular graph containing the cycle 0..n-1; every G_i is that graph.
GeneratedInstance gen_regular_all_equal(int n, int m, std::uint64_t seed);

/// 2n vertices, planted matching (i, n+i), base completed to
/// (1 + extra_degree)-regular. G_i holds (i, n+i) and every base edge at i or n+i.
GeneratedInstance gen_planted_pm_family(int n, int extra_degree, std::uint64_t seed);

/// Planted cycle where each i in S gets d edges from i-1 into S \ {i} inside
/// G_{i-1} and d edges from i+1 into S \ {i} inside G_i; extra chords avoid S.
/// Requires pairwise circular distance >= 3 in S, d >= 1 and |S| >= d + 1.
GeneratedInstance gen_witness_instance_ham(int n, const std::vector<Vertex>& s, int d, std::uint64_t seed);

/// Matching analogue on 2n vertices: S holds one endpoint per pair and each
/// s in S (pair i) gets d edges in G_i to vertices outside S, avoiding its
/// partner. Requires d <= n - 1.
GeneratedInstance gen_witness_instance_pm(int n, const std::vector<Vertex>& s, int d, std::uint64_t seed);

}  // namespace transversals
