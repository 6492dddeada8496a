#pragma once

// Brute-force ground truth. Shares only the data model with the constructive
// modules: cycles are searched vertex by vertex with an edge/color matching
// kept feasible at every step, matchings by pairing the lowest free vertex.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "transversals/core.hpp"
#include "transversals/errors.hpp"

namespace transversals {

struct SearchBudget {
  std::int64_t max_nodes = 100'000'000;
  std::optional<std::int64_t> max_results;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Search stopped before finishing. `partial` holds what was found so far
/// (empty for the counting entry points, which report `partial_count`).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::vector<Transversal> partial, std::int64_t partial_count, std::int64_t nodes)
      : Error(ErrorCode::budget_exceeded,
              "search stopped after " + std::to_string(nodes) + " nodes with " + std::to_string(partial_count) +
                  " transversals found"),
        partial(std::move(partial)),
        partial_count(partial_count),
        nodes(nodes) {}

  std::vector<Transversal> partial;
  std::int64_t partial_count;
  std::int64_t nodes;
};

/// Stopping at `max_results` is a normal return, not an error.
std::vector<Transversal> enumerate_all_ham_transversals(const SubgraphFamily& family, const SearchBudget& budget = {});
std::int64_t count_ham_transversals(const SubgraphFamily& family, const SearchBudget& budget = {});

std::vector<Transversal> enumerate_all_pm_transversals(const SubgraphFamily& family, const SearchBudget& budget = {});
std::int64_t count_pm_transversals(const SubgraphFamily& family, const SearchBudget& budget = {});

std::optional<Transversal> exists_ham_transversal(const SubgraphFamily& family, const SearchBudget& budget = {});
std::optional<Transversal> exists_pm_transversal(const SubgraphFamily& family, const SearchBudget& budget = {});

}  // namespace transversals
