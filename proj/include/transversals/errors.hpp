#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transversals {

enum class ErrorCode {
  invalid_transversal,
  not_naturally_indexed,
  not_red_independent,
  not_locally_dominating,
  not_maximal_red_independent,
  walk_stuck,
  recolor_conflict,
  no_blue_escape,
  d_star_too_small,
  budget_exceeded,
  resample_budget_exceeded,
  domain_error,
  infeasible_degree,
  infeasible_witness,
  generation_failed,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace transversals
