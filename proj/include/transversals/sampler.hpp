#pragma once

// Randomized construction of red-independent sets with large d* / dx:
// Moser-Tardos resampling for the local-lemma arguments, a rejection sampler
// for Dirac families, and evaluators for the numeric inequalities and counts.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transversals/digraphs.hpp"

namespace transversals {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::int64_t max_resamples = 1'000'000;
  /// Inclusion probability for lll-ham; sample_set_dirac uses c/8 instead.
  double p = 0.0;
  double alpha = 0.5;
  int r = 0;
  /// Maximum degree of the base graph.
  int m = 0;
  double c = 0.5;
  double epsilon = 1.0;
  /// sample_set_pm: reject r below the local-lemma threshold for (alpha, m).
  bool check_hypotheses = true;
};

enum class EventKind { x_event, y_yellow, y_blue, b_i, chernoff_fail };
std::string_view to_string(EventKind kind);

/// One bad event. `location` is (u, v) for an edge, (v, -1) for a vertex or
/// (i, -1) for a pair. Flagged iff observed < threshold. For x-events the
/// observed value is the number of endpoints outside S and the threshold 1.
struct BadEventReport {
  EventKind kind;
  std::pair<int, int> location;
  int observed = 0;
  double threshold = 0.0;

  bool flagged() const { return observed < threshold; }
};

struct ResampleRecord {
  std::int64_t step = 0;
  EventKind kind;
  std::pair<int, int> location;
  /// Vertices (lll-ham) or pair indices (pm) whose variables were redrawn.
  std::vector<int> redrawn;
};

struct SampleResult {
  CandidateSet set;
  /// Resampling steps (lll-ham, pm) or rejected draws (dirac).
  std::int64_t resamples = 0;
  std::vector<ResampleRecord> log;
};

/// p = 1/2 * sqrt(log m / m).
double lll_ham_probability(int m);

/// Guarantee of sample_set_lll_ham: ceil(p r / 400).
int lll_ham_guarantee(double p, int r);

SampleResult sample_set_lll_ham(const RybDigraph& h, const SamplerConfig& cfg);

/// c^2 n / 16 - (15 c^2 / 8) sqrt(n log n).
double dirac_threshold(int n, double c);
/// max(1, ceil(dirac_threshold)).
int dirac_acceptance(int n, double c);

SampleResult sample_set_dirac(const RybDigraph& h, const SamplerConfig& cfg);

SampleResult sample_set_pm(const RbDigraph& h, const SamplerConfig& cfg);

/// Flagged-or-not status of every event for the current set.
std::vector<BadEventReport> ham_events(const RybDigraph& h, const CandidateSet& s, double threshold);
std::vector<BadEventReport> pm_events(const RbDigraph& h, const CandidateSet& s, double threshold);

struct ChernoffBounds {
  double bound1 = 0.0;  // (e^-d / (1-d)^(1-d))^mu
  double bound2 = 0.0;  // exp(-d^2 mu / 2)
};

ChernoffBounds chernoff_bounds(double mu, double delta);

struct InequalityReport {
  int m = 0;
  double p = 0.0;
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;  // 7 sqrt(m log m) + 2
  double xi = 0.0;
  /// x (1-x)^6 (1-y)^(4m-4) - p^2
  double first_margin = 0.0;
  bool first_holds = false;
  /// log of both sides of xi^(pr) < y (1-x)^(4m-4) (1-y)^(2(m-1)^2)
  double second_lhs_log = 0.0;
  double second_rhs_log = 0.0;
  double second_margin = 0.0;  // rhs - lhs in log space
  bool second_holds = false;
};

double lll_xi();
InequalityReport lll_condition_ham(int m);

struct LllScan {
  int lo = 0;
  int hi = 0;
  std::optional<int> first_min;   // smallest m in range where it holds
  std::optional<int> second_min;
  /// Smallest m from which the inequality holds for every larger m in range.
  std::optional<int> first_stable_from;
  std::optional<int> second_stable_from;
  int first_sign_changes = 0;
  int second_sign_changes = 0;
};

LllScan scan_lll_conditions(int lo, int hi);

/// 4 (1 + log(2m^2 - 2m + 1)) / (1 - alpha)^2, the required r.
double pm_r_threshold(double alpha, int m);
/// pm_r_threshold + 1, the minimum degree t.
double pm_degree_threshold(double alpha, int m);
/// The 10 log m + 6 degree form used with alpha = 1/10.
double pm_log_degree(int m);
inline constexpr double kPmLogAlpha = 0.1;

enum class BoundTheorem {
  ham_log,        // ceil(log m / 60)!, m >= 262
  ham_dirac,      // ceil(c^2 n / (16 + eps))!
  pm_log,         // ceil(log m / 2)!, m >= 44
  pm_dirac,       // floor(c n / (2 + eps))!
  ham_min_degree, // floor((t - 2)/400 sqrt(log m / m) + 1)!, m >= 262, t >= 7 sqrt(m log m)
  pm_min_degree,  // floor(alpha (t - 1) / 2 + 1)!, m >= 37, t >= pm_degree_threshold
};

std::string_view to_string(BoundTheorem id);
std::optional<BoundTheorem> parse_bound_theorem(std::string_view name);

struct BoundParams {
  int m = 0;
  int n = 0;
  double c = 0.5;
  double epsilon = 1.0;
  double t = 0.0;
  double alpha = 0.5;
};

inline constexpr std::int64_t kExactFactorialLimit = 5000;

struct FactorialBound {
  /// The count is k!.
  std::int64_t k = 0;
  double log10_value = 0.0;
  /// Decimal digits of k!; empty above kExactFactorialLimit.
  std::string exact;
};

FactorialBound factorial_bounds(BoundTheorem id, const BoundParams& params);

}  // namespace transversals
