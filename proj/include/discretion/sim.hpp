#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "discretion/dp.hpp"
#include "discretion/shape.hpp"

namespace discretion::sim {

// Episode-level study of the two-household game: each period two households
// arrive with baseline welfare draws and i.i.d. improvement draws; the
// default rule serves the needier one, an override serves whichever gains
// more. Baselines default to a constant because they cancel from every
// welfare comparison.
struct EpisodeConfig {
  int horizon = 2;
  int budget = 1;
  ShapeSpec improvement;
  std::optional<ShapeSpec> baseline;  // empty: constant baseline_constant
  double baseline_constant = 0.0;
  std::uint64_t seed = 0;
  int episodes = 1;
};

struct EpisodeResult {
  int horizon = 0;
  int episodes = 0;
  double mean_policy = 0.0, se_policy = 0.0;
  double mean_dp = 0.0, se_dp = 0.0;
  double mean_prophet = 0.0, se_prophet = 0.0;
  std::vector<double> spend_freq_dp;       // per period
  std::vector<double> spend_freq_prophet;  // per period
  std::vector<std::int64_t> mis_count;     // misaligned periods seen
  std::vector<std::int64_t> spend_given_mis_dp;
  std::vector<std::int64_t> spend_given_mis_prophet;
  double p_hat = 0.0;  // empirical alignment frequency
  std::int64_t ordering_violations = 0;  // policy <= dp <= prophet failures
};

// Runs the per-period threshold agent against the solved program plus a
// policy-compliant agent and a clairvoyant that keeps the budget for the
// largest gains. Bit-identical for identical configs.
EpisodeResult simulate_episodes(const EpisodeConfig& cfg,
                                const dp::Solution& sol);

// Mean clairvoyant welfare under the same episode law.
double prophet_value(const EpisodeConfig& cfg);

// Per-period spend frequencies of the threshold agent, comparable
// elementwise with SpendingProfile::spend_prob.
std::vector<double> empirical_profile(const EpisodeResult& result);

}  // namespace discretion::sim
