#pragma once

#include <string>
#include <vector>

#include "discretion/gain_model.hpp"

namespace discretion::dp {

// Solved finite-horizon program. Grids are indexed [tau][k] with
// tau = 0..horizon periods remaining and k = 0..budget units left.
// `excess` is the value above always-following-policy, so the baseline
// per-period utility never needs a numeric value while solving.
struct Solution {
  int horizon = 0;
  int budget = 0;
  double p = 0.5;
  double scale = 1.0;
  double mean_mis = 0.0;  // E[gain | misalignment], welfare units
  std::vector<std::vector<double>> excess;      // welfare units
  std::vector<std::vector<double>> threshold;   // welfare units, 0 for k=0
  std::vector<std::vector<double>> spend_prob;  // unconditional per state
};

// Backward induction in standardized units; thresholds are marginal excess
// values, spending probabilities come from the unconditional gain CDF.
Solution solve(int horizon, int budget, const GainModel& model,
               double tol = 1e-9);

struct SpendingProfile {
  // pi[t-1][k] = P(k units left at the start of period t), t = 1..T+1.
  std::vector<std::vector<double>> pi;
  std::vector<double> spend_prob;  // per period t = 1..T
  std::vector<double> cumulative;  // running sum of spend_prob
  double expected_terminal_budget = 0.0;
};

SpendingProfile spending_profile(const Solution& sol);

// Total expected welfare once a per-period policy utility is supplied.
double policy_value(const Solution& sol, double mu_pol);

struct HeatmapRow {
  int tau = 0;
  int k = 0;
  double threshold = 0.0;
  double q = 0.0;
};

// One row per (tau >= 1, 1 <= k <= budget), tau ascending then k ascending.
std::vector<HeatmapRow> heatmap(const Solution& sol);

// Grid diagnostics: monotonicity, bounds, and boundary identities. Returns
// human-readable violation messages; empty means clean.
std::vector<std::string> check_invariants(const Solution& sol,
                                          double tol = 1e-9);

}  // namespace discretion::dp
