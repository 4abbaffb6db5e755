#pragma once

#include "discretion/gain_model.hpp"

namespace discretion::two_period {

struct RegimeFlags {
  bool conservative_t1 = false;    // DP spends less than the prophet early
  bool aggressive_t2 = false;      // DP spends more than the prophet late
  bool internally_patient = false; // DP more willing to spend late than early
};

struct Result {
  double threshold = 0.0;  // welfare units
  double psi = 0.0;
  double p = 0.0;
  RegimeFlags flags;
};

// Two periods, one override: the cutoff equals the expected one-period gain.
double optimal_threshold(const GainModel& model);

// Unconditional probability of holding the budget in the first period.
// Routed through the standardized law, so the value is bit-identical across
// locations and scales of the same shape.
double psi(const GainModel& model);

// Conditional probability a clairvoyant spends at a period given that the
// period misaligns.
double oracle_conditional_spend_prob(double p);

// Regime classification from (psi, p). The comparisons are between spending
// probabilities conditional on misalignment, so psi is first mapped back to
// the conditional CDF level (psi - p)/(1 - p). Boundary equality counts as
// false.
RegimeFlags classify_regimes(double psi, double p);

Result analyze(const GainModel& model);

}  // namespace discretion::two_period
