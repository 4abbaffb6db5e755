#pragma once

#include <cstdint>
#include <span>

#include "discretion/shape.hpp"

namespace discretion {

struct McEstimate {
  double c_hat = 0.0;    // mean positive two-draw difference, welfare units
  double psi_hat = 0.0;  // share of a second batch at or below c_hat
  double se_c = 0.0;
  double psi_se = 0.0;   // binomial standard error of psi_hat
  std::uint64_t n = 0;
  bool high_variance_c = false;  // extreme tails make c_hat unstable
};

// Two-stage estimator: batch one fixes the empirical threshold, an
// independent batch of equal size evaluates the hold frequency against it.
// Deterministic under (seed, substreams); substreams partition n and may run
// concurrently without changing the result.
McEstimate mc_estimate(const ShapeSpec& spec, std::uint64_t n,
                       std::uint64_t seed, int substreams = 1);

// Sample excess kurtosis m4/m2^2 - 3. Requires at least four samples and a
// non-degenerate spread.
double excess_kurtosis(std::span<const double> samples);

}  // namespace discretion
