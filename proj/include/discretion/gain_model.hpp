#pragma once

#include <functional>
#include <vector>

#include "discretion/shape.hpp"

namespace discretion {

class RngStream;

// Per-period gain from an override. Zero with probability p (the default
// recommendation already matches judgment); otherwise drawn from a strictly
// positive conditional law expressed in standardized units times `scale`.
//
// All functionals operate on the standardized conditional gain, so every
// probability computed from a GainModel is independent of `scale` by
// construction. Welfare-unit quantities are rescaled at the interface.
struct GainModel {
  double p = 0.5;
  double scale = 1.0;
  std::function<double(double)> cdf_mis_std;        // F(x), x in std units
  std::function<double(double)> pe_mis_std;         // E[(D - t)^+], std units
  std::function<double(RngStream&)> sample_mis_std; // conditional draw
  double mean_mis_std = 0.0;                        // E[D], std units
};

void validate(const GainModel& model);

// Gain induced by two independent improvement draws: the conditional law is
// the positive part of scale * (X' - X). Alignment probability defaults to
// the symmetric value 1/2.
GainModel two_draw_gain_model(const ShapeSpec& spec, double p = 0.5,
                              double tol = 1e-10);

// Finitely supported conditional gain, exact arithmetic; used by tests and
// enumeration oracles. Points must be strictly positive.
GainModel discrete_gain_model(std::vector<double> points,
                              std::vector<double> probs, double p);

// Conditional CDF / partial expectation in welfare units.
double cdf_mis(const GainModel& model, double x);
double partial_expectation_mis(const GainModel& model, double t);

// Unconditional gain CDF: 0 below zero, p + (1-p) F_mis(x) above.
double gain_cdf(const GainModel& model, double x);

// Mixture draw in welfare units (0 with probability p).
double sample_gain(const GainModel& model, RngStream& rng);

}  // namespace discretion
