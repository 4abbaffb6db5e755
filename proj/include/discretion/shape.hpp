#pragma once

#include <string>

namespace discretion {

class RngStream;

enum class Family {
  Exponential,
  HalfNormal,
  Gamma,
  Weibull,
  Lognormal,
  Pareto,
  Uniform,
};

// A location-scale improvement law I = location + scale * X, where X follows
// the standardized base of `family`. The base always has non-negative
// support and finite mean, so thresholds and difference laws are well
// defined.
struct ShapeSpec {
  Family family = Family::Exponential;
  double shape = 0.0;     // Gamma k, Weibull c, Lognormal sigma, Pareto b
  double location = 0.0;  // welfare units
  double scale = 1.0;     // welfare units, > 0
};

bool uses_shape_param(Family family);
std::string to_string(Family family);
Family family_from_string(const std::string& name);

// Throws std::invalid_argument on a bad scale or family parameter
// (non-positive shape, Pareto tail index <= 1).
void validate(const ShapeSpec& spec);

// --- standardized base X (location 0, unit scale) ---
double base_cdf_std(Family family, double shape, double x);
double base_pdf_std(Family family, double shape, double x);
double base_quantile_std(Family family, double shape, double u);  // 0 < u < 1
double base_mean_std(Family family, double shape);
// E[(X - y)^+], closed form per family.
double base_partial_expectation_std(Family family, double shape, double y);
double sample_base(Family family, double shape, RngStream& rng);

// --- full location-scale law ---
double base_cdf(const ShapeSpec& spec, double x);
double base_quantile(const ShapeSpec& spec, double u);
double sample(const ShapeSpec& spec, RngStream& rng);

// Scale giving the base family unit mean, used by the shape-dependence
// sweeps so that shape changes are not confounded by level changes.
double mean_normalized_scale(Family family, double shape);

// Standard normal CDF helper shared across modules.
double normal_cdf(double x);

}  // namespace discretion
