#pragma once

#include "discretion/shape.hpp"

namespace discretion {

// Law of the standardized base difference X' - X for i.i.d. draws from the
// base shape. Symmetric around zero, so cdf(0) = 1/2 for every continuous
// family. Location and scale never enter: the difference law is a pure
// shape object.
class DiffLaw {
 public:
  explicit DiffLaw(const ShapeSpec& spec, double tol = 1e-10);

  double cdf(double x) const;             // closed form where available
  double cdf_quadrature(double x) const;  // generic quantile-space route
  const ShapeSpec& source() const { return spec_; }

 private:
  ShapeSpec spec_;  // standardized (location 0, scale 1)
  double tol_;
};

// Base threshold c = E[(X' - X)^+], computed on the standardized base.
// Closed form for exponential and half-normal, quadrature otherwise.
double base_threshold(const ShapeSpec& spec);
double base_threshold_quadrature(const ShapeSpec& spec, double tol = 1e-10);

// Patience scalar: probability that the standardized two-draw gain falls
// at or below the base threshold. Unit free by construction.
double psi_of_shape(const ShapeSpec& spec);
double psi_of_shape_quadrature(const ShapeSpec& spec, double tol = 1e-10);

}  // namespace discretion
