#include "discretion/diff_law.hpp"

#include <cmath>
#include <numbers>

#include "discretion/quadrature.hpp"

namespace discretion {

namespace {

constexpr double kClampLo = 1e-15;
constexpr double kClampHi = 1.0 - 1e-15;

double clamp_unit(double v) {
  return v < kClampLo ? kClampLo : (v > kClampHi ? kClampHi : v);
}

double half_normal_diff_cdf(double x) {
  // CDF of the difference of two standard half-normals; the squared
  // complementary-error form is the one whose derivative reproduces the
  // convolution density.
  const double e = std::erfc(x * 0.5);
  return 1.0 - 0.5 * e * e;
}

}  // namespace

DiffLaw::DiffLaw(const ShapeSpec& spec, double tol) : spec_(spec), tol_(tol) {
  validate(spec);
  spec_.location = 0.0;
  spec_.scale = 1.0;
}

double DiffLaw::cdf(double x) const {
  switch (spec_.family) {
    case Family::Exponential:
      // difference of two unit exponentials is Laplace(0, 1)
      return x >= 0.0 ? 1.0 - 0.5 * std::exp(-x) : 0.5 * std::exp(x);
    case Family::HalfNormal:
      return x >= 0.0 ? half_normal_diff_cdf(x)
                      : 1.0 - half_normal_diff_cdf(-x);
    default:
      return cdf_quadrature(x);
  }
}

double DiffLaw::cdf_quadrature(double x) const {
  if (x < 0.0) return 1.0 - cdf_quadrature(-x);
  const Family family = spec_.family;
  const double shape = spec_.shape;
  const auto integrand = [&](double v) {
    const double q = base_quantile_std(family, shape, clamp_unit(v));
    return base_cdf_std(family, shape, q + x);
  };
  return integrate_unit(integrand, tol_);
}

double base_threshold(const ShapeSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Exponential:
      return 0.5;
    case Family::HalfNormal:
      return (2.0 - std::numbers::sqrt2) / std::sqrt(std::numbers::pi);
    default:
      return base_threshold_quadrature(spec);
  }
}

double base_threshold_quadrature(const ShapeSpec& spec, double tol) {
  validate(spec);
  const Family family = spec.family;
  const double shape = spec.shape;
  // E[(X'-X)^+] = E_X[ PE(X) ] with PE the upper partial expectation of the
  // base; integrating in quantile space keeps heavy tails exact.
  const auto integrand = [&](double v) {
    const double q = base_quantile_std(family, shape, clamp_unit(v));
    return base_partial_expectation_std(family, shape, q);
  };
  return integrate_unit(integrand, tol);
}

double psi_of_shape(const ShapeSpec& spec) {
  return DiffLaw(spec).cdf(base_threshold(spec));
}

double psi_of_shape_quadrature(const ShapeSpec& spec, double tol) {
  return DiffLaw(spec, tol).cdf_quadrature(base_threshold_quadrature(spec, tol));
}

}  // namespace discretion
