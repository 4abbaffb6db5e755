#include "discretion/shape.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "discretion/rng.hpp"

namespace discretion {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
constexpr double kSqrt2 = std::numbers::sqrt2;

double require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  return v;
}

// Marsaglia-Tsang gamma generator; k < 1 boosted through Gamma(k+1).
double sample_gamma(double k, RngStream& rng) {
  if (k < 1.0) {
    const double u = rng.uniform();
    return sample_gamma(k + 1.0, rng) * std::pow(u, 1.0 / k);
  }
  const double d = k - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rng.normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v;
    }
  }
}

}  // namespace

bool uses_shape_param(Family family) {
  switch (family) {
    case Family::Gamma:
    case Family::Weibull:
    case Family::Lognormal:
    case Family::Pareto:
      return true;
    default:
      return false;
  }
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Exponential: return "exponential";
    case Family::HalfNormal: return "half-normal";
    case Family::Gamma: return "gamma";
    case Family::Weibull: return "weibull";
    case Family::Lognormal: return "lognormal";
    case Family::Pareto: return "pareto";
    case Family::Uniform: return "uniform";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "exponential" || name == "exp") return Family::Exponential;
  if (name == "half-normal" || name == "halfnormal" || name == "half_normal")
    return Family::HalfNormal;
  if (name == "gamma") return Family::Gamma;
  if (name == "weibull") return Family::Weibull;
  if (name == "lognormal") return Family::Lognormal;
  if (name == "pareto") return Family::Pareto;
  if (name == "uniform") return Family::Uniform;
  throw std::invalid_argument("unknown distribution family: " + name);
}

void validate(const ShapeSpec& spec) {
  require_positive(spec.scale, "scale");
  if (!std::isfinite(spec.location)) {
    throw std::invalid_argument("location must be finite");
  }
  switch (spec.family) {
    case Family::Gamma:
      require_positive(spec.shape, "gamma shape k");
      break;
    case Family::Weibull:
      require_positive(spec.shape, "weibull shape c");
      break;
    case Family::Lognormal:
      require_positive(spec.shape, "lognormal sigma");
      break;
    case Family::Pareto:
      // finite mean needs tail index strictly above one
      if (!(spec.shape > 1.0) || !std::isfinite(spec.shape)) {
        throw std::invalid_argument("pareto tail index b must exceed 1");
      }
      break;
    default:
      break;
  }
}

double base_cdf_std(Family family, double shape, double x) {
  switch (family) {
    case Family::Exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case Family::HalfNormal:
      return x <= 0.0 ? 0.0 : std::erf(x / kSqrt2);
    case Family::Gamma:
      return x <= 0.0 ? 0.0 : boost::math::gamma_p(shape, x);
    case Family::Weibull:
      return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, shape));
    case Family::Lognormal:
      return x <= 0.0 ? 0.0 : normal_cdf(std::log(x) / shape);
    case Family::Pareto:
      return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -shape);
    case Family::Uniform:
      if (x <= 0.0) return 0.0;
      return x >= 1.0 ? 1.0 : x;
  }
  return 0.0;
}

double base_pdf_std(Family family, double shape, double x) {
  switch (family) {
    case Family::Exponential:
      return x < 0.0 ? 0.0 : std::exp(-x);
    case Family::HalfNormal:
      return x < 0.0 ? 0.0
                     : std::sqrt(2.0 / kPi) * std::exp(-0.5 * x * x);
    case Family::Gamma:
      if (x <= 0.0) return 0.0;
      return std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape));
    case Family::Weibull:
      if (x <= 0.0) return 0.0;
      return shape * std::pow(x, shape - 1.0) * std::exp(-std::pow(x, shape));
    case Family::Lognormal: {
      if (x <= 0.0) return 0.0;
      const double z = std::log(x) / shape;
      return std::exp(-0.5 * z * z) / (x * shape * std::sqrt(2.0 * kPi));
    }
    case Family::Pareto:
      return x < 1.0 ? 0.0 : shape * std::pow(x, -shape - 1.0);
    case Family::Uniform:
      return (x < 0.0 || x > 1.0) ? 0.0 : 1.0;
  }
  return 0.0;
}

double base_quantile_std(Family family, double shape, double u) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0,1)");
  }
  switch (family) {
    case Family::Exponential:
      return -std::log1p(-u);
    case Family::HalfNormal:
      return kSqrt2 * boost::math::erf_inv(u);
    case Family::Gamma:
      return boost::math::gamma_p_inv(shape, u);
    case Family::Weibull:
      return std::pow(-std::log1p(-u), 1.0 / shape);
    case Family::Lognormal:
      return std::exp(-shape * kSqrt2 * boost::math::erfc_inv(2.0 * u));
    case Family::Pareto:
      return std::pow(1.0 - u, -1.0 / shape);
    case Family::Uniform:
      return u;
  }
  return 0.0;
}

double base_mean_std(Family family, double shape) {
  switch (family) {
    case Family::Exponential: return 1.0;
    case Family::HalfNormal: return std::sqrt(2.0 / kPi);
    case Family::Gamma: return shape;
    case Family::Weibull: return std::tgamma(1.0 + 1.0 / shape);
    case Family::Lognormal: return std::exp(0.5 * shape * shape);
    case Family::Pareto: return shape / (shape - 1.0);
    case Family::Uniform: return 0.5;
  }
  return 0.0;
}

double base_partial_expectation_std(Family family, double shape, double y) {
  if (y <= 0.0) return base_mean_std(family, shape) - y;
  switch (family) {
    case Family::Exponential:
      return std::exp(-y);
    case Family::HalfNormal: {
      const double w = y / kSqrt2;
      return kSqrt2 * (std::exp(-w * w) / kSqrtPi - w * std::erfc(w));
    }
    case Family::Gamma:
      return shape * boost::math::gamma_q(shape + 1.0, y) -
             y * boost::math::gamma_q(shape, y);
    case Family::Weibull: {
      const double yc = std::pow(y, shape);
      const double a = 1.0 + 1.0 / shape;
      return std::tgamma(a) * boost::math::gamma_q(a, yc) -
             y * std::exp(-yc);
    }
    case Family::Lognormal: {
      const double z = std::log(y) / shape;
      return std::exp(0.5 * shape * shape) * normal_cdf(shape - z) -
             y * normal_cdf(-z);
    }
    case Family::Pareto:
      if (y <= 1.0) return base_mean_std(family, shape) - y;
      return std::pow(y, 1.0 - shape) / (shape - 1.0);
    case Family::Uniform:
      if (y >= 1.0) return 0.0;
      return 0.5 * (1.0 - y) * (1.0 - y);
  }
  return 0.0;
}

double sample_base(Family family, double shape, RngStream& rng) {
  switch (family) {
    case Family::Exponential:
      return -std::log1p(-rng.uniform());
    case Family::HalfNormal:
      return std::abs(rng.normal());
    case Family::Gamma:
      return sample_gamma(shape, rng);
    case Family::Weibull:
      return std::pow(-std::log1p(-rng.uniform()), 1.0 / shape);
    case Family::Lognormal:
      return std::exp(shape * rng.normal());
    case Family::Pareto:
      return std::pow(1.0 - rng.uniform(), -1.0 / shape);
    case Family::Uniform:
      return rng.uniform();
  }
  return 0.0;
}

double base_cdf(const ShapeSpec& spec, double x) {
  validate(spec);
  return base_cdf_std(spec.family, spec.shape, (x - spec.location) / spec.scale);
}

double base_quantile(const ShapeSpec& spec, double u) {
  validate(spec);
  return spec.location + spec.scale * base_quantile_std(spec.family, spec.shape, u);
}

double sample(const ShapeSpec& spec, RngStream& rng) {
  return spec.location + spec.scale * sample_base(spec.family, spec.shape, rng);
}

double mean_normalized_scale(Family family, double shape) {
  return 1.0 / base_mean_std(family, shape);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / kSqrt2);
}

}  // namespace discretion
