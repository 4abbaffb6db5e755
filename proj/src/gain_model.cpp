#include "discretion/gain_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "discretion/diff_law.hpp"
#include "discretion/quadrature.hpp"
#include "discretion/rng.hpp"

namespace discretion {

namespace {

constexpr double kClampLo = 1e-15;
constexpr double kClampHi = 1.0 - 1e-15;

double clamp_unit(double v) {
  return v < kClampLo ? kClampLo : (v > kClampHi ? kClampHi : v);
}

}  // namespace

void validate(const GainModel& model) {
  if (!(model.p >= 0.0 && model.p <= 1.0)) {
    throw std::invalid_argument("alignment probability must lie in [0,1]");
  }
  if (!(model.scale > 0.0)) {
    throw std::invalid_argument("gain scale must be positive");
  }
  if (!model.cdf_mis_std || !model.pe_mis_std || !model.sample_mis_std) {
    throw std::invalid_argument("gain model is missing a conditional law");
  }
}

GainModel two_draw_gain_model(const ShapeSpec& spec, double p, double tol) {
  validate(spec);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("alignment probability must lie in [0,1]");
  }
  const Family family = spec.family;
  const double shape = spec.shape;
  const DiffLaw diff(spec, tol);

  GainModel model;
  model.p = p;
  model.scale = spec.scale;
  // Conditional on a positive difference, the gain is |X' - X| by symmetry.
  model.cdf_mis_std = [diff](double x) {
    if (x <= 0.0) return 0.0;
    return std::max(0.0, 2.0 * diff.cdf(x) - 1.0);
  };
  model.pe_mis_std = [family, shape, tol](double t) {
    const double off = std::max(t, 0.0);
    const auto integrand = [&](double v) {
      const double q = base_quantile_std(family, shape, clamp_unit(v));
      return base_partial_expectation_std(family, shape, q + off);
    };
    return 2.0 * integrate_unit(integrand, tol);
  };
  model.sample_mis_std = [family, shape](RngStream& rng) {
    const double x = sample_base(family, shape, rng);
    const double y = sample_base(family, shape, rng);
    return std::abs(y - x);
  };
  model.mean_mis_std = 2.0 * base_threshold(spec);
  return model;
}

GainModel discrete_gain_model(std::vector<double> points,
                              std::vector<double> probs, double p) {
  if (points.empty() || points.size() != probs.size()) {
    throw std::invalid_argument("discrete gain law needs matching point and "
                                "probability lists");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<double> pts, prs;
  double total = 0.0;
  for (std::size_t i : order) {
    if (!(points[i] > 0.0)) {
      throw std::invalid_argument("discrete gain points must be positive");
    }
    if (!(probs[i] >= 0.0)) {
      throw std::invalid_argument("discrete gain probabilities must be "
                                  "non-negative");
    }
    pts.push_back(points[i]);
    prs.push_back(probs[i]);
    total += probs[i];
  }
  if (!(std::abs(total - 1.0) < 1e-9)) {
    throw std::invalid_argument("discrete gain probabilities must sum to 1");
  }

  GainModel model;
  model.p = p;
  model.scale = 1.0;
  model.cdf_mis_std = [pts, prs](double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] <= x) acc += prs[i];
    }
    return std::min(acc, 1.0);
  };
  model.pe_mis_std = [pts, prs](double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] > t) acc += prs[i] * (pts[i] - t);
    }
    return acc;
  };
  model.sample_mis_std = [pts, prs](RngStream& rng) {
    double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      acc += prs[i];
      if (u <= acc) return pts[i];
    }
    return pts.back();
  };
  model.mean_mis_std = model.pe_mis_std(0.0);
  validate(model);
  return model;
}

double cdf_mis(const GainModel& model, double x) {
  if (x <= 0.0) return 0.0;
  return model.cdf_mis_std(x / model.scale);
}

double partial_expectation_mis(const GainModel& model, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("partial expectation requires t >= 0");
  }
  return model.scale * model.pe_mis_std(t / model.scale);
}

double gain_cdf(const GainModel& model, double x) {
  if (x < 0.0) return 0.0;
  return model.p + (1.0 - model.p) * cdf_mis(model, x);
}

double sample_gain(const GainModel& model, RngStream& rng) {
  const double u = rng.uniform();
  if (u < model.p) return 0.0;
  return model.scale * model.sample_mis_std(rng);
}

}  // namespace discretion
