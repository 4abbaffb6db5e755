#include "discretion/two_period.hpp"

#include <stdexcept>

namespace discretion::two_period {

double optimal_threshold(const GainModel& model) {
  validate(model);
  return model.scale * (1.0 - model.p) * model.pe_mis_std(0.0);
}

double psi(const GainModel& model) {
  validate(model);
  const double t_std = (1.0 - model.p) * model.pe_mis_std(0.0);
  return model.p + (1.0 - model.p) * model.cdf_mis_std(t_std);
}

double oracle_conditional_spend_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("alignment probability must lie in [0,1]");
  }
  return 0.5 * (1.0 + p);
}

RegimeFlags classify_regimes(double psi_value, double p) {
  if (!(psi_value >= 0.0 && psi_value <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("psi and p must lie in [0,1]");
  }
  if (p >= 1.0) {
    // no misalignment ever occurs; every conditional comparison is vacuous
    return {};
  }
  const double f = (psi_value - p) / (1.0 - p);
  RegimeFlags flags;
  flags.conservative_t1 = f > 0.5 * (1.0 - p);
  flags.aggressive_t2 = f > 0.5;
  flags.internally_patient = f > (1.0 - p) / (2.0 - p);
  return flags;
}

Result analyze(const GainModel& model) {
  Result r;
  r.threshold = optimal_threshold(model);
  r.psi = psi(model);
  r.p = model.p;
  r.flags = classify_regimes(r.psi, r.p);
  return r;
}

}  // namespace discretion::two_period
