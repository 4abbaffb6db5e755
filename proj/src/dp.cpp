#include "discretion/dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discretion::dp {

namespace {

std::vector<std::vector<double>> grid(int horizon, int budget) {
  return std::vector<std::vector<double>>(
      horizon + 1, std::vector<double>(budget + 1, 0.0));
}

}  // namespace

Solution solve(int horizon, int budget, const GainModel& model, double tol) {
  validate(model);
  if (horizon < 0 || budget < 0) {
    throw std::invalid_argument("horizon and budget must be non-negative");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  Solution sol;
  sol.horizon = horizon;
  sol.budget = budget;
  sol.p = model.p;
  sol.scale = model.scale;
  sol.mean_mis = model.scale * model.mean_mis_std;
  sol.excess = grid(horizon, budget);
  sol.threshold = grid(horizon, budget);
  sol.spend_prob = grid(horizon, budget);
  if (horizon == 0) return sol;

  const double q_misalign = 1.0 - model.p;
  // Standardized pass: W(tau,k) = W(tau-1,k) + (1-p) E[(D - T)^+] with
  // T the marginal excess value of the k-th unit. Rescaling afterwards keeps
  // the spending probabilities bit-identical across scales of one shape.
  std::vector<std::vector<double>> w = grid(horizon, budget);
  for (int tau = 1; tau <= horizon; ++tau) {
    for (int k = 1; k <= budget; ++k) {
      double t_std = w[tau - 1][k] - w[tau - 1][k - 1];
      if (t_std < 0.0) t_std = 0.0;
      w[tau][k] = w[tau - 1][k] + q_misalign * model.pe_mis_std(t_std);
      sol.threshold[tau][k] = t_std;
      const double f_mis = t_std <= 0.0 ? 0.0 : model.cdf_mis_std(t_std);
      sol.spend_prob[tau][k] = q_misalign * (1.0 - f_mis);
    }
  }
  for (int tau = 0; tau <= horizon; ++tau) {
    for (int k = 0; k <= budget; ++k) {
      sol.excess[tau][k] = model.scale * w[tau][k];
      sol.threshold[tau][k] *= model.scale;
    }
  }
  return sol;
}

SpendingProfile spending_profile(const Solution& sol) {
  const int T = sol.horizon;
  const int K = sol.budget;
  if (T == 0) return {};
  if (sol.excess.empty()) {
    throw std::invalid_argument("spending profile requires a solved program");
  }

  SpendingProfile prof;
  prof.pi.assign(T + 1, std::vector<double>(K + 1, 0.0));
  prof.pi[0][K] = 1.0;
  prof.spend_prob.assign(T, 0.0);
  prof.cumulative.assign(T, 0.0);

  for (int t = 1; t <= T; ++t) {
    const int tau = T - t + 1;
    const auto& cur = prof.pi[t - 1];
    double spend = 0.0;
    for (int k = 1; k <= K; ++k) spend += cur[k] * sol.spend_prob[tau][k];
    prof.spend_prob[t - 1] = spend;

    auto& next = prof.pi[t];
    for (int k = 0; k <= K; ++k) {
      const double stay =
          cur[k] * (1.0 - (k >= 1 ? sol.spend_prob[tau][k] : 0.0));
      const double from_above =
          k + 1 <= K ? cur[k + 1] * sol.spend_prob[tau][k + 1] : 0.0;
      next[k] = stay + from_above;
    }
  }
  double running = 0.0;
  for (int t = 0; t < T; ++t) {
    running += prof.spend_prob[t];
    prof.cumulative[t] = running;
  }
  double terminal = 0.0;
  for (int k = 0; k <= K; ++k) {
    terminal += static_cast<double>(k) * prof.pi[T][k];
  }
  prof.expected_terminal_budget = terminal;
  return prof;
}

double policy_value(const Solution& sol, double mu_pol) {
  if (sol.horizon == 0) return 0.0;
  return sol.horizon * mu_pol + sol.excess[sol.horizon][sol.budget];
}

std::vector<HeatmapRow> heatmap(const Solution& sol) {
  std::vector<HeatmapRow> rows;
  rows.reserve(static_cast<std::size_t>(sol.horizon) *
               static_cast<std::size_t>(sol.budget));
  for (int tau = 1; tau <= sol.horizon; ++tau) {
    for (int k = 1; k <= sol.budget; ++k) {
      rows.push_back({tau, k, sol.threshold[tau][k], sol.spend_prob[tau][k]});
    }
  }
  return rows;
}

std::vector<std::string> check_invariants(const Solution& sol, double tol) {
  std::vector<std::string> issues;
  const auto note = [&](const std::string& msg) { issues.push_back(msg); };
  const int T = sol.horizon;
  const int K = sol.budget;
  const double q_mis = 1.0 - sol.p;

  for (int k = 0; k <= K; ++k) {
    if (sol.excess[0][k] != 0.0) note("excess not zero at tau=0");
  }
  for (int tau = 0; tau <= T; ++tau) {
    if (sol.excess[tau][0] != 0.0) note("excess not zero at k=0");
  }
  for (int tau = 1; tau <= T; ++tau) {
    for (int k = 1; k <= K; ++k) {
      const double w = sol.excess[tau][k];
      const double cap = tau * q_mis * sol.mean_mis;
      if (w < -tol || w > cap + tol) {
        note("excess outside [0, tau (1-p) E[gain|mis]] at tau=" +
             std::to_string(tau) + " k=" + std::to_string(k));
      }
      if (w + tol < sol.excess[tau - 1][k]) note("excess decreasing in tau");
      if (w + tol < sol.excess[tau][k - 1]) note("excess decreasing in k");
      if (sol.threshold[tau][k] < -tol) note("negative threshold");
      if (k >= tau && std::abs(sol.threshold[tau][k]) > tol) {
        note("nonzero threshold with ample budget");
      }
      if (k >= tau && std::abs(sol.spend_prob[tau][k] - q_mis) > tol) {
        note("ample-budget spend probability differs from 1-p");
      }
      if (sol.spend_prob[tau][k] < -tol ||
          sol.spend_prob[tau][k] > q_mis + tol) {
        note("spend probability outside [0, 1-p]");
      }
      if (k >= 2 && sol.threshold[tau][k] > sol.threshold[tau][k - 1] + tol) {
        note("threshold increasing in k");
      }
      if (tau >= 2 && sol.threshold[tau][k] + tol < sol.threshold[tau - 1][k]) {
        note("threshold decreasing in tau");
      }
    }
  }
  return issues;
}

}  // namespace discretion::dp
