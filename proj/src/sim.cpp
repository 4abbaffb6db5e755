#include "discretion/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "discretion/rng.hpp"

namespace discretion::sim {

namespace {

struct Welford {
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t n = 0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double se() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / (static_cast<double>(n) - 1.0) /
                     static_cast<double>(n));
  }
};

void validate_config(const EpisodeConfig& cfg) {
  if (cfg.episodes < 1) {
    throw std::invalid_argument("episode count must be at least 1");
  }
  if (cfg.horizon < 1 || cfg.budget < 0) {
    throw std::invalid_argument("need horizon >= 1 and budget >= 0");
  }
  validate(cfg.improvement);
  if (cfg.baseline) validate(*cfg.baseline);
}

EpisodeResult run(const EpisodeConfig& cfg, const dp::Solution* sol) {
  validate_config(cfg);
  const int T = cfg.horizon;
  const int K = cfg.budget;

  EpisodeResult res;
  res.horizon = T;
  res.episodes = cfg.episodes;
  res.spend_freq_dp.assign(T, 0.0);
  res.spend_freq_prophet.assign(T, 0.0);
  res.mis_count.assign(T, 0);
  res.spend_given_mis_dp.assign(T, 0);
  res.spend_given_mis_prophet.assign(T, 0);

  Welford acc_policy, acc_dp, acc_prophet;
  std::int64_t aligned_periods = 0;
  std::vector<double> gains(T);
  std::vector<int> order(T);

  for (int e = 0; e < cfg.episodes; ++e) {
    // Separate substreams so the gain sequence is untouched by the choice
    // of baseline law under a shared seed.
    RngStream rng_gain =
        RngStream::substream(cfg.seed, 2 * static_cast<std::uint64_t>(e));
    RngStream rng_base =
        RngStream::substream(cfg.seed, 2 * static_cast<std::uint64_t>(e) + 1);

    double policy_w = 0.0;
    double dp_gain = 0.0;
    int k = K;
    std::vector<bool> dp_spent(T, false);

    for (int t = 0; t < T; ++t) {
      double w1 = cfg.baseline_constant, w2 = cfg.baseline_constant;
      if (cfg.baseline) {
        w1 = sample(*cfg.baseline, rng_base);
        w2 = sample(*cfg.baseline, rng_base);
      }
      // Improvements are i.i.d. and independent of the baselines, so the
      // pair can be drawn in role order: first the needier household's.
      const double improve_needy = sample(cfg.improvement, rng_gain);
      const double improve_other = sample(cfg.improvement, rng_gain);
      const double delta = std::max(improve_other - improve_needy, 0.0);
      gains[t] = delta;

      policy_w += w1 + w2 + improve_needy;
      if (delta > 0.0) {
        res.mis_count[t] += 1;
      } else {
        ++aligned_periods;
      }

      if (sol != nullptr && k >= 1 && delta > 0.0) {
        const int tau = T - t;  // periods remaining including this one
        if (delta >= sol->threshold[tau][k]) {
          dp_gain += delta;
          --k;
          dp_spent[t] = true;
          res.spend_freq_dp[t] += 1.0;
          res.spend_given_mis_dp[t] += 1;
        }
      }
    }

    // Clairvoyant keeps the K largest strictly positive gains.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gains[a] > gains[b]; });
    double prophet_gain = 0.0;
    int taken = 0;
    for (int idx : order) {
      if (taken >= K || gains[idx] <= 0.0) break;
      prophet_gain += gains[idx];
      ++taken;
      res.spend_freq_prophet[idx] += 1.0;
      res.spend_given_mis_prophet[idx] += 1;
    }

    acc_policy.add(policy_w);
    acc_dp.add(policy_w + dp_gain);
    acc_prophet.add(policy_w + prophet_gain);
    const double slack = 1e-9 * std::max(1.0, prophet_gain);
    if (dp_gain < 0.0 || dp_gain > prophet_gain + slack) {
      ++res.ordering_violations;
    }
  }

  const double ne = static_cast<double>(cfg.episodes);
  res.mean_policy = acc_policy.mean;
  res.se_policy = acc_policy.se();
  res.mean_dp = acc_dp.mean;
  res.se_dp = acc_dp.se();
  res.mean_prophet = acc_prophet.mean;
  res.se_prophet = acc_prophet.se();
  for (int t = 0; t < T; ++t) {
    res.spend_freq_dp[t] /= ne;
    res.spend_freq_prophet[t] /= ne;
  }
  res.p_hat = static_cast<double>(aligned_periods) / (ne * T);
  return res;
}

}  // namespace

EpisodeResult simulate_episodes(const EpisodeConfig& cfg,
                                const dp::Solution& sol) {
  if (sol.horizon != cfg.horizon || sol.budget != cfg.budget) {
    throw std::invalid_argument(
        "solved program does not match the episode horizon/budget");
  }
  return run(cfg, &sol);
}

double prophet_value(const EpisodeConfig& cfg) {
  return run(cfg, nullptr).mean_prophet;
}

std::vector<double> empirical_profile(const EpisodeResult& result) {
  return result.spend_freq_dp;
}

}  // namespace discretion::sim
