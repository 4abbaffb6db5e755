#include "discretion/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "discretion/rng.hpp"

namespace discretion {

namespace {

struct BatchMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

std::uint64_t stream_count(std::uint64_t n, int substreams, int j) {
  const std::uint64_t base = n / static_cast<std::uint64_t>(substreams);
  const std::uint64_t rem = n % static_cast<std::uint64_t>(substreams);
  return base + (static_cast<std::uint64_t>(j) < rem ? 1 : 0);
}

template <class Fn>
void run_streams(int substreams, Fn&& body) {
  if (substreams == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(substreams);
  for (int j = 0; j < substreams; ++j) {
    workers.emplace_back([&body, j] { body(j); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

McEstimate mc_estimate(const ShapeSpec& spec, std::uint64_t n,
                       std::uint64_t seed, int substreams) {
  validate(spec);
  if (n < 2) throw std::invalid_argument("mc_estimate needs n >= 2");
  if (substreams < 1) {
    throw std::invalid_argument("substream count must be at least 1");
  }

  // Stage one: empirical threshold from n independent pairs.
  std::vector<BatchMoments> moments(substreams);
  run_streams(substreams, [&](int j) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(j));
    const std::uint64_t count = stream_count(n, substreams, j);
    BatchMoments m;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double x = sample(spec, rng);
      const double xp = sample(spec, rng);
      const double d = xp > x ? xp - x : 0.0;
      m.sum += d;
      m.sum_sq += d * d;
    }
    moments[j] = m;
  });
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& m : moments) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double nd = static_cast<double>(n);
  const double c_hat = sum / nd;
  const double var = std::max(0.0, (sum_sq - nd * c_hat * c_hat) / (nd - 1.0));
  const double se_c = std::sqrt(var / nd);

  // Stage two: evaluate the hold frequency on an independent batch.
  std::vector<std::uint64_t> held(substreams, 0);
  run_streams(substreams, [&](int j) {
    RngStream rng = RngStream::substream(
        seed, static_cast<std::uint64_t>(substreams + j));
    const std::uint64_t count = stream_count(n, substreams, j);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double x = sample(spec, rng);
      const double xp = sample(spec, rng);
      const double d = xp > x ? xp - x : 0.0;
      if (d <= c_hat) ++h;
    }
    held[j] = h;
  });
  std::uint64_t total_held = 0;
  for (std::uint64_t h : held) total_held += h;

  McEstimate out;
  out.c_hat = c_hat;
  out.psi_hat = static_cast<double>(total_held) / nd;
  out.se_c = se_c;
  out.psi_se = std::sqrt(std::max(0.0, out.psi_hat * (1.0 - out.psi_hat)) / nd);
  out.n = n;
  out.high_variance_c =
      (spec.family == Family::Pareto && spec.shape <= 2.0) ||
      (spec.family == Family::Lognormal && spec.shape >= 3.0);
  return out;
}

double excess_kurtosis(std::span<const double> samples) {
  if (samples.size() < 4) {
    throw std::invalid_argument("excess kurtosis needs at least 4 samples");
  }
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  m2 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) {
    throw std::invalid_argument("excess kurtosis undefined for zero variance");
  }
  return m4 / (m2 * m2) - 3.0;
}

}  // namespace discretion
