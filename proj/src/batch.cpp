#include "ilr/batch.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "ilr/core.hpp"

namespace ilr {

int chunk_count(double delta) {
  if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("delta out of (0,1)");
  return std::max(1, static_cast<int>(std::ceil(std::log(2.0 / delta))));
}

FrozenPredictor online_to_batch(const std::vector<Example>& chunk,
                                const LearnerFactory& factory,
                                std::uint64_t seed) {
  if (chunk.empty()) throw std::invalid_argument("empty chunk");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> stop(1, chunk.size());
  std::size_t tau = stop(rng);
  auto learner = std::make_shared<AggregatingRegressor>(factory());
  for (std::size_t t = 0; t + 1 < tau; ++t)
    learner->update(chunk[t].x, chunk[t].y);
  return [learner](const Vec& x) { return learner->predict_prob(x); };
}

namespace {

// Uniform point set over Delta_M: a deterministic grid for small M, Dirichlet
// draws otherwise. Either way the points feed an importance average with
// uniform proposal, so the normalizing volume cancels.
std::vector<Vec> simplex_points(int M, double resolution, int particles,
                                std::uint64_t seed) {
  std::vector<Vec> pts;
  if (M == 1) {
    pts.push_back(Vec{1.0});
  } else if (M == 2) {
    int steps = static_cast<int>(std::lround(1.0 / resolution));
    for (int i = 0; i <= steps; ++i) {
      double a = static_cast<double>(i) / steps;
      pts.push_back(Vec{a, 1.0 - a});
    }
  } else if (M == 3) {
    int steps = static_cast<int>(std::lround(1.0 / resolution));
    for (int i = 0; i <= steps; ++i)
      for (int j = 0; j + i <= steps; ++j)
        pts.push_back(Vec{static_cast<double>(i) / steps,
                          static_cast<double>(j) / steps,
                          static_cast<double>(steps - i - j) / steps});
  } else {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    pts.reserve(particles);
    for (int p = 0; p < particles; ++p) {
      Vec q(M);
      double total = 0.0;
      for (int i = 0; i < M; ++i) total += q[i] = expo(rng);
      for (int i = 0; i < M; ++i) q[i] /= total;
      pts.push_back(std::move(q));
    }
  }
  return pts;
}

}  // namespace

Vec ewoo_simplex(int M, const std::vector<std::function<double(const Vec&)>>& losses,
                 std::uint64_t seed, double resolution, int particles) {
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  if (M == 1) return Vec{1.0};

  std::vector<Vec> pts = simplex_points(M, resolution, particles, seed);
  Vec cumloss(pts.size(), 0.0);
  Vec qbar(M, 0.0);
  const std::size_t T = std::max<std::size_t>(losses.size(), 1);

  for (std::size_t t = 0; t < T; ++t) {
    double mx = -*std::min_element(cumloss.begin(), cumloss.end());
    Vec qt(M, 0.0);
    double z = 0.0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      double w = std::exp(-cumloss[p] - mx);
      z += w;
      for (int i = 0; i < M; ++i) qt[i] += w * pts[p][i];
    }
    for (int i = 0; i < M; ++i) qbar[i] += qt[i] / z;
    if (t < losses.size())
      for (std::size_t p = 0; p < pts.size(); ++p) cumloss[p] += losses[t](pts[p]);
  }
  double s = 0.0;
  for (int i = 0; i < M; ++i) s += qbar[i];
  for (int i = 0; i < M; ++i) qbar[i] /= s;
  return qbar;
}

BatchResult boost_confidence(const std::vector<Example>& samples, double delta,
                             const LearnerFactory& factory,
                             const std::function<double(std::size_t)>& regret_bound,
                             std::uint64_t seed) {
  const int M = chunk_count(delta);
  const std::size_t n = samples.size();
  if (n < 2 * static_cast<std::size_t>(M))
    throw std::invalid_argument("need at least 2M samples");

  const std::size_t m = n / (2 * static_cast<std::size_t>(M));
  const std::size_t train_end = m * static_cast<std::size_t>(M);

  // Index hygiene: chunk i covers [i*m, (i+1)*m); everything from train_end on
  // (including integer-division remainders) belongs to the EWOO phase.
  std::vector<char> used(n, 0);

  double mu = regret_bound(m) / (2.0 * static_cast<double>(m));
  mu = std::clamp(mu, 0.0, 0.5);

  std::vector<FrozenPredictor> frozen;
  frozen.reserve(M);
  for (int i = 0; i < M; ++i) {
    std::vector<Example> chunk;
    chunk.reserve(m);
    for (std::size_t t = i * m; t < (i + 1) * m; ++t) {
      if (used[t]) throw std::logic_error("chunk index reused");
      used[t] = 1;
      chunk.push_back(samples[t]);
    }
    FrozenPredictor raw = online_to_batch(
        chunk, factory, seed + 0x9e3779b97f4a7c15ull * (i + 1));
    frozen.push_back([raw, mu](const Vec& x) { return smooth(raw(x), mu); });
  }

  std::vector<std::function<double(const Vec&)>> losses;
  losses.reserve(n - train_end);
  auto shared = std::make_shared<std::vector<FrozenPredictor>>(frozen);
  for (std::size_t t = train_end; t < n; ++t) {
    if (used[t]) throw std::logic_error("aggregation index reused");
    used[t] = 1;
    Vec probs(M);
    for (int i = 0; i < M; ++i) probs[i] = (*shared)[i](samples[t].x)[samples[t].y];
    losses.push_back([probs](const Vec& q) {
      double p = 0.0;
      for (std::size_t i = 0; i < probs.size(); ++i) p += q[i] * probs[i];
      return -std::log(std::max(p, 1e-300));
    });
  }

  Vec qbar = ewoo_simplex(M, losses, seed);
  FrozenPredictor g = [shared, qbar](const Vec& x) {
    Vec first = (*shared)[0](x);
    Vec out(first.size(), 0.0);
    for (std::size_t i = 0; i < shared->size(); ++i) {
      Vec p = (i == 0) ? first : (*shared)[i](x);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += qbar[i] * p[k];
    }
    return out;
  };
  return BatchResult{std::move(g), M, mu, std::move(qbar)};
}

}  // namespace ilr
