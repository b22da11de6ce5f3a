#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ilr/regressor.hpp"

// High-probability batch conversion: split the sample, train M online
// learners on disjoint chunks and freeze each at a uniformly random stopping
// time, smooth the frozen predictors, then aggregate them with EWOO over the
// probability simplex on the held-out half.

namespace ilr {

// Snapshot predictor: x -> probability vector.
using FrozenPredictor = std::function<Vec(const Vec&)>;

struct Example {
  Vec x;
  int y;
};

using LearnerFactory = std::function<AggregatingRegressor()>;

// M = ceil(log(2/delta)).
int chunk_count(double delta);

// Runs a fresh learner over the chunk, stops at tau ~ Uniform{1..len} and
// returns the predictor frozen after tau - 1 updates.
FrozenPredictor online_to_batch(const std::vector<Example>& chunk,
                                const LearnerFactory& factory,
                                std::uint64_t seed);

// Continuous exponential weights over Delta_M with rate 1: per round,
//   q_t = int q exp(-sum_{s<t} loss_s(q)) dq / int exp(-...) dq,
// by simplex-grid quadrature (M <= 3) or Dirichlet importance sampling
// (M > 3). Returns the average of q_1..q_T.
Vec ewoo_simplex(int M, const std::vector<std::function<double(const Vec&)>>& losses,
                 std::uint64_t seed = 0, double resolution = 0.01,
                 int particles = 100000);

struct BatchResult {
  FrozenPredictor g;
  int M;
  double mu;
  Vec qbar;
};

// The three-step procedure: M frozen predictors on disjoint n/(2M)-size
// chunks, each smoothed with mu = R(n/(2M)) / (2 n/(2M)), EWOO over Delta_M
// on the remaining rounds (losses -log E_{i~q}[h_i(x)_y]), and
// g = E_{i~qbar}[h_i]. Integer-division remainders go to the EWOO phase.
BatchResult boost_confidence(const std::vector<Example>& samples, double delta,
                             const LearnerFactory& factory,
                             const std::function<double(std::size_t)>& regret_bound,
                             std::uint64_t seed);

}  // namespace ilr
