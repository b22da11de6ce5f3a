#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "ilr/batch.hpp"

// Stream generators: stochastic realizable streams, and the constructive
// threshold-tree adversary that forces any online learner into n/2 expected
// mistakes on a gamma-margin linearly separable sequence.

namespace ilr {

// Bisection tree on [0,1]: z_t is the midpoint of the current interval and
// eps_t = -1 keeps the upper half, eps_t = +1 the lower half. The terminal
// value z*(eps) sits strictly between every node on the path, on the side
// matching its sign.
struct ThresholdTree {
  int depth;     // floor(log2(2/delta))
  double delta;

  // z_1 .. z_depth along the path; eps entries beyond depth-1 are ignored.
  std::vector<double> path_values(const std::vector<int>& eps) const;
  // z*(eps) = z_{depth+1}; needs eps_1..eps_depth.
  double terminal(const std::vector<int>& eps) const;
};

ThresholdTree build_threshold_tree(double delta);

struct MarginInstance {
  int dim;       // d + 1
  double gamma;  // target margin
  std::vector<Vec> xs;
  std::vector<int> ys;  // +1 / -1
  Vec w;                // certifying vector, |w|_2 <= 1
};

// ||w|| <= 1 + 1e-12, <w,x_t> y_t >= gamma - 1e-12, ||x_t|| <= 2 + 1e-12.
bool verify_shattering(const MarginInstance& inst);

struct OnlineBinaryLearner {
  std::function<int(const Vec&)> predict;          // returns +1 / -1
  std::function<void(const Vec&, int)> update;     // may be empty
};

// Expected-mistake bound (d/4) * floor(log2(1 / (5 gamma sqrt(d)))).
double margin_mistake_bound(int d, double gamma);

// Plays the d-block concatenated tree (delta = sqrt(4 gamma sqrt(5d)))
// against the learner with Rademacher labels; returns the realized instance
// with its certificate and the learner's mistake count.
std::pair<MarginInstance, int> margin_adversary(int d, double gamma,
                                                OnlineBinaryLearner& learner,
                                                std::mt19937_64& rng);

// x uniform on the radius-R ball, y ~ softmax(W* x); deterministic per seed.
std::vector<Example> stochastic_stream(const Mat& Wstar, double R, int n,
                                       std::uint64_t seed);

// CSV rows "t,x_1,...,x_d,y".
void write_stream_csv(const std::vector<Example>& stream, std::ostream& out);

}  // namespace ilr
