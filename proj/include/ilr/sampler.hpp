#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ilr/core.hpp"

// Approximate sampling from the log-concave posterior
//   P(W) ~ exp(-(1/L) sum_s loss(W x_s, y_s))
// over a convex bounded set of K x d weight matrices. Two backends:
// projected Langevin Monte Carlo (default) and a deterministic grid with
// exact exponential weights, used as the validation oracle in low dimension.

namespace ilr {

// Row-major K x d matrix.
struct Mat {
  int rows = 0, cols = 0;
  Vec a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec apply(const Vec& x) const;  // W x
};

enum class ConstraintKind {
  RowBall,   // each of the K rows in the l2 ball of radius B
  Binary,    // K = 2, row 1 pinned to zero, row 0 in the l2 ball of radius B
  Boosting,  // W = (alpha I_K, I_K), alpha in [-2, 2]
};

// Description of the decision set W, including structural pins. Exposes the
// free-parameter chart used by the grid-exact backend.
struct Constraint {
  ConstraintKind kind = ConstraintKind::RowBall;
  int K = 2;
  int d = 1;
  double B = 1.0;

  int rows() const { return K; }
  int cols() const { return kind == ConstraintKind::Boosting ? 2 * K : d; }
  int free_dim() const;

  Mat from_free(const Vec& theta) const;
  // Per-row norm scaling to <= B plus structural pins; idempotent.
  Mat project(Mat W) const;
  bool satisfied(const Mat& W, double tol = 1e-9) const;
  Mat sample_uniform(std::mt19937_64& rng) const;
  // Euclidean diameter of the free-parameter set (used for default bounds).
  double diameter() const;
};

// History defining the posterior density; immutable once built.
struct PosteriorSpec {
  Constraint constraint;
  double L = 1.0;
  double R = 1.0;  // bound on |x|, validated on append
  std::vector<std::pair<Vec, Vec>> history;  // (x, label weights)

  void append(const Vec& x, const Vec& y);
};

// f(W) = (1/L) sum_s loss(W x_s, y_s); convex in W.
// Throws std::invalid_argument if W violates the constraint.
double neg_log_density(const PosteriorSpec& spec, const Mat& W);

// grad f(W) = (1/L) sum_s [(sum_k y_sk) softmax(W x_s) - y_s] x_s^T.
Mat neg_log_density_gradient(const PosteriorSpec& spec, const Mat& W);

enum class SamplerMethod { ProjectedLangevin, GridExact };

struct SamplerConfig {
  SamplerMethod method = SamplerMethod::ProjectedLangevin;
  int m = 64;            // sample count
  int steps = 200;       // chain length per sample (restart mode)
  double step_size = 0;  // eta; 0 selects 0.5/(n R^2 max|y|_1 / L + 1)
  int burn_in = 100;     // used only in thinned single-chain mode
  bool thinned = false;  // one chain, thin every `steps` after burn-in
  std::uint64_t seed = 0;
  long long max_evals = 200'000'000;  // steps*m budget cap
  int grid_points = 33;  // per free dimension (grid-exact)
};

struct SampleSet {
  std::vector<Mat> samples;
  Vec weights;  // sums to 1; uniform for Langevin, exact exp weights for grid
};

// Deterministic grid over the free parameters of the constraint.
std::vector<Mat> make_grid(const Constraint& c, int points_per_dim);

// Grid-exact: the fixed grid with weights ~ exp(-f), no randomness.
// Langevin: m chains, each restarted from a uniform draw over W and run for
// `steps` iterations of W <- project(W - eta grad f + sqrt(2 eta) xi).
// Chain i owns the RNG stream seeded by (seed, i), so parallel and serial
// execution agree. Throws std::runtime_error when steps*m exceeds max_evals.
SampleSet draw_samples(const PosteriorSpec& spec, const SamplerConfig& cfg);

double default_step_size(const PosteriorSpec& spec);

}  // namespace ilr
