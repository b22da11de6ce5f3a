#include "ilr/boosting.hpp"

#include "ilr/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilr {

Mat aux_cost_matrix(const Vec& s) {
  const int K = static_cast<int>(s.size());
  Vec p = softmax(s);
  Mat C(K, K);
  for (int y = 0; y < K; ++y)
    for (int k = 0; k < K; ++k) C(y, k) = (k == y) ? p[k] - 1.0 : p[k];
  return C;
}

Mat cost_matrix(const Vec& s) {
  const int K = static_cast<int>(s.size());
  Mat Chat = aux_cost_matrix(s);
  Mat C(K, K);
  for (int y = 0; y < K; ++y)
    for (int k = 0; k < K; ++k) C(y, k) = (Chat(y, k) - Chat(y, y)) / K;
  return C;
}

bool cost_matrix_in_class(const Mat& C, double tol) {
  if (C.rows != C.cols) return false;
  for (int y = 0; y < C.rows; ++y) {
    double row1 = 0.0;
    for (int k = 0; k < C.cols; ++k) {
      if (C(y, k) < -tol) return false;
      row1 += C(y, k);
    }
    if (std::abs(C(y, y)) > tol) return false;
    if (row1 > 1.0 + tol) return false;
  }
  return true;
}

Vec wlc_baseline(double gamma, int y, int K) {
  if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma out of [0,1]");
  if (y < 0 || y >= K) throw std::invalid_argument("label out of range");
  Vec u(K, (1.0 - gamma) / K);
  u[y] += gamma;
  return u;
}

CheatingWeakLearner::CheatingWeakLearner(double gamma, std::function<int()> peek_label,
                                         std::uint64_t seed)
    : gamma_(gamma), peek_label_(std::move(peek_label)), rng_(seed) {
  if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma out of [0,1]");
}

int CheatingWeakLearner::predict(const Vec&, const Mat& C) {
  // Side-effect free with respect to learning state; only the draw stream
  // advances.
  int y = peek_label_();
  Vec u = wlc_baseline(gamma_, y, C.rows);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double v = unif(rng_);
  double acc = 0.0;
  for (int k = 0; k < C.rows; ++k) {
    acc += u[k];
    if (v < acc) return k;
  }
  return C.rows - 1;
}

LinearWeakLearner::LinearWeakLearner(int K, int d, double lr) : W_(K, d), lr_(lr) {}

int LinearWeakLearner::predict(const Vec& x, const Mat&) {
  Vec scores = W_.apply(x);
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) -
                          scores.begin());
}

void LinearWeakLearner::update(const Vec& x, const Mat& C, int y) {
  Vec scores = W_.apply(x);
  int pred = static_cast<int>(std::max_element(scores.begin(), scores.end()) -
                              scores.begin());
  if (pred == y) return;
  double scale = lr_ * std::max(C(y, pred), 0.1);
  for (int c = 0; c < W_.cols; ++c) {
    W_(y, c) += scale * x[c];
    W_(pred, c) -= scale * x[c];
  }
}

AlphaGridLogistic::AlphaGridLogistic(int K, int horizon, int grid_points)
    : K_(K), mu_(1.0 / horizon) {
  if (grid_points < 2) throw std::invalid_argument("need >= 2 alpha grid points");
  alphas_.resize(grid_points);
  for (int i = 0; i < grid_points; ++i)
    alphas_[i] = -2.0 + 4.0 * i / (grid_points - 1);
  cumloss_.assign(grid_points, 0.0);
}

Vec AlphaGridLogistic::predict(int l, const Vec& s) const {
  if (l < 0 || l >= K_) throw std::invalid_argument("weak prediction out of range");
  Vec neg(cumloss_.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -cumloss_[i];
  double lse = log_sum_exp(neg);
  Vec pbar(K_, 0.0);
  Vec z = s;
  for (size_t i = 0; i < alphas_.size(); ++i) {
    double w = std::exp(neg[i] - lse);
    z[l] = s[l] + alphas_[i];
    Vec p = softmax(z);
    for (int k = 0; k < K_; ++k) pbar[k] += w * p[k];
  }
  return softmax_pinv(smooth(pbar, mu_));
}

void AlphaGridLogistic::update(int l, const Vec& s, int y) {
  Vec z = s;
  for (size_t i = 0; i < alphas_.size(); ++i) {
    z[l] = s[l] + alphas_[i];
    cumloss_[i] += logistic_loss(z, y);
  }
}

double AlphaGridLogistic::best_alpha_loss() const {
  return *std::min_element(cumloss_.begin(), cumloss_.end());
}

Booster::Booster(std::vector<std::unique_ptr<WeakLearner>> learners, int K,
                 int horizon, std::uint64_t seed, int alpha_grid_points)
    : learners_(std::move(learners)), K_(K), rng_(seed) {
  if (learners_.empty()) throw std::invalid_argument("need at least one weak learner");
  const int N = static_cast<int>(learners_.size());
  logistics_.reserve(N);
  for (int i = 0; i < N; ++i)
    logistics_.emplace_back(K, horizon, alpha_grid_points);
  log_hedge_.assign(N, 0.0);
  expert_mistakes_.assign(N, 0);
  edge_num_.assign(N, 0.0);
  edge_den_.assign(N, 0.0);
}

BoostRoundResult Booster::round(const Vec& x, int true_label) {
  const int N = num_learners();
  if (true_label < 0 || true_label >= K_)
    throw std::invalid_argument("label out of range");

  std::vector<Vec> prefix_scores(N + 1);
  prefix_scores[0].assign(K_, 0.0);
  std::vector<Mat> costs(N);
  BoostRoundResult res;
  res.weak_predictions.resize(N);
  res.expert_predictions.resize(N);

  for (int i = 0; i < N; ++i) {
    costs[i] = cost_matrix(prefix_scores[i]);
    res.weak_predictions[i] = learners_[i]->predict(x, costs[i]);
    prefix_scores[i + 1] = logistics_[i].predict(res.weak_predictions[i], prefix_scores[i]);
    for (double v : prefix_scores[i + 1])
      max_score_inf_ = std::max(max_score_inf_, std::abs(v));
    res.expert_predictions[i] = static_cast<int>(
        std::max_element(prefix_scores[i + 1].begin(), prefix_scores[i + 1].end()) -
        prefix_scores[i + 1].begin());
  }

  // Sample i_t proportional to the Hedge weights.
  double mx = *std::max_element(log_hedge_.begin(), log_hedge_.end());
  double total = 0.0;
  Vec w(N);
  for (int i = 0; i < N; ++i) total += w[i] = std::exp(log_hedge_[i] - mx);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng_) * total;
  int it = N - 1;
  double acc = 0.0;
  for (int i = 0; i < N; ++i) {
    acc += w[i];
    if (u < acc) {
      it = i;
      break;
    }
  }
  res.sampled_expert = it;
  res.predicted = res.expert_predictions[it];
  res.mistake = (res.predicted != true_label);
  if (res.mistake) ++mistakes_;

  for (int i = 0; i < N; ++i) {
    Mat Chat = aux_cost_matrix(prefix_scores[i]);
    edge_num_[i] += Chat(true_label, res.weak_predictions[i]);
    edge_den_[i] += Chat(true_label, true_label);
    learners_[i]->update(x, costs[i], true_label);
    logistics_[i].update(res.weak_predictions[i], prefix_scores[i], true_label);
    if (res.expert_predictions[i] != true_label) {
      ++expert_mistakes_[i];
      log_hedge_[i] -= 1.0;
    }
  }
  return res;
}

double Booster::empirical_edge(int i, bool* degenerate) const {
  if (degenerate) *degenerate = false;
  if (edge_den_[i] == 0.0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  return edge_num_[i] / edge_den_[i];
}

}  // namespace ilr
