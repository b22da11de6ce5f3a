#include "ilr/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilr {

namespace {

void require_finite(const Vec& z) {
  if (z.size() < 2) throw std::invalid_argument("score vector needs K >= 2");
  for (double v : z) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite score");
  }
}

}  // namespace

double log_sum_exp(const Vec& z) {
  double mx = *std::max_element(z.begin(), z.end());
  double s = 0.0;
  for (double v : z) s += std::exp(v - mx);
  return mx + std::log(s);
}

Vec softmax(const Vec& z) {
  require_finite(z);
  double mx = *std::max_element(z.begin(), z.end());
  Vec p(z.size());
  double s = 0.0;
  for (size_t k = 0; k < z.size(); ++k) {
    p[k] = std::exp(z[k] - mx);
    s += p[k];
  }
  for (double& v : p) v /= s;
  return p;
}

Vec log_softmax(const Vec& z) {
  require_finite(z);
  double lse = log_sum_exp(z);
  Vec out(z.size());
  for (size_t k = 0; k < z.size(); ++k) out[k] = z[k] - lse;
  return out;
}

Vec softmax_pinv(const Vec& p) {
  Vec z(p.size());
  for (size_t k = 0; k < p.size(); ++k) {
    if (!(p[k] > 0.0)) throw std::domain_error("softmax_pinv needs p > 0");
    z[k] = std::log(p[k]);
  }
  return z;
}

Vec smooth(const Vec& p, double mu) {
  if (mu < 0.0 || mu > 0.5) throw std::invalid_argument("mu must be in [0, 1/2]");
  const double K = static_cast<double>(p.size());
  Vec out(p.size());
  for (size_t k = 0; k < p.size(); ++k) out[k] = (1.0 - mu) * p[k] + mu / K;
  return out;
}

double weighted_logistic_loss(const Vec& z, const Vec& y) {
  if (y.size() != z.size()) throw std::invalid_argument("dimension mismatch");
  double lse = log_sum_exp(z);
  double loss = 0.0;
  for (size_t k = 0; k < z.size(); ++k) {
    if (y[k] < 0.0) throw std::invalid_argument("label weights must be >= 0");
    loss += y[k] * (lse - z[k]);
  }
  return loss;
}

double logistic_loss(const Vec& z, int y) {
  if (y < 0 || y >= static_cast<int>(z.size()))
    throw std::invalid_argument("label out of range");
  return log_sum_exp(z) - z[y];
}

double binary_logistic_loss(double z, int y) {
  if (y != 1 && y != -1) throw std::invalid_argument("binary label must be +/-1");
  if (!std::isfinite(z)) throw std::invalid_argument("non-finite score");
  double a = -static_cast<double>(y) * z;
  // log(1 + e^a), stable for large |a|
  return a > 0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a));
}

Vec loss_gradient(const Vec& z, const Vec& y) {
  if (y.size() != z.size()) throw std::invalid_argument("dimension mismatch");
  double ysum = 0.0;
  for (double v : y) ysum += v;
  Vec g = softmax(z);
  for (size_t k = 0; k < z.size(); ++k) g[k] = ysum * g[k] - y[k];
  return g;
}

Vec mix_prediction(const std::vector<Vec>& support, const Vec& weights) {
  if (support.empty()) throw std::invalid_argument("empty mixture support");
  if (support.size() != weights.size())
    throw std::invalid_argument("support/weight size mismatch");
  const size_t K = support[0].size();
  Vec pbar(K, 0.0);
  for (size_t i = 0; i < support.size(); ++i) {
    Vec p = softmax(support[i]);
    for (size_t k = 0; k < K; ++k) pbar[k] += weights[i] * p[k];
  }
  // The algorithm layer smooths afterwards, so this clamp never affects
  // reported losses at configured mu >= 1/n.
  for (double& v : pbar) v = std::max(v, 1e-300);
  return softmax_pinv(pbar);
}

}  // namespace ilr
