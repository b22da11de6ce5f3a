#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ilr/core.hpp"

using namespace ilr;

namespace {

Vec random_logits(std::mt19937_64& rng, int K, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec z(K);
  for (auto& v : z) v = u(rng);
  return z;
}

Vec random_weights(std::mt19937_64& rng, int K, double l1_cap) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec y(K);
  double s = 0.0;
  for (auto& v : y) s += v = u(rng);
  double target = u(rng) * l1_cap;
  for (auto& v : y) v *= target / s;
  return y;
}

}  // namespace

TEST_CASE("softmax basics") {
  Vec p = softmax({0.0, 0.0, 0.0});
  for (double v : p) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-12));

  p = softmax({std::log(2.0), 0.0});
  CHECK(p[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));

  p = softmax({1.0, 0.0});
  double e = std::exp(1.0);
  CHECK(p[0] == doctest::Approx(e / (1 + e)).epsilon(1e-9));
  CHECK(p[1] == doctest::Approx(1 / (1 + e)).epsilon(1e-9));

  CHECK_THROWS_AS(softmax({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(softmax({1.0, std::nan("")}), std::invalid_argument);

  // Large-scale input must not overflow.
  p = softmax({800.0, -800.0});
  CHECK(p[0] == doctest::Approx(1.0));
  double s = p[0] + p[1];
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("softmax normalization and positivity on random input") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    int K = 2 + it % 9;
    Vec p = softmax(random_logits(rng, K, 30.0));
    double s = 0.0;
    for (double v : p) {
      CHECK(v > 0.0);
      s += v;
    }
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("softmax_pinv") {
  Vec z = softmax_pinv({0.5, 0.5});
  CHECK(z[0] == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(std::log(0.5)).epsilon(1e-15));

  z = softmax_pinv({2.0 / 3, 1.0 / 3});
  CHECK(z[0] == doctest::Approx(std::log(2.0 / 3)).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(std::log(1.0 / 3)).epsilon(1e-15));

  Vec p0 = {0.2, 0.3, 0.5};
  Vec back = softmax(softmax_pinv(p0));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(back[k] - p0[k]) <= 1e-12);

  CHECK_THROWS_AS(softmax_pinv({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(softmax_pinv({1.1, -0.1}), std::domain_error);
}

TEST_CASE("pinv round trip on random strictly positive vectors") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int it = 0; it < 200; ++it) {
    int K = 2 + it % 5;
    Vec p(K);
    double s = 0.0;
    for (auto& v : p) s += v = u(rng);
    for (auto& v : p) v /= s;
    Vec back = softmax(softmax_pinv(p));
    for (int k = 0; k < K; ++k) CHECK(std::abs(back[k] - p[k]) <= 1e-12);
  }
}

TEST_CASE("smooth") {
  Vec p = smooth({1.0, 0.0}, 0.5);
  CHECK(p[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-15));

  Vec q = {0.3, 0.7};
  Vec same = smooth(q, 0.0);
  CHECK(same[0] == q[0]);
  CHECK(same[1] == q[1]);

  p = smooth({0.9, 0.1, 0.0}, 0.3);
  CHECK(p[0] == doctest::Approx(0.73).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.17).epsilon(1e-15));
  CHECK(p[2] == doctest::Approx(0.10).epsilon(1e-15));

  CHECK_THROWS_AS(smooth({0.5, 0.5}, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(smooth({0.5, 0.5}, -0.1), std::invalid_argument);
}

TEST_CASE("weighted logistic loss values") {
  CHECK(weighted_logistic_loss({0.0, 0.0}, {1.0, 0.0}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(weighted_logistic_loss({0.0, 0.0}, {1.0, 1.0}) ==
        doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
  CHECK(weighted_logistic_loss({1.0, 0.0}, {0.0, 1.0}) ==
        doctest::Approx(std::log(1 + std::exp(1.0))).epsilon(1e-12));
  CHECK(logistic_loss({1.0, 0.0}, 1) ==
        doctest::Approx(std::log(1 + std::exp(1.0))).epsilon(1e-12));
  // No overflow for extreme scores.
  CHECK(std::isfinite(weighted_logistic_loss({700.0, -700.0}, {0.0, 1.0})));
}

TEST_CASE("binary logistic loss") {
  CHECK(binary_logistic_loss(0.0, 1) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(binary_logistic_loss(2.0, -1) ==
        doctest::Approx(std::log(1 + std::exp(2.0))).epsilon(1e-12));
  CHECK_THROWS_AS(binary_logistic_loss(1.0, 0), std::invalid_argument);

  // K=2 embedding: z -> (z, 0), +1 -> class 0, -1 -> class 1.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int it = 0; it < 100; ++it) {
    double z = u(rng);
    CHECK(std::abs(binary_logistic_loss(z, 1) - logistic_loss({z, 0.0}, 0)) <= 1e-12);
    CHECK(std::abs(binary_logistic_loss(z, -1) - logistic_loss({z, 0.0}, 1)) <= 1e-12);
  }
}

TEST_CASE("gradient closed form and Lipschitz bound") {
  Vec g = loss_gradient({0.0, 0.0}, {1.0, 0.0});
  CHECK(g[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(0.5).epsilon(1e-12));

  g = loss_gradient({3.0, -1.0}, {0.0, 0.0});
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.0);

  g = loss_gradient({1.0, 0.0}, {1.0, 0.0});
  Vec p = softmax({1.0, 0.0});
  CHECK(g[0] == doctest::Approx(p[0] - 1.0).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(p[1]).epsilon(1e-12));

  // Finite-difference oracle on 1000 random inputs, K in {2,3,5}.
  std::mt19937_64 rng(17);
  const int Ks[3] = {2, 3, 5};
  for (int it = 0; it < 1000; ++it) {
    int K = Ks[it % 3];
    Vec z = random_logits(rng, K, 5.0);
    Vec y = random_weights(rng, K, 3.0);
    Vec grad = loss_gradient(z, y);
    double l1 = 0.0, y1 = 0.0;
    for (double v : grad) l1 += std::abs(v);
    for (double v : y) y1 += v;
    CHECK(l1 <= 2 * y1 + 1e-12);
    const double h = 1e-6;
    for (int k = 0; k < K; ++k) {
      Vec zp = z, zm = z;
      zp[k] += h;
      zm[k] -= h;
      double fd =
          (weighted_logistic_loss(zp, y) - weighted_logistic_loss(zm, y)) / (2 * h);
      double scale = std::max(1.0, std::abs(grad[k]));
      CHECK(std::abs(fd - grad[k]) / scale <= 1e-5);
    }
  }
}

TEST_CASE("mix_prediction basics") {
  CHECK_THROWS_AS(mix_prediction({}, {}), std::invalid_argument);

  // Single-point mixture: same softmax image.
  Vec z = {1.0, -0.5, 0.2};
  Vec mixed = mix_prediction({z}, {1.0});
  Vec pa = softmax(z), pb = softmax(mixed);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(pa[k] - pb[k]) <= 1e-12);

  mixed = mix_prediction({{1.0, 0.0}, {0.0, 1.0}}, {0.5, 0.5});
  CHECK(mixed[0] == doctest::Approx(std::log(0.5)).epsilon(1e-12));
  CHECK(mixed[1] == doctest::Approx(std::log(0.5)).epsilon(1e-12));

  mixed = mix_prediction({{1.0, 0.0}, {0.0, 0.0}}, {0.5, 0.5});
  Vec p1 = softmax({1.0, 0.0});
  CHECK(mixed[0] == doctest::Approx(std::log((p1[0] + 0.5) / 2)).epsilon(1e-12));
  CHECK(mixed[1] == doctest::Approx(std::log((p1[1] + 0.5) / 2)).epsilon(1e-12));
}

TEST_CASE("unweighted mixability equality, weighted inequality") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int Ks[3] = {2, 3, 5};
  for (int it = 0; it < 500; ++it) {
    int K = Ks[it % 3];
    int n = 1 + static_cast<int>(u(rng) * 6);
    std::vector<Vec> support;
    Vec w(n);
    double ws = 0.0;
    for (int i = 0; i < n; ++i) {
      support.push_back(random_logits(rng, K, 8.0));
      ws += w[i] = u(rng) + 1e-3;
    }
    for (auto& v : w) v /= ws;
    Vec zpi = mix_prediction(support, w);

    // One-hot outcomes: -log E[sigma(z)_y] equals the mixed loss exactly.
    for (int y = 0; y < K; ++y) {
      double mean_p = 0.0;
      for (int i = 0; i < n; ++i) mean_p += w[i] * softmax(support[i])[y];
      CHECK(std::abs(-std::log(mean_p) - logistic_loss(zpi, y)) <= 1e-10);
    }

    // Weighted outcomes at scale L: E[exp(-loss/L)] <= exp(-mixed loss/L).
    double L = 1.0 + 4.0 * u(rng);
    Vec y = random_weights(rng, K, L);
    double lhs = 0.0;
    for (int i = 0; i < n; ++i)
      lhs += w[i] * std::exp(-weighted_logistic_loss(support[i], y) / L);
    double rhs = std::exp(-weighted_logistic_loss(zpi, y) / L);
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("smoothing excess and boundedness") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 500; ++it) {
    int K = 2 + it % 4;
    Vec z = random_logits(rng, K, 10.0);
    Vec y = random_weights(rng, K, 2.0);
    double mu = u(rng) * 0.5;
    Vec zs = softmax_pinv(smooth(softmax(z), std::max(mu, 1e-6)));
    double y1 = 0.0;
    for (double v : y) y1 += v;
    CHECK(weighted_logistic_loss(zs, y) - weighted_logistic_loss(z, y) <=
          2 * std::max(mu, 1e-6) * y1 + 1e-10);
    double inf = 0.0;
    for (double v : zs) inf = std::max(inf, std::abs(v));
    CHECK(inf <= std::log(K / std::max(mu, 1e-6)) + 1e-10);
  }
}
