#include "ilr/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ilr {

Vec Mat::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw std::invalid_argument("matrix/vector dimension mismatch");
  Vec z(rows, 0.0);
  for (int r = 0; r < rows; ++r) {
    double s = 0.0;
    const double* row = a.data() + static_cast<size_t>(r) * cols;
    for (int c = 0; c < cols; ++c) s += row[c] * x[c];
    z[r] = s;
  }
  return z;
}

namespace {

double row_norm2(const Mat& W, int r) {
  double s = 0.0;
  for (int c = 0; c < W.cols; ++c) s += W(r, c) * W(r, c);
  return std::sqrt(s);
}

Vec uniform_ball(int d, double B, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec v(d);
  double nrm = 0.0;
  for (double& vi : v) {
    vi = gauss(rng);
    nrm += vi * vi;
  }
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) return Vec(d, 0.0);
  double radius = B * std::pow(unif(rng), 1.0 / d);
  for (double& vi : v) vi *= radius / nrm;
  return v;
}

}  // namespace

int Constraint::free_dim() const {
  switch (kind) {
    case ConstraintKind::RowBall: return K * d;
    case ConstraintKind::Binary: return d;
    case ConstraintKind::Boosting: return 1;
  }
  return 0;
}

Mat Constraint::from_free(const Vec& theta) const {
  if (static_cast<int>(theta.size()) != free_dim())
    throw std::invalid_argument("wrong free-parameter count");
  Mat W(rows(), cols());
  switch (kind) {
    case ConstraintKind::RowBall:
      for (int r = 0; r < K; ++r)
        for (int c = 0; c < d; ++c) W(r, c) = theta[static_cast<size_t>(r) * d + c];
      break;
    case ConstraintKind::Binary:
      for (int c = 0; c < d; ++c) W(0, c) = theta[c];
      break;
    case ConstraintKind::Boosting: {
      double alpha = std::clamp(theta[0], -2.0, 2.0);
      for (int r = 0; r < K; ++r) {
        W(r, r) = alpha;
        W(r, K + r) = 1.0;
      }
      break;
    }
  }
  return project(std::move(W));
}

Mat Constraint::project(Mat W) const {
  if (W.rows != rows() || W.cols != cols())
    throw std::invalid_argument("wrong matrix shape for constraint");
  switch (kind) {
    case ConstraintKind::Binary:
      for (int c = 0; c < d; ++c) W(1, c) = 0.0;
      [[fallthrough]];
    case ConstraintKind::RowBall:
      for (int r = 0; r < W.rows; ++r) {
        double nrm = row_norm2(W, r);
        if (nrm > B) {
          double scale = B / nrm;
          for (int c = 0; c < W.cols; ++c) W(r, c) *= scale;
        }
      }
      break;
    case ConstraintKind::Boosting: {
      double alpha = 0.0;
      for (int r = 0; r < K; ++r) alpha += W(r, r);
      alpha = std::clamp(alpha / K, -2.0, 2.0);
      W = Mat(K, 2 * K);
      for (int r = 0; r < K; ++r) {
        W(r, r) = alpha;
        W(r, K + r) = 1.0;
      }
      break;
    }
  }
  return W;
}

bool Constraint::satisfied(const Mat& W, double tol) const {
  if (W.rows != rows() || W.cols != cols()) return false;
  switch (kind) {
    case ConstraintKind::Binary:
      for (int c = 0; c < d; ++c)
        if (std::abs(W(1, c)) > tol) return false;
      [[fallthrough]];
    case ConstraintKind::RowBall:
      for (int r = 0; r < W.rows; ++r)
        if (row_norm2(W, r) > B + tol) return false;
      return true;
    case ConstraintKind::Boosting: {
      double alpha = W(0, 0);
      if (alpha < -2.0 - tol || alpha > 2.0 + tol) return false;
      for (int r = 0; r < K; ++r)
        for (int c = 0; c < 2 * K; ++c) {
          double want = (c == r) ? alpha : (c == K + r ? 1.0 : 0.0);
          if (std::abs(W(r, c) - want) > tol) return false;
        }
      return true;
    }
  }
  return false;
}

Mat Constraint::sample_uniform(std::mt19937_64& rng) const {
  switch (kind) {
    case ConstraintKind::RowBall: {
      Vec theta;
      theta.reserve(static_cast<size_t>(K) * d);
      for (int r = 0; r < K; ++r) {
        Vec row = uniform_ball(d, B, rng);
        theta.insert(theta.end(), row.begin(), row.end());
      }
      return from_free(theta);
    }
    case ConstraintKind::Binary:
      return from_free(uniform_ball(d, B, rng));
    case ConstraintKind::Boosting: {
      std::uniform_real_distribution<double> unif(-2.0, 2.0);
      return from_free({unif(rng)});
    }
  }
  throw std::logic_error("unreachable");
}

double Constraint::diameter() const {
  switch (kind) {
    case ConstraintKind::RowBall: return 2.0 * B * std::sqrt(static_cast<double>(K));
    case ConstraintKind::Binary: return 2.0 * B;
    case ConstraintKind::Boosting: return 4.0;
  }
  return 0.0;
}

void PosteriorSpec::append(const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != constraint.cols())
    throw std::invalid_argument("instance dimension mismatch");
  double xn = 0.0;
  for (double v : x) xn += v * v;
  if (std::sqrt(xn) > R + 1e-9) throw std::invalid_argument("|x| exceeds R");
  double yn = 0.0;
  for (double v : y) {
    if (v < 0.0) throw std::invalid_argument("label weights must be >= 0");
    yn += v;
  }
  if (yn > L + 1e-9) throw std::invalid_argument("|y|_1 exceeds L");
  history.emplace_back(x, y);
}

double neg_log_density(const PosteriorSpec& spec, const Mat& W) {
  if (!spec.constraint.satisfied(W))
    throw std::invalid_argument("W violates the constraint set");
  double f = 0.0;
  for (const auto& [x, y] : spec.history)
    f += weighted_logistic_loss(W.apply(x), y);
  return f / spec.L;
}

Mat neg_log_density_gradient(const PosteriorSpec& spec, const Mat& W) {
  if (!spec.constraint.satisfied(W))
    throw std::invalid_argument("W violates the constraint set");
  Mat G(W.rows, W.cols);
  for (const auto& [x, y] : spec.history) {
    Vec g = loss_gradient(W.apply(x), y);
    for (int r = 0; r < W.rows; ++r)
      for (int c = 0; c < W.cols; ++c) G(r, c) += g[r] * x[c];
  }
  for (double& v : G.a) v /= spec.L;
  return G;
}

std::vector<Mat> make_grid(const Constraint& c, int points_per_dim) {
  if (points_per_dim < 1) throw std::invalid_argument("need >= 1 grid point per dim");
  const int dim = c.free_dim();
  double lo = c.kind == ConstraintKind::Boosting ? -2.0 : -c.B;
  double hi = -lo;
  Vec axis(points_per_dim);
  for (int i = 0; i < points_per_dim; ++i)
    axis[i] = points_per_dim == 1 ? 0.0
                                  : lo + (hi - lo) * i / (points_per_dim - 1);
  std::vector<Mat> grid;
  grid.reserve(static_cast<size_t>(std::pow(points_per_dim, dim)));
  Vec theta(dim, 0.0);
  std::vector<int> idx(dim, 0);
  while (true) {
    for (int j = 0; j < dim; ++j) theta[j] = axis[idx[j]];
    grid.push_back(c.from_free(theta));
    int j = 0;
    for (; j < dim; ++j) {
      if (++idx[j] < points_per_dim) break;
      idx[j] = 0;
    }
    if (j == dim) break;
  }
  return grid;
}

double default_step_size(const PosteriorSpec& spec) {
  double max_y1 = 0.0;
  for (const auto& [x, y] : spec.history) {
    double s = 0.0;
    for (double v : y) s += v;
    max_y1 = std::max(max_y1, s);
  }
  double n = static_cast<double>(spec.history.size());
  return 0.5 / (n * spec.R * spec.R * max_y1 / spec.L + 1.0);
}

SampleSet draw_samples(const PosteriorSpec& spec, const SamplerConfig& cfg) {
  if (cfg.m < 1 || cfg.steps < 1) throw std::invalid_argument("bad sampler config");
  SampleSet out;
  if (cfg.method == SamplerMethod::GridExact) {
    out.samples = make_grid(spec.constraint, cfg.grid_points);
    Vec neg(out.samples.size());
    for (size_t i = 0; i < out.samples.size(); ++i)
      neg[i] = -neg_log_density(spec, out.samples[i]);
    double lse = log_sum_exp(neg);
    out.weights.resize(neg.size());
    for (size_t i = 0; i < neg.size(); ++i) out.weights[i] = std::exp(neg[i] - lse);
    return out;
  }

  long long total = static_cast<long long>(cfg.m) * cfg.steps +
                    (cfg.thinned ? cfg.burn_in : 0);
  if (total > cfg.max_evals) throw std::runtime_error("sampler budget exhausted");

  double eta = cfg.step_size > 0 ? cfg.step_size : default_step_size(spec);
  double noise_scale = std::sqrt(2.0 * eta);
  auto langevin_step = [&](Mat& W, std::mt19937_64& rng) {
    Mat G = neg_log_density_gradient(spec, W);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (size_t j = 0; j < W.a.size(); ++j)
      W.a[j] += -eta * G.a[j] + noise_scale * gauss(rng);
    W = spec.constraint.project(std::move(W));
  };

  out.samples.reserve(cfg.m);
  if (cfg.thinned) {
    std::seed_seq sq{cfg.seed, std::uint64_t{0}};
    std::mt19937_64 rng(sq);
    Mat W = spec.constraint.sample_uniform(rng);
    for (int s = 0; s < cfg.burn_in; ++s) langevin_step(W, rng);
    for (int i = 0; i < cfg.m; ++i) {
      for (int s = 0; s < cfg.steps; ++s) langevin_step(W, rng);
      out.samples.push_back(W);
    }
  } else {
    // Chains are independent and each owns the stream (seed, i), so fanning
    // them across threads reproduces the serial output exactly.
    out.samples.resize(cfg.m);
    auto run_chain = [&](int i) {
      std::seed_seq sq{cfg.seed, static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(sq);
      Mat W = spec.constraint.sample_uniform(rng);
      for (int s = 0; s < cfg.steps; ++s) langevin_step(W, rng);
      out.samples[i] = std::move(W);
    };
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ILR_THREADS"))
      workers = std::max(1, std::atoi(env));
    workers = std::min(workers, cfg.m);
    if (workers <= 1) {
      for (int i = 0; i < cfg.m; ++i) run_chain(i);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (int i = next.fetch_add(1); i < cfg.m; i = next.fetch_add(1))
            run_chain(i);
        });
      for (auto& th : pool) th.join();
    }
  }
  out.weights.assign(out.samples.size(), 1.0 / cfg.m);
  return out;
}

}  // namespace ilr
