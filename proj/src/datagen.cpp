#include "ilr/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ilr/core.hpp"

namespace ilr {

ThresholdTree build_threshold_tree(double delta) {
  if (delta <= 0.0 || delta > 1.0) throw std::invalid_argument("delta out of (0,1]");
  int depth = static_cast<int>(std::floor(std::log2(2.0 / delta)));
  return ThresholdTree{std::max(depth, 1), delta};
}

namespace {

// Runs the bisection for `steps` rounds and returns the visited midpoints
// plus the final interval.
std::vector<double> bisect(const std::vector<int>& eps, int steps, double* lo,
                           double* hi) {
  double l = 0.0, u = 1.0;
  std::vector<double> zs;
  zs.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    double z = (l + u) / 2.0;
    zs.push_back(z);
    int e = (t < static_cast<int>(eps.size())) ? eps[t] : -1;
    if (e == -1)
      l = z;
    else
      u = z;
  }
  if (lo) *lo = l;
  if (hi) *hi = u;
  return zs;
}

}  // namespace

std::vector<double> ThresholdTree::path_values(const std::vector<int>& eps) const {
  return bisect(eps, depth, nullptr, nullptr);
}

double ThresholdTree::terminal(const std::vector<int>& eps) const {
  if (static_cast<int>(eps.size()) < depth)
    throw std::invalid_argument("need a full sign path");
  double l, u;
  bisect(eps, depth, &l, &u);
  return (l + u) / 2.0;
}

bool verify_shattering(const MarginInstance& inst) {
  constexpr double kTol = 1e-12;
  double wn = 0.0;
  for (double v : inst.w) wn += v * v;
  if (std::sqrt(wn) > 1.0 + kTol) return false;
  for (std::size_t t = 0; t < inst.xs.size(); ++t) {
    double xn = 0.0, dot = 0.0;
    for (int i = 0; i < inst.dim; ++i) {
      xn += inst.xs[t][i] * inst.xs[t][i];
      dot += inst.w[i] * inst.xs[t][i];
    }
    if (std::sqrt(xn) > 2.0 + kTol) return false;
    if (dot * inst.ys[t] < inst.gamma - kTol) return false;
  }
  return true;
}

double margin_mistake_bound(int d, double gamma) {
  double inner = 1.0 / (5.0 * gamma * std::sqrt(static_cast<double>(d)));
  return (d / 4.0) * std::floor(std::log2(inner));
}

namespace {

double min_margin(const std::vector<Vec>& xs, const std::vector<int>& ys,
                  const Vec& w) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < xs.size(); ++t) {
    double dot = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * xs[t][i];
    m = std::min(m, dot * ys[t]);
  }
  return m;
}

// Max-min margin ascent over the unit ball, started from the closed-form
// certificate. The piecewise-linear objective is concave, so subgradient
// steps (mean of the active constraints' y x) only improve the certificate.
Vec refine_certificate(const std::vector<Vec>& xs, const std::vector<int>& ys,
                       Vec w) {
  const std::size_t dim = w.size();
  Vec best = w;
  double best_m = min_margin(xs, ys, w);
  for (int it = 0; it < 2000; ++it) {
    double m = min_margin(xs, ys, w);
    if (m > best_m) {
      best_m = m;
      best = w;
    }
    Vec g(dim, 0.0);
    int active = 0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
      double dot = 0.0;
      for (std::size_t i = 0; i < dim; ++i) dot += w[i] * xs[t][i];
      if (dot * ys[t] <= m + 1e-9) {
        ++active;
        for (std::size_t i = 0; i < dim; ++i) g[i] += ys[t] * xs[t][i];
      }
    }
    double step = 0.05 / std::sqrt(it + 1.0);
    double nrm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] += step * g[i] / active;
      nrm += w[i] * w[i];
    }
    nrm = std::sqrt(nrm);
    if (nrm > 1.0)
      for (std::size_t i = 0; i < dim; ++i) w[i] /= nrm;
  }
  return best;
}

}  // namespace

std::pair<MarginInstance, int> margin_adversary(int d, double gamma,
                                                OnlineBinaryLearner& learner,
                                                std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  double gmax = 1.0 / (4.0 * std::sqrt(5.0 * d));
  if (gamma <= 0.0 || gamma > gmax)
    throw std::invalid_argument("gamma out of admissible range");

  const double delta = std::sqrt(gamma * 4.0 * std::sqrt(5.0 * d));
  ThresholdTree tree = build_threshold_tree(delta);
  const int D = tree.depth;

  MarginInstance inst;
  inst.dim = d + 1;
  inst.gamma = gamma;
  int mistakes = 0;
  std::uniform_int_distribution<int> coin(0, 1);
  Vec zstar(d);

  for (int k = 0; k < d; ++k) {
    double l = 0.0, u = 1.0;
    for (int tau = 0; tau < D; ++tau) {
      double z = (l + u) / 2.0;
      Vec x(d + 1, 0.0);
      x[d] = 1.0;
      x[k] = z;
      int pred = learner.predict(x);
      int y = coin(rng) ? 1 : -1;
      if (pred != y) ++mistakes;
      if (learner.update) learner.update(x, y);
      inst.xs.push_back(std::move(x));
      inst.ys.push_back(y);
      if (y == -1)
        l = z;
      else
        u = z;
    }
    zstar[k] = (l + u) / 2.0;
    if (zstar[k] <= 0.0) throw std::logic_error("terminal value must be positive");
  }

  Vec w(d + 1);
  w[d] = -delta;
  double nrm = delta * delta;
  for (int k = 0; k < d; ++k) {
    w[k] = delta / zstar[k];
    nrm += w[k] * w[k];
  }
  nrm = std::sqrt(nrm);
  for (double& v : w) v /= nrm;
  inst.w = refine_certificate(inst.xs, inst.ys, w);
  return {std::move(inst), mistakes};
}

std::vector<Example> stochastic_stream(const Mat& Wstar, double R, int n,
                                       std::uint64_t seed) {
  if (n < 0 || R <= 0.0) throw std::invalid_argument("need n >= 0 and R > 0");
  const int d = Wstar.cols;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Example> out;
  out.reserve(n);
  for (int t = 0; t < n; ++t) {
    Vec x(d);
    double nrm = 0.0;
    for (int i = 0; i < d; ++i) nrm += (x[i] = gauss(rng)) * x[i];
    nrm = std::sqrt(nrm);
    double r = R * std::pow(unif(rng), 1.0 / d);
    for (int i = 0; i < d; ++i) x[i] = (nrm > 0.0) ? x[i] * r / nrm : 0.0;
    Vec p = softmax(Wstar.apply(x));
    double u = unif(rng), acc = 0.0;
    int y = static_cast<int>(p.size()) - 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
      acc += p[k];
      if (u < acc) {
        y = static_cast<int>(k);
        break;
      }
    }
    out.push_back(Example{std::move(x), y});
  }
  return out;
}

void write_stream_csv(const std::vector<Example>& stream, std::ostream& out) {
  out << "t";
  if (!stream.empty())
    for (std::size_t i = 0; i < stream[0].x.size(); ++i) out << ",x" << i + 1;
  out << ",y\n";
  out << std::setprecision(17);
  for (std::size_t t = 0; t < stream.size(); ++t) {
    out << t + 1;
    for (double v : stream[t].x) out << "," << v;
    out << "," << stream[t].y << "\n";
  }
}

}  // namespace ilr
