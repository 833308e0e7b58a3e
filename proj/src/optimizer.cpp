#include "slicerank/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "slicerank/error.hpp"

namespace slicerank {
namespace {

constexpr double kLogFloor = -460.0;  // weights never drop below e^-460, about 1e-200
constexpr std::size_t kMaxAscentIterations = 200000;

struct AscentOutcome {
  std::vector<double> w;
  double value = 0.0;
  double gap = 0.0;
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

using ValueFn = std::function<double(const std::vector<double>&)>;
using GradFn = std::function<void(const std::vector<double>&, std::vector<double>&)>;

std::vector<double> softmax(const std::vector<double>& theta) {
  const double top = *std::max_element(theta.begin(), theta.end());
  std::vector<double> w(theta.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) sum += w[i] = std::exp(theta[i] - top);
  for (double& x : w) x /= sum;
  return w;
}

/// Exponentiated-gradient ascent of a concave function on the simplex. A step
/// is taken only if it increases the objective; the step size grows after a
/// success and halves after a failure. The Frank-Wolfe gap
/// max_i g_i - <w, g> bounds the distance to the optimum.
AscentOutcome mirror_ascent(std::size_t n, const ValueFn& value, const GradFn& grad, double tol) {
  AscentOutcome out;
  std::vector<double> theta(n, 0.0);
  std::vector<double> w = softmax(theta);
  double f = value(w);
  double eta = 1.0;
  std::vector<double> g(n);
  for (out.iterations = 0; out.iterations < kMaxAscentIterations; ++out.iterations) {
    grad(w, g);
    const double mean = std::inner_product(w.begin(), w.end(), g.begin(), 0.0);
    const double top = *std::max_element(g.begin(), g.end());
    out.gap = top - mean;
    if (out.gap <= tol) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    while (eta > 1e-30) {
      std::vector<double> trial = theta;
      for (std::size_t i = 0; i < n; ++i) trial[i] += eta * (g[i] - top);
      const double peak = *std::max_element(trial.begin(), trial.end());
      for (double& t : trial) t = std::max(t - peak, kLogFloor);
      const std::vector<double> w_trial = softmax(trial);
      const double f_trial = value(w_trial);
      bool better = f_trial > f;
      if (!better && f_trial >= f - 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f))) {
        // Within rounding of f the Frank-Wolfe gap decides.
        std::vector<double> g_trial(n);
        grad(w_trial, g_trial);
        const double m_trial = std::inner_product(w_trial.begin(), w_trial.end(), g_trial.begin(), 0.0);
        better = *std::max_element(g_trial.begin(), g_trial.end()) - m_trial < out.gap;
      }
      if (better) {
        theta = std::move(trial);
        w = w_trial;
        f = f_trial;
        eta *= 1.5;
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      // No representable improvement remains.
      out.converged = out.gap <= 1e-9;
      break;
    }
  }
  grad(w, g);
  const double mean = std::inner_product(w.begin(), w.end(), g.begin(), 0.0);
  out.gap = *std::max_element(g.begin(), g.end()) - mean;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = g[i] - mean;
    out.kkt_residual = std::max(out.kkt_residual, w[i] > 1e-9 ? std::abs(d) : std::max(d, 0.0));
  }
  out.w = std::move(w);
  out.value = f;
  return out;
}

/// Per axis, the part of each block.
std::array<std::vector<std::size_t>, 3> part_of_block(const BlockLayout& layout) {
  std::array<std::vector<std::size_t>, 3> out;
  for (std::size_t a = 0; a < 3; ++a) {
    for (const auto& key : layout.blocks) out[a].push_back(key[a]);
  }
  return out;
}

/// d log p_axis / d p_b, up to the additive constant -1.
void axis_gradient(const BlockLayout& layout, const std::vector<std::size_t>& part, const std::vector<double>& m,
                   std::size_t a, std::vector<double>& g, double weight) {
  for (std::size_t b = 0; b < part.size(); ++b) {
    const std::size_t i = part[b];
    g[b] += weight * (std::log(layout.part_sizes[a][i]) - std::log(std::max(m[i], 1e-300)));
  }
}

void require_symmetric_layout(const BlockLayout& layout) {
  const auto& s = layout.part_sizes;
  if (s[0].size() != s[1].size() || s[1].size() != s[2].size()) {
    throw InputError("non-symmetric partition: axes have different numbers of parts");
  }
  for (std::size_t i = 0; i < s[0].size(); ++i) {
    if (s[0][i] != s[1][i] || s[1][i] != s[2][i]) {
      throw InputError("non-symmetric partition: part sizes differ across axes");
    }
  }
  if (layout.blocks.empty()) throw InputError("no blocks to optimize over");
}

}  // namespace

SymmetricResult maximize_symmetric(const BlockLayout& layout, double tol) {
  require_symmetric_layout(layout);
  const auto orbits = rotation_orbits(layout);
  const auto parts = part_of_block(layout);
  const std::size_t n_blocks = layout.blocks.size();

  auto expand = [&](const std::vector<double>& w) {
    BlockDistribution p(n_blocks, 0.0);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (std::size_t b : orbits[o]) p[b] = w[o] / double(orbits[o].size());
    return p;
  };
  auto value = [&](const std::vector<double>& w) { return log_p_axis(layout, expand(w), Axis::X); };
  auto grad = [&](const std::vector<double>& w, std::vector<double>& g) {
    const BlockDistribution p = expand(w);
    const auto m = marginals(layout, p, Axis::X);
    std::vector<double> gb(n_blocks, 0.0);
    axis_gradient(layout, parts[0], m, 0, gb, 1.0);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      double sum = 0.0;
      for (std::size_t b : orbits[o]) sum += gb[b];
      g[o] = sum / double(orbits[o].size());
    }
  };
  const AscentOutcome run = mirror_ascent(orbits.size(), value, grad, tol);
  SymmetricResult out;
  out.p = expand(run.w);
  out.value = eval_pX(layout, out.p);
  out.kkt_residual = run.kkt_residual;
  out.diagnostics = {run.iterations, run.gap, run.converged};
  return out;
}

ProductResult maximize_product(const BlockLayout& layout, double tol) {
  if (layout.blocks.empty()) throw InputError("no blocks to optimize over");
  const auto parts = part_of_block(layout);
  auto value = [&](const std::vector<double>& p) {
    const ObjectiveValue v = eval_pX(layout, p);
    return v.log_value[0] + v.log_value[1] + v.log_value[2];
  };
  auto grad = [&](const std::vector<double>& p, std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    for (Axis a : kAxes) {
      axis_gradient(layout, parts[axis_index(a)], marginals(layout, p, a), axis_index(a), g, 1.0);
    }
  };
  const AscentOutcome run = mirror_ascent(layout.blocks.size(), value, grad, tol);
  ProductResult out;
  out.p = run.w;
  out.value = eval_pX(layout, out.p);
  out.diagnostics = {run.iterations, run.gap, run.converged};
  return out;
}

MinmaxResult maximize_minmax(const BlockLayout& layout, double tol) {
  const std::size_t n = layout.blocks.size();
  if (n == 0) throw InputError("no blocks to optimize over");
  MinmaxResult out;
  if (n == 1) {
    out.p = {1.0};
    out.value = eval_pX(layout, out.p);
    const auto& lv = out.value.log_value;
    const std::size_t arg = std::min_element(lv.begin(), lv.end()) - lv.begin();
    out.weights[arg] = 1.0;
    out.diagnostics = {0, 0.0, true};
    return out;
  }

  const auto parts = part_of_block(layout);
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  struct Eval {
    std::array<double, 3> f{};
    std::array<VectorXd, 3> g;
    std::array<std::vector<double>, 3> m;
  };
  auto evaluate = [&](const VectorXd& p) {
    Eval e;
    const BlockDistribution d(p.data(), p.data() + n);
    for (std::size_t a = 0; a < 3; ++a) {
      e.m[a] = marginals(layout, d, kAxes[a]);
      e.f[a] = log_p_axis(layout, d, kAxes[a]);
      e.g[a] = VectorXd::Zero(n);
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t i = parts[a][b];
        e.g[a][b] = std::log(layout.part_sizes[a][i]) - std::log(e.m[a][i]) - 1.0;
      }
    }
    return e;
  };
  auto barrier = [&](const VectorXd& p, double s, double t, const Eval& e) {
    double phi = t * s;
    for (std::size_t a = 0; a < 3; ++a) phi += std::log(e.f[a] - s);
    for (std::size_t b = 0; b < n; ++b) phi += std::log(p[b]);
    return phi;
  };
  auto feasible = [&](const VectorXd& p, double s, const Eval& e) {
    if ((p.array() <= 0.0).any()) return false;
    for (double f : e.f)
      if (!(f - s > 0.0)) return false;
    return true;
  };

  VectorXd p = VectorXd::Constant(n, 1.0 / double(n));
  Eval e = evaluate(p);
  double s = *std::min_element(e.f.begin(), e.f.end()) - 1.0;
  double t = 1.0;
  const double constraints = double(n + 3);
  std::size_t iterations = 0;

  while (true) {
    for (int newton = 0; newton < 200; ++newton, ++iterations) {
      std::array<double, 3> d;
      for (std::size_t a = 0; a < 3; ++a) d[a] = e.f[a] - s;
      VectorXd grad(n + 1);
      grad.head(n) = p.cwiseInverse();
      grad[n] = t;
      MatrixXd h = MatrixXd::Zero(n + 1, n + 1);
      h.topLeftCorner(n, n).diagonal() = -p.array().square().inverse().matrix();
      for (std::size_t a = 0; a < 3; ++a) {
        grad.head(n) += e.g[a] / d[a];
        grad[n] -= 1.0 / d[a];
        h.topLeftCorner(n, n) -= e.g[a] * e.g[a].transpose() / (d[a] * d[a]);
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (parts[a][b] == parts[a][c]) h(b, c) -= 1.0 / (e.m[a][parts[a][b]] * d[a]);
        h.col(n).head(n) += e.g[a] / (d[a] * d[a]);
        h(n, n) -= 1.0 / (d[a] * d[a]);
      }
      h.row(n).head(n) = h.col(n).head(n).transpose();

      // Newton step restricted to sum(p) = const: columns e_b - e_{n-1} and e_s.
      MatrixXd basis = MatrixXd::Zero(n + 1, n);
      for (std::size_t b = 0; b + 1 < n; ++b) {
        basis(b, b) = 1.0;
        basis(n - 1, b) = -1.0;
      }
      basis(n, n - 1) = 1.0;
      const MatrixXd reduced = -(basis.transpose() * h * basis);
      const VectorXd y = reduced.ldlt().solve(basis.transpose() * grad);
      const VectorXd step = basis * y;
      const double decrement = -step.dot(h * step);
      if (!(decrement > 2e-14)) break;

      const double slope = grad.dot(step);
      const double phi0 = barrier(p, s, t, e);
      double alpha = 1.0;
      bool moved = false;
      while (alpha > 1e-16) {
        const VectorXd p_new = p + alpha * step.head(n);
        const double s_new = s + alpha * step[n];
        if ((p_new.array() > 0.0).all()) {
          const Eval e_new = evaluate(p_new);
          if (feasible(p_new, s_new, e_new) && barrier(p_new, s_new, t, e_new) >= phi0 + 0.25 * alpha * slope) {
            p = p_new;
            s = s_new;
            e = e_new;
            moved = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    if (constraints / t < 0.1 * tol) break;
    t *= 8.0;
  }

  out.p.assign(p.data(), p.data() + n);
  const double total = std::accumulate(out.p.begin(), out.p.end(), 0.0);
  for (double& x : out.p) x /= total;
  out.value = eval_pX(layout, out.p);

  // Certificate: for any weights lambda on the 3-simplex, L = sum lambda_a f_a
  // upper-bounds the max-min, and since L is concave, L(p) plus its Frank-Wolfe
  // gap bounds max L. The bound is convex in lambda and minimized by nested
  // golden-section search.
  const VectorXd pv = Eigen::Map<const VectorXd>(out.p.data(), n);
  const Eval final_eval = evaluate(pv);
  auto upper = [&](double l0, double l1) {
    const std::array<double, 3> lam{l0, l1, std::max(0.0, 1.0 - l0 - l1)};
    VectorXd lgrad = VectorXd::Zero(n);
    double lvalue = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      lgrad += lam[a] * final_eval.g[a];
      lvalue += lam[a] * final_eval.f[a];
    }
    return lvalue + lgrad.maxCoeff() - lgrad.dot(pv);
  };
  auto best_l1 = [&](double l0) {
    return maximize_1d([&](double l1) { return -upper(l0, l1); }, 0.0, std::max(0.0, 1.0 - l0), 1e-10);
  };
  const Maximum1D outer = maximize_1d([&](double l0) { return best_l1(l0).value; }, 0.0, 1.0, 1e-10);
  const double l1 = best_l1(outer.argmax).argmax;
  out.weights = {outer.argmax, l1, std::max(0.0, 1.0 - outer.argmax - l1)};
  out.diagnostics.iterations = iterations;
  out.diagnostics.gap = std::max(0.0, -outer.value - out.value.log_min());
  out.diagnostics.converged = out.diagnostics.gap < 1e-8;
  return out;
}

Maximum1D maximize_1d(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  if (!(lo <= hi)) throw InputError("maximize_1d needs lo <= hi");
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  Maximum1D out;
  while (b - a > rel_tol * (hi - lo) && out.iterations < 1000) {
    ++out.iterations;
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    }
  }
  out.argmax = 0.5 * (a + b);
  out.value = f(out.argmax);
  for (double end : {lo, hi}) {
    const double fe = f(end);
    if (std::isfinite(fe) && fe > out.value) {
      out.argmax = end;
      out.value = fe;
    }
  }
  return out;
}

Maximum1D maximize_1d(const std::function<double(double)>& f, const std::function<double(double)>& df, double lo,
                      double hi) {
  if (!(lo <= hi)) throw InputError("maximize_1d needs lo <= hi");
  double a = lo, b = hi;
  Maximum1D out;
  while (out.iterations < 2000) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    ++out.iterations;
    if (df(mid) > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  out.argmax = 0.5 * (a + b);
  out.value = f(out.argmax);
  return out;
}

}  // namespace slicerank
