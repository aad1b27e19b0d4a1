#include "velmark/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace velmark {

GridSpec make_grid(double dx, double dt, int m_min, int m_max) {
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::invalid_argument("make_grid: dx must be a positive finite number");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("make_grid: dt must be a positive finite number");
  }
  if (m_min > m_max) {
    throw std::invalid_argument("make_grid: m_min must not exceed m_max");
  }
  return GridSpec{dx, dt, m_min, m_max};
}

JointDensity zero_density(const GridSpec& grid) {
  JointDensity q;
  q.grid = grid;
  q.q_plus.assign(static_cast<size_t>(grid.node_count()), 0.0);
  q.q_minus.assign(static_cast<size_t>(grid.node_count()), 0.0);
  return q;
}

JointDensity embed(const JointDensity& q, const GridSpec& wider) {
  if (wider.dx != q.grid.dx || wider.dt != q.grid.dt) {
    throw std::invalid_argument("embed: grids must share dx and dt");
  }
  if (wider.m_min > q.grid.m_min || wider.m_max < q.grid.m_max) {
    throw std::invalid_argument("embed: target grid does not cover the source");
  }
  JointDensity out = zero_density(wider);
  for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
    out.plus(m) = q.plus(m);
    out.minus(m) = q.minus(m);
  }
  return out;
}

StateDensity to_state_density(const JointDensity& q) {
  StateDensity s;
  s.grid = q.grid;
  const size_t n = q.q_plus.size();
  s.rho.resize(n);
  s.phi.resize(n);
  for (size_t i = 0; i < n; ++i) {
    s.rho[i] = q.q_plus[i] + q.q_minus[i];
    s.phi[i] = q.q_plus[i] - q.q_minus[i];
  }
  return s;
}

double total_mass(const JointDensity& q) {
  double s = 0.0;
  for (double v : q.q_plus) s += v;
  for (double v : q.q_minus) s += v;
  return s;
}

double min_entry(const JointDensity& q) {
  double lo = 0.0;
  bool first = true;
  for (const auto* arr : {&q.q_plus, &q.q_minus}) {
    for (double v : *arr) {
      if (first || v < lo) {
        lo = v;
        first = false;
      }
    }
  }
  return lo;
}

RateSpec RateSpec::constant_step(double a, double b) {
  if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0) {
    throw std::invalid_argument("constant_step: probabilities must lie in [0,1]");
  }
  RateSpec r;
  r.form = RateForm::StepProbability;
  r.alpha = [a](double, double) { return a; };
  r.beta = [b](double, double) { return b; };
  return r;
}

RateSpec RateSpec::constant_rate(double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("constant_rate: rates must be nonnegative");
  }
  RateSpec r;
  r.form = RateForm::ContinuumRate;
  r.alpha = [a](double, double) { return a; };
  r.beta = [b](double, double) { return b; };
  return r;
}

RateSpec RateSpec::to_step(double h) const {
  if (form == RateForm::StepProbability) return *this;
  if (!(h > 0.0)) throw std::invalid_argument("to_step: h must be positive");
  RateSpec r;
  r.form = RateForm::StepProbability;
  auto a = alpha;
  auto b = beta;
  r.alpha = [a, h](double t, double x) { return h * a(t, x); };
  r.beta = [b, h](double t, double x) { return h * b(t, x); };
  return r;
}

double RateSpec::step_alpha(double t, double x, double h) const {
  const double a = alpha(t, x);
  return form == RateForm::StepProbability ? a : h * a;
}

double RateSpec::step_beta(double t, double x, double h) const {
  const double b = beta(t, x);
  return form == RateForm::StepProbability ? b : h * b;
}

JointDensity gaussian_initial(const GridSpec& grid, double sigma,
                              double support_half_width) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("gaussian_initial: sigma must be positive");
  }
  if (!(support_half_width >= 0.0)) {
    throw std::invalid_argument("gaussian_initial: support half-width must be nonnegative");
  }
  JointDensity q = zero_density(grid);
  const double bound = support_half_width * (1.0 + 1e-12);
  double sum = 0.0;
  bool any = false;
  for (int m = grid.m_min; m <= grid.m_max; ++m) {
    const double x = grid.x(m);
    if (std::abs(x) <= bound) {
      const double w = std::exp(-x * x / (2.0 * sigma * sigma));
      q.plus(m) = w;
      q.minus(m) = w;
      sum += 2.0 * w;
      any = true;
    }
  }
  if (!any || sum <= 0.0) {
    throw std::invalid_argument("gaussian_initial: support contains no grid node");
  }
  for (double& v : q.q_plus) v /= sum;
  for (double& v : q.q_minus) v /= sum;
  return q;
}

JointDensity point_initial(const GridSpec& grid, int m, double up_fraction) {
  if (!grid.contains(m)) {
    throw std::invalid_argument("point_initial: node outside grid");
  }
  if (up_fraction < 0.0 || up_fraction > 1.0) {
    throw std::invalid_argument("point_initial: up_fraction must lie in [0,1]");
  }
  JointDensity q = zero_density(grid);
  q.plus(m) = up_fraction;
  q.minus(m) = 1.0 - up_fraction;
  return q;
}

void parallel_for(int n, int threads, const std::function<void(int, int)>& body) {
  if (threads <= 1 || n < 2 * threads) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = t * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace velmark
