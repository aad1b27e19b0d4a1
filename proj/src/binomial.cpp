#include "velmark/binomial.hpp"

#include <cmath>

namespace velmark {

namespace {

void check_step_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string("step_binomial: ") + name +
                            " outside [0,1] (got " + std::to_string(p) + ")");
  }
}

}  // namespace

JointDensity step_binomial(const JointDensity& q, const RateSpec& rates, double t,
                           int threads) {
  if (rates.form != RateForm::StepProbability) {
    throw std::invalid_argument("step_binomial: rates must be in step-probability form");
  }
  const GridSpec& g = q.grid;
  if (q.q_plus[g.index(g.m_max)] != 0.0 || q.q_minus[g.index(g.m_min)] != 0.0) {
    throw BoundaryError("step_binomial: mass would cross the grid boundary");
  }
  JointDensity out = zero_density(g);
  const int n = g.node_count();
  parallel_for(n, threads, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const int m = g.node(i);
      const double a = rates.alpha(t, g.x(m));
      const double b = rates.beta(t, g.x(m));
      check_step_probability(a, "alpha");
      check_step_probability(b, "beta");
      const double up_in = (m - 1 >= g.m_min) ? q.plus(m - 1) : 0.0;
      const double down_in = (m + 1 <= g.m_max) ? q.minus(m + 1) : 0.0;
      out.q_plus[static_cast<size_t>(i)] = (1.0 - a) * up_in + b * down_in;
      out.q_minus[static_cast<size_t>(i)] = a * up_in + (1.0 - b) * down_in;
    }
  });
  return out;
}

double BinomialTrajectory::ballistic_lobe_plus() const {
  // The final step moves mass but its switch no longer affects position.
  const size_t n = ballistic_plus.size();
  return n >= 2 ? ballistic_plus[n - 2] : ballistic_plus.back();
}

double BinomialTrajectory::ballistic_lobe_minus() const {
  const size_t n = ballistic_minus.size();
  return n >= 2 ? ballistic_minus[n - 2] : ballistic_minus.back();
}

BinomialTrajectory simulate(const JointDensity& initial, const RateSpec& rates,
                            int n_steps, int keep_every, int threads,
                            double conservation_tol) {
  if (n_steps < 0) throw std::invalid_argument("simulate: n_steps must be >= 0");
  if (keep_every < 1) keep_every = 1;

  BinomialTrajectory traj;
  traj.grid = initial.grid.expanded(n_steps);
  traj.rates = rates;

  JointDensity q = embed(initial, traj.grid);
  const double mass0 = total_mass(q);
  const double c = traj.grid.c();
  const double dt = traj.grid.dt;

  // Ballistic survivors: mass still on its original characteristic. Only the
  // totals matter, and translation does not change them, so track scalars.
  double surv_plus = 0.0, surv_minus = 0.0;
  for (double v : q.q_plus) surv_plus += v;
  for (double v : q.q_minus) surv_minus += v;
  // Survival factors are spatially resolved: advect the untouched mass.
  std::vector<double> u_plus = q.q_plus, u_minus = q.q_minus;

  auto record_moments = [&](const JointDensity& s, double t) {
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, f = 0.0;
    for (int m = s.grid.m_min; m <= s.grid.m_max; ++m) {
      const double rho = s.plus(m) + s.minus(m);
      const double x = s.grid.x(m);
      m0 += rho;
      m1 += x * rho;
      m2 += x * x * rho;
      f += s.plus(m) - s.minus(m);
    }
    const double mean = m1 / m0;
    traj.moments.times.push_back(t);
    traj.moments.mean.push_back(mean);
    traj.moments.variance.push_back(m2 / m0 - mean * mean);
    traj.moments.mean_velocity.push_back(c * f / m0);
    return m0;
  };

  record_moments(q, 0.0);
  traj.ballistic_plus.push_back(surv_plus);
  traj.ballistic_minus.push_back(surv_minus);
  traj.snapshot_steps.push_back(0);
  traj.snapshots.push_back(q);

  for (int k = 1; k <= n_steps; ++k) {
    const double t_prev = (k - 1) * dt;
    q = step_binomial(q, rates, t_prev, threads);

    // Advect the never-switched component: it survives the arrival-node
    // switch opportunity with probability 1-alpha (resp. 1-beta).
    {
      const GridSpec& g = traj.grid;
      std::vector<double> up(u_plus.size(), 0.0), dn(u_minus.size(), 0.0);
      for (int m = g.m_min; m <= g.m_max; ++m) {
        const int i = g.index(m);
        if (m - 1 >= g.m_min && u_plus[static_cast<size_t>(g.index(m - 1))] != 0.0) {
          up[static_cast<size_t>(i)] =
              (1.0 - rates.alpha(t_prev, g.x(m))) * u_plus[static_cast<size_t>(g.index(m - 1))];
        }
        if (m + 1 <= g.m_max && u_minus[static_cast<size_t>(g.index(m + 1))] != 0.0) {
          dn[static_cast<size_t>(i)] =
              (1.0 - rates.beta(t_prev, g.x(m))) * u_minus[static_cast<size_t>(g.index(m + 1))];
        }
      }
      u_plus.swap(up);
      u_minus.swap(dn);
      surv_plus = 0.0;
      surv_minus = 0.0;
      for (double v : u_plus) surv_plus += v;
      for (double v : u_minus) surv_minus += v;
    }
    traj.ballistic_plus.push_back(surv_plus);
    traj.ballistic_minus.push_back(surv_minus);

    const double mass = record_moments(q, k * dt);
    if (std::abs(mass - mass0) > conservation_tol) {
      throw ConservationError("simulate: mass drifted by " +
                              std::to_string(mass - mass0) + " at step " +
                              std::to_string(k));
    }
    if (k % keep_every == 0 || k == n_steps) {
      if (traj.snapshot_steps.back() != k) {
        traj.snapshot_steps.push_back(k);
        traj.snapshots.push_back(q);
      }
    }
  }
  return traj;
}

VelocityField forward_velocity(const JointDensity& q, double rho_floor) {
  if (!(rho_floor > 0.0)) {
    throw std::invalid_argument("forward_velocity: rho_floor must be positive");
  }
  VelocityField f;
  f.grid = q.grid;
  const double c = q.grid.c();
  const size_t n = q.q_plus.size();
  f.v.assign(n, 0.0);
  f.valid.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const double rho = q.q_plus[i] + q.q_minus[i];
    if (rho >= rho_floor) {
      f.v[i] = c * (q.q_plus[i] - q.q_minus[i]) / rho;
      f.valid[i] = 1;
    }
  }
  return f;
}

VelocityField backward_velocity(const JointDensity& q_t, const RateSpec& rates,
                                double t, double h, double rho_floor) {
  VelocityField f = forward_velocity(q_t, rho_floor);
  const GridSpec& g = q_t.grid;
  const double c = g.c();
  for (int m = g.m_min; m <= g.m_max; ++m) {
    const size_t i = static_cast<size_t>(g.index(m));
    if (!f.valid[i]) continue;
    const double a = rates.step_alpha(t - h, g.x(m), h);
    const double b = rates.step_beta(t - h, g.x(m), h);
    const double det = 1.0 - (a + b);
    if (!(det > 0.0)) {
      throw std::domain_error("backward_velocity: singular one-step inversion (h*gamma >= 1)");
    }
    f.v[i] = (f.v[i] + c * (a - b)) / det;
  }
  return f;
}

VelocityField acceleration_field(const JointDensity& q_t, const RateSpec& rates,
                                 double t, double h, double rho_floor) {
  VelocityField fwd = forward_velocity(q_t, rho_floor);
  VelocityField bwd = backward_velocity(q_t, rates, t, h, rho_floor);
  VelocityField a;
  a.grid = q_t.grid;
  a.v.assign(fwd.v.size(), 0.0);
  a.valid.assign(fwd.v.size(), 0);
  for (size_t i = 0; i < fwd.v.size(); ++i) {
    if (fwd.valid[i] && bwd.valid[i]) {
      a.v[i] = (fwd.v[i] - bwd.v[i]) / h;
      a.valid[i] = 1;
    }
  }
  return a;
}

JointDensity unstep_binomial(const JointDensity& q_t, const RateSpec& rates,
                             double t, double h) {
  const GridSpec& g = q_t.grid;
  JointDensity prev = zero_density(g);
  for (int m = g.m_min; m <= g.m_max; ++m) {
    const double a = rates.step_alpha(t - h, g.x(m), h);
    const double b = rates.step_beta(t - h, g.x(m), h);
    const double det = 1.0 - (a + b);
    if (det == 0.0) {
      throw std::domain_error("unstep_binomial: singular one-step matrix");
    }
    const double rho = q_t.plus(m) + q_t.minus(m);
    const double up_from = (q_t.plus(m) - b * rho) / det;    // q+(t-h, x-dx)
    const double down_from = (q_t.minus(m) - a * rho) / det; // q-(t-h, x+dx)
    if (m - 1 >= g.m_min) prev.plus(m - 1) += up_from;
    if (m + 1 <= g.m_max) prev.minus(m + 1) += down_from;
  }
  return prev;
}

}  // namespace velmark
