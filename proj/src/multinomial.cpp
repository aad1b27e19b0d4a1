#include "velmark/multinomial.hpp"

#include <cmath>
#include <cstdlib>

namespace velmark {

MultiDensity zero_multi(const GridSpec& grid, int j_max) {
  if (j_max < 0) throw std::invalid_argument("zero_multi: j_max must be >= 0");
  MultiDensity q;
  q.grid = grid;
  q.j_max = j_max;
  q.q.assign(static_cast<size_t>(2 * j_max + 1) * grid.node_count(), 0.0);
  return q;
}

MultiDensity embed(const MultiDensity& q, const GridSpec& wider) {
  if (wider.dx != q.grid.dx || wider.dt != q.grid.dt) {
    throw std::invalid_argument("embed: grids must share dx and dt");
  }
  if (wider.m_min > q.grid.m_min || wider.m_max < q.grid.m_max) {
    throw std::invalid_argument("embed: target grid does not cover the source");
  }
  MultiDensity out = zero_multi(wider, q.j_max);
  for (int j = -q.j_max; j <= q.j_max; ++j) {
    for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
      out.at(j, m) = q.at(j, m);
    }
  }
  return out;
}

double total_mass(const MultiDensity& q) {
  double s = 0.0;
  for (double v : q.q) s += v;
  return s;
}

double min_entry(const MultiDensity& q) {
  double lo = q.q.empty() ? 0.0 : q.q.front();
  for (double v : q.q) lo = std::min(lo, v);
  return lo;
}

std::vector<double> state_density(const MultiDensity& q) {
  const int n = q.grid.node_count();
  std::vector<double> rho(static_cast<size_t>(n), 0.0);
  for (int r = 0; r < q.rows(); ++r) {
    const double* row = q.q.data() + static_cast<size_t>(r) * n;
    for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] += row[i];
  }
  return rho;
}

void validate_columns(const std::vector<double>& entries, int rows, RateForm form,
                      double tol) {
  if (entries.size() != static_cast<size_t>(rows) * rows) {
    throw std::invalid_argument("rate matrix: wrong entry count");
  }
  for (int k = 0; k < rows; ++k) {
    double sum = 0.0;
    for (int j = 0; j < rows; ++j) {
      const double w = entries[static_cast<size_t>(j) * rows + k];
      sum += w;
      if (form == RateForm::StepProbability) {
        if (w < -tol || w > 1.0 + tol) {
          throw std::invalid_argument("rate matrix: step probability outside [0,1]");
        }
      } else {
        if (j != k && w < -tol) {
          throw std::invalid_argument("rate matrix: negative off-diagonal rate");
        }
        if (j == k && w > tol) {
          throw std::invalid_argument("rate matrix: positive diagonal rate");
        }
      }
    }
    const double target = form == RateForm::StepProbability ? 1.0 : 0.0;
    if (std::abs(sum - target) > tol) {
      throw std::invalid_argument("rate matrix: column sum violates its form");
    }
  }
}

RateMatrix RateMatrix::constant(int j_max, RateForm form, std::vector<double> entries) {
  validate_columns(entries, 2 * j_max + 1, form);
  RateMatrix r;
  r.j_max = j_max;
  r.form = form;
  r.x_independent = true;
  r.omega = [e = std::move(entries)](double, double) { return e; };
  return r;
}

MultiDensity step_multinomial(const MultiDensity& q, const RateMatrix& omega,
                              double t, int threads) {
  if (omega.form != RateForm::StepProbability) {
    throw std::invalid_argument("step_multinomial: matrix must be in step-probability form");
  }
  if (omega.j_max != q.j_max) {
    throw std::invalid_argument("step_multinomial: velocity count mismatch");
  }
  const GridSpec& g = q.grid;
  const int J = q.j_max;
  // Mass with velocity k would leave the grid from the outer |k| nodes.
  for (int k = -J; k <= J; ++k) {
    if (k > 0) {
      for (int m = g.m_max - k + 1; m <= g.m_max; ++m) {
        if (q.at(k, m) != 0.0) {
          throw BoundaryError("step_multinomial: mass would cross the grid boundary");
        }
      }
    } else if (k < 0) {
      for (int m = g.m_min; m <= g.m_min - k - 1; ++m) {
        if (q.at(k, m) != 0.0) {
          throw BoundaryError("step_multinomial: mass would cross the grid boundary");
        }
      }
    }
  }

  MultiDensity out = zero_multi(g, J);
  const int n = g.node_count();
  const int rows = q.rows();
  std::vector<double> w_const;
  if (omega.x_independent) {
    w_const = omega.eval(t, 0.0);
    validate_columns(w_const, rows, RateForm::StepProbability);
  }
  parallel_for(n, threads, [&](int lo, int hi) {
    std::vector<double> w_local;
    for (int i = lo; i < hi; ++i) {
      const int m = g.node(i);
      const double* w = w_const.data();
      if (!omega.x_independent) {
        w_local = omega.eval(t, g.x(m));
        validate_columns(w_local, rows, RateForm::StepProbability);
        w = w_local.data();
      }
      for (int k = -J; k <= J; ++k) {
        const int src = m - k;
        if (!g.contains(src)) continue;
        const double mass = q.at(k, src);
        if (mass == 0.0) continue;
        const int col = k + J;
        for (int j = -J; j <= J; ++j) {
          out.at(j, m) += w[static_cast<size_t>(j + J) * rows + col] * mass;
        }
      }
    }
  });
  return out;
}

RateMatrix rate_to_step(const RateMatrix& omega_rate, double h) {
  if (omega_rate.form != RateForm::ContinuumRate) {
    throw std::invalid_argument("rate_to_step: expected continuum-rate form");
  }
  if (!(h > 0.0)) throw std::invalid_argument("rate_to_step: h must be positive");
  RateMatrix out;
  out.j_max = omega_rate.j_max;
  out.form = RateForm::StepProbability;
  out.x_independent = omega_rate.x_independent;
  const int rows = omega_rate.rows();
  auto base = omega_rate.omega;
  out.omega = [base, h, rows](double t, double x) {
    std::vector<double> e = base(t, x);
    for (int j = 0; j < rows; ++j) {
      for (int k = 0; k < rows; ++k) {
        double& v = e[static_cast<size_t>(j) * rows + k];
        v = (j == k ? 1.0 : 0.0) + h * v;
        if (j == k && v < 0.0) {
          throw std::domain_error("rate_to_step: h too large, negative staying probability");
        }
      }
    }
    return e;
  };
  if (out.x_independent) out.eval(0.0, 0.0);  // surface h-too-large immediately
  return out;
}

std::vector<double> newton_matrix_at(const NewtonRates& nr, int j_max, double x) {
  const double a = nr.alpha(x);
  const double b = nr.beta(x);
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("newton_matrix_at: |V'(x)|/(2c) must stay below theta");
  }
  const int rows = 2 * j_max + 1;
  std::vector<double> w(static_cast<size_t>(rows) * rows, 0.0);
  for (int k = -j_max; k <= j_max; ++k) {
    const int col = k + j_max;
    double out = 0.0;
    if (k - 1 >= -j_max) {  // switch one velocity down
      w[static_cast<size_t>(k - 1 + j_max) * rows + col] = a;
      out += a;
    }
    if (k + 1 <= j_max) {  // switch one velocity up
      w[static_cast<size_t>(k + 1 + j_max) * rows + col] = b;
      out += b;
    }
    w[static_cast<size_t>(col) * rows + col] = -out;
  }
  return w;
}

RateMatrix build_newton_rate_matrix(const NewtonRates& nr, int j_max) {
  RateMatrix r;
  r.j_max = j_max;
  r.form = RateForm::ContinuumRate;
  r.omega = [nr, j_max](double, double x) { return newton_matrix_at(nr, j_max, x); };
  return r;
}

VelocityField mean_velocity_multi(const MultiDensity& q, double rho_floor) {
  if (!(rho_floor > 0.0)) {
    throw std::invalid_argument("mean_velocity_multi: rho_floor must be positive");
  }
  VelocityField f;
  f.grid = q.grid;
  const int n = q.grid.node_count();
  f.v.assign(static_cast<size_t>(n), 0.0);
  f.valid.assign(static_cast<size_t>(n), 0);
  const double c = q.grid.c();
  for (int i = 0; i < n; ++i) {
    const int m = q.grid.node(i);
    double rho = 0.0, flux = 0.0;
    for (int j = -q.j_max; j <= q.j_max; ++j) {
      rho += q.at(j, m);
      flux += j * q.at(j, m);
    }
    if (rho >= rho_floor) {
      f.v[static_cast<size_t>(i)] = c * flux / rho;
      f.valid[static_cast<size_t>(i)] = 1;
    }
  }
  return f;
}

namespace {

// Continuum-rate entries from either form.
std::vector<double> as_rate_entries(const RateMatrix& omega, double t, double x,
                                    double h) {
  std::vector<double> w = omega.eval(t, x);
  if (omega.form == RateForm::ContinuumRate) return w;
  const int rows = omega.rows();
  for (int j = 0; j < rows; ++j) {
    for (int k = 0; k < rows; ++k) {
      double& v = w[static_cast<size_t>(j) * rows + k];
      v = (v - (j == k ? 1.0 : 0.0)) / h;
    }
  }
  return w;
}

}  // namespace

VelocityField backward_velocity_multi(const MultiDensity& q_t, const RateMatrix& omega,
                                      double t, double h, double rho_floor) {
  VelocityField v = mean_velocity_multi(q_t, rho_floor);
  VelocityField a = acceleration_field_multi(q_t, omega, t, h, rho_floor);
  for (size_t i = 0; i < v.v.size(); ++i) {
    if (v.valid[i]) v.v[i] -= h * a.v[i];
  }
  return v;
}

VelocityField acceleration_field_multi(const MultiDensity& q_t, const RateMatrix& omega,
                                       double t, double h, double rho_floor) {
  if (omega.j_max != q_t.j_max) {
    throw std::invalid_argument("acceleration_field_multi: velocity count mismatch");
  }
  VelocityField a;
  a.grid = q_t.grid;
  const int n = q_t.grid.node_count();
  a.v.assign(static_cast<size_t>(n), 0.0);
  a.valid.assign(static_cast<size_t>(n), 0);
  const double c = q_t.grid.c();
  const int J = q_t.j_max;
  const int rows = q_t.rows();
  for (int i = 0; i < n; ++i) {
    const int m = q_t.grid.node(i);
    double rho = 0.0;
    for (int j = -J; j <= J; ++j) rho += q_t.at(j, m);
    if (rho < rho_floor) continue;
    const std::vector<double> w = as_rate_entries(omega, t, q_t.grid.x(m), h);
    double s = 0.0;
    for (int k = -J; k <= J; ++k) {
      const double mass = q_t.at(k, m);
      if (mass == 0.0) continue;
      for (int j = -J; j <= J; ++j) {
        s += (j * c) * w[static_cast<size_t>(j + J) * rows + (k + J)] * mass;
      }
    }
    a.v[static_cast<size_t>(i)] = s / rho;
    a.valid[static_cast<size_t>(i)] = 1;
  }
  return a;
}

MultiDensity characteristic_shift(const MultiDensity& q, int t_steps) {
  // Realizes the translation psi^j(x) = q^j(x + v_j * t), one row at a time.
  const GridSpec& g = q.grid;
  MultiDensity out = zero_multi(g, q.j_max);
  for (int j = -q.j_max; j <= q.j_max; ++j) {
    const int shift = j * t_steps;
    for (int m = g.m_min; m <= g.m_max; ++m) {
      const double mass = q.at(j, m);
      if (mass == 0.0) continue;
      const int dst = m - shift;
      if (!g.contains(dst)) {
        throw BoundaryError("characteristic_shift: shifted mass leaves the grid");
      }
      out.at(j, dst) = mass;
    }
  }
  return out;
}

MultiDensity step_multinomial_characteristic(const MultiDensity& q,
                                             const RateMatrix& omega, double t,
                                             int s_before) {
  if (omega.form != RateForm::StepProbability) {
    throw std::invalid_argument("step_multinomial_characteristic: need step form");
  }
  const MultiDensity psi = characteristic_shift(q, s_before);
  const GridSpec& g = q.grid;
  const int J = q.j_max;
  const int rows = q.rows();
  const int s_after = s_before + 1;
  MultiDensity psi_next = zero_multi(g, J);
  for (int i = 0; i < g.node_count(); ++i) {
    const int m = g.node(i);
    for (int j = -J; j <= J; ++j) {
      // Physical arrival node of row j in the shifted frame.
      const int phys = m + j * s_after;
      if (!g.contains(phys)) continue;
      const std::vector<double> w = omega.eval(t, g.x(phys));
      double acc = 0.0;
      for (int k = -J; k <= J; ++k) {
        const int src = m + (j - k) * s_after;
        if (!g.contains(src)) continue;
        acc += w[static_cast<size_t>(j + J) * rows + (k + J)] * psi.at(k, src);
      }
      psi_next.at(j, m) = acc;
    }
  }
  return characteristic_shift(psi_next, -s_after);
}

MultiTrajectory multi_simulate(const MultiDensity& initial, const RateMatrix& omega_step,
                               int n_steps, const MultiSimOptions& opts) {
  if (omega_step.form != RateForm::StepProbability) {
    throw std::invalid_argument("multi_simulate: matrix must be in step-probability form");
  }
  if (n_steps < 0) throw std::invalid_argument("multi_simulate: n_steps must be >= 0");

  MultiTrajectory traj;
  traj.grid = initial.grid.expanded(initial.j_max * n_steps);
  traj.j_max = initial.j_max;

  MultiDensity q = embed(initial, traj.grid);
  const double mass0 = total_mass(q);
  const double dt = traj.grid.dt;
  const double c = traj.grid.c();
  const int J = traj.j_max;

  auto record = [&](const MultiDensity& s, double t) {
    double m0 = 0.0, m1 = 0.0, v1 = 0.0, v2 = 0.0, pe = 0.0, pg = 0.0, edge = 0.0;
    for (int m = s.grid.m_min; m <= s.grid.m_max; ++m) {
      const double x = s.grid.x(m);
      double rho = 0.0;
      for (int j = -J; j <= J; ++j) {
        const double mass = s.at(j, m);
        rho += mass;
        v1 += (j * c) * mass;
        v2 += (j * c) * (j * c) * mass;
      }
      m0 += rho;
      m1 += x * rho;
      if (opts.potential) pe += opts.potential(x) * rho;
      if (opts.potential_gradient) pg += opts.potential_gradient(x) * rho;
      edge += s.at(J, m) + (J > 0 ? s.at(-J, m) : 0.0);
    }
    traj.times.push_back(t);
    traj.mean_x.push_back(m1 / m0);
    traj.mean_v.push_back(v1 / m0);
    traj.mean_v2.push_back(v2 / m0);
    if (opts.potential) traj.mean_potential.push_back(pe / m0);
    if (opts.potential_gradient) traj.mean_potential_gradient.push_back(pg / m0);
    traj.edge_occupancy_max = std::max(traj.edge_occupancy_max, edge);
    return m0;
  };

  record(q, 0.0);
  traj.snapshot_steps.push_back(0);
  traj.snapshots.push_back(q);
  const int keep = std::max(1, opts.keep_every);

  for (int k = 1; k <= n_steps; ++k) {
    q = step_multinomial(q, omega_step, (k - 1) * dt, opts.threads);
    const double mass = record(q, k * dt);
    if (std::abs(mass - mass0) > opts.conservation_tol) {
      throw ConservationError("multi_simulate: mass drifted by " +
                              std::to_string(mass - mass0) + " at step " +
                              std::to_string(k));
    }
    if (k % keep == 0 || k == n_steps) {
      if (traj.snapshot_steps.back() != k) {
        traj.snapshot_steps.push_back(k);
        traj.snapshots.push_back(q);
      }
    }
  }
  traj.edge_flagged = traj.edge_occupancy_max > opts.edge_flag_threshold;
  return traj;
}

std::vector<NewtonRecord> newton_check(const MultiTrajectory& traj) {
  const size_t n = traj.times.size();
  if (n < 3) throw std::invalid_argument("newton_check: need at least 3 time points");
  if (traj.mean_potential_gradient.size() != n) {
    throw std::invalid_argument("newton_check: trajectory lacks the E[V'] series");
  }
  std::vector<NewtonRecord> out;
  out.reserve(n - 2);
  const double dt = traj.times[1] - traj.times[0];
  for (size_t i = 1; i + 1 < n; ++i) {
    NewtonRecord r;
    r.t = traj.times[i];
    r.d2ex_dt2 =
        (traj.mean_x[i + 1] - 2.0 * traj.mean_x[i] + traj.mean_x[i - 1]) / (dt * dt);
    r.e_vprime = traj.mean_potential_gradient[i];
    const double scale = std::max(std::abs(r.e_vprime), 1e-300);
    r.signed_rel_err = (r.d2ex_dt2 + r.e_vprime) / scale;
    out.push_back(r);
  }
  return out;
}

std::vector<EnergyRecord> energy_check(const MultiTrajectory& traj) {
  const size_t n = traj.times.size();
  if (n < 2) throw std::invalid_argument("energy_check: need at least 2 time points");
  if (traj.mean_potential.size() != n) {
    throw std::invalid_argument("energy_check: trajectory lacks the E[V] series");
  }
  std::vector<EnergyRecord> out;
  out.reserve(n);
  const double dt = traj.times[1] - traj.times[0];
  for (size_t i = 0; i < n; ++i) {
    EnergyRecord r;
    r.t = traj.times[i];
    r.energy = 0.5 * traj.mean_v2[i] + traj.mean_potential[i];
    if (i > 0) r.drift = (r.energy - out[i - 1].energy) / dt;
    out.push_back(r);
  }
  return out;
}

}  // namespace velmark
