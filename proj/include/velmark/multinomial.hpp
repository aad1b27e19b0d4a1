// Multi-velocity lattice stepper with general switching matrices, the
// potential-driven tridiagonal rate choice, and the mean-motion / energy
// checks built on top of it.
#pragma once

#include "velmark/binomial.hpp"
#include "velmark/lattice.hpp"

namespace velmark {

// Joint (position, velocity-index) mass. Row j in [-J, J] holds the mass that
// exits its node with velocity j*c; storage is row-major (2J+1) x node_count.
struct MultiDensity {
  GridSpec grid;
  int j_max = 1;
  std::vector<double> q;

  int rows() const { return 2 * j_max + 1; }
  int row(int j) const { return j + j_max; }
  double& at(int j, int m) {
    return q[static_cast<size_t>(row(j)) * grid.node_count() + grid.index(m)];
  }
  double at(int j, int m) const {
    return q[static_cast<size_t>(row(j)) * grid.node_count() + grid.index(m)];
  }
  double velocity(int j) const { return j * grid.c(); }
};

MultiDensity zero_multi(const GridSpec& grid, int j_max);
MultiDensity embed(const MultiDensity& q, const GridSpec& wider);
double total_mass(const MultiDensity& q);
double min_entry(const MultiDensity& q);
std::vector<double> state_density(const MultiDensity& q);  // rho per node

// (2J+1)^2 switching matrix, possibly evaluated per (t, x). Entries are
// omega[j][k]: column k feeds mass arriving with velocity k*c into row j.
// StepProbability columns sum to one; ContinuumRate columns sum to zero with
// nonpositive diagonal.
struct RateMatrix {
  int j_max = 1;
  RateForm form = RateForm::StepProbability;
  bool x_independent = false;  // entries do not depend on (t, x)
  std::function<std::vector<double>(double t, double x)> omega;

  int rows() const { return 2 * j_max + 1; }
  static RateMatrix constant(int j_max, RateForm form, std::vector<double> entries);
  std::vector<double> eval(double t, double x) const { return omega(t, x); }
};

void validate_columns(const std::vector<double>& entries, int rows, RateForm form,
                      double tol = 1e-12);

// q^j(t+dt, x) = sum_k omega[j][k](t, x) q^k(t, x - k dx): velocity-k mass
// moves k nodes, then redistributes across velocities by column k.
MultiDensity step_multinomial(const MultiDensity& q, const RateMatrix& omega,
                              double t, int threads = 1);

// ContinuumRate -> StepProbability: entries delta_jk + h*omega_jk. Throws if
// h is large enough to produce a negative diagonal.
RateMatrix rate_to_step(const RateMatrix& omega_rate, double h);

// Switching built from a potential gradient: up/down rates
// theta +- V'(x)/(2c) on the velocity ladder, so that alpha - beta = V'/c.
struct NewtonRates {
  double theta = 1.0;
  std::function<double(double x)> potential_gradient;
  double c = 1.0;

  double alpha(double x) const { return theta + potential_gradient(x) / (2.0 * c); }
  double beta(double x) const { return theta - potential_gradient(x) / (2.0 * c); }
  double lambda(double x) const { return alpha(x) + beta(x); }
};

// Tridiagonal ContinuumRate entries at a fixed x: alpha on the superdiagonal,
// beta on the subdiagonal, -(alpha+beta) on the interior diagonal. Edge
// columns drop the transition beyond +-J and renormalize to keep the column
// sum at zero. Throws if either rate is negative at x.
std::vector<double> newton_matrix_at(const NewtonRates& nr, int j_max, double x);

// x-dependent RateMatrix wrapping newton_matrix_at.
RateMatrix build_newton_rate_matrix(const NewtonRates& nr, int j_max);

// v(t,x) = c * sum_j j q^j / rho, masked below rho_floor.
VelocityField mean_velocity_multi(const MultiDensity& q, double rho_floor = 1e-14);

// First-order inversion of the step matrix: v- = v - h (sum_jk v_j w_jk q^k)/rho
// with w the ContinuumRate matrix ((omega - I)/h when given step form).
VelocityField backward_velocity_multi(const MultiDensity& q_t, const RateMatrix& omega,
                                      double t, double h, double rho_floor = 1e-14);

// (v - v-)/h = (sum_jk v_j w_jk q^k)/rho; for Newton rates this equals -V'(x).
VelocityField acceleration_field_multi(const MultiDensity& q_t, const RateMatrix& omega,
                                       double t, double h, double rho_floor = 1e-14);

// Characteristic-frame transform: row j translated by j*t_steps nodes.
MultiDensity characteristic_shift(const MultiDensity& q, int t_steps);

// One step carried out in the shifted frame: shift by s_before steps, apply
// the mixed-frame update, un-shift by s_before+1. Identical to
// step_multinomial up to rounding; exposed for the translation-operator test.
MultiDensity step_multinomial_characteristic(const MultiDensity& q,
                                             const RateMatrix& omega, double t,
                                             int s_before);

struct MultiSimOptions {
  int keep_every = 1;
  int threads = 1;
  double conservation_tol = 1e-12;
  double edge_flag_threshold = 1e-6;
  std::function<double(double x)> potential;           // V, for energy series
  std::function<double(double x)> potential_gradient;  // V'
};

struct MultiTrajectory {
  GridSpec grid;
  int j_max = 1;
  std::vector<int> snapshot_steps;
  std::vector<MultiDensity> snapshots;
  // Per-step series (entry per step, including step 0).
  std::vector<double> times;
  std::vector<double> mean_x;
  std::vector<double> mean_v;
  std::vector<double> mean_v2;
  std::vector<double> mean_potential;           // empty unless V supplied
  std::vector<double> mean_potential_gradient;  // empty unless V' supplied
  double edge_occupancy_max = 0.0;
  bool edge_flagged = false;

  const MultiDensity& final_density() const { return snapshots.back(); }
};

MultiTrajectory multi_simulate(const MultiDensity& initial, const RateMatrix& omega_step,
                               int n_steps, const MultiSimOptions& opts = {});

// Second central difference of E[x(t)] against E[V'(x)] per interior time.
struct NewtonRecord {
  double t = 0.0;
  double d2ex_dt2 = 0.0;
  double e_vprime = 0.0;
  double signed_rel_err = 0.0;  // (d2ex + e_vprime) / max(|e_vprime|, eps)
};

std::vector<NewtonRecord> newton_check(const MultiTrajectory& traj);

// Finite-difference drift of (kinetic + potential) energy per step.
struct EnergyRecord {
  double t = 0.0;
  double energy = 0.0;  // 0.5 E[v^2] + E[V]
  double drift = 0.0;   // (energy(t) - energy(t-dt)) / dt
};

std::vector<EnergyRecord> energy_check(const MultiTrajectory& traj);

}  // namespace velmark
