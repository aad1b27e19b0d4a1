// Two-velocity stepper: mass moves one node per step in its current
// direction and may switch direction at the arrival node. Also the derived
// per-node velocity fields (forward, backward, acceleration).
#pragma once

#include "velmark/lattice.hpp"

namespace velmark {

// Per-node velocity with a validity mask; nodes with rho below the floor are
// masked to avoid 0/0 on unreached nodes.
struct VelocityField {
  GridSpec grid;
  std::vector<double> v;
  std::vector<unsigned char> valid;
};

// One application of the two-velocity recursion:
//   q+(t+dt, x) = (1-alpha(t,x)) q+(t, x-dx) + beta(t,x) q-(t, x+dx)
//   q-(t+dt, x) = alpha(t,x) q+(t, x-dx) + (1-beta(t,x)) q-(t, x+dx)
// Rates are queried at the arrival node. Requires StepProbability form and a
// grid large enough that no mass would cross the boundary.
JointDensity step_binomial(const JointDensity& q, const RateSpec& rates, double t,
                           int threads = 1);

struct BinomialTrajectory {
  GridSpec grid;  // expanded so the light cone of the run fits
  RateSpec rates;
  std::vector<int> snapshot_steps;
  std::vector<JointDensity> snapshots;
  MomentSeries moments;  // one entry per step, including step 0
  // Total mass that has never switched direction, per step count
  // (ballistic_plus[k] after k switch opportunities).
  std::vector<double> ballistic_plus;
  std::vector<double> ballistic_minus;

  const JointDensity& initial() const { return snapshots.front(); }
  const JointDensity& final_density() const { return snapshots.back(); }
  // Mass still sitting on the pure +c / -c characteristic after n steps,
  // i.e. survivors of the first n-1 switch opportunities.
  double ballistic_lobe_plus() const;
  double ballistic_lobe_minus() const;
};

// Runs n_steps of step_binomial from `initial`, auto-expanding the grid by
// n_steps nodes per side. Snapshots are kept every keep_every steps plus the
// final one; per-step moments and ballistic survival are always recorded.
BinomialTrajectory simulate(const JointDensity& initial, const RateSpec& rates,
                            int n_steps, int keep_every = 1, int threads = 1,
                            double conservation_tol = 1e-12);

// v(t,x) = c (q+ - q-) / rho, masked where rho < rho_floor.
VelocityField forward_velocity(const JointDensity& q, double rho_floor = 1e-14);

// Mean velocity of the step that arrived at x: reconstructed by inverting the
// one-step transition, v- = (v + c*eps_step) / (1 - gamma_step) with the
// rates evaluated at (t - h, x).
VelocityField backward_velocity(const JointDensity& q_t, const RateSpec& rates,
                                double t, double h, double rho_floor = 1e-14);

// a(t,x) = (v - v-) / h on the shared mask.
VelocityField acceleration_field(const JointDensity& q_t, const RateSpec& rates,
                                 double t, double h, double rho_floor = 1e-14);

// Inverse of step_binomial: reconstructs the previous density from q(t),
// valid while the one-step matrix is invertible (alpha+beta != 1 per node).
JointDensity unstep_binomial(const JointDensity& q_t, const RateSpec& rates,
                             double t, double h);

}  // namespace velmark
