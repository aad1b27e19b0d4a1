// Grids, joint densities and switching-rate specifications shared by the
// two-velocity and multi-velocity lattice steppers.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace velmark {

// Thrown when a step would move mass across the grid boundary.
struct BoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when total mass drifts away from its initial value.
struct ConservationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform space/time lattice. Nodes are x(m) = m*dx for m in [m_min, m_max],
// times are multiples of dt. The characteristic speed c = dx/dt is the
// distance covered by a one-node step per time step.
struct GridSpec {
  double dx = 1.0;
  double dt = 1.0;
  int m_min = 0;
  int m_max = 0;

  double c() const { return dx / dt; }
  double x(int m) const { return m * dx; }
  int node_count() const { return m_max - m_min + 1; }
  int index(int m) const { return m - m_min; }
  int node(int i) const { return m_min + i; }
  bool contains(int m) const { return m >= m_min && m <= m_max; }
  GridSpec expanded(int nodes_per_side) const {
    return GridSpec{dx, dt, m_min - nodes_per_side, m_max + nodes_per_side};
  }
};

GridSpec make_grid(double dx, double dt, int m_min, int m_max);

// Joint (position, direction) mass: q_plus[i] is the probability of sitting
// at node i and exiting upward, q_minus[i] of exiting downward. Neither array
// is a distribution on its own; their joint total is.
struct JointDensity {
  GridSpec grid;
  std::vector<double> q_plus;
  std::vector<double> q_minus;

  double& plus(int m) { return q_plus[grid.index(m)]; }
  double& minus(int m) { return q_minus[grid.index(m)]; }
  double plus(int m) const { return q_plus[grid.index(m)]; }
  double minus(int m) const { return q_minus[grid.index(m)]; }
};

JointDensity zero_density(const GridSpec& grid);

// Re-embed a density into a wider grid (same dx/dt), zero outside.
JointDensity embed(const JointDensity& q, const GridSpec& wider);

// Marginal state density rho = q+ + q- and current phi = q+ - q-.
struct StateDensity {
  GridSpec grid;
  std::vector<double> rho;
  std::vector<double> phi;
};

StateDensity to_state_density(const JointDensity& q);

double total_mass(const JointDensity& q);
double min_entry(const JointDensity& q);

// Switching parameters for the two-velocity chain. StepProbability entries
// are per-step probabilities in [0,1]; ContinuumRate entries are rates that
// become step probabilities after multiplication by the time step.
enum class RateForm { StepProbability, ContinuumRate };

struct RateSpec {
  RateForm form = RateForm::StepProbability;
  std::function<double(double t, double x)> alpha;
  std::function<double(double t, double x)> beta;

  static RateSpec constant_step(double a, double b);
  static RateSpec constant_rate(double a, double b);
  // ContinuumRate -> StepProbability with probabilities h*alpha, h*beta.
  RateSpec to_step(double h) const;

  // Step-probability values at (t, x), converting from rate form if needed.
  double step_alpha(double t, double x, double h) const;
  double step_beta(double t, double x, double h) const;
};

// Discrete truncated Gaussian with q+ = q- on nodes |x(m)| <= support_half_width,
// renormalized so the total mass is exactly one. The inclusive range is used:
// half-width 6.9 at dx = 0.3 covers 47 nodes.
JointDensity gaussian_initial(const GridSpec& grid, double sigma,
                              double support_half_width);

JointDensity point_initial(const GridSpec& grid, int m, double up_fraction = 1.0);

// Per-time mean, variance and mean exit velocity of the state density.
struct MomentSeries {
  std::vector<double> times;
  std::vector<double> mean;
  std::vector<double> variance;
  std::vector<double> mean_velocity;
};

// Run chunked [begin,end) loops on `threads` workers; threads <= 1 runs inline.
void parallel_for(int n, int threads, const std::function<void(int, int)>& body);

}  // namespace velmark
