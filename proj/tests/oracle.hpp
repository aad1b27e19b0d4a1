// Brute-force reference for the lattice steppers: accumulates exact
// (position, exit-velocity) mass over explicit transition products, without
// spatial arrays or the shift-then-mix factorization of the production code.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "velmark/lattice.hpp"
#include "velmark/multinomial.hpp"

namespace velmark::oracle {

// State key: (node index, velocity index). Velocity indices are -1/+1 for
// the two-velocity chain and -J..J in general.
using StateKey = std::pair<int, int>;
using StateMass = std::map<StateKey, double>;

struct PathEnumeration {
  int n_steps = 0;
  StateMass initial;
  int j_max = 1;
  // Column-stochastic switch probabilities at (t, x): entry [j][k] row-major.
  std::function<std::vector<double>(double t, double x)> omega_step;
  double dx = 1.0;
  double dt = 1.0;
};

PathEnumeration from_joint(const velmark::JointDensity& q, const velmark::RateSpec& rates,
                           int n_steps);
PathEnumeration from_multi(const velmark::MultiDensity& q, const velmark::RateMatrix& omega,
                           int n_steps);

// Exact distribution after n_steps; throws if (2J+1)^n exceeds the guard.
StateMass enumerate_distribution(const PathEnumeration& pe, double max_paths = 1e7);

double total_mass(const StateMass& s);

// Largest per-(node, velocity) deviation between the enumeration and a
// stepper result.
double max_abs_difference(const StateMass& s, const velmark::JointDensity& q);
double max_abs_difference(const StateMass& s, const velmark::MultiDensity& q);

}  // namespace velmark::oracle
