// Empirical moments of simulated densities and the closed-form constant-rate
// predictions they are compared against.
#pragma once

#include "velmark/binomial.hpp"
#include "velmark/continuum.hpp"
#include "velmark/lattice.hpp"

namespace velmark {

// Mean, variance and mean exit velocity for a single density.
struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double mean_velocity = 0.0;
};

Moments density_moments(const JointDensity& q);

// Per-step series recorded during simulation (times include step 0).
MomentSeries empirical_moments(const BinomialTrajectory& traj);

// Constant-rate predictions: v(t), E[x](t) and the large-gamma E[x^2](t).
struct MomentPrediction {
  double v0 = 0.0;       // initial mean velocity
  double gamma = 0.0;
  double epsilon = 0.0;
  double c = 1.0;
};

MomentPrediction moment_prediction(const TelegraphParams& p, double v0);
MomentPrediction moment_prediction(const JointDensity& initial,
                                   const TelegraphParams& p);

// v(t) = -c eps/gamma + (v0 + c eps/gamma) e^{-gamma t}
double predicted_mean_velocity(const MomentPrediction& p, double t);

// E[x](t) = Ex0 - c eps t/gamma + (v0 + c eps/gamma)(1 - e^{-gamma t})/gamma
double predicted_mean(const MomentPrediction& p, double ex0, double t);

// Large-gamma asymptotic E[x^2](t) = 2c^2 t/gamma + (Ex0 - c eps t/gamma)^2.
// Valid for gamma*t >> 1; the caller can read the regime flag from gamma*t.
double predicted_second_moment(const MomentPrediction& p, double ex0, double t);

// Least-squares slope of y against t over the index window [begin, end).
double linear_slope(const std::vector<double>& t, const std::vector<double>& y,
                    size_t begin, size_t end);

}  // namespace velmark
