#include "velmark/moments.hpp"

#include <cmath>

namespace velmark {

Moments density_moments(const JointDensity& q) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, f = 0.0;
  for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
    const double rho = q.plus(m) + q.minus(m);
    const double x = q.grid.x(m);
    m0 += rho;
    m1 += x * rho;
    m2 += x * x * rho;
    f += q.plus(m) - q.minus(m);
  }
  if (m0 <= 0.0) throw std::invalid_argument("density_moments: empty density");
  Moments out;
  out.mean = m1 / m0;
  out.variance = m2 / m0 - out.mean * out.mean;
  out.mean_velocity = q.grid.c() * f / m0;
  return out;
}

MomentSeries empirical_moments(const BinomialTrajectory& traj) {
  if (traj.moments.times.empty()) {
    throw std::invalid_argument("empirical_moments: empty trajectory");
  }
  return traj.moments;
}

MomentPrediction moment_prediction(const TelegraphParams& p, double v0) {
  MomentPrediction mp;
  mp.v0 = v0;
  mp.gamma = p.gamma;
  mp.epsilon = p.epsilon;
  mp.c = p.c;
  return mp;
}

MomentPrediction moment_prediction(const JointDensity& initial,
                                   const TelegraphParams& p) {
  return moment_prediction(p, density_moments(initial).mean_velocity);
}

double predicted_mean_velocity(const MomentPrediction& p, double t) {
  if (!(p.gamma > 0.0)) {
    throw std::invalid_argument("predicted_mean_velocity: gamma must be positive");
  }
  const double v_inf = -p.c * p.epsilon / p.gamma;
  return v_inf + (p.v0 - v_inf) * std::exp(-p.gamma * t);
}

double predicted_mean(const MomentPrediction& p, double ex0, double t) {
  if (!(p.gamma > 0.0)) {
    throw std::invalid_argument("predicted_mean: gamma must be positive");
  }
  const double v_inf = -p.c * p.epsilon / p.gamma;
  return ex0 + v_inf * t + (p.v0 - v_inf) * (1.0 - std::exp(-p.gamma * t)) / p.gamma;
}

double predicted_second_moment(const MomentPrediction& p, double ex0, double t) {
  if (!(p.gamma > 0.0)) {
    throw std::invalid_argument("predicted_second_moment: gamma must be positive");
  }
  const double mean = ex0 - p.c * p.epsilon * t / p.gamma;
  return 2.0 * p.c * p.c * t / p.gamma + mean * mean;
}

double linear_slope(const std::vector<double>& t, const std::vector<double>& y,
                    size_t begin, size_t end) {
  if (end > t.size() || end > y.size() || end - begin < 2) {
    throw std::invalid_argument("linear_slope: window too small");
  }
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  const double n = static_cast<double>(end - begin);
  for (size_t i = begin; i < end; ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double denom = n * stt - st * st;
  if (denom == 0.0) throw std::invalid_argument("linear_slope: degenerate abscissa");
  return (n * sty - st * sy) / denom;
}

}  // namespace velmark
