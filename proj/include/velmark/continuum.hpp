// Continuum-limit analytics: Telegraph/Klein-Gordon parameters, the
// light-cone Cauchy solution of the coupled two-velocity system, boosted
// resampling, finite-difference residuals and the diffusion limit.
#pragma once

#include <functional>
#include <vector>

#include "velmark/lattice.hpp"

namespace velmark {

// Constant continuum rates and the derived Telegraph/Klein-Gordon constants:
// gamma = alpha + beta, epsilon = alpha - beta, eta^2 = alpha*beta.
struct TelegraphParams {
  double alpha = 0.0;
  double beta = 0.0;
  double c = 1.0;
  double gamma = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
};

TelegraphParams telegraph_params(double alpha, double beta, double c);

// Initial data for the Cauchy problem. The profiles are exact evaluators
// (factories wrap sampled data in a cubic interpolant); outside
// [support_min, support_max] they are zero when zero_outside is set,
// otherwise evaluation beyond the support is an error.
struct CauchyData {
  std::function<double(double)> q0_plus;
  std::function<double(double)> q0_minus;
  double support_min = 0.0;
  double support_max = 0.0;
  bool zero_outside = true;
  double quad_step = 0.1;  // kernel-integration panel width

  static CauchyData truncated_gaussian(double sigma, double half_width);
  static CauchyData from_samples(double x0, double dx, std::vector<double> q_plus,
                                 std::vector<double> q_minus, bool zero_outside = true);
};

struct CauchyPoint {
  double q_plus = 0.0;
  double q_minus = 0.0;
  double rho = 0.0;
};

// Light-cone geometry shared by the kernel integrals: the invariant interval
// K(t,u) = c^2 t^2 - u^2 and xi = sqrt(K), clamped to zero on the boundary.
struct LightconeKernel {
  double c = 1.0;
  double eta = 0.0;

  double interval(double t, double u) const { return c * c * t * t - u * u; }
  double xi(double t, double u) const;
  // I0((eta/c) xi(t,u)); finite everywhere inside the cone.
  double i0(double t, double u) const;
  // I1((eta/c) xi)/xi, with the xi -> 0 limit eta/(2c) taken analytically.
  double i1_over_xi(double t, double u) const;
};

// Full: the light-cone (Riemann kernel) solution of the coupled system
//   dq+/dt + c dq+/dx = -alpha q+ + beta q-
//   dq-/dt - c dq-/dx = +alpha q+ - beta q-,
// evaluated through the exponential substitution and the I0/I1 kernels.
// HalfSumI0: a simplified variant that symmetrizes the transport term and
// keeps only a weighted I0/xi kernel; it does not solve the coupled system
// away from t = 0 and is retained as a diagnostic.
enum class CauchyFormula { Full, HalfSumI0 };

CauchyPoint kg_cauchy_q(const CauchyData& data, const TelegraphParams& p, double t,
                        double x, CauchyFormula formula = CauchyFormula::Full);

std::vector<CauchyPoint> kg_cauchy_grid(const CauchyData& data, const TelegraphParams& p,
                                        double t, const std::vector<double>& xs,
                                        CauchyFormula formula = CauchyFormula::Full);

// Uniformly sampled space-time field.
struct SampledField {
  double t0 = 0.0;
  double x0 = 0.0;
  double dt = 1.0;
  double dx = 1.0;
  int nt = 0;
  int nx = 0;
  std::vector<double> values;  // row-major [time][space]

  double& at(int i, int j) { return values[static_cast<size_t>(i) * nx + j]; }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * nx + j]; }
  double tcoord(int i) const { return t0 + i * dt; }
  double xcoord(int j) const { return x0 + j * dx; }
};

SampledField sample_field(const std::function<double(double, double)>& f, double t0,
                          double x0, double dt, double dx, int nt, int nx);

// Max / L2 norms of psi_tt - c^2 psi_xx - eta^2 psi by second central
// differences over interior points.
struct ResidualReport {
  double norm_inf = 0.0;
  double norm_l2 = 0.0;
  double dt = 0.0;
  double dx = 0.0;
};

ResidualReport kg_residual(const SampledField& field, const TelegraphParams& p);

// Resample a field under the velocity-v frame change
//   t' = (t - x v / c^2) / sqrt(1 - v^2/c^2), x' = (x - v t) / sqrt(1 - v^2/c^2)
// using bicubic interpolation of the source samples. The mapped coordinates
// must fall inside the source domain with one cell of margin.
SampledField lorentz_boost_samples(const SampledField& src, double v, double c,
                                   double t0, double x0, double dt, double dx,
                                   int nt, int nx);

// Large-gamma limit: drift -c epsilon / gamma, diffusion coefficient c^2/gamma.
struct DiffusionCoefficients {
  double drift = 0.0;
  double diffusion = 0.0;
};

DiffusionCoefficients diffusion_coefficients(const TelegraphParams& p);

// Gaussian with mean mean0 + drift*t and variance var0 + 2*diffusion*t.
double diffusion_limit_density(const TelegraphParams& p, double mean0, double var0,
                               double t, double x);

}  // namespace velmark
