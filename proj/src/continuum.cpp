#include "velmark/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "velmark/bessel.hpp"
#include "velmark/quadrature.hpp"

namespace velmark {

TelegraphParams telegraph_params(double alpha, double beta, double c) {
  if (alpha < 0.0 || beta < 0.0) {
    throw std::invalid_argument("telegraph_params: rates must be nonnegative");
  }
  if (!(c > 0.0)) throw std::invalid_argument("telegraph_params: c must be positive");
  TelegraphParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.c = c;
  p.gamma = alpha + beta;
  p.epsilon = alpha - beta;
  p.eta = std::sqrt(alpha * beta);
  return p;
}

CauchyData CauchyData::truncated_gaussian(double sigma, double half_width) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("truncated_gaussian: sigma must be positive");
  }
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("truncated_gaussian: half_width must be positive");
  }
  const double norm =
      sigma * std::sqrt(2.0 * std::numbers::pi) * std::erf(half_width / (sigma * std::numbers::sqrt2));
  const double amp = 0.5 / norm;  // each branch carries half the unit mass
  CauchyData d;
  d.support_min = -half_width;
  d.support_max = half_width;
  d.zero_outside = true;
  d.quad_step = sigma / 2.0;
  auto profile = [amp, sigma, half_width](double x) {
    return std::abs(x) <= half_width ? amp * std::exp(-x * x / (2.0 * sigma * sigma)) : 0.0;
  };
  d.q0_plus = profile;
  d.q0_minus = profile;
  return d;
}

namespace {

// Centered 4-point cubic on a uniform grid; end cells fall back to the
// nearest full stencil.
double cubic_interp(const std::vector<double>& f, double idx) {
  const int n = static_cast<int>(f.size());
  if (n == 1) return f[0];
  if (n < 4) {  // linear
    int i = std::clamp(static_cast<int>(std::floor(idx)), 0, n - 2);
    const double u = idx - i;
    return f[static_cast<size_t>(i)] * (1.0 - u) + f[static_cast<size_t>(i + 1)] * u;
  }
  int i = std::clamp(static_cast<int>(std::floor(idx)), 1, n - 3);
  const double u = idx - i;
  const double p0 = f[static_cast<size_t>(i - 1)], p1 = f[static_cast<size_t>(i)],
               p2 = f[static_cast<size_t>(i + 1)], p3 = f[static_cast<size_t>(i + 2)];
  return 0.5 * (2.0 * p1 + (-p0 + p2) * u + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * u * u +
                (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * u * u * u);
}

}  // namespace

CauchyData CauchyData::from_samples(double x0, double dx, std::vector<double> q_plus,
                                    std::vector<double> q_minus, bool zero_outside) {
  if (q_plus.size() != q_minus.size() || q_plus.empty()) {
    throw std::invalid_argument("from_samples: profiles must be non-empty and equal-sized");
  }
  if (!(dx > 0.0)) throw std::invalid_argument("from_samples: dx must be positive");
  CauchyData d;
  d.support_min = x0;
  d.support_max = x0 + dx * (static_cast<double>(q_plus.size()) - 1.0);
  d.zero_outside = zero_outside;
  d.quad_step = 2.0 * dx;
  auto make = [x0, dx](std::vector<double> samples) {
    return [x0, dx, s = std::move(samples)](double x) {
      const double idx = (x - x0) / dx;
      if (idx < 0.0 || idx > static_cast<double>(s.size() - 1)) return 0.0;
      return cubic_interp(s, idx);
    };
  };
  d.q0_plus = make(std::move(q_plus));
  d.q0_minus = make(std::move(q_minus));
  return d;
}

double LightconeKernel::xi(double t, double u) const {
  return std::sqrt(std::max(interval(t, u), 0.0));
}

double LightconeKernel::i0(double t, double u) const {
  return bessel_i0(eta / c * xi(t, u));
}

double LightconeKernel::i1_over_xi(double t, double u) const {
  // I1(w)/xi = (eta/c) * (I1(w)/w) with w = (eta/c) xi.
  return eta / c * bessel_i1_over_z(eta / c * xi(t, u));
}

namespace {

struct Transformed {
  // f(z) = e^{(eps/2c) z} q0(z), zero outside the support window.
  const CauchyData& data;
  const TelegraphParams& p;

  double fplus(double z) const {
    if (z < data.support_min || z > data.support_max) return 0.0;
    return std::exp(p.epsilon / (2.0 * p.c) * z) * data.q0_plus(z);
  }
  double fminus(double z) const {
    if (z < data.support_min || z > data.support_max) return 0.0;
    return std::exp(p.epsilon / (2.0 * p.c) * z) * data.q0_minus(z);
  }
};

void check_domain(const CauchyData& data, double t, double x, double c) {
  if (!(t >= 0.0)) throw std::invalid_argument("kg_cauchy_q: t must be nonnegative");
  if (!data.zero_outside) {
    if (x - c * t < data.support_min || x + c * t > data.support_max) {
      throw std::out_of_range("kg_cauchy_q: light cone leaves the sampled support");
    }
  }
}

CauchyPoint cauchy_full(const CauchyData& data, const TelegraphParams& p, double t,
                        double x) {
  const double c = p.c;
  const Transformed f{data, p};
  const LightconeKernel cone{c, p.eta};
  const double lo = std::max(x - c * t, data.support_min);
  const double hi = std::min(x + c * t, data.support_max);
  const double panel = std::max(data.quad_step, 1e-12);

  double kern_plus = 0.0, kern_minus = 0.0, mix_plus = 0.0, mix_minus = 0.0;
  if (hi > lo) {
    if (p.eta > 0.0) {
      // I1 kernel against the same-branch data: weight ((x-z) +- ct).
      kern_plus = integrate(
          [&](double z) {
            return f.fplus(z) * ((x - z) + c * t) * cone.i1_over_xi(t, x - z);
          },
          lo, hi, panel);
      kern_minus = integrate(
          [&](double z) {
            return f.fminus(z) * (c * t - (x - z)) * cone.i1_over_xi(t, x - z);
          },
          lo, hi, panel);
    }
    // I0 kernel against the opposite branch.
    mix_minus = integrate([&](double z) { return f.fminus(z) * cone.i0(t, x - z); },
                          lo, hi, panel);
    mix_plus = integrate([&](double z) { return f.fplus(z) * cone.i0(t, x - z); },
                         lo, hi, panel);
  }

  const double eta_over_2c = p.eta / (2.0 * c);
  const double w_plus = f.fplus(x - c * t) + eta_over_2c * kern_plus +
                        p.beta / (2.0 * c) * mix_minus;
  const double w_minus = f.fminus(x + c * t) + eta_over_2c * kern_minus +
                         p.alpha / (2.0 * c) * mix_plus;
  const double pref = std::exp(-p.epsilon / (2.0 * c) * x - p.gamma / 2.0 * t);
  CauchyPoint out;
  out.q_plus = pref * w_plus;
  out.q_minus = pref * w_minus;
  out.rho = out.q_plus + out.q_minus;
  return out;
}

// Simplified variant: d'Alembert half-sum plus the weighted I0/xi kernel,
// applied branch by branch. The 1/xi endpoint singularity is removed with
// the substitution z = x - ct sin(theta).
CauchyPoint cauchy_half_sum(const CauchyData& data, const TelegraphParams& p, double t,
                            double x) {
  const double c = p.c;
  const Transformed f{data, p};
  const LightconeKernel cone{c, p.eta};

  auto kernel = [&](auto&& fz) {
    if (t <= 0.0 || p.eta <= 0.0) return 0.0;
    const double ct = c * t;
    const double s_lo = std::max(-1.0, (x - data.support_max) / ct);
    const double s_hi = std::min(1.0, (x - data.support_min) / ct);
    if (s_lo >= s_hi) return 0.0;
    const double th_lo = std::asin(s_lo);
    const double th_hi = std::asin(s_hi);
    const double panel = std::max(data.quad_step / ct, 1e-4);
    return integrate(
        [&](double th) {
          const double u = ct * std::sin(th);
          return fz(x - u) * cone.i0(t, u);  // I0(eta t cos(theta))
        },
        th_lo, th_hi, panel);
  };

  const double weight = c * t * p.eta / 2.0;
  const double psi_plus = 0.5 * (f.fplus(x + c * t) + f.fplus(x - c * t)) +
                          weight * kernel([&](double z) { return f.fplus(z); });
  const double psi_minus = 0.5 * (f.fminus(x + c * t) + f.fminus(x - c * t)) +
                           weight * kernel([&](double z) { return f.fminus(z); });
  const double pref = std::exp(-p.epsilon / (2.0 * c) * x - p.gamma / 2.0 * t);
  CauchyPoint out;
  out.q_plus = pref * psi_plus;
  out.q_minus = pref * psi_minus;
  out.rho = out.q_plus + out.q_minus;
  return out;
}

}  // namespace

CauchyPoint kg_cauchy_q(const CauchyData& data, const TelegraphParams& p, double t,
                        double x, CauchyFormula formula) {
  check_domain(data, t, x, p.c);
  if (t == 0.0) {
    CauchyPoint out;
    const bool inside = x >= data.support_min && x <= data.support_max;
    out.q_plus = inside ? data.q0_plus(x) : 0.0;
    out.q_minus = inside ? data.q0_minus(x) : 0.0;
    out.rho = out.q_plus + out.q_minus;
    return out;
  }
  return formula == CauchyFormula::Full ? cauchy_full(data, p, t, x)
                                        : cauchy_half_sum(data, p, t, x);
}

std::vector<CauchyPoint> kg_cauchy_grid(const CauchyData& data, const TelegraphParams& p,
                                        double t, const std::vector<double>& xs,
                                        CauchyFormula formula) {
  std::vector<CauchyPoint> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(kg_cauchy_q(data, p, t, x, formula));
  return out;
}

SampledField sample_field(const std::function<double(double, double)>& f, double t0,
                          double x0, double dt, double dx, int nt, int nx) {
  if (nt < 1 || nx < 1) throw std::invalid_argument("sample_field: empty grid");
  if (!(dt > 0.0) || !(dx > 0.0)) {
    throw std::invalid_argument("sample_field: steps must be positive");
  }
  SampledField s;
  s.t0 = t0;
  s.x0 = x0;
  s.dt = dt;
  s.dx = dx;
  s.nt = nt;
  s.nx = nx;
  s.values.resize(static_cast<size_t>(nt) * nx);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nx; ++j) {
      s.at(i, j) = f(s.tcoord(i), s.xcoord(j));
    }
  }
  return s;
}

ResidualReport kg_residual(const SampledField& field, const TelegraphParams& p) {
  if (field.nt < 3 || field.nx < 3) {
    throw std::invalid_argument("kg_residual: need at least 3 points per axis");
  }
  ResidualReport r;
  r.dt = field.dt;
  r.dx = field.dx;
  const double c2 = p.c * p.c;
  const double eta2 = p.eta * p.eta;
  double sum2 = 0.0;
  int count = 0;
  for (int i = 1; i + 1 < field.nt; ++i) {
    for (int j = 1; j + 1 < field.nx; ++j) {
      const double tt =
          (field.at(i + 1, j) - 2.0 * field.at(i, j) + field.at(i - 1, j)) /
          (field.dt * field.dt);
      const double xx =
          (field.at(i, j + 1) - 2.0 * field.at(i, j) + field.at(i, j - 1)) /
          (field.dx * field.dx);
      const double res = tt - c2 * xx - eta2 * field.at(i, j);
      r.norm_inf = std::max(r.norm_inf, std::abs(res));
      sum2 += res * res;
      ++count;
    }
  }
  r.norm_l2 = std::sqrt(sum2 / std::max(count, 1));
  return r;
}

namespace {

double bicubic(const SampledField& s, double ti, double xi) {
  const int it = std::clamp(static_cast<int>(std::floor(ti)), 1, s.nt - 3);
  const double ut = ti - it;
  double rows[4];
  for (int d = -1; d <= 2; ++d) {
    const int i = it + d;
    const int jx = std::clamp(static_cast<int>(std::floor(xi)), 1, s.nx - 3);
    const double u = xi - jx;
    const double p0 = s.at(i, jx - 1), p1 = s.at(i, jx), p2 = s.at(i, jx + 1),
                 p3 = s.at(i, jx + 2);
    rows[d + 1] = 0.5 * (2.0 * p1 + (-p0 + p2) * u +
                         (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * u * u +
                         (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * u * u * u);
  }
  const double p0 = rows[0], p1 = rows[1], p2 = rows[2], p3 = rows[3];
  return 0.5 * (2.0 * p1 + (-p0 + p2) * ut + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * ut * ut +
                (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * ut * ut * ut);
}

}  // namespace

SampledField lorentz_boost_samples(const SampledField& src, double v, double c,
                                   double t0, double x0, double dt, double dx,
                                   int nt, int nx) {
  if (!(std::abs(v) < c)) {
    throw std::invalid_argument("lorentz_boost_samples: |v| must be below c");
  }
  const double gamma_l = 1.0 / std::sqrt(1.0 - v * v / (c * c));
  SampledField out;
  out.t0 = t0;
  out.x0 = x0;
  out.dt = dt;
  out.dx = dx;
  out.nt = nt;
  out.nx = nx;
  out.values.resize(static_cast<size_t>(nt) * nx);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nx; ++j) {
      const double t = t0 + i * dt;
      const double x = x0 + j * dx;
      const double tb = gamma_l * (t - x * v / (c * c));
      const double xb = gamma_l * (x - v * t);
      const double ti = (tb - src.t0) / src.dt;
      const double xi = (xb - src.x0) / src.dx;
      if (ti < 1.0 || ti > src.nt - 2.0 || xi < 1.0 || xi > src.nx - 2.0) {
        throw std::out_of_range(
            "lorentz_boost_samples: mapped point outside the source samples");
      }
      out.at(i, j) = bicubic(src, ti, xi);
    }
  }
  return out;
}

DiffusionCoefficients diffusion_coefficients(const TelegraphParams& p) {
  if (!(p.gamma > 0.0)) {
    throw std::invalid_argument("diffusion_coefficients: gamma must be positive");
  }
  DiffusionCoefficients d;
  d.drift = -p.c * p.epsilon / p.gamma;
  d.diffusion = p.c * p.c / p.gamma;
  return d;
}

double diffusion_limit_density(const TelegraphParams& p, double mean0, double var0,
                               double t, double x) {
  const DiffusionCoefficients d = diffusion_coefficients(p);
  const double mean = mean0 + d.drift * t;
  const double var = var0 + 2.0 * d.diffusion * t;
  if (!(var > 0.0)) {
    throw std::invalid_argument("diffusion_limit_density: variance must be positive");
  }
  const double u = x - mean;
  return std::exp(-u * u / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

}  // namespace velmark
