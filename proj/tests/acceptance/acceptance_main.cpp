// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 13 drives the command line tool, whose path is passed
// with --cli.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "reference.hpp"
#include "velmark/bessel.hpp"
#include "velmark/binomial.hpp"
#include "velmark/continuum.hpp"
#include "velmark/lattice.hpp"
#include "velmark/moments.hpp"
#include "velmark/multinomial.hpp"

namespace fs = std::filesystem;
using namespace velmark;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += why;
    }
  }
  void note(const std::string& info) {
    if (!detail.empty()) detail += "; ";
    detail += info;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string cli_path;
fs::path workdir = "acceptance_out";

// ---------------------------------------------------------------------------
// Shared fixtures

const BinomialTrajectory& example1_run() {
  static const BinomialTrajectory traj = [] {
    const GridSpec g = make_grid(0.3, 0.003, -23, 23);
    return simulate(gaussian_initial(g, 0.6, 6.9), RateSpec::constant_step(0.006, 0.006),
                    150, 150);
  }();
  return traj;
}

struct NewtonFixture {
  double theta = 2.0;
  double g_force = 0.5;
  double c = 1.0;
  double h = 1e-3;
  int j_max = 9;
  int n_steps = 300;
  MultiTrajectory traj;
};

const NewtonFixture& newton_run() {
  static const NewtonFixture fx = [] {
    NewtonFixture f;
    const GridSpec seed = make_grid(f.c * f.h, f.h, 0, 0);
    MultiDensity init = zero_multi(seed, f.j_max);
    init.at(0, 0) = 1.0;
    NewtonRates nr{f.theta, [g = f.g_force](double) { return g; }, f.c};
    MultiSimOptions opts;
    opts.keep_every = f.n_steps;
    opts.potential = [g = f.g_force](double x) { return g * x; };
    opts.potential_gradient = [g = f.g_force](double) { return g; };
    f.traj = multi_simulate(init, rate_to_step(build_newton_rate_matrix(nr, f.j_max), f.h),
                            f.n_steps, opts);
    return f;
  }();
  return fx;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome conservation_and_positivity() {
  Outcome out;
  struct Preset {
    const char* name;
    double alpha, beta, sigma;
  };
  const Preset presets[] = {{"example1", 0.006, 0.006, 0.6},
                            {"example2", 0.006, 0.006, 0.1},
                            {"example3", 0.015, 0.015, 1.5},
                            {"example4", 0.09, 0.03, 1.5}};
  for (const Preset& p : presets) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec g = make_grid(0.3, 0.003, -23, 23);
    const JointDensity init = gaussian_initial(g, p.sigma, 6.9);
    BinomialTrajectory traj;
    try {
      traj = simulate(init, RateSpec::constant_step(p.alpha, p.beta), 150, 10);
    } catch (const std::exception& e) {
      out.require(false, std::string(p.name) + " raised: " + e.what());
      continue;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const JointDensity& snap : traj.snapshots) {
      out.require(std::abs(total_mass(snap) - 1.0) <= 1e-12,
                  std::string(p.name) + ": mass drift");
      out.require(min_entry(snap) >= -1e-16, std::string(p.name) + ": negative entry");
    }
    out.require(secs < 1.0, std::string(p.name) + " too slow (" + fmt(secs) + " s)");
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::mt19937 gen(987654321u);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> mass(0.05, 1.0);
  std::uniform_int_distribution<int> steps2(1, 10);

  double worst2 = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = steps2(gen);
    const GridSpec g = make_grid(1.0, 0.5, -(n + 3), n + 3);
    JointDensity init = zero_density(g);
    double total = 0.0;
    for (int m = -2; m <= 2; ++m) {
      init.plus(m) = mass(gen);
      init.minus(m) = mass(gen);
      total += init.plus(m) + init.minus(m);
    }
    for (double& v : init.q_plus) v /= total;
    for (double& v : init.q_minus) v /= total;
    const RateSpec rates = RateSpec::constant_step(prob(gen), prob(gen));
    JointDensity q = init;
    for (int k = 0; k < n; ++k) q = step_binomial(q, rates, k * g.dt);
    const auto ref = oracle::enumerate_distribution(oracle::from_joint(init, rates, n));
    worst2 = std::max(worst2, oracle::max_abs_difference(ref, q));
  }
  out.require(worst2 <= 1e-12, "two-velocity mismatch " + fmt(worst2));

  std::uniform_int_distribution<int> steps_multi(1, 6);
  std::uniform_int_distribution<int> jmax_pick(1, 2);
  double worst_multi = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int J = jmax_pick(gen);
    const int n = steps_multi(gen);
    const int rows = 2 * J + 1;
    std::vector<double> e(static_cast<size_t>(rows) * rows, 0.0);
    for (int k = 0; k < rows; ++k) {
      double sum = 0.0;
      for (int j = 0; j < rows; ++j) {
        const double w = 0.05 + prob(gen);
        e[static_cast<size_t>(j) * rows + k] = w;
        sum += w;
      }
      for (int j = 0; j < rows; ++j) e[static_cast<size_t>(j) * rows + k] /= sum;
    }
    const RateMatrix omega = RateMatrix::constant(J, RateForm::StepProbability, e);
    const GridSpec g = make_grid(1.0, 1.0, -(J * n + 2), J * n + 2);
    MultiDensity init = zero_multi(g, J);
    double total = 0.0;
    for (int j = -J; j <= J; ++j) {
      for (int m = -1; m <= 1; ++m) {
        const double w = mass(gen);
        init.at(j, m) = w;
        total += w;
      }
    }
    for (double& v : init.q) v /= total;
    MultiDensity q = init;
    for (int k = 0; k < n; ++k) q = step_multinomial(q, omega, k * g.dt);
    const auto ref = oracle::enumerate_distribution(oracle::from_multi(init, omega, n));
    worst_multi = std::max(worst_multi, oracle::max_abs_difference(ref, q));
  }
  out.require(worst_multi <= 1e-12, "multi-velocity mismatch " + fmt(worst_multi));
  out.note("max errors " + fmt(worst2) + " / " + fmt(worst_multi));
  return out;
}

Outcome example1_reproduction() {
  Outcome out;
  const BinomialTrajectory& traj = example1_run();
  const JointDensity& fin = traj.final_density();

  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (int m = fin.grid.m_min; m <= fin.grid.m_max; ++m) {
    if (fin.plus(m) + fin.minus(m) > 0.0) {
      if (!seen) lo = fin.grid.x(m);
      hi = fin.grid.x(m);
      seen = true;
    }
  }
  out.require(seen, "empty final density");
  out.require(std::abs(lo + 51.9) <= 1e-9 && std::abs(hi - 51.9) <= 1e-9,
              "support [" + fmt(lo) + ", " + fmt(hi) + "] != [-51.9, 51.9]");
  out.require(fin.plus(173) + fin.minus(173) > 0.0, "no mass at the +51.9 node");
  out.require(fin.plus(-173) + fin.minus(-173) > 0.0, "no mass at the -51.9 node");

  const double expected = 0.5 * std::pow(0.994, 149);
  const double lobe_p = traj.ballistic_lobe_plus();
  const double lobe_m = traj.ballistic_lobe_minus();
  out.require(std::abs(lobe_p - expected) <= 1e-10,
              "up lobe " + fmt(lobe_p) + " vs " + fmt(expected));
  out.require(std::abs(lobe_m - expected) <= 1e-10,
              "down lobe " + fmt(lobe_m) + " vs " + fmt(expected));
  out.note("lobe mass " + fmt(lobe_p));
  return out;
}

Outcome parity_interference() {
  Outcome out;
  // Point-like initial data: sigma = 0.1 truncated inside one cell, i.e. an
  // exact unit mass at node 0.
  const GridSpec g = make_grid(0.3, 0.003, -1, 1);
  const JointDensity init = gaussian_initial(g, 0.1, 0.05);
  out.require(init.plus(0) == 0.5 && init.minus(0) == 0.5, "not a point mass");
  const BinomialTrajectory traj =
      simulate(init, RateSpec::constant_step(0.006, 0.006), 150, 1);
  double worst = 0.0;
  for (size_t s = 0; s < traj.snapshots.size(); ++s) {
    const int n = traj.snapshot_steps[s];
    const JointDensity& q = traj.snapshots[s];
    for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
      if ((((m + n) % 2) + 2) % 2 == 1) {
        worst = std::max(worst, q.plus(m) + q.minus(m));
      }
    }
  }
  out.require(worst <= 1e-15, "forbidden-parity mass " + fmt(worst));
  out.note("max forbidden-parity mass " + fmt(worst));
  return out;
}

Outcome asymptotic_mean_velocity() {
  Outcome out;
  // Rates 6 and 4 per unit time at c = 100: gamma t = 5, gamma h = 0.05.
  const GridSpec g = make_grid(0.5, 0.005, 0, 0);
  const JointDensity init = point_initial(g, 0, 0.5);
  const RateSpec rates = RateSpec::constant_rate(6.0, 4.0).to_step(g.dt);
  const BinomialTrajectory traj = simulate(init, rates, 100, 100);
  const double v_emp = traj.moments.mean_velocity.back();
  const double v_inf = -100.0 * (6.0 - 4.0) / 10.0;
  const double rel = std::abs(v_emp - v_inf) / std::abs(v_inf);
  out.require(rel <= 0.02, "relative error " + fmt(rel));
  out.note("v = " + fmt(v_emp) + " vs " + fmt(v_inf) + " (rel " + fmt(rel) + ")");
  return out;
}

Outcome variance_growth() {
  Outcome out;
  // gamma = 200 at c = 100, gamma h = 0.02, fit over the final half.
  const GridSpec g = make_grid(0.01, 1e-4, 0, 0);
  const JointDensity init = point_initial(g, 0, 0.5);
  const RateSpec rates = RateSpec::constant_rate(100.0, 100.0).to_step(g.dt);
  const BinomialTrajectory traj = simulate(init, rates, 4500, 4500);
  const MomentSeries mo = traj.moments;
  const double slope =
      linear_slope(mo.times, mo.variance, mo.times.size() / 2, mo.times.size());
  const double target = 2.0 * 100.0 * 100.0 / 200.0;
  const double rel = std::abs(slope - target) / target;
  out.require(rel <= 0.05, "slope " + fmt(slope) + " vs " + fmt(target));
  out.note("slope " + fmt(slope) + " (rel " + fmt(rel) + ")");
  return out;
}

Outcome analytic_lattice_convergence() {
  Outcome out;
  const double c = 100.0, t_end = 0.45;
  const TelegraphParams p = telegraph_params(2.0, 2.0, c);
  const CauchyData data = CauchyData::truncated_gaussian(0.6, 6.9);

  // t = 0: the solver must reproduce its initial data exactly.
  for (double x : {-6.9, -3.0, 0.0, 0.3, 6.9, 10.0}) {
    const CauchyPoint pt = kg_cauchy_q(data, p, 0.0, x);
    const bool inside = std::abs(x) <= 6.9;
    out.require(pt.q_plus == (inside ? data.q0_plus(x) : 0.0), "t=0 not exact");
  }

  std::vector<double> l1s;
  for (int lev = 0; lev < 3; ++lev) {
    const double dx = 0.3 / std::pow(2.0, lev);
    const double dt = dx / c;
    const int n = static_cast<int>(std::round(t_end / dt));
    const int m_supp = static_cast<int>(std::floor(6.9 / dx * (1.0 + 1e-12)));
    const GridSpec g = make_grid(dx, dt, -m_supp, m_supp);
    const JointDensity init = gaussian_initial(g, 0.6, 6.9);
    const RateSpec rates = RateSpec::constant_step(2.0 * dt, 2.0 * dt);
    const BinomialTrajectory traj = simulate(init, rates, n, n);
    const JointDensity& fin = traj.final_density();
    double l1 = 0.0;
    for (int m = fin.grid.m_min; m <= fin.grid.m_max; ++m) {
      const CauchyPoint pt = kg_cauchy_q(data, p, t_end, fin.grid.x(m));
      l1 += std::abs(fin.plus(m) + fin.minus(m) - dx * pt.rho);
    }
    l1s.push_back(l1);
  }
  std::string detail = "L1 = " + fmt(l1s[0]) + " / " + fmt(l1s[1]) + " / " + fmt(l1s[2]);
  for (size_t i = 1; i < l1s.size(); ++i) {
    out.require(l1s[i] < l1s[i - 1], "L1 not decreasing");
    const double order = std::log2(l1s[i - 1] / l1s[i]);
    out.require(order >= 0.8, "order " + fmt(order) + " below 0.8");
    detail += std::string("; order ") + fmt(order);
  }
  out.note(detail);
  return out;
}

Outcome kg_residual_convergence() {
  Outcome out;
  const TelegraphParams p = telegraph_params(1.0, 1.0, 1.0);

  std::vector<double> norms;
  for (double step : {0.02, 0.01, 0.005}) {
    const int nt = static_cast<int>(std::round(1.0 / step));
    const int nx = static_cast<int>(std::round(0.5 / step));
    const SampledField f = sample_field(
        [&](double t, double x) {
          return bessel_i0(p.eta / p.c * std::sqrt(p.c * p.c * t * t - x * x));
        },
        1.0, -0.25, step, step, nt, nx);
    norms.push_back(kg_residual(f, p).norm_inf);
  }
  for (size_t i = 1; i < norms.size(); ++i) {
    const double order = std::log2(norms[i - 1] / norms[i]);
    out.require(order > 1.7 && order < 2.3, "order " + fmt(order) + " not ~2");
    out.note("order " + fmt(order));
  }

  // Boosted generic solution within 10x of the unboosted residual.
  const double k = 0.7, c = p.c;
  const double lambda = std::sqrt(c * c * k * k + p.eta * p.eta);
  auto generic = [&](double t, double x) { return std::exp(lambda * t + k * x); };
  const double step = 0.01;
  const int n = 60;
  const SampledField direct = sample_field(generic, 1.0, -0.3, step, step, n, n);
  const double r0 = kg_residual(direct, p).norm_inf;
  const SampledField src = sample_field(generic, 0.2, -1.8, step / 2, step / 2, 460, 560);
  const SampledField boosted =
      lorentz_boost_samples(src, 0.3 * c, c, 1.0, -0.3, step, step, n, n);
  const double r1 = kg_residual(boosted, p).norm_inf;
  out.require(r1 <= 10.0 * r0,
              "boosted/unboosted = " + fmt(r1 / r0) + " exceeds 10");
  out.note("boost ratio " + fmt(r1 / r0));
  return out;
}

Outcome newton_criterion() {
  Outcome out;
  const NewtonFixture& fx = newton_run();
  out.require(!fx.traj.edge_flagged,
              "edge occupancy " + fmt(fx.traj.edge_occupancy_max) + " flagged");
  const auto records = newton_check(fx.traj);
  double worst = 0.0;
  int negative = 0, positive = 0;
  for (size_t i = records.size() / 4; i < 3 * records.size() / 4; ++i) {
    const double rel =
        std::abs(std::abs(records[i].d2ex_dt2) - fx.g_force) / fx.g_force;
    worst = std::max(worst, rel);
    (records[i].d2ex_dt2 < 0.0 ? negative : positive) += 1;
  }
  out.require(worst <= 0.03, "|d2E[x]/dt2| off by " + fmt(worst));
  out.note(std::string("sign: ") + (negative >= positive ? "-E[V'] (opposite)" : "+E[V']") +
           ", worst rel " + fmt(worst));
  return out;
}

Outcome energy_criterion() {
  Outcome out;
  const NewtonFixture& fx = newton_run();
  const auto records = energy_check(fx.traj);
  const double target = fx.theta * fx.c * fx.c;
  double worst = 0.0;
  for (size_t i = 1; i < records.size(); ++i) {
    worst = std::max(worst, std::abs(records[i].drift - target) / target);
  }
  out.require(worst <= 0.05, "drift off by " + fmt(worst));
  out.note("worst rel " + fmt(worst) + " against theta c^2 = " + fmt(target));
  return out;
}

Outcome backward_velocity_identities() {
  Outcome out;
  // Two-velocity: inversion formula vs the stored-snapshot Bayes route.
  const GridSpec g = make_grid(0.5, 0.05, -4, 4);
  const JointDensity init = gaussian_initial(g, 1.0, 2.0);
  const RateSpec rates = RateSpec::constant_step(0.2, 0.05);
  const BinomialTrajectory traj = simulate(init, rates, 5, 1);
  const JointDensity& q5 = traj.snapshots[5];
  const JointDensity& q4 = traj.snapshots[4];
  const VelocityField vb = backward_velocity(q5, rates, 5 * g.dt, g.dt, 1e-300);
  double worst2 = 0.0;
  const GridSpec& wg = q5.grid;
  for (int m = wg.m_min; m <= wg.m_max; ++m) {
    const size_t i = static_cast<size_t>(wg.index(m));
    if (!vb.valid[i]) continue;
    const double rho = q5.plus(m) + q5.minus(m);
    const double up = (m - 1 >= wg.m_min) ? q4.plus(m - 1) : 0.0;
    const double dn = (m + 1 <= wg.m_max) ? q4.minus(m + 1) : 0.0;
    worst2 = std::max(worst2, std::abs(vb.v[i] - wg.c() * (up - dn) / rho));
  }
  out.require(worst2 <= 1e-12, "two-velocity routes differ by " + fmt(worst2));

  // Multi-velocity: acceleration under the potential ladder equals -V'(x).
  const GridSpec mg = make_grid(0.01, 0.01, -200, 200);
  MultiDensity q = zero_multi(mg, 3);
  double total = 0.0;
  for (int j = -2; j <= 2; ++j) {  // edge rows empty: truncated columns unused
    for (int m = mg.m_min; m <= mg.m_max; ++m) {
      const double x = mg.x(m);
      const double w = std::exp(-0.5 * j * j) * std::exp(-x * x / 0.5);
      q.at(j, m) = w;
      total += w;
    }
  }
  for (double& v : q.q) v /= total;
  NewtonRates nr{2.0, [](double x) { return 0.8 * std::sin(x); }, mg.c()};
  const double h = 1e-3;
  const VelocityField acc =
      acceleration_field_multi(q, build_newton_rate_matrix(nr, 3), 0.0, h);
  double worst_multi = 0.0;
  for (int m = mg.m_min; m <= mg.m_max; ++m) {
    const size_t i = static_cast<size_t>(mg.index(m));
    if (!acc.valid[i]) continue;
    worst_multi = std::max(worst_multi, std::abs(acc.v[i] + 0.8 * std::sin(mg.x(m))));
  }
  out.require(worst_multi <= 10.0 * h, "multi acceleration off by " + fmt(worst_multi));
  out.note("route gap " + fmt(worst2) + ", accel gap " + fmt(worst_multi));
  return out;
}

Outcome bessel_accuracy() {
  Outcome out;
  double worst_i0 = 0.0, worst_k0 = 0.0;
  for (double z : {1e-6, 0.5, 1.0, 7.5, 20.0, 100.0}) {
    const double i0_ref = reference::i0_series(z);
    worst_i0 = std::max(worst_i0, std::abs(bessel_i0(z) - i0_ref) / i0_ref);
    const double k0_ref = reference::k0_integral(z);
    worst_k0 = std::max(worst_k0, std::abs(bessel_k0(z) - k0_ref) / k0_ref);
  }
  out.require(worst_i0 <= 1e-12, "I0 relative error " + fmt(worst_i0));
  out.require(worst_k0 <= 1e-12, "K0 relative error " + fmt(worst_k0));
  out.note("I0 " + fmt(worst_i0) + ", K0 " + fmt(worst_k0));
  return out;
}

bool read_file(const fs::path& p, std::string& content) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  content = ss.str();
  return true;
}

Outcome determinism() {
  Outcome out;
  if (cli_path.empty()) {
    out.require(false, "no --cli path provided");
    return out;
  }
  const fs::path dir1 = workdir / "det1";
  const fs::path dir2 = workdir / "det2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  for (const fs::path& dir : {dir1, dir2}) {
    const std::string cmd = "\"" + cli_path + "\" simulate example1 --n-steps 60 " +
                            "--dump-interval 20 --out \"" + dir.string() +
                            "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    out.require(rc == 0, "cli exited with " + std::to_string(rc));
  }
  if (!out.pass) return out;

  int compared = 0;
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const std::string name = entry.path().filename().string();
    if (name == "summary.json") continue;  // carries wall time
    std::string a, b;
    out.require(read_file(entry.path(), a) && read_file(dir2 / name, b),
                "missing " + name + " in the second run");
    if (a != b) out.require(false, name + " differs between runs");
    ++compared;
  }
  out.require(compared >= 4, "too few artifacts compared");
  out.note(std::to_string(compared) + " files byte-identical");
  return out;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> fn;
  double budget_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") cli_path = argv[i + 1];
    if (key == "--workdir") workdir = argv[i + 1];
  }
  fs::create_directories(workdir);

  const std::vector<Criterion> criteria = {
      {1, "conservation & positivity over the presets", conservation_and_positivity, 5.0},
      {2, "stepper vs path enumeration (50+50 random instances)", oracle_equivalence, 30.0},
      {3, "small-rate 150-step run: support and ballistic lobes", example1_reproduction, 1.0},
      {4, "parity zeros for point-like initial data", parity_interference, 1.0},
      {5, "asymptotic mean velocity", asymptotic_mean_velocity, 5.0},
      {6, "variance growth in the diffusive regime", variance_growth, 5.0},
      {7, "analytic vs lattice L1 convergence", analytic_lattice_convergence, 60.0},
      {8, "KG residual order and boosted solution", kg_residual_convergence, 30.0},
      {9, "mean motion under a linear potential", newton_criterion, 30.0},
      {10, "energy drift against theta c^2", energy_criterion, 30.0},
      {11, "backward-velocity identities", backward_velocity_identities, 10.0},
      {12, "Bessel I0/K0 accuracy", bessel_accuracy, 1.0},
      {13, "byte-identical repeated CLI runs", determinism, 60.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      out.pass = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("over budget ") +
                    fmt(c.budget_seconds) + " s";
    }
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), secs, out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
