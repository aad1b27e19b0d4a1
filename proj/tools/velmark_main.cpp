// Experiment runner: lattice simulations, analytic solutions and the
// mean-motion / energy diagnostics, with CSV/JSON output.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "velmark/binomial.hpp"
#include "velmark/continuum.hpp"
#include "velmark/io.hpp"
#include "velmark/lattice.hpp"
#include "velmark/moments.hpp"
#include "velmark/multinomial.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace velmark;

namespace {

constexpr int kSchemaVersion = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit_error(const std::string& message, int code) {
  json err;
  err["error"] = message;
  err["exit_code"] = code;
  std::cerr << err.dump() << "\n";
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  return j;
}

// Precedence: CLI flag > config file > preset > built-in default.
template <typename T>
void resolve(T& value, const CLI::Option* opt, const json& cfg, const char* key,
             const std::optional<T>& preset_value) {
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.contains(key)) {
    value = cfg.at(key).get<T>();
    return;
  }
  if (preset_value) value = *preset_value;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

struct SimulateArgs {
  std::string preset = "custom";
  std::string config_path;
  std::string out_dir = "velmark_out";
  double dx = 0.3, dt = 0.003;
  double alpha = std::nan(""), beta = std::nan("");
  std::string rate_form = "step";
  double sigma = 0.6, support = 6.9;
  int n_steps = 150;
  int dump_interval = 10;
  bool dump_all = false;
  int threads = 1;
  bool snapshots = true;

  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* sigma_opt = nullptr;
  CLI::Option* support_opt = nullptr;
  CLI::Option* dx_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* form_opt = nullptr;
  CLI::Option* dump_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

void add_simulate_options(CLI::App* cmd, SimulateArgs& a) {
  cmd->add_option("preset", a.preset,
                  "preset: example1|example2|example3|example4|custom");
  cmd->add_option("--config", a.config_path, "JSON config file (flags override it)");
  cmd->add_option("--out", a.out_dir, "output directory");
  a.dx_opt = cmd->add_option("--dx", a.dx, "space step");
  a.dt_opt = cmd->add_option("--dt", a.dt, "time step");
  a.alpha_opt = cmd->add_option("--alpha", a.alpha, "up-to-down switching parameter");
  a.beta_opt = cmd->add_option("--beta", a.beta, "down-to-up switching parameter");
  a.form_opt = cmd->add_option("--rate-form", a.rate_form,
                               "'step' probabilities or 'rate' (scaled by dt)");
  a.sigma_opt = cmd->add_option("--sigma", a.sigma, "initial Gaussian width");
  a.support_opt =
      cmd->add_option("--support", a.support, "initial support half-width");
  a.n_opt = cmd->add_option("--n-steps", a.n_steps, "number of time steps");
  a.dump_opt = cmd->add_option("--dump-interval", a.dump_interval, "snapshot every k steps");
  cmd->add_flag("--dump-all", a.dump_all, "snapshot every step");
  a.threads_opt = cmd->add_option("--threads", a.threads, "worker threads for the stepper");
}

struct PresetValues {
  std::optional<double> alpha, beta, sigma, support, dx, dt;
  std::optional<int> n_steps;
  bool require_rates = false;
};

PresetValues preset_values(const std::string& name) {
  PresetValues p;
  if (name == "example1") {
    p.alpha = 0.006;
    p.beta = 0.006;
    p.sigma = 0.6;
  } else if (name == "example2") {
    p.alpha = 0.006;
    p.beta = 0.006;
    p.sigma = 0.1;
  } else if (name == "example3") {
    p.alpha = 0.015;
    p.beta = 0.015;
    p.sigma = 1.5;
  } else if (name == "example4") {
    p.sigma = 1.5;
    p.require_rates = true;
  } else if (name != "custom") {
    throw ConfigError("unknown preset: " + name);
  }
  p.dx = 0.3;
  p.dt = 0.003;
  p.support = 6.9;
  p.n_steps = 150;
  return p;
}

struct ResolvedSim {
  GridSpec grid;
  JointDensity initial;
  RateSpec rates;        // step form
  double alpha_step, beta_step;
  SimulateArgs args;
};

ResolvedSim resolve_simulation(SimulateArgs a) {
  const json cfg = load_config(a.config_path);
  if (cfg.contains("preset") && a.preset == "custom") {
    a.preset = cfg.at("preset").get<std::string>();
  }
  const PresetValues pv = preset_values(a.preset);
  resolve(a.dx, a.dx_opt, cfg, "dx", pv.dx);
  resolve(a.dt, a.dt_opt, cfg, "dt", pv.dt);
  resolve(a.alpha, a.alpha_opt, cfg, "alpha", pv.alpha);
  resolve(a.beta, a.beta_opt, cfg, "beta", pv.beta);
  resolve(a.sigma, a.sigma_opt, cfg, "sigma", pv.sigma);
  resolve(a.support, a.support_opt, cfg, "support", pv.support);
  resolve(a.n_steps, a.n_opt, cfg, "n_steps", pv.n_steps);
  resolve(a.rate_form, a.form_opt, cfg, "rate_form", std::optional<std::string>{});
  resolve(a.dump_interval, a.dump_opt, cfg, "dump_interval", std::optional<int>{});
  resolve(a.threads, a.threads_opt, cfg, "threads", std::optional<int>{});

  if (std::isnan(a.alpha) || std::isnan(a.beta)) {
    throw ConfigError(pv.require_rates
                          ? "preset '" + a.preset +
                                "' has no published switching parameters; pass "
                                "--alpha and --beta explicitly"
                          : "alpha and beta are required");
  }
  if (a.n_steps < 0) throw ConfigError("n_steps must be nonnegative");
  if (a.threads < 1) throw ConfigError("threads must be at least 1");

  ResolvedSim r;
  r.args = a;
  try {
    const int m_supp = static_cast<int>(std::floor(a.support / a.dx * (1.0 + 1e-12)));
    r.grid = make_grid(a.dx, a.dt, -m_supp, m_supp);
    r.initial = gaussian_initial(r.grid, a.sigma, a.support);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const bool rate_form = a.rate_form == "rate";
  if (!rate_form && a.rate_form != "step") {
    throw ConfigError("rate-form must be 'step' or 'rate'");
  }
  r.alpha_step = rate_form ? a.alpha * a.dt : a.alpha;
  r.beta_step = rate_form ? a.beta * a.dt : a.beta;
  if (r.alpha_step < 0.0 || r.alpha_step > 1.0 || r.beta_step < 0.0 ||
      r.beta_step > 1.0) {
    throw ConfigError("switching probabilities must lie in [0,1] per step");
  }
  r.rates = RateSpec::constant_step(r.alpha_step, r.beta_step);
  return r;
}

std::string snapshot_name(int step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%06d.csv", step);
  return buf;
}

json run_manifest(const ResolvedSim& r) {
  json m;
  m["schema_version"] = kSchemaVersion;
  m["dx"] = r.grid.dx;
  m["dt"] = r.grid.dt;
  m["c"] = r.grid.c();
  m["alpha"] = r.alpha_step;
  m["beta"] = r.beta_step;
  m["n_steps"] = r.args.n_steps;
  m["sigma"] = r.args.sigma;
  m["preset"] = r.args.preset;
  return m;
}

int run_simulate(const SimulateArgs& args) {
  Timer timer;
  const ResolvedSim r = resolve_simulation(args);
  const fs::path out(r.args.out_dir);
  fs::create_directories(out);

  const int keep = r.args.dump_all ? 1 : std::max(1, r.args.dump_interval);
  const BinomialTrajectory traj =
      simulate(r.initial, r.rates, r.args.n_steps, keep, r.args.threads);

  write_text(out / "manifest.json", run_manifest(r).dump(2) + "\n");

  if (r.args.snapshots) {
    for (size_t s = 0; s < traj.snapshots.size(); ++s) {
      std::ofstream os(out / snapshot_name(traj.snapshot_steps[s]), std::ios::binary);
      write_snapshot_csv(os, traj.snapshot_steps[s] * r.grid.dt, traj.snapshots[s]);
    }
  }

  // Moments with the constant-rate predictions alongside.
  const MomentSeries mo = empirical_moments(traj);
  const double gamma_rate = (r.alpha_step + r.beta_step) / r.grid.dt;
  std::vector<double> pred_v(mo.times.size(), 0.0), pred_x2(mo.times.size(), 0.0);
  if (gamma_rate > 0.0) {
    const TelegraphParams tp = telegraph_params(r.alpha_step / r.grid.dt,
                                                r.beta_step / r.grid.dt, r.grid.c());
    const MomentPrediction mp = moment_prediction(r.initial, tp);
    const double ex0 = mo.mean.front();
    for (size_t i = 0; i < mo.times.size(); ++i) {
      pred_v[i] = predicted_mean_velocity(mp, mo.times[i]);
      pred_x2[i] = predicted_second_moment(mp, ex0, mo.times[i]);
    }
  }
  {
    std::ofstream os(out / "moments.csv", std::ios::binary);
    write_moments_csv(os, mo, pred_v, pred_x2);
  }

  // Ballistic window sums: nodes reachable only from near-pure transport.
  const JointDensity& fin = traj.final_density();
  const double reach = r.args.n_steps * r.grid.dx;
  double window_plus = 0.0, window_minus = 0.0;
  for (int m = fin.grid.m_min; m <= fin.grid.m_max; ++m) {
    const double x = fin.grid.x(m);
    const double rho = fin.plus(m) + fin.minus(m);
    if (x >= reach - r.args.support - 1e-9) window_plus += rho;
    if (x <= -(reach - r.args.support - 1e-9)) window_minus += rho;
  }

  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["preset"] = r.args.preset;
  summary["final_time"] = mo.times.back();
  summary["final_mean"] = mo.mean.back();
  summary["final_variance"] = mo.variance.back();
  summary["final_mean_velocity"] = mo.mean_velocity.back();
  summary["conservation_error"] = std::abs(total_mass(fin) - 1.0);
  summary["min_entry"] = min_entry(fin);
  summary["lobe_mass_ballistic_plus"] = traj.ballistic_lobe_plus();
  summary["lobe_mass_ballistic_minus"] = traj.ballistic_lobe_minus();
  summary["lobe_mass_window_plus"] = window_plus;
  summary["lobe_mass_window_minus"] = window_minus;
  summary["gamma"] = gamma_rate;
  summary["gamma_t"] = gamma_rate * mo.times.back();
  summary["wall_time_seconds"] = timer.seconds();
  write_text(out / "summary.json", summary.dump(2) + "\n");
  return 0;
}

struct AnalyticArgs {
  std::string out_dir = "velmark_out";
  double alpha = 2.0, beta = 2.0, c = 100.0;
  double sigma = 0.6, support = 6.9;
  double t = 0.45;
  double x_min = -52.0, x_max = 52.0, x_step = 0.3;
  std::string formula = "full";
  bool residual = false;
};

void add_analytic_options(CLI::App* cmd, AnalyticArgs& a) {
  cmd->add_option("--out", a.out_dir, "output directory");
  cmd->add_option("--alpha", a.alpha, "continuum rate alpha");
  cmd->add_option("--beta", a.beta, "continuum rate beta");
  cmd->add_option("--c", a.c, "propagation speed");
  cmd->add_option("--sigma", a.sigma, "initial Gaussian width");
  cmd->add_option("--support", a.support, "initial support half-width");
  cmd->add_option("--t", a.t, "evaluation time");
  cmd->add_option("--x-min", a.x_min, "dump range start");
  cmd->add_option("--x-max", a.x_max, "dump range end");
  cmd->add_option("--x-step", a.x_step, "dump step");
  cmd->add_option("--formula", a.formula, "'full' or 'half-sum' (diagnostic)");
  cmd->add_flag("--residual", a.residual,
                "also report the finite-difference wave-equation residual");
}

CauchyFormula parse_formula(const std::string& f) {
  if (f == "full") return CauchyFormula::Full;
  if (f == "half-sum") return CauchyFormula::HalfSumI0;
  throw ConfigError("formula must be 'full' or 'half-sum'");
}

int run_analytic(const AnalyticArgs& a) {
  Timer timer;
  if (!(a.x_step > 0.0) || !(a.x_max > a.x_min)) {
    throw ConfigError("invalid dump range");
  }
  const fs::path out(a.out_dir);
  fs::create_directories(out);
  const TelegraphParams p = telegraph_params(a.alpha, a.beta, a.c);
  const CauchyData data = CauchyData::truncated_gaussian(a.sigma, a.support);
  const CauchyFormula formula = parse_formula(a.formula);

  std::vector<double> xs;
  for (double x = a.x_min; x <= a.x_max + 1e-12; x += a.x_step) xs.push_back(x);
  const std::vector<CauchyPoint> pts = kg_cauchy_grid(data, p, a.t, xs, formula);
  {
    std::ofstream os(out / "analytic.csv", std::ios::binary);
    write_analytic_csv(os, a.t, xs, pts);
  }
  double grid_mass = 0.0, min_rho = 0.0;
  for (const CauchyPoint& pt : pts) {
    grid_mass += pt.rho * a.x_step;
    min_rho = std::min(min_rho, pt.rho);
  }

  if (a.residual) {
    // Residual of the exponential-transformed field, which satisfies the
    // second-order equation with the eta^2 mass term.
    const double dt_fd = a.x_step / a.c;
    const double t0 = std::max(0.0, a.t - 2.0 * dt_fd);
    const SampledField field = sample_field(
        [&](double tt, double xx) {
          const CauchyPoint pt = kg_cauchy_q(data, p, tt, xx, formula);
          return std::exp(p.epsilon / (2.0 * a.c) * xx + p.gamma / 2.0 * tt) * pt.rho;
        },
        t0, a.x_min, dt_fd, a.x_step, 5, static_cast<int>(xs.size()));
    const ResidualReport rep = kg_residual(field, p);
    json rj;
    rj["norm_inf"] = rep.norm_inf;
    rj["norm_l2"] = rep.norm_l2;
    rj["dt"] = rep.dt;
    rj["dx"] = rep.dx;
    write_text(out / "residual.json", rj.dump(2) + "\n");
  }

  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["gamma"] = p.gamma;
  summary["epsilon"] = p.epsilon;
  summary["eta"] = p.eta;
  summary["t"] = a.t;
  summary["grid_mass"] = grid_mass;
  summary["min_rho"] = min_rho;
  summary["formula"] = a.formula;
  summary["wall_time_seconds"] = timer.seconds();
  write_text(out / "analytic_summary.json", summary.dump(2) + "\n");
  return 0;
}

struct CompareArgs {
  std::string out_dir = "velmark_out";
  double alpha = 2.0, beta = 2.0, c = 100.0;
  double sigma = 0.6, support = 6.9;
  double t = 0.45;
  double dx = 0.3;
  int levels = 3;
  std::string formula = "full";
};

int run_compare(const CompareArgs& a) {
  Timer timer;
  if (a.levels < 1) throw ConfigError("levels must be at least 1");
  const fs::path out(a.out_dir);
  fs::create_directories(out);
  const TelegraphParams p = telegraph_params(a.alpha, a.beta, a.c);
  const CauchyData data = CauchyData::truncated_gaussian(a.sigma, a.support);
  const CauchyFormula formula = parse_formula(a.formula);

  json levels = json::array();
  std::vector<double> l1s;
  for (int lev = 0; lev < a.levels; ++lev) {
    const double dx = a.dx / std::pow(2.0, lev);
    const double dt = dx / a.c;
    const int n = static_cast<int>(std::round(a.t / dt));
    const int m_supp = static_cast<int>(std::floor(a.support / dx * (1.0 + 1e-12)));
    const GridSpec g = make_grid(dx, dt, -m_supp, m_supp);
    const JointDensity init = gaussian_initial(g, a.sigma, a.support);
    const RateSpec rates =
        RateSpec::constant_step(std::min(1.0, a.alpha * dt), std::min(1.0, a.beta * dt));
    const BinomialTrajectory traj = simulate(init, rates, n, n);
    const JointDensity& fin = traj.final_density();
    double l1 = 0.0;
    for (int m = fin.grid.m_min; m <= fin.grid.m_max; ++m) {
      const CauchyPoint pt = kg_cauchy_q(data, p, a.t, fin.grid.x(m), formula);
      l1 += std::abs(fin.plus(m) + fin.minus(m) - dx * pt.rho);
    }
    l1s.push_back(l1);
    json rec;
    rec["dx"] = dx;
    rec["dt"] = dt;
    rec["n_steps"] = n;
    rec["l1_distance"] = l1;
    levels.push_back(rec);
  }
  json orders = json::array();
  for (size_t i = 1; i < l1s.size(); ++i) {
    orders.push_back(std::log2(l1s[i - 1] / l1s[i]));
  }
  json report;
  report["schema_version"] = kSchemaVersion;
  report["formula"] = a.formula;
  report["levels"] = levels;
  report["orders"] = orders;
  report["wall_time_seconds"] = timer.seconds();
  write_text(out / "compare.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct DynamicsArgs {
  std::string out_dir = "velmark_out";
  double theta = 2.0;
  double coef = 0.5;
  std::string potential = "linear";
  int j_max = 9;
  double c = 1.0, dt = 1e-3;
  int n_steps = 300;
  int dump_interval = 30;
  int threads = 1;
};

void add_dynamics_options(CLI::App* cmd, DynamicsArgs& a) {
  cmd->add_option("--out", a.out_dir, "output directory");
  cmd->add_option("--theta", a.theta, "base switching rate");
  cmd->add_option("--coef", a.coef, "potential coefficient (slope or spring)");
  cmd->add_option("--potential", a.potential, "'linear' (V = g x) or 'harmonic'");
  cmd->add_option("--j-max", a.j_max, "velocity truncation index");
  cmd->add_option("--c", a.c, "one-step speed");
  cmd->add_option("--dt", a.dt, "time step");
  cmd->add_option("--n-steps", a.n_steps, "number of steps");
  cmd->add_option("--dump-interval", a.dump_interval, "multi-density dump spacing");
  cmd->add_option("--threads", a.threads, "worker threads");
}

int run_dynamics(const DynamicsArgs& a, bool energy_focus) {
  Timer timer;
  const fs::path out(a.out_dir);
  fs::create_directories(out);

  std::function<double(double)> vprime, vpot;
  if (a.potential == "linear") {
    const double g = a.coef;
    vprime = [g](double) { return g; };
    vpot = [g](double x) { return g * x; };
  } else if (a.potential == "harmonic") {
    const double k = a.coef;
    vprime = [k](double x) { return k * x; };
    vpot = [k](double x) { return 0.5 * k * x * x; };
  } else {
    throw ConfigError("potential must be 'linear' or 'harmonic'");
  }
  if (a.j_max < 1 || a.n_steps < 2) throw ConfigError("need j_max >= 1, n_steps >= 2");

  const GridSpec seed = make_grid(a.c * a.dt, a.dt, 0, 0);
  MultiDensity init = zero_multi(seed, a.j_max);
  init.at(0, 0) = 1.0;

  NewtonRates nr{a.theta, vprime, a.c};
  const RateMatrix step = rate_to_step(build_newton_rate_matrix(nr, a.j_max), a.dt);
  MultiSimOptions opts;
  opts.keep_every = std::max(1, a.dump_interval);
  opts.threads = a.threads;
  opts.potential = vpot;
  opts.potential_gradient = vprime;
  const MultiTrajectory traj = multi_simulate(init, step, a.n_steps, opts);

  for (size_t s = 0; s < traj.snapshots.size(); ++s) {
    std::ofstream os(out / ("multi_" + snapshot_name(traj.snapshot_steps[s])),
                     std::ios::binary);
    write_multi_csv(os, traj.snapshot_steps[s] * a.dt, traj.snapshots[s]);
  }

  const auto newton = newton_check(traj);
  const auto energy = energy_check(traj);
  json records = json::array();
  for (size_t i = 0; i < energy.size(); ++i) {
    json rec;
    rec["t"] = energy[i].t;
    rec["energy"] = energy[i].energy;
    rec["drift"] = energy[i].drift;
    if (i >= 1 && i - 1 < newton.size()) {
      rec["d2Ex_dt2"] = newton[i - 1].d2ex_dt2;
      rec["E_Vprime"] = newton[i - 1].e_vprime;
    }
    records.push_back(rec);
  }
  write_text(out / "newton_energy.json", records.dump(2) + "\n");

  // Middle-half statistics.
  double worst_rel = 0.0;
  int sign_acc = 0;
  for (size_t i = newton.size() / 4; i < 3 * newton.size() / 4; ++i) {
    const double rel = (std::abs(newton[i].d2ex_dt2) - std::abs(newton[i].e_vprime)) /
                       std::max(std::abs(newton[i].e_vprime), 1e-300);
    worst_rel = std::max(worst_rel, std::abs(rel));
    sign_acc += (newton[i].d2ex_dt2 * newton[i].e_vprime < 0.0) ? -1 : +1;
  }
  double drift_mean = 0.0;
  for (size_t i = 1; i < energy.size(); ++i) drift_mean += energy[i].drift;
  drift_mean /= std::max<size_t>(1, energy.size() - 1);

  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["mode"] = energy_focus ? "energy" : "newton";
  summary["theta"] = a.theta;
  summary["theta_c2"] = a.theta * a.c * a.c;
  summary["potential"] = a.potential;
  summary["coef"] = a.coef;
  summary["newton_worst_rel_err_mid"] = worst_rel;
  summary["newton_sign_vs_E_Vprime"] = sign_acc < 0 ? "opposite" : "same";
  summary["energy_drift_mean"] = drift_mean;
  summary["energy_drift_rel_err"] = drift_mean / (a.theta * a.c * a.c) - 1.0;
  summary["edge_occupancy_max"] = traj.edge_occupancy_max;
  summary["edge_flagged"] = traj.edge_flagged;
  summary["wall_time_seconds"] = timer.seconds();
  write_text(out / "summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"velocity-Markov lattice process toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "run the two-velocity lattice process");
  add_simulate_options(sim, sim_args);

  SimulateArgs mom_args;
  mom_args.snapshots = false;
  CLI::App* mom = app.add_subcommand("moments", "moments of a lattice run (no snapshots)");
  add_simulate_options(mom, mom_args);

  AnalyticArgs ana_args;
  CLI::App* ana = app.add_subcommand("analytic", "evaluate the continuum Cauchy solution");
  add_analytic_options(ana, ana_args);

  CompareArgs cmp_args;
  CLI::App* cmp = app.add_subcommand("compare", "lattice vs analytic under refinement");
  cmp->add_option("--out", cmp_args.out_dir, "output directory");
  cmp->add_option("--alpha", cmp_args.alpha, "continuum rate alpha");
  cmp->add_option("--beta", cmp_args.beta, "continuum rate beta");
  cmp->add_option("--c", cmp_args.c, "propagation speed");
  cmp->add_option("--sigma", cmp_args.sigma, "initial Gaussian width");
  cmp->add_option("--support", cmp_args.support, "initial support half-width");
  cmp->add_option("--t", cmp_args.t, "comparison time");
  cmp->add_option("--dx", cmp_args.dx, "coarsest space step");
  cmp->add_option("--levels", cmp_args.levels, "refinement levels");
  cmp->add_option("--formula", cmp_args.formula, "'full' or 'half-sum'");

  DynamicsArgs newton_args;
  CLI::App* newt = app.add_subcommand("newton", "potential-driven multi-velocity run");
  add_dynamics_options(newt, newton_args);

  DynamicsArgs energy_args;
  CLI::App* ener = app.add_subcommand("energy", "energy budget of a multi-velocity run");
  add_dynamics_options(ener, energy_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(e.what(), 2);
    return 2;
  }

  try {
    if (sim->parsed()) return run_simulate(sim_args);
    if (mom->parsed()) return run_simulate(mom_args);
    if (ana->parsed()) return run_analytic(ana_args);
    if (cmp->parsed()) return run_compare(cmp_args);
    if (newt->parsed()) return run_dynamics(newton_args, false);
    if (ener->parsed()) return run_dynamics(energy_args, true);
  } catch (const ConfigError& e) {
    emit_error(e.what(), 2);
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error(e.what(), 2);
    return 2;
  } catch (const ConservationError& e) {
    emit_error(e.what(), 3);
    return 3;
  } catch (const BoundaryError& e) {
    emit_error(e.what(), 3);
    return 3;
  } catch (const std::exception& e) {
    emit_error(e.what(), 1);
    return 1;
  }
  return 0;
}
