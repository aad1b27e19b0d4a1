#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "velmark/bessel.hpp"
#include "velmark/binomial.hpp"
#include "velmark/continuum.hpp"
#include "velmark/io.hpp"
#include "velmark/lattice.hpp"
#include "velmark/moments.hpp"
#include "velmark/multinomial.hpp"

namespace py = pybind11;
using namespace velmark;

PYBIND11_MODULE(_velmark, m) {
  m.doc() = "velocity-Markov lattice processes: steppers, continuum limits, moments";
  m.attr("__version__") = "0.1.0";

  py::register_exception<BoundaryError>(m, "BoundaryError");
  py::register_exception<ConservationError>(m, "ConservationError");

  py::class_<GridSpec>(m, "GridSpec")
      .def_readonly("dx", &GridSpec::dx)
      .def_readonly("dt", &GridSpec::dt)
      .def_readonly("m_min", &GridSpec::m_min)
      .def_readonly("m_max", &GridSpec::m_max)
      .def_property_readonly("c", &GridSpec::c)
      .def("x", &GridSpec::x)
      .def("node_count", &GridSpec::node_count)
      .def("expanded", &GridSpec::expanded);
  m.def("make_grid", &make_grid, py::arg("dx"), py::arg("dt"), py::arg("m_min"),
        py::arg("m_max"));

  py::class_<JointDensity>(m, "JointDensity")
      .def_readonly("grid", &JointDensity::grid)
      .def_readwrite("q_plus", &JointDensity::q_plus)
      .def_readwrite("q_minus", &JointDensity::q_minus);
  m.def("zero_density", &zero_density);
  m.def("gaussian_initial", &gaussian_initial, py::arg("grid"), py::arg("sigma"),
        py::arg("support_half_width"));
  m.def("point_initial", &point_initial, py::arg("grid"), py::arg("m"),
        py::arg("up_fraction") = 1.0);
  m.def("total_mass", py::overload_cast<const JointDensity&>(&total_mass));
  m.def("min_entry", py::overload_cast<const JointDensity&>(&min_entry));

  py::class_<StateDensity>(m, "StateDensity")
      .def_readonly("grid", &StateDensity::grid)
      .def_readonly("rho", &StateDensity::rho)
      .def_readonly("phi", &StateDensity::phi);
  m.def("to_state_density", &to_state_density);

  py::enum_<RateForm>(m, "RateForm")
      .value("StepProbability", RateForm::StepProbability)
      .value("ContinuumRate", RateForm::ContinuumRate);

  py::class_<RateSpec>(m, "RateSpec")
      .def_static("constant_step", &RateSpec::constant_step, py::arg("alpha"),
                  py::arg("beta"))
      .def_static("constant_rate", &RateSpec::constant_rate, py::arg("alpha"),
                  py::arg("beta"))
      .def("to_step", &RateSpec::to_step, py::arg("h"))
      .def_readonly("form", &RateSpec::form);

  py::class_<MomentSeries>(m, "MomentSeries")
      .def_readonly("times", &MomentSeries::times)
      .def_readonly("mean", &MomentSeries::mean)
      .def_readonly("variance", &MomentSeries::variance)
      .def_readonly("mean_velocity", &MomentSeries::mean_velocity);

  py::class_<VelocityField>(m, "VelocityField")
      .def_readonly("grid", &VelocityField::grid)
      .def_readonly("v", &VelocityField::v)
      .def_readonly("valid", &VelocityField::valid);

  py::class_<BinomialTrajectory>(m, "BinomialTrajectory")
      .def_readonly("grid", &BinomialTrajectory::grid)
      .def_readonly("snapshot_steps", &BinomialTrajectory::snapshot_steps)
      .def_readonly("snapshots", &BinomialTrajectory::snapshots)
      .def_readonly("moments", &BinomialTrajectory::moments)
      .def_property_readonly("initial", &BinomialTrajectory::initial)
      .def_property_readonly("final_density", &BinomialTrajectory::final_density)
      .def("ballistic_lobe_plus", &BinomialTrajectory::ballistic_lobe_plus)
      .def("ballistic_lobe_minus", &BinomialTrajectory::ballistic_lobe_minus);

  m.def("step_binomial", &step_binomial, py::arg("q"), py::arg("rates"), py::arg("t"),
        py::arg("threads") = 1);
  m.def("simulate", &simulate, py::arg("initial"), py::arg("rates"), py::arg("n_steps"),
        py::arg("keep_every") = 1, py::arg("threads") = 1,
        py::arg("conservation_tol") = 1e-12);
  m.def("forward_velocity", &forward_velocity, py::arg("q"),
        py::arg("rho_floor") = 1e-14);
  m.def("backward_velocity", &backward_velocity, py::arg("q_t"), py::arg("rates"),
        py::arg("t"), py::arg("h"), py::arg("rho_floor") = 1e-14);
  m.def("acceleration_field", &acceleration_field, py::arg("q_t"), py::arg("rates"),
        py::arg("t"), py::arg("h"), py::arg("rho_floor") = 1e-14);
  m.def("unstep_binomial", &unstep_binomial, py::arg("q_t"), py::arg("rates"),
        py::arg("t"), py::arg("h"));

  py::class_<MultiDensity>(m, "MultiDensity")
      .def_readonly("grid", &MultiDensity::grid)
      .def_readonly("j_max", &MultiDensity::j_max)
      .def("get", py::overload_cast<int, int>(&MultiDensity::at, py::const_),
           py::arg("j"), py::arg("m"))
      .def("set",
           [](MultiDensity& q, int j, int mm, double v) { q.at(j, mm) = v; },
           py::arg("j"), py::arg("m"), py::arg("value"))
      .def("velocity", &MultiDensity::velocity);
  m.def("zero_multi", &zero_multi, py::arg("grid"), py::arg("j_max"));
  m.def("total_mass", py::overload_cast<const MultiDensity&>(&total_mass));
  m.def("min_entry", py::overload_cast<const MultiDensity&>(&min_entry));
  m.def("state_density", &state_density);

  py::class_<RateMatrix>(m, "RateMatrix")
      .def_static("constant", &RateMatrix::constant, py::arg("j_max"), py::arg("form"),
                  py::arg("entries"))
      .def_readonly("j_max", &RateMatrix::j_max)
      .def_readonly("form", &RateMatrix::form)
      .def("eval", &RateMatrix::eval, py::arg("t"), py::arg("x"));
  m.def("step_multinomial", &step_multinomial, py::arg("q"), py::arg("omega"),
        py::arg("t"), py::arg("threads") = 1);
  m.def("rate_to_step", &rate_to_step, py::arg("omega_rate"), py::arg("h"));

  py::class_<NewtonRates>(m, "NewtonRates")
      .def(py::init([](double theta, std::function<double(double)> grad, double c) {
             return NewtonRates{theta, std::move(grad), c};
           }),
           py::arg("theta"), py::arg("potential_gradient"), py::arg("c"))
      .def_readonly("theta", &NewtonRates::theta)
      .def("alpha", &NewtonRates::alpha)
      .def("beta", &NewtonRates::beta);
  m.def("newton_matrix_at", &newton_matrix_at, py::arg("rates"), py::arg("j_max"),
        py::arg("x"));
  m.def("build_newton_rate_matrix", &build_newton_rate_matrix, py::arg("rates"),
        py::arg("j_max"));
  m.def("mean_velocity_multi", &mean_velocity_multi, py::arg("q"),
        py::arg("rho_floor") = 1e-14);
  m.def("backward_velocity_multi", &backward_velocity_multi, py::arg("q_t"),
        py::arg("omega"), py::arg("t"), py::arg("h"), py::arg("rho_floor") = 1e-14);
  m.def("acceleration_field_multi", &acceleration_field_multi, py::arg("q_t"),
        py::arg("omega"), py::arg("t"), py::arg("h"), py::arg("rho_floor") = 1e-14);
  m.def("characteristic_shift", &characteristic_shift, py::arg("q"),
        py::arg("t_steps"));
  m.def("step_multinomial_characteristic", &step_multinomial_characteristic,
        py::arg("q"), py::arg("omega"), py::arg("t"), py::arg("s_before"));

  py::class_<MultiTrajectory>(m, "MultiTrajectory")
      .def_readonly("grid", &MultiTrajectory::grid)
      .def_readonly("snapshot_steps", &MultiTrajectory::snapshot_steps)
      .def_readonly("snapshots", &MultiTrajectory::snapshots)
      .def_readonly("times", &MultiTrajectory::times)
      .def_readonly("mean_x", &MultiTrajectory::mean_x)
      .def_readonly("mean_v", &MultiTrajectory::mean_v)
      .def_readonly("mean_v2", &MultiTrajectory::mean_v2)
      .def_readonly("mean_potential", &MultiTrajectory::mean_potential)
      .def_readonly("mean_potential_gradient", &MultiTrajectory::mean_potential_gradient)
      .def_readonly("edge_occupancy_max", &MultiTrajectory::edge_occupancy_max)
      .def_readonly("edge_flagged", &MultiTrajectory::edge_flagged);

  m.def(
      "multi_simulate",
      [](const MultiDensity& initial, const RateMatrix& omega, int n_steps,
         int keep_every, int threads, std::function<double(double)> potential,
         std::function<double(double)> potential_gradient) {
        MultiSimOptions opts;
        opts.keep_every = keep_every;
        opts.threads = threads;
        opts.potential = std::move(potential);
        opts.potential_gradient = std::move(potential_gradient);
        return multi_simulate(initial, omega, n_steps, opts);
      },
      py::arg("initial"), py::arg("omega_step"), py::arg("n_steps"),
      py::arg("keep_every") = 1, py::arg("threads") = 1,
      py::arg("potential") = nullptr, py::arg("potential_gradient") = nullptr);

  py::class_<NewtonRecord>(m, "NewtonRecord")
      .def_readonly("t", &NewtonRecord::t)
      .def_readonly("d2ex_dt2", &NewtonRecord::d2ex_dt2)
      .def_readonly("e_vprime", &NewtonRecord::e_vprime)
      .def_readonly("signed_rel_err", &NewtonRecord::signed_rel_err);
  py::class_<EnergyRecord>(m, "EnergyRecord")
      .def_readonly("t", &EnergyRecord::t)
      .def_readonly("energy", &EnergyRecord::energy)
      .def_readonly("drift", &EnergyRecord::drift);
  m.def("newton_check", &newton_check);
  m.def("energy_check", &energy_check);

  py::class_<TelegraphParams>(m, "TelegraphParams")
      .def_readonly("alpha", &TelegraphParams::alpha)
      .def_readonly("beta", &TelegraphParams::beta)
      .def_readonly("c", &TelegraphParams::c)
      .def_readonly("gamma", &TelegraphParams::gamma)
      .def_readonly("epsilon", &TelegraphParams::epsilon)
      .def_readonly("eta", &TelegraphParams::eta);
  m.def("telegraph_params", &telegraph_params, py::arg("alpha"), py::arg("beta"),
        py::arg("c"));

  m.def("bessel_i0", &bessel_i0);
  m.def("bessel_k0", &bessel_k0);
  m.def("bessel_i1", &bessel_i1);

  py::class_<CauchyData>(m, "CauchyData")
      .def_static("truncated_gaussian", &CauchyData::truncated_gaussian,
                  py::arg("sigma"), py::arg("half_width"))
      .def_static("from_samples", &CauchyData::from_samples, py::arg("x0"),
                  py::arg("dx"), py::arg("q_plus"), py::arg("q_minus"),
                  py::arg("zero_outside") = true)
      .def_readonly("support_min", &CauchyData::support_min)
      .def_readonly("support_max", &CauchyData::support_max);

  py::enum_<CauchyFormula>(m, "CauchyFormula")
      .value("Full", CauchyFormula::Full)
      .value("HalfSumI0", CauchyFormula::HalfSumI0);

  py::class_<CauchyPoint>(m, "CauchyPoint")
      .def_readonly("q_plus", &CauchyPoint::q_plus)
      .def_readonly("q_minus", &CauchyPoint::q_minus)
      .def_readonly("rho", &CauchyPoint::rho);
  m.def("kg_cauchy_q", &kg_cauchy_q, py::arg("data"), py::arg("params"), py::arg("t"),
        py::arg("x"), py::arg("formula") = CauchyFormula::Full);
  m.def("kg_cauchy_grid", &kg_cauchy_grid, py::arg("data"), py::arg("params"),
        py::arg("t"), py::arg("xs"), py::arg("formula") = CauchyFormula::Full);

  py::class_<SampledField>(m, "SampledField")
      .def_readonly("t0", &SampledField::t0)
      .def_readonly("x0", &SampledField::x0)
      .def_readonly("dt", &SampledField::dt)
      .def_readonly("dx", &SampledField::dx)
      .def_readonly("nt", &SampledField::nt)
      .def_readonly("nx", &SampledField::nx)
      .def_readonly("values", &SampledField::values)
      .def("at", py::overload_cast<int, int>(&SampledField::at, py::const_));
  m.def("sample_field", &sample_field, py::arg("f"), py::arg("t0"), py::arg("x0"),
        py::arg("dt"), py::arg("dx"), py::arg("nt"), py::arg("nx"));

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("norm_inf", &ResidualReport::norm_inf)
      .def_readonly("norm_l2", &ResidualReport::norm_l2)
      .def_readonly("dt", &ResidualReport::dt)
      .def_readonly("dx", &ResidualReport::dx);
  m.def("kg_residual", &kg_residual, py::arg("field"), py::arg("params"));
  m.def("lorentz_boost_samples", &lorentz_boost_samples, py::arg("src"), py::arg("v"),
        py::arg("c"), py::arg("t0"), py::arg("x0"), py::arg("dt"), py::arg("dx"),
        py::arg("nt"), py::arg("nx"));

  py::class_<DiffusionCoefficients>(m, "DiffusionCoefficients")
      .def_readonly("drift", &DiffusionCoefficients::drift)
      .def_readonly("diffusion", &DiffusionCoefficients::diffusion);
  m.def("diffusion_coefficients", &diffusion_coefficients);
  m.def("diffusion_limit_density", &diffusion_limit_density, py::arg("params"),
        py::arg("mean0"), py::arg("var0"), py::arg("t"), py::arg("x"));

  py::class_<Moments>(m, "Moments")
      .def_readonly("mean", &Moments::mean)
      .def_readonly("variance", &Moments::variance)
      .def_readonly("mean_velocity", &Moments::mean_velocity);
  m.def("density_moments", &density_moments);
  m.def("empirical_moments", &empirical_moments);

  py::class_<MomentPrediction>(m, "MomentPrediction")
      .def_readonly("v0", &MomentPrediction::v0)
      .def_readonly("gamma", &MomentPrediction::gamma)
      .def_readonly("epsilon", &MomentPrediction::epsilon)
      .def_readonly("c", &MomentPrediction::c);
  m.def("moment_prediction",
        py::overload_cast<const TelegraphParams&, double>(&moment_prediction),
        py::arg("params"), py::arg("v0"));
  m.def("moment_prediction",
        py::overload_cast<const JointDensity&, const TelegraphParams&>(&moment_prediction),
        py::arg("initial"), py::arg("params"));
  m.def("predicted_mean_velocity", &predicted_mean_velocity, py::arg("prediction"),
        py::arg("t"));
  m.def("predicted_mean", &predicted_mean, py::arg("prediction"), py::arg("ex0"),
        py::arg("t"));
  m.def("predicted_second_moment", &predicted_second_moment, py::arg("prediction"),
        py::arg("ex0"), py::arg("t"));
  m.def("linear_slope", &linear_slope, py::arg("t"), py::arg("y"), py::arg("begin"),
        py::arg("end"));
}
