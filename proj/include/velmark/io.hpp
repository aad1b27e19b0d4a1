// CSV and JSON writers for the file formats the tools emit.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "velmark/binomial.hpp"
#include "velmark/continuum.hpp"
#include "velmark/lattice.hpp"
#include "velmark/multinomial.hpp"

namespace velmark {

// All floating point columns use %.17g (>= 15 significant digits).
std::string format_double(double v);

// t,node_index,x,q_plus,q_minus,rho,phi
void write_snapshot_csv(std::ostream& os, double t, const JointDensity& q);

// t,mean,variance,mean_velocity[,predicted_velocity,predicted_x2]
void write_moments_csv(std::ostream& os, const MomentSeries& series);
void write_moments_csv(std::ostream& os, const MomentSeries& series,
                       const std::vector<double>& predicted_velocity,
                       const std::vector<double>& predicted_x2);

// t,j,v_j,node_index,x,q
void write_multi_csv(std::ostream& os, double t, const MultiDensity& q);

// t,x,q_plus,q_minus,rho
void write_analytic_csv(std::ostream& os, double t, const std::vector<double>& xs,
                        const std::vector<CauchyPoint>& points);

}  // namespace velmark
