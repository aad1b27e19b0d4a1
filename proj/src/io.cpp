#include "velmark/io.hpp"

#include <cstdio>

namespace velmark {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_snapshot_csv(std::ostream& os, double t, const JointDensity& q) {
  os << "t,node_index,x,q_plus,q_minus,rho,phi\n";
  const std::string ts = format_double(t);
  for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
    const double qp = q.plus(m);
    const double qm = q.minus(m);
    os << ts << ',' << m << ',' << format_double(q.grid.x(m)) << ','
       << format_double(qp) << ',' << format_double(qm) << ','
       << format_double(qp + qm) << ',' << format_double(qp - qm) << '\n';
  }
}

void write_moments_csv(std::ostream& os, const MomentSeries& series) {
  os << "t,mean,variance,mean_velocity\n";
  for (size_t i = 0; i < series.times.size(); ++i) {
    os << format_double(series.times[i]) << ',' << format_double(series.mean[i]) << ','
       << format_double(series.variance[i]) << ','
       << format_double(series.mean_velocity[i]) << '\n';
  }
}

void write_moments_csv(std::ostream& os, const MomentSeries& series,
                       const std::vector<double>& predicted_velocity,
                       const std::vector<double>& predicted_x2) {
  os << "t,mean,variance,mean_velocity,predicted_velocity,predicted_x2\n";
  for (size_t i = 0; i < series.times.size(); ++i) {
    os << format_double(series.times[i]) << ',' << format_double(series.mean[i]) << ','
       << format_double(series.variance[i]) << ','
       << format_double(series.mean_velocity[i]) << ','
       << format_double(predicted_velocity[i]) << ',' << format_double(predicted_x2[i])
       << '\n';
  }
}

void write_multi_csv(std::ostream& os, double t, const MultiDensity& q) {
  os << "t,j,v_j,node_index,x,q\n";
  const std::string ts = format_double(t);
  for (int j = -q.j_max; j <= q.j_max; ++j) {
    const std::string vj = format_double(q.velocity(j));
    for (int m = q.grid.m_min; m <= q.grid.m_max; ++m) {
      os << ts << ',' << j << ',' << vj << ',' << m << ','
         << format_double(q.grid.x(m)) << ',' << format_double(q.at(j, m)) << '\n';
    }
  }
}

void write_analytic_csv(std::ostream& os, double t, const std::vector<double>& xs,
                        const std::vector<CauchyPoint>& points) {
  os << "t,x,q_plus,q_minus,rho\n";
  const std::string ts = format_double(t);
  for (size_t i = 0; i < xs.size() && i < points.size(); ++i) {
    os << ts << ',' << format_double(xs[i]) << ',' << format_double(points[i].q_plus)
       << ',' << format_double(points[i].q_minus) << ','
       << format_double(points[i].rho) << '\n';
  }
}

}  // namespace velmark
