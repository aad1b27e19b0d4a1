// Composite Gauss-Legendre quadrature for the light-cone kernel integrals.
#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace velmark {

// Nodes and weights on [-1, 1], computed by Newton iteration on P_n.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// Integrate f over [lo, hi] with panels of at most `panel` width.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double panel, int order = 12);

}  // namespace velmark
