// Modified Bessel functions used by the light-cone kernels. Relative error
// is at or below 1e-12 on [0, 700]; see the oracle cross-checks in the tests.
#pragma once

namespace velmark {

// I0: power series for z <= 7.5, exponentially convergent cosine-angle sum
// for 7.5 < z < 16, large-argument expansion beyond.
double bessel_i0(double z);

// K0 (z > 0): log-coupled series for z <= 3.5, Gaussian-substitution sum of
// the Laplace representation for 3.5 < z < 16, large-argument expansion
// beyond. Throws std::domain_error for z <= 0.
double bessel_k0(double z);

// I1(z)/z, finite at zero (value 1/2). Entire-function series below 7.5,
// same branch layout as bessel_i0 above.
double bessel_i1_over_z(double z);

double bessel_i1(double z);

}  // namespace velmark
