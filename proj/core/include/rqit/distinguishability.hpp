#pragma once

#include <vector>

#include "rqit/fock_linalg.hpp"
#include "rqit/unruh_channel.hpp"

namespace rqit {

struct AngleResult {
  double xi = 0.0;
  double r = 0.0;
  double theta = 0.0;  // radians, [0, pi/2]
};

// Tr sqrt(sqrt(rho) sigma sqrt(rho)) for PSD operators on the same space.
double root_fidelity(const DenseOperator& rho, const DenseOperator& sigma);

// arccos of the root fidelity between two unit-trace density operators; the
// argument is clipped to [0, 1].
double bures_angle(const DenseOperator& rho1, const DenseOperator& rho2);

// Angle between the region-I images of |+> and |phi(xi)> at each grid point.
std::vector<AngleResult> angle_sweep(const AccelerationParam& r, const std::vector<double>& xi_grid,
                                     const FockCutoff& cutoff, double tol = kDefaultTruncationTol);

}  // namespace rqit
