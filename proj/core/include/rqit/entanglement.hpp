#pragma once

#include <vector>

#include "rqit/fock_linalg.hpp"
#include "rqit/unruh_channel.hpp"

namespace rqit {

struct NegativityResult {
  double xi = 0.0;
  double r = 0.0;
  double log_negativity = 0.0;
};

// log2 of the trace norm of the partial transpose over `factor_index`;
// exactly zero whenever that trace norm does not exceed one.
double log_negativity(const DenseOperator& state, int factor_index = 0);

// Log-negativity of the accelerated Alice-Rob state at each grid point,
// transposing Alice's factor. Ordered as the grid.
std::vector<NegativityResult> negativity_sweep(const AccelerationParam& r,
                                               const std::vector<double>& xi_grid,
                                               const FockCutoff& cutoff,
                                               double tol = kDefaultTruncationTol);

}  // namespace rqit
