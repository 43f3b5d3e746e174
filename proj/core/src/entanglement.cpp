#include "rqit/entanglement.hpp"

#include <cmath>

#include "rqit/parallel.hpp"

namespace rqit {

double log_negativity(const DenseOperator& state, int factor_index) {
  const double norm = trace_norm(partial_transpose(state, factor_index));
  return norm <= 1.0 ? 0.0 : std::log2(norm);
}

std::vector<NegativityResult> negativity_sweep(const AccelerationParam& r,
                                               const std::vector<double>& xi_grid,
                                               const FockCutoff& cutoff, double tol) {
  return parallel_map(xi_grid.size(), [&](std::size_t i) {
    const OrthogonalityParam xi(xi_grid[i]);
    return NegativityResult{xi.xi(), r.r(), log_negativity(entangled_state(xi, r, cutoff, tol), 0)};
  });
}

}  // namespace rqit
