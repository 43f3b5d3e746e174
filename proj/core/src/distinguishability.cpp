#include "rqit/distinguishability.hpp"

#include <algorithm>
#include <cmath>

#include "rqit/errors.hpp"
#include "rqit/parallel.hpp"

namespace rqit {

double root_fidelity(const DenseOperator& rho, const DenseOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw ArgumentError("fidelity: operators act on different spaces");
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) is the trace norm of sqrt(rho) sqrt(sigma).
  const Matrix product = matrix_sqrt(rho).matrix() * matrix_sqrt(sigma).matrix();
  return Eigen::JacobiSVD<Matrix>(product).singularValues().sum();
}

double bures_angle(const DenseOperator& rho1, const DenseOperator& rho2) {
  if (rho1.dim() != rho2.dim()) throw ArgumentError("bures_angle: dimension mismatch");
  for (const auto* rho : {&rho1, &rho2}) {
    require_density(*rho);
    if (std::abs(rho->trace().real() - 1.0) > 1e-8) {
      throw ArgumentError("bures_angle: states must have unit trace");
    }
  }
  return std::acos(std::clamp(root_fidelity(rho1, rho2), 0.0, 1.0));
}

std::vector<AngleResult> angle_sweep(const AccelerationParam& r, const std::vector<double>& xi_grid,
                                     const FockCutoff& cutoff, double tol) {
  const Eigen::Vector2cd plus(std::sqrt(0.5), std::sqrt(0.5));
  const DenseOperator rho_plus = unruh_map(plus * plus.adjoint(), r, cutoff, tol);
  return parallel_map(xi_grid.size(), [&](std::size_t i) {
    const OrthogonalityParam xi(xi_grid[i]);
    const Eigen::Vector2cd phi = xi.phi_ket();
    const DenseOperator rho_phi = unruh_map(phi * phi.adjoint(), r, cutoff, tol);
    return AngleResult{xi.xi(), r.r(), bures_angle(rho_plus, rho_phi)};
  });
}

}  // namespace rqit
