#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "rqit/fock_linalg.hpp"
#include "rqit/unruh_channel.hpp"

namespace rqit::testing {

inline Matrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

// Random PSD with the given trace (rank full unless rank > 0).
inline DenseOperator random_psd(int dim, std::mt19937_64& rng, double trace = 1.0, int rank = 0) {
  const Matrix g = ginibre(dim, rank > 0 ? rank : dim, rng);
  Matrix a = g * g.adjoint();
  a *= trace / a.trace().real();
  return DenseOperator(a);
}

inline DenseOperator random_hermitian(int dim, std::mt19937_64& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  return DenseOperator(0.5 * (g + g.adjoint()));
}

// Unitary as exp(iH) for a random Hermitian H; a different route from the
// library's QR sampler.
inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
  const DenseOperator h = random_hermitian(dim, rng);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Ket random_ket(int dim, std::mt19937_64& rng) {
  Ket k = ginibre(dim, 1, rng).col(0);
  return k / k.norm();
}

inline BlochVector random_bloch(double max_radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    BlochVector b{u(rng), u(rng), u(rng)};
    if (std::sqrt(b.norm_squared()) <= max_radius) return b;
  }
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace rqit::testing
