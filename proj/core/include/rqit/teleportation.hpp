#pragma once

// Teleportation through the accelerated Alice-Rob state using the protocol
// that is optimal for the unaccelerated state: Alice measures her input qubit Q
// together with her half A in a Schmidt-adapted Bell basis, Rob applies the
// matching correction on region-I levels {0, 1} and leaves higher levels alone.

#include <array>
#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "rqit/fock_linalg.hpp"
#include "rqit/unruh_channel.hpp"

namespace rqit {

// |Psi> = lambda0 |phi_0>|theta_0> + lambda1 |phi_1>|theta_1>, lambda0 >= lambda1 >= 0.
// Phase convention: the first nonzero component of each alice_basis vector is
// real and positive.
struct SchmidtDecomposition {
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  std::array<Eigen::Vector2cd, 2> alice_basis;
  std::array<Eigen::Vector2cd, 2> rob_basis;

  // Amplitudes in the product basis, index 2 * alice + rob.
  Eigen::Vector4cd reconstruct() const;
};

SchmidtDecomposition schmidt_decompose(const OrthogonalityParam& xi);

// (lambda0 + lambda1) / sqrt(2): square root of the maximal overlap with a
// maximally entangled state.
double fidelity_bound(const OrthogonalityParam& xi);

// (1 + (lambda0 + lambda1)^2) / 3: the Haar-averaged overlap reached by the
// Schmidt-adapted protocol on the unaccelerated state.
double unaccelerated_protocol_fidelity(const OrthogonalityParam& xi);

struct ProtocolKit {
  // POVM elements on Q (x) A, tag {2, 2}; they sum to the identity.
  std::array<DenseOperator, 4> povms;
  // Rob's corrections on {|0>, |1>}.
  std::array<Eigen::Matrix2cd, 4> qubit_ops;
  // The same corrections extended as B (+) 1 over all region-I levels.
  std::array<DenseOperator, 4> local_ops;
};

ProtocolKit build_protocol(const SchmidtDecomposition& schmidt, const FockCutoff& cutoff);

// Rob's state after the protocol for an arbitrary (possibly non-physical)
// operator on Q, given the shared state on A (x) R_I. Linear in `input`.
DenseOperator teleport(const ProtocolKit& kit, const Eigen::Matrix2cd& input,
                       const DenseOperator& shared_state);

// Rob's final state for the pure input alpha|0> + beta|1>.
DenseOperator run_protocol(const Eigen::Vector2cd& input_state, const OrthogonalityParam& xi,
                           const AccelerationParam& r, const FockCutoff& cutoff);

// The protocol as a linear map from Q operators to region-I operators, stored
// by its action on the four matrix units |i><j|.
class ProtocolChannel {
 public:
  static ProtocolChannel build(const ProtocolKit& kit, const DenseOperator& shared_state);
  static ProtocolChannel build(const OrthogonalityParam& xi, const AccelerationParam& r,
                               const FockCutoff& cutoff, double tol = kDefaultTruncationTol);

  DenseOperator apply(const Eigen::Matrix2cd& input) const;

  // <psi| sigma_R(psi) |psi>, psi embedded at levels {0, 1}.
  double overlap(const Eigen::Vector2cd& psi) const;
  // Weight of sigma_R(psi) on levels {0, 1}.
  double qubit_weight(const Eigen::Vector2cd& psi) const;

  // Restriction of the image of |i><j| to levels {0, 1}.
  const Eigen::Matrix2cd& qubit_block(int i, int j) const { return blocks_[2 * i + j]; }
  const DenseOperator& image(int i, int j) const { return images_[2 * i + j]; }

 private:
  std::array<DenseOperator, 4> images_;
  std::array<Eigen::Matrix2cd, 4> blocks_;
};

struct FidelityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

// Haar-distributed 2x2 unitary from a complex Gaussian matrix via QR with the
// phases of R's diagonal divided out.
Eigen::Matrix2cd haar_unitary(std::mt19937_64& rng);

// Number of samples drawn from one generator stream; block b is seeded from
// (seed, b) so results do not depend on how blocks are scheduled.
inline constexpr std::int64_t kSampleBlock = 4096;

// Monte-Carlo Haar average of the overlap over inputs U|+>.
FidelityEstimate average_fidelity_mc(const ProtocolChannel& channel, std::int64_t samples,
                                     std::uint64_t seed);
FidelityEstimate average_fidelity_mc(const OrthogonalityParam& xi, const AccelerationParam& r,
                                     const FockCutoff& cutoff, std::int64_t samples,
                                     std::uint64_t seed);

// Exact Haar average from the second moment (I + SWAP) / 6 of pure qubit states.
double average_fidelity_exact(const ProtocolChannel& channel);
double average_fidelity_exact(const OrthogonalityParam& xi, const AccelerationParam& r,
                              const FockCutoff& cutoff);

// Deterministic average of f over Haar-random pure qubit states: product
// Gauss-Legendre (polar) / trapezoid (azimuth) rule on the Bloch sphere.
double haar_sphere_average(const std::function<double(const Eigen::Vector2cd&)>& f);

// Overlap conditioned on Rob's mode being found in {|0>, |1>}:
// <psi|sigma|psi> / Tr[P01 sigma], averaged over Haar inputs. Not linear in the
// input, so the deterministic route is haar_sphere_average.
FidelityEstimate conditioned_fidelity_mc(const ProtocolChannel& channel, std::int64_t samples,
                                         std::uint64_t seed);
double conditioned_fidelity_quadrature(const ProtocolChannel& channel);

}  // namespace rqit
