#pragma once

// Minkowski qubit states, the Unruh expansion of the vacuum and one-particle
// Fock states, and the region-I reduced states seen by an accelerated
// observer.
//
// Region-I Fock space is truncated at levels 0..n_max+1: the vacuum expansion
// occupies levels 0..n_max and the one-particle expansion levels 1..n_max+1.

#include <vector>

#include "rqit/fock_linalg.hpp"

namespace rqit {

inline constexpr double kDefaultTruncationTol = 1e-12;

// Squeezing parameter r >= 0 with C = cosh r and T = tanh r.
class AccelerationParam {
 public:
  explicit AccelerationParam(double r);

  // Omega = (Rindler frequency) / (a / c); cosh r = (1 - exp(-2 pi Omega))^(-1/2).
  static AccelerationParam from_omega(double omega);

  double r() const { return r_; }
  double cosh() const;
  double tanh() const;
  // Infinite for r = 0.
  double to_omega() const;

 private:
  double r_;
};

// Overlap parameter of the encoding pair |+>, |phi>; xi = 0 makes them orthogonal.
class OrthogonalityParam {
 public:
  explicit OrthogonalityParam(double xi);

  double xi() const { return xi_; }

  // eta(s1, s2) = 1 + s1 * sqrt(1 + s2 * xi) for signs s1, s2 in {+1, -1}.
  double eta(int s1, int s2) const;

  // Amplitudes of |phi> in the number basis.
  Ket phi_ket() const;
  // <+|phi>, real.
  double plus_phi_overlap() const;

 private:
  double xi_;
};

class FockCutoff {
 public:
  explicit FockCutoff(int n_max);

  // Smallest n_max >= max(16, ceil(ln tol / (2 ln tanh r))) for which both the
  // vacuum and one-particle expansions lose at most `tol` of their norm.
  static FockCutoff for_acceleration(const AccelerationParam& r,
                                     double tol = kDefaultTruncationTol);

  int n_max() const { return n_max_; }
  // Region-I dimension, n_max + 2.
  int levels() const { return n_max_ + 2; }
  FockCutoff doubled() const { return FockCutoff(2 * n_max_); }

 private:
  int n_max_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_squared() const { return x * x + y * y + z * z; }
};

// Norm lost by truncating each expansion at the given cutoff.
double vacuum_truncation_loss(const AccelerationParam& r, const FockCutoff& cutoff);
double one_particle_truncation_loss(const AccelerationParam& r, const FockCutoff& cutoff);

// (1 + n.sigma) / 2. Throws InvalidBlochError for |n| > 1 + 1e-12.
DenseOperator minkowski_qubit(const BlochVector& bloch);

// c_n = tanh^n r / cosh r, n = 0..n_max. Throws TruncationError if the
// discarded norm exceeds tol.
std::vector<double> unruh_vacuum_amplitudes(const AccelerationParam& r, const FockCutoff& cutoff,
                                            double tol = kDefaultTruncationTol);

// d_n = tanh^n r sqrt(n + 1) / cosh^2 r, the amplitude of |n+1>_I |n>_II.
std::vector<double> unruh_one_particle_amplitudes(const AccelerationParam& r,
                                                  const FockCutoff& cutoff,
                                                  double tol = kDefaultTruncationTol);

// Region-I image of an arbitrary operator on the Minkowski {|0>, |1>} qubit:
// each matrix unit |i><j| is expanded in the Unruh bases and region II traced.
// Linear in the input. Result has tag {n_max + 2}. Throws SizeError past
// kDefaultEntryCap entries.
DenseOperator unruh_map(const Eigen::Matrix2cd& qubit_operator, const AccelerationParam& r,
                        const FockCutoff& cutoff, double tol = kDefaultTruncationTol);

// Region-I density operator for a Minkowski qubit state. Trace-preserving up
// to truncation.
DenseOperator effective_qubit(const BlochVector& bloch, const AccelerationParam& r,
                              const FockCutoff& cutoff, double tol = kDefaultTruncationTol);

// Alice (inertial, 2 levels) and Rob (region I, n_max + 2 levels) after Rob
// accelerates, starting from (|+>|+> + |->|phi>)/sqrt(2). Tag {2, n_max + 2}.
// Throws SizeError past kDefaultEntryCap entries.
DenseOperator entangled_state(const OrthogonalityParam& xi, const AccelerationParam& r,
                              const FockCutoff& cutoff, double tol = kDefaultTruncationTol);

// Minkowski amplitudes of (|+>|+> + |->|phi>)/sqrt(2); index 2 * alice + rob.
Ket minkowski_pair_ket(const OrthogonalityParam& xi);

// Low-acceleration 3x3 family, kept verbatim including its trace deficit.
// The closed form is only accurate to O(r^4) for r <= kSmallRLimit.
DenseOperator small_r_qubit(const BlochVector& bloch, const AccelerationParam& r);

inline constexpr double kSmallRLimit = 0.3;

}  // namespace rqit
