#include "rqit/unruh_channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rqit/errors.hpp"

namespace rqit {
namespace {

void require_within_tol(double loss, double tol, const char* what, const FockCutoff& cutoff) {
  if (loss > tol) {
    throw TruncationError(std::string(what) + " expansion loses " + std::to_string(loss) +
                          " of its norm at n_max = " + std::to_string(cutoff.n_max()));
  }
}

void require_bloch(const BlochVector& b) {
  if (!std::isfinite(b.norm_squared()) || std::sqrt(b.norm_squared()) > 1.0 + 1e-12) {
    throw InvalidBlochError("Bloch vector norm exceeds 1");
  }
}

void require_entry_cap(int dim) {
  const auto entries = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  if (entries > kDefaultEntryCap)
    throw SizeError("operator of dimension " + std::to_string(dim) + " exceeds entry cap " +
                    std::to_string(kDefaultEntryCap));
}

}  // namespace

AccelerationParam::AccelerationParam(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ArgumentError("acceleration parameter r must be >= 0");
}

AccelerationParam AccelerationParam::from_omega(double omega) {
  if (!(omega > 0.0)) throw ArgumentError("Omega must be positive");
  return AccelerationParam(std::atanh(std::exp(-std::numbers::pi * omega)));
}

double AccelerationParam::cosh() const { return std::cosh(r_); }
double AccelerationParam::tanh() const { return std::tanh(r_); }

double AccelerationParam::to_omega() const {
  if (r_ == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(tanh()) / std::numbers::pi;
}

OrthogonalityParam::OrthogonalityParam(double xi) : xi_(xi) {
  if (!(xi >= 0.0 && xi < 1.0)) throw ArgumentError("orthogonality parameter xi must lie in [0, 1)");
}

double OrthogonalityParam::eta(int s1, int s2) const {
  return 1.0 + (s1 > 0 ? 1.0 : -1.0) * std::sqrt(1.0 + (s2 > 0 ? 1.0 : -1.0) * xi_);
}

Ket OrthogonalityParam::phi_ket() const {
  Ket k(2);
  k << std::sqrt((1.0 - xi_) / 2.0), -std::sqrt((1.0 + xi_) / 2.0);
  return k;
}

double OrthogonalityParam::plus_phi_overlap() const {
  return (std::sqrt((1.0 - xi_) / 2.0) - std::sqrt((1.0 + xi_) / 2.0)) / std::numbers::sqrt2;
}

FockCutoff::FockCutoff(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw ArgumentError("Fock cutoff n_max must be positive");
}

FockCutoff FockCutoff::for_acceleration(const AccelerationParam& r, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw ArgumentError("truncation tolerance must lie in (0, 1)");
  constexpr int kFloor = 16;
  constexpr int kCeiling = 1 << 16;
  const double t = r.tanh();
  int n = kFloor;
  if (t > 0.0) {
    const double rule = std::ceil(std::log(tol) / (2.0 * std::log(t)));
    if (rule > kCeiling) throw TruncationError("acceleration too large for a finite Fock cutoff");
    n = std::max(kFloor, static_cast<int>(rule));
  }
  // The one-particle tail carries an extra (n + 2) factor over the vacuum tail.
  while (one_particle_truncation_loss(r, FockCutoff(n)) > tol) {
    if (++n > kCeiling) throw TruncationError("acceleration too large for a finite Fock cutoff");
  }
  return FockCutoff(n);
}

double vacuum_truncation_loss(const AccelerationParam& r, const FockCutoff& cutoff) {
  const double x = r.tanh() * r.tanh();
  return std::pow(x, cutoff.n_max() + 1);
}

double one_particle_truncation_loss(const AccelerationParam& r, const FockCutoff& cutoff) {
  // (1 - x)^2 sum_{n > N} (n + 1) x^n in closed form, x = tanh^2 r.
  const double x = r.tanh() * r.tanh();
  const int n = cutoff.n_max();
  return std::pow(x, n + 1) * ((n + 2) - (n + 1) * x);
}

DenseOperator minkowski_qubit(const BlochVector& bloch) {
  require_bloch(bloch);
  Matrix m(2, 2);
  m << Complex(1.0 + bloch.z, 0.0), Complex(bloch.x, -bloch.y),
       Complex(bloch.x, bloch.y), Complex(1.0 - bloch.z, 0.0);
  return DenseOperator(0.5 * m);
}

std::vector<double> unruh_vacuum_amplitudes(const AccelerationParam& r, const FockCutoff& cutoff,
                                            double tol) {
  require_within_tol(vacuum_truncation_loss(r, cutoff), tol, "vacuum", cutoff);
  const double t = r.tanh();
  std::vector<double> c(static_cast<std::size_t>(cutoff.n_max()) + 1);
  double tn = 1.0;
  for (auto& cn : c) {
    cn = tn / r.cosh();
    tn *= t;
  }
  return c;
}

std::vector<double> unruh_one_particle_amplitudes(const AccelerationParam& r,
                                                  const FockCutoff& cutoff, double tol) {
  require_within_tol(one_particle_truncation_loss(r, cutoff), tol, "one-particle", cutoff);
  const double t = r.tanh();
  const double c2 = r.cosh() * r.cosh();
  std::vector<double> d(static_cast<std::size_t>(cutoff.n_max()) + 1);
  double tn = 1.0;
  for (std::size_t n = 0; n < d.size(); ++n) {
    d[n] = tn * std::sqrt(static_cast<double>(n + 1)) / c2;
    tn *= t;
  }
  return d;
}

DenseOperator unruh_map(const Eigen::Matrix2cd& q, const AccelerationParam& r,
                        const FockCutoff& cutoff, double tol) {
  const auto c = unruh_vacuum_amplitudes(r, cutoff, tol);
  const auto d = unruh_one_particle_amplitudes(r, cutoff, tol);
  const int levels = cutoff.levels();
  require_entry_cap(levels);
  Matrix out = Matrix::Zero(levels, levels);
  for (int n = 0; n <= cutoff.n_max(); ++n) {
    const double cn = c[static_cast<std::size_t>(n)];
    const double dn = d[static_cast<std::size_t>(n)];
    out(n, n) += q(0, 0) * cn * cn;
    out(n + 1, n + 1) += q(1, 1) * dn * dn;
    out(n, n + 1) += q(0, 1) * cn * dn;
    out(n + 1, n) += q(1, 0) * cn * dn;
  }
  return DenseOperator(std::move(out));
}

DenseOperator effective_qubit(const BlochVector& bloch, const AccelerationParam& r,
                              const FockCutoff& cutoff, double tol) {
  const Eigen::Matrix2cd q = minkowski_qubit(bloch).matrix();
  return unruh_map(q, r, cutoff, tol);
}

Ket minkowski_pair_ket(const OrthogonalityParam& xi) {
  const double s = 1.0 / (2.0 * std::numbers::sqrt2);
  Ket k(4);
  k << s * xi.eta(+1, -1), s * xi.eta(-1, +1), s * xi.eta(-1, -1), s * xi.eta(+1, +1);
  return k;
}

DenseOperator entangled_state(const OrthogonalityParam& xi, const AccelerationParam& r,
                              const FockCutoff& cutoff, double tol) {
  require_within_tol(vacuum_truncation_loss(r, cutoff), tol, "vacuum", cutoff);
  require_within_tol(one_particle_truncation_loss(r, cutoff), tol, "one-particle", cutoff);

  const int levels = cutoff.levels();
  require_entry_cap(2 * levels);
  const double ch = r.cosh();
  const double t2 = r.tanh() * r.tanh();
  const double epm = xi.eta(+1, -1);
  const double emm = xi.eta(-1, -1);
  const double emp = xi.eta(-1, +1);
  const double epp = xi.eta(+1, +1);

  Matrix rho = Matrix::Zero(2 * levels, 2 * levels);
  Ket v(2 * levels);
  double weight = 1.0;
  for (int n = 0; n <= cutoff.n_max(); ++n) {
    const double up = std::sqrt(static_cast<double>(n + 1)) / ch;
    v.setZero();
    v(n) = epm;
    v(levels + n) = emm;
    v(n + 1) = emp * up;
    v(levels + n + 1) = epp * up;
    rho.noalias() += weight * (v * v.adjoint());
    weight *= t2;
  }
  rho /= 8.0 * ch * ch;
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DenseOperator(std::move(rho), {2, levels});
}

DenseOperator small_r_qubit(const BlochVector& bloch, const AccelerationParam& r) {
  require_bloch(bloch);
  const double ch = r.cosh();
  const double t2 = r.tanh() * r.tanh();
  const double c2 = ch * ch;
  const Complex minus(bloch.x, -bloch.y);
  const Complex plus(bloch.x, bloch.y);
  const double z = bloch.z;

  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0 + z;
  m(0, 1) = minus / ch;
  m(1, 0) = plus / ch;
  m(1, 1) = (1.0 - z) / c2 + t2 * (1.0 + z);
  m(1, 2) = std::numbers::sqrt2 * t2 * minus / ch;
  m(2, 1) = std::numbers::sqrt2 * t2 * plus / ch;
  m(2, 2) = 2.0 * t2 * (1.0 - z) / c2;
  return DenseOperator(m / (2.0 * c2));
}

}  // namespace rqit
