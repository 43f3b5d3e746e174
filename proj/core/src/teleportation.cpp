#include "rqit/teleportation.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "rqit/errors.hpp"
#include "rqit/parallel.hpp"

namespace rqit {
namespace {

// Running mean and squared deviation (Welford), merged blockwise in index order.
struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const auto total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) /
                     static_cast<double>(total);
    n = total;
  }
};

Eigen::Vector2cd plus_state() {
  return Eigen::Vector2cd(std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0);
}

template <class Sample>
FidelityEstimate haar_monte_carlo(std::int64_t samples, std::uint64_t seed, Sample&& sample) {
  if (samples < 1) throw ArgumentError("Monte-Carlo sample count must be >= 1");
  const auto blocks = static_cast<std::size_t>((samples + kSampleBlock - 1) / kSampleBlock);
  const auto partial = parallel_map(blocks, [&](std::size_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 rng(seq);
    const auto begin = static_cast<std::int64_t>(b) * kSampleBlock;
    const auto end = std::min(samples, begin + kSampleBlock);
    Moments m;
    for (auto i = begin; i < end; ++i) {
      const Eigen::Vector2cd psi = haar_unitary(rng) * plus_state();
      m.add(sample(psi));
    }
    return m;
  });
  Moments total;
  for (const auto& m : partial) total.merge(m);
  const double var = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0.0;
  return {total.mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(total.n)), samples, seed};
}

// Outcome k: {Schmidt index paired with |0>_Q, index paired with |1>_Q, relative sign}.
constexpr std::array<std::array<int, 3>, 4> kPattern{{
    {0, 1, +1},
    {0, 1, -1},
    {1, 0, +1},
    {1, 0, -1},
}};

}  // namespace

Eigen::Vector4cd SchmidtDecomposition::reconstruct() const {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const double lambda[2] = {lambda0, lambda1};
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) v(2 * a + b) += lambda[i] * alice_basis[i](a) * rob_basis[i](b);
    }
  }
  return v;
}

SchmidtDecomposition schmidt_decompose(const OrthogonalityParam& xi) {
  const Eigen::Vector4cd psi = minkowski_pair_ket(xi);
  Eigen::Matrix2cd coeff;
  coeff << psi(0), psi(1), psi(2), psi(3);
  // coeff = U S V^dagger  =>  |Psi> = sum_i s_i U_i (x) conj(V_i).
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition s;
  s.lambda0 = svd.singularValues()(0);
  s.lambda1 = svd.singularValues()(1);
  for (int i = 0; i < 2; ++i) {
    Eigen::Vector2cd a = svd.matrixU().col(i);
    Eigen::Vector2cd b = svd.matrixV().col(i).conjugate();
    const int lead = std::abs(a(0)) > 1e-12 ? 0 : 1;
    const Complex phase = std::polar(1.0, -std::arg(a(lead)));
    a *= phase;
    b /= phase;
    a(lead) = a(lead).real();
    s.alice_basis[static_cast<std::size_t>(i)] = a;
    s.rob_basis[static_cast<std::size_t>(i)] = b;
  }
  return s;
}

double fidelity_bound(const OrthogonalityParam& xi) {
  const auto s = schmidt_decompose(xi);
  return (s.lambda0 + s.lambda1) / std::numbers::sqrt2;
}

double unaccelerated_protocol_fidelity(const OrthogonalityParam& xi) {
  const auto s = schmidt_decompose(xi);
  const double sum = s.lambda0 + s.lambda1;
  return (1.0 + sum * sum) / 3.0;
}

ProtocolKit build_protocol(const SchmidtDecomposition& schmidt, const FockCutoff& cutoff) {
  ProtocolKit kit;
  const Eigen::Vector2cd e0(1.0, 0.0);
  const Eigen::Vector2cd e1(0.0, 1.0);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [i0, i1, sign] = kPattern[k];
    const auto& phi = schmidt.alice_basis;
    const auto& theta = schmidt.rob_basis;
    Ket v(4);
    // (|0>|phi_i0> +/- |1>|phi_i1>) / sqrt(2) on Q (x) A.
    for (int a = 0; a < 2; ++a) {
      v(a) = phi[static_cast<std::size_t>(i0)](a);
      v(2 + a) = static_cast<double>(sign) * phi[static_cast<std::size_t>(i1)](a);
    }
    v /= std::numbers::sqrt2;
    kit.povms[k] = DenseOperator::projector(v, {2, 2});

    // |0><theta_0| +/- |1><theta_1| for the first pair, |1><theta_0| +/- |0><theta_1| for the second.
    const Eigen::Vector2cd& target0 = i0 == 0 ? e0 : e1;
    const Eigen::Vector2cd& target1 = i0 == 0 ? e1 : e0;
    Eigen::Matrix2cd b = target0 * theta[0].adjoint();
    b += static_cast<double>(sign) * target1 * theta[1].adjoint();
    kit.qubit_ops[k] = b;

    Matrix ext = Matrix::Identity(cutoff.levels(), cutoff.levels());
    ext.topLeftCorner(2, 2) = b;
    kit.local_ops[k] = DenseOperator(std::move(ext));
  }
  return kit;
}

DenseOperator teleport(const ProtocolKit& kit, const Eigen::Matrix2cd& input,
                       const DenseOperator& shared_state) {
  if (shared_state.factor_count() != 2 || shared_state.space_tag()[0] != 2) {
    throw ArgumentError("shared state must live on A (2 levels) x R");
  }
  const int levels = shared_state.space_tag()[1];
  if (kit.local_ops[0].dim() != levels) {
    throw ArgumentError("protocol kit and shared state use different Fock cutoffs");
  }
  const DenseOperator joint = tensor(DenseOperator(Matrix(input)), shared_state);
  const DenseOperator rob_identity = DenseOperator::identity({levels});
  DenseOperator sigma = DenseOperator::zero({levels});
  for (std::size_t k = 0; k < 4; ++k) {
    const DenseOperator measured = tensor(kit.povms[k], rob_identity) * joint;
    const DenseOperator rob = partial_trace(partial_trace(measured, 0), 0);
    const auto& b = kit.local_ops[k];
    sigma += b * rob * b.adjoint();
  }
  return sigma;
}

DenseOperator run_protocol(const Eigen::Vector2cd& input_state, const OrthogonalityParam& xi,
                           const AccelerationParam& r, const FockCutoff& cutoff) {
  if (std::abs(input_state.squaredNorm() - 1.0) > 1e-10) {
    throw ArgumentError("teleported state must be normalized");
  }
  const auto kit = build_protocol(schmidt_decompose(xi), cutoff);
  return teleport(kit, input_state * input_state.adjoint(), entangled_state(xi, r, cutoff));
}

ProtocolChannel ProtocolChannel::build(const ProtocolKit& kit, const DenseOperator& shared_state) {
  ProtocolChannel ch;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
      unit(i, j) = 1.0;
      const auto idx = static_cast<std::size_t>(2 * i + j);
      ch.images_[idx] = teleport(kit, unit, shared_state);
      ch.blocks_[idx] = ch.images_[idx].matrix().topLeftCorner(2, 2);
    }
  }
  return ch;
}

ProtocolChannel ProtocolChannel::build(const OrthogonalityParam& xi, const AccelerationParam& r,
                                       const FockCutoff& cutoff, double tol) {
  return build(build_protocol(schmidt_decompose(xi), cutoff), entangled_state(xi, r, cutoff, tol));
}

DenseOperator ProtocolChannel::apply(const Eigen::Matrix2cd& input) const {
  DenseOperator out = images_[0] * input(0, 0);
  out += images_[1] * input(0, 1);
  out += images_[2] * input(1, 0);
  out += images_[3] * input(1, 1);
  return out;
}

double ProtocolChannel::overlap(const Eigen::Vector2cd& psi) const {
  Eigen::Matrix2cd block = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd rho = psi * psi.adjoint();
  for (int k = 0; k < 4; ++k) block += rho(k / 2, k % 2) * blocks_[static_cast<std::size_t>(k)];
  return (psi.adjoint() * block * psi)(0).real();
}

double ProtocolChannel::qubit_weight(const Eigen::Vector2cd& psi) const {
  const Eigen::Matrix2cd rho = psi * psi.adjoint();
  Complex w = 0.0;
  for (int k = 0; k < 4; ++k) w += rho(k / 2, k % 2) * blocks_[static_cast<std::size_t>(k)].trace();
  return w.real();
}

Eigen::Matrix2cd haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  const Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::Vector2cd phases;
  for (int i = 0; i < 2; ++i) {
    const double mag = std::abs(r(i, i));
    phases(i) = mag > 0.0 ? r(i, i) / mag : Complex(1.0);
  }
  return q * phases.asDiagonal();
}

FidelityEstimate average_fidelity_mc(const ProtocolChannel& channel, std::int64_t samples,
                                     std::uint64_t seed) {
  return haar_monte_carlo(samples, seed,
                          [&](const Eigen::Vector2cd& psi) { return channel.overlap(psi); });
}

FidelityEstimate average_fidelity_mc(const OrthogonalityParam& xi, const AccelerationParam& r,
                                     const FockCutoff& cutoff, std::int64_t samples,
                                     std::uint64_t seed) {
  return average_fidelity_mc(ProtocolChannel::build(xi, r, cutoff), samples, seed);
}

double average_fidelity_exact(const ProtocolChannel& channel) {
  // int psi_i conj(psi_j) conj(psi_k) psi_l = (d_ij d_kl + d_ik d_jl) / 6 contracted with
  // <k| Lambda(|i><j|) |l>.
  Complex total = 0.0;
  for (int i = 0; i < 2; ++i) {
    total += channel.qubit_block(i, i).trace();
    for (int j = 0; j < 2; ++j) total += channel.qubit_block(i, j)(i, j);
  }
  return total.real() / 6.0;
}

double average_fidelity_exact(const OrthogonalityParam& xi, const AccelerationParam& r,
                              const FockCutoff& cutoff) {
  return average_fidelity_exact(ProtocolChannel::build(xi, r, cutoff));
}

double haar_sphere_average(const std::function<double(const Eigen::Vector2cd&)>& f) {
  constexpr int kAzimuth = 64;
  using Rule = boost::math::quadrature::gauss<double, 64>;
  const auto ring = [&](double u) {
    // u = cos(polar angle); psi = (cos(t/2), e^{i phi} sin(t/2)).
    const double c = std::sqrt(std::max(0.0, (1.0 + u) / 2.0));
    const double s = std::sqrt(std::max(0.0, (1.0 - u) / 2.0));
    double acc = 0.0;
    for (int k = 0; k < kAzimuth; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / kAzimuth;
      acc += f(Eigen::Vector2cd(c, std::polar(s, phi)));
    }
    return acc / kAzimuth;
  };
  return Rule::integrate(ring, -1.0, 1.0) / 2.0;
}

FidelityEstimate conditioned_fidelity_mc(const ProtocolChannel& channel, std::int64_t samples,
                                         std::uint64_t seed) {
  return haar_monte_carlo(samples, seed, [&](const Eigen::Vector2cd& psi) {
    return channel.overlap(psi) / channel.qubit_weight(psi);
  });
}

double conditioned_fidelity_quadrature(const ProtocolChannel& channel) {
  return haar_sphere_average([&](const Eigen::Vector2cd& psi) {
    return channel.overlap(psi) / channel.qubit_weight(psi);
  });
}

}  // namespace rqit
