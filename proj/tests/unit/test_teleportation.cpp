#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "rqit/errors.hpp"
#include "rqit/teleportation.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

using namespace rqit;
using rqit::testing::max_abs_diff;

namespace {

Eigen::Vector2cd random_qubit(std::mt19937_64& rng) { return testing::random_ket(2, rng); }

}  // namespace

TEST_CASE("Schmidt decomposition") {
  const auto s0 = schmidt_decompose(OrthogonalityParam(0.0));
  CHECK(s0.lambda0 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(s0.lambda1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  for (double xi : {0.0, 0.25, 0.5, 0.75, 0.95}) {
    const OrthogonalityParam p(xi);
    const auto s = schmidt_decompose(p);
    CHECK(s.lambda0 >= s.lambda1);
    CHECK(s.lambda1 >= 0.0);
    CHECK(s.lambda0 * s.lambda0 + s.lambda1 * s.lambda1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((s.reconstruct() - Eigen::Vector4cd(minkowski_pair_ket(p))).norm() < 1e-14);
    for (int i = 0; i < 2; ++i) {
      const auto& a = s.alice_basis[static_cast<std::size_t>(i)];
      const int lead = std::abs(a(0)) > 1e-12 ? 0 : 1;
      CHECK(a(lead).imag() == 0.0);
      CHECK(a(lead).real() > 0.0);
    }
    CHECK(std::abs(s.alice_basis[0].dot(s.alice_basis[1])) < 1e-14);
    CHECK(std::abs(s.rob_basis[0].dot(s.rob_basis[1])) < 1e-14);
  }

  // Alice's reduced state diagonalized directly.
  const Ket pair = minkowski_pair_ket(OrthogonalityParam(0.5));
  Eigen::Matrix2cd coeff;
  coeff << pair(0), pair(1), pair(2), pair(3);
  const Eigen::Matrix2cd reduced = coeff * coeff.adjoint();
  const double tr = reduced.trace().real();
  const double det = reduced.determinant().real();
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  const auto s5 = schmidt_decompose(OrthogonalityParam(0.5));
  CHECK(s5.lambda0 == doctest::Approx(std::sqrt(tr / 2.0 + disc)).epsilon(1e-13));
  CHECK(s5.lambda1 == doctest::Approx(std::sqrt(tr / 2.0 - disc)).epsilon(1e-13));
}

TEST_CASE("fidelity bound and unaccelerated protocol value") {
  CHECK(fidelity_bound(OrthogonalityParam(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity_bound(OrthogonalityParam(0.999)) < 1.0);
  CHECK(unaccelerated_protocol_fidelity(OrthogonalityParam(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  for (double xi : {0.25, 0.5, 0.75}) {
    const OrthogonalityParam p(xi);
    CHECK(unaccelerated_protocol_fidelity(p) < fidelity_bound(p));
  }
}

TEST_CASE("protocol kit") {
  const auto cut = FockCutoff(3);
  for (double xi : {0.0, 0.5}) {
    const auto s = schmidt_decompose(OrthogonalityParam(xi));
    const auto kit = build_protocol(s, cut);
    Matrix sum = Matrix::Zero(4, 4);
    for (const auto& p : kit.povms) {
      CHECK(p.space_tag() == std::vector<int>{2, 2});
      sum += p.matrix();
    }
    CHECK(max_abs_diff(sum, Matrix::Identity(4, 4)) < 1e-12);
    for (std::size_t k = 0; k < 4; ++k) {
      const Eigen::Matrix2cd b = kit.qubit_ops[k];
      CHECK(max_abs_diff(b * b.adjoint(), Matrix::Identity(2, 2)) < 1e-14);
      const Matrix& ext = kit.local_ops[k].matrix();
      CHECK(max_abs_diff(ext.topLeftCorner(2, 2), b) == 0.0);
      CHECK(max_abs_diff(ext.bottomRightCorner(cut.levels() - 2, cut.levels() - 2),
                         Matrix::Identity(cut.levels() - 2, cut.levels() - 2)) == 0.0);
    }
    CHECK((kit.qubit_ops[0] * s.rob_basis[0] - Eigen::Vector2cd(1, 0)).norm() < 1e-14);
    CHECK((kit.qubit_ops[0] * s.rob_basis[1] - Eigen::Vector2cd(0, 1)).norm() < 1e-14);
  }

  // At xi = 0 the POVMs are rank-one Bell projectors in the Schmidt frame.
  const auto kit0 = build_protocol(schmidt_decompose(OrthogonalityParam(0.0)), cut);
  for (const auto& p : kit0.povms) {
    const auto e = hermitian_eigen(p);
    CHECK(e.values(3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(e.values(2)) < 1e-14);
    CHECK(trace_norm(partial_transpose(p, 0)) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("ideal teleportation at rest") {
  std::mt19937_64 rng(51);
  const auto cut = FockCutoff(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_qubit(rng);
    const auto sigma = run_protocol(psi, OrthogonalityParam(0.0), AccelerationParam(0.0), cut);
    Matrix expect = Matrix::Zero(cut.levels(), cut.levels());
    expect.topLeftCorner(2, 2) = psi * psi.adjoint();
    CHECK(max_abs_diff(sigma.matrix(), expect) < 1e-10);
  }
  CHECK_THROWS_AS(run_protocol(Eigen::Vector2cd(1.0, 1.0), OrthogonalityParam(0.0), AccelerationParam(0.0), cut),
                  ArgumentError);
}

TEST_CASE("protocol matches pure-state evolution at rest") {
  std::mt19937_64 rng(53);
  for (double xi : {0.5, 0.2, 0.9}) {
    const OrthogonalityParam p(xi);
    const auto s = schmidt_decompose(p);
    const Eigen::Vector4cd pair = minkowski_pair_ket(p);
    std::vector<Eigen::Vector2cd> inputs{Eigen::Vector2cd(1.0, 1.0) / std::sqrt(2.0)};
    for (int i = 0; i < 5; ++i) inputs.push_back(random_qubit(rng));
    for (const auto& psi : inputs) {
      const auto sigma = run_protocol(psi, p, AccelerationParam(0.0), FockCutoff(2));
      const double got = (psi.adjoint() * sigma.matrix().topLeftCorner(2, 2) * psi)(0).real();
      const double ref = testing::brute_force_overlap(psi, pair, s.alice_basis.data(), s.rob_basis.data());
      CHECK(got == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("protocol output is a density operator") {
  std::mt19937_64 rng(57);
  for (double xi : {0.1, 0.6}) {
    for (double r : {0.3, 0.85}) {
      const AccelerationParam a(r);
      const auto cut = FockCutoff::for_acceleration(a);
      const auto ch = ProtocolChannel::build(OrthogonalityParam(xi), a, cut);
      for (int trial = 0; trial < 25; ++trial) {
        const auto psi = random_qubit(rng);
        const auto sigma = ch.apply(psi * psi.adjoint());
        CHECK(sigma.hermiticity_error() < 1e-14);
        CHECK(std::abs(sigma.trace() - 1.0) < 1e-12);
        CHECK(min_eigenvalue(sigma) >= -1e-10);
      }
    }
  }
}

TEST_CASE("channel route equals direct teleportation") {
  std::mt19937_64 rng(59);
  const OrthogonalityParam xi(0.4);
  const AccelerationParam r(0.6);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto ch = ProtocolChannel::build(xi, r, cut);
  for (int trial = 0; trial < 3; ++trial) {
    const auto psi = random_qubit(rng);
    const auto direct = run_protocol(psi, xi, r, cut);
    CHECK(max_abs_diff(direct.matrix(), ch.apply(psi * psi.adjoint()).matrix()) < 1e-14);
    const double ov = (psi.adjoint() * direct.matrix().topLeftCorner(2, 2) * psi)(0).real();
    CHECK(ch.overlap(psi) == doctest::Approx(ov).epsilon(1e-13));
    CHECK(ch.qubit_weight(psi) == doctest::Approx(direct.matrix().topLeftCorner(2, 2).trace().real()).epsilon(1e-13));
  }
}

TEST_CASE("Haar sampler") {
  std::mt19937_64 rng(61);
  const int n = 20000;
  Eigen::Matrix2cd mean = Eigen::Matrix2cd::Zero();
  const Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  for (int i = 0; i < n; ++i) {
    const Eigen::Matrix2cd u = haar_unitary(rng);
    CHECK(max_abs_diff(u * u.adjoint(), Matrix::Identity(2, 2)) < 1e-14);
    const Eigen::Vector2cd psi = u * plus;
    mean += psi * psi.adjoint();
  }
  mean /= static_cast<double>(n);
  CHECK(max_abs_diff(mean, 0.5 * Matrix::Identity(2, 2)) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sphere quadrature integrates polynomials exactly") {
  // <|psi_0|^4> = 1/3, <|psi_0|^2 |psi_1|^2> = 1/6, <|psi_0|^8> = 1/5 for Haar qubits.
  CHECK(haar_sphere_average([](const Eigen::Vector2cd& p) { return std::norm(p(0)) * std::norm(p(0)); }) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(haar_sphere_average([](const Eigen::Vector2cd& p) { return std::norm(p(0)) * std::norm(p(1)); }) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(haar_sphere_average([](const Eigen::Vector2cd& p) { return std::pow(std::norm(p(0)), 4); }) ==
        doctest::Approx(1.0 / 5.0).epsilon(1e-14));
}

TEST_CASE("average fidelity") {
  CHECK(average_fidelity_exact(OrthogonalityParam(0.0), AccelerationParam(0.0), FockCutoff(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const auto rest = average_fidelity_mc(OrthogonalityParam(0.0), AccelerationParam(0.0), FockCutoff(2), 5000, 3);
  CHECK(std::abs(rest.mean - 1.0) < 1e-9);
  CHECK(rest.std_error < 1e-9);
  CHECK(rest.samples == 5000);
  CHECK(rest.seed == 3);

  // At rest the Schmidt-adapted protocol reaches (1 + (l0 + l1)^2) / 3.
  for (double xi : {0.25, 0.5, 0.75}) {
    const OrthogonalityParam p(xi);
    CHECK(average_fidelity_exact(p, AccelerationParam(0.0), FockCutoff(2)) ==
          doctest::Approx(unaccelerated_protocol_fidelity(p)).epsilon(1e-12));
  }

  // Values from an independent dense implementation.
  const AccelerationParam r6(0.6);
  const auto cut6 = FockCutoff::for_acceleration(r6);
  CHECK(average_fidelity_exact(OrthogonalityParam(0.0), r6, cut6) == doctest::Approx(0.640263336971).epsilon(1e-10));
  CHECK(average_fidelity_exact(OrthogonalityParam(0.5), r6, cut6) == doctest::Approx(0.607827009837).epsilon(1e-10));
  const AccelerationParam r2(0.2);
  CHECK(average_fidelity_exact(OrthogonalityParam(0.3), r2, FockCutoff::for_acceleration(r2)) ==
        doctest::Approx(0.942056715411).epsilon(1e-10));
}

TEST_CASE("Monte Carlo agrees with the exact average") {
  for (double xi : {0.0, 0.3, 0.7}) {
    for (double r : {0.2, 0.6}) {
      const AccelerationParam a(r);
      const auto ch = ProtocolChannel::build(OrthogonalityParam(xi), a, FockCutoff::for_acceleration(a));
      const double exact = average_fidelity_exact(ch);
      const auto mc = average_fidelity_mc(ch, 20000, 7);
      CHECK(std::abs(mc.mean - exact) <= 4.0 * mc.std_error);
      CHECK(haar_sphere_average([&](const Eigen::Vector2cd& psi) { return ch.overlap(psi); }) ==
            doctest::Approx(exact).epsilon(1e-13));
      const auto cond = conditioned_fidelity_mc(ch, 20000, 7);
      CHECK(std::abs(cond.mean - conditioned_fidelity_quadrature(ch)) <= 4.0 * cond.std_error);
    }
  }
}

TEST_CASE("Monte Carlo is reproducible across thread counts") {
  const AccelerationParam r(0.6);
  const auto ch = ProtocolChannel::build(OrthogonalityParam(0.2), r, FockCutoff::for_acceleration(r));
  const auto first = average_fidelity_mc(ch, 3 * kSampleBlock + 17, 99);
  const auto again = average_fidelity_mc(ch, 3 * kSampleBlock + 17, 99);
  CHECK(first.mean == again.mean);
  CHECK(first.std_error == again.std_error);
  setenv("RQIT_THREADS", "1", 1);
  const auto serial = average_fidelity_mc(ch, 3 * kSampleBlock + 17, 99);
  setenv("RQIT_THREADS", "4", 1);
  const auto wide = average_fidelity_mc(ch, 3 * kSampleBlock + 17, 99);
  unsetenv("RQIT_THREADS");
  CHECK(serial.mean == first.mean);
  CHECK(wide.mean == first.mean);
  CHECK(wide.std_error == first.std_error);
  const auto other = average_fidelity_mc(ch, 3 * kSampleBlock + 17, 100);
  CHECK(other.mean != first.mean);
}

TEST_CASE("average fidelity does not depend on Schmidt phases") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const OrthogonalityParam xi(0.45);
  const AccelerationParam r(0.6);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto state = entangled_state(xi, r, cut);
  const auto base_schmidt = schmidt_decompose(xi);
  const double base = average_fidelity_exact(ProtocolChannel::build(build_protocol(base_schmidt, cut), state));
  for (int trial = 0; trial < 5; ++trial) {
    auto s = base_schmidt;
    for (int i = 0; i < 2; ++i) {
      const Complex phase = std::polar(1.0, angle(rng));
      s.alice_basis[static_cast<std::size_t>(i)] *= phase;
      s.rob_basis[static_cast<std::size_t>(i)] /= phase;
    }
    CHECK((s.reconstruct() - base_schmidt.reconstruct()).norm() < 1e-14);
    const double f = average_fidelity_exact(ProtocolChannel::build(build_protocol(s, cut), state));
    CHECK(f == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("average fidelity does not grow with acceleration") {
  for (double xi : {0.0, 0.5}) {
    double prev_exact = 2.0;
    FidelityEstimate prev_mc{2.0, 0.0, 0, 0};
    for (double r : {0.0, 0.2, 0.4, 0.6}) {
      const AccelerationParam a(r);
      const auto ch = ProtocolChannel::build(OrthogonalityParam(xi), a, FockCutoff::for_acceleration(a));
      const double exact = average_fidelity_exact(ch);
      const auto mc = average_fidelity_mc(ch, 20000, 11);
      CHECK(exact <= prev_exact + 1e-12);
      CHECK(mc.mean <= prev_mc.mean + 2.0 * std::hypot(mc.std_error, prev_mc.std_error));
      prev_exact = exact;
      prev_mc = mc;
    }
  }
}
