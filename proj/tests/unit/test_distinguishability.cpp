#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rqit/distinguishability.hpp"
#include "rqit/errors.hpp"
#include "rqit/grid.hpp"
#include "support/random_states.hpp"

using namespace rqit;

TEST_CASE("Bures angle of reference pairs") {
  std::mt19937_64 rng(71);
  const auto rho = testing::random_psd(3, rng);
  CHECK(bures_angle(rho, rho) < 1e-7);

  Ket a = Ket::Zero(2), b = Ket::Zero(2);
  a(0) = 1.0;
  b(1) = 1.0;
  CHECK(bures_angle(DenseOperator::projector(a), DenseOperator::projector(b)) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));

  for (int trial = 0; trial < 10; ++trial) {
    const Ket u = testing::random_ket(3, rng);
    const Ket v = testing::random_ket(3, rng);
    const double expect = std::acos(std::abs(u.dot(v)));
    CHECK(bures_angle(DenseOperator::projector(u), DenseOperator::projector(v)) ==
          doctest::Approx(expect).epsilon(1e-7));
  }

  CHECK_THROWS_AS(bures_angle(rho, testing::random_psd(2, rng)), ArgumentError);
  CHECK_THROWS_AS(bures_angle(rho, testing::random_psd(3, rng, 0.5)), ArgumentError);
}

TEST_CASE("Bures angle symmetry and unitary invariance") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testing::random_psd(4, rng, 1.0, 1 + trial % 4);
    const auto sigma = testing::random_psd(4, rng, 1.0, 1 + (trial / 4) % 4);
    const double ab = bures_angle(rho, sigma);
    CHECK(std::abs(ab - bures_angle(sigma, rho)) < 1e-9);
    const DenseOperator u(testing::random_unitary(4, rng));
    CHECK(std::abs(ab - bures_angle(u * rho * u.adjoint(), u * sigma * u.adjoint())) < 1e-9);
  }
}

TEST_CASE("angle sweep") {
  const auto rest = angle_sweep(AccelerationParam(0.0), {0.0, 0.5}, FockCutoff(2));
  CHECK(std::abs(rest[0].theta - std::numbers::pi / 2) < 1e-10);
  const double overlap = OrthogonalityParam(0.5).plus_phi_overlap();
  CHECK(rest[1].theta == doctest::Approx(std::acos(std::abs(overlap))).epsilon(1e-12));

  const AccelerationParam r(0.85);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto grid = Grid{0.0, 0.1, 0.01}.values();
  const auto sweep = angle_sweep(r, grid, cut);
  REQUIRE(sweep.size() == grid.size());
  // Values from a 30-digit reference evaluation.
  CHECK(sweep[0].theta == doctest::Approx(1.01751532923422).epsilon(1e-12));
  CHECK(sweep[9].theta == doctest::Approx(1.01988631167553).epsilon(1e-12));
  CHECK(angle_sweep(r, {0.5}, cut)[0].theta == doctest::Approx(0.974029278623039).epsilon(1e-12));

  const auto doubled = angle_sweep(r, {0.0}, cut.doubled());
  CHECK(std::abs(doubled[0].theta - sweep[0].theta) < 1e-8);
}

TEST_CASE("Bures angle shrinks with acceleration") {
  double previous = 4.0;
  for (double r : {0.0, 0.3, 0.6, 0.85}) {
    const AccelerationParam a(r);
    const double theta = angle_sweep(a, {0.0}, FockCutoff::for_acceleration(a))[0].theta;
    CHECK(theta < previous);
    previous = theta;
  }
}
