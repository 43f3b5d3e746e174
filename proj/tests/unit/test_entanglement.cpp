#include <doctest.h>

#include <cmath>
#include <random>

#include "rqit/entanglement.hpp"
#include "rqit/grid.hpp"
#include "support/random_states.hpp"

using namespace rqit;

TEST_CASE("log negativity of reference states") {
  Ket bell = Ket::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK(log_negativity(DenseOperator::projector(bell, {2, 2})) == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto prod = tensor(testing::random_psd(2, rng), testing::random_psd(4, rng));
    CHECK(log_negativity(prod) < 1e-12);
    CHECK(log_negativity(prod, 1) < 1e-12);
  }

  const auto rest = entangled_state(OrthogonalityParam(0.0), AccelerationParam(0.0), FockCutoff(4));
  CHECK(std::abs(log_negativity(rest) - 1.0) <= 1e-10);
}

TEST_CASE("either factor gives the same negativity") {
  for (double xi : {0.0, 0.4, 0.8}) {
    const AccelerationParam r(0.5);
    const auto rho = entangled_state(OrthogonalityParam(xi), r, FockCutoff::for_acceleration(r));
    CHECK(std::abs(log_negativity(rho, 0) - log_negativity(rho, 1)) < 1e-10);
  }
}

TEST_CASE("local unitaries on Alice leave the negativity unchanged") {
  std::mt19937_64 rng(43);
  const AccelerationParam r(0.6);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto rho = entangled_state(OrthogonalityParam(0.3), r, cut);
  const double base = log_negativity(rho);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseOperator u(testing::random_unitary(2, rng));
    const auto full = tensor(u, DenseOperator::identity({cut.levels()}));
    const auto rotated = full * rho * full.adjoint();
    CHECK(std::abs(log_negativity(rotated) - base) < 1e-10);
  }
}

TEST_CASE("negativity does not grow with acceleration") {
  double previous = 2.0;
  for (double r : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
    const AccelerationParam a(r);
    const double en = log_negativity(entangled_state(OrthogonalityParam(0.0), a, FockCutoff::for_acceleration(a)));
    CHECK(en <= previous + 1e-12);
    previous = en;
  }
}

TEST_CASE("negativity sweep") {
  const auto at_rest = negativity_sweep(AccelerationParam(0.0), {0.0}, FockCutoff(4));
  REQUIRE(at_rest.size() == 1);
  CHECK(at_rest[0].log_negativity == doctest::Approx(1.0).epsilon(1e-12));

  const AccelerationParam r(0.6);
  const auto cut = FockCutoff::for_acceleration(r);
  const auto grid = Grid{0.0, 0.2, 0.02}.values();
  const auto sweep = negativity_sweep(r, grid, cut);
  REQUIRE(sweep.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(sweep[i].xi == grid[i]);
    CHECK(sweep[i].r == 0.6);
    const double direct = log_negativity(entangled_state(OrthogonalityParam(grid[i]), r, cut));
    CHECK(sweep[i].log_negativity == direct);
  }
  // Values from an independent dense implementation.
  CHECK(sweep[0].log_negativity == doctest::Approx(0.646168671457).epsilon(1e-10));
  CHECK(sweep[7].log_negativity == doctest::Approx(0.647576043951).epsilon(1e-10));

  const auto doubled = negativity_sweep(r, {0.0}, cut.doubled());
  CHECK(std::abs(doubled[0].log_negativity - sweep[0].log_negativity) < 1e-10);

  CHECK_THROWS(negativity_sweep(r, {1.0}, cut));
}

TEST_CASE("grid values") {
  CHECK(Grid{0.0, 0.9, 0.01}.values().size() == 91);
  CHECK(Grid{0.0, 0.0, 1.0}.values().size() == 1);
  CHECK_THROWS(Grid{0.0, 1.0, 0.0}.values());
  CHECK_THROWS(Grid{1.0, 0.0, 0.1}.values());
}
