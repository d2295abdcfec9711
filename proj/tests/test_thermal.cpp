#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "asqc/closed_form.hpp"
#include "asqc/oracle.hpp"
#include "asqc/thermal.hpp"
#include "test_support.hpp"

using namespace asqc;
using asqc_test::isotropic_params;
using asqc_test::moderate_exchange_params;
using asqc_test::random_params;

namespace {

double max_entry_gap(const ASDensityMatrix& closed, const Matrix6c& dense) {
  return (to_dense(closed) - dense).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("temperature must be positive and finite") {
  CHECK_THROWS_AS(Temperature(0.0), NonpositiveTemperature);
  CHECK_THROWS_AS(Temperature(-1.0), NonpositiveTemperature);
  CHECK_THROWS_AS(Temperature(std::nan("")), NonpositiveTemperature);
  CHECK(Temperature(0.7).value() == 0.7);
}

TEST_CASE("zero couplings give the zero Hamiltonian and the mixed state") {
  const HamiltonianParams p;
  CHECK(hamiltonian_matrix(p).cwiseAbs().maxCoeff() == 0.0);

  const HamiltonianSummary s = energy_levels(p);
  for (double e : s.levels()) {
    CHECK(e == 0.0);
  }

  const GibbsResult g = gibbs_state(p, Temperature(1.0));
  CHECK(max_entry_gap(g.state, Matrix6c::Identity() / 6.0) <= 1e-15);
  CHECK(g.partition_function == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("isotropic exchange point has the known level structure") {
  const HamiltonianSummary s = energy_levels(isotropic_params(1.0));
  CHECK(s.R1 == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.R2 == doctest::Approx(1.5).epsilon(1e-15));
  std::array<double, 6> levels = s.levels();
  std::sort(levels.begin(), levels.end());
  CHECK(levels[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(levels[1] == doctest::Approx(-1.0).epsilon(1e-15));
  for (int k = 2; k < 6; ++k) {
    CHECK(levels[static_cast<std::size_t>(k)] ==
          doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("assembled Hamiltonian is Hermitian, AS-patterned, and consistent") {
  const Matrix6c h = hamiltonian_matrix(moderate_exchange_params());
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  // only the AS slots may be populated
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const bool diagonal = i == j;
      const bool block1 = (i == 1 && j == 3) || (i == 3 && j == 1);
      const bool block2 = (i == 2 && j == 4) || (i == 4 && j == 2);
      if (!diagonal && !block1 && !block2) {
        CHECK(std::abs(h(i, j)) == 0.0);
      }
    }
  }

  const HamiltonianSummary s = energy_levels(moderate_exchange_params());
  CHECK(std::abs(h(0, 0).real() - s.E1) <= 1e-14);
  CHECK(std::abs(h(5, 5).real() - s.E6) <= 1e-14);
  CHECK(std::abs(h(1, 3) - s.g1) <= 1e-14);
  CHECK(std::abs(h(2, 4) - s.g2) <= 1e-14);

  // both assembly routes stay consistent across random couplings
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    CHECK_NOTHROW(hamiltonian_matrix(random_params(seed)));
  }
}

TEST_CASE("closed-form levels match the dense eigensolver") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const HamiltonianParams p = random_params(seed);
    std::array<double, 6> closed = energy_levels(p).levels();
    std::sort(closed.begin(), closed.end());
    const oracle::Eig6 eig = oracle::eig_hermitian(hamiltonian_matrix(p));
    CAPTURE(seed);
    for (int k = 0; k < 6; ++k) {
      CHECK(std::abs(closed[static_cast<std::size_t>(k)] - eig.values[k]) <=
            1e-12);
    }
  }
}

TEST_CASE("level sum equals the invariant trace 4(K + 2 K1)") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const HamiltonianParams p = random_params(seed);
    const std::array<double, 6> levels = energy_levels(p).levels();
    double sum = 0.0;
    for (double e : levels) {
      sum += e;
    }
    CAPTURE(seed);
    CHECK(std::abs(sum - 4.0 * (p.K + 2.0 * p.K1)) <= 1e-11);
  }
}

TEST_CASE("closed-form Gibbs state matches the dense route") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const HamiltonianParams p = random_params(seed);
    for (const double t : {0.05, 0.7, 5.0, 50.0}) {
      const GibbsResult g = gibbs_state(p, Temperature(t));
      const Matrix6c dense = gibbs_oracle(p, Temperature(t));
      CAPTURE(seed);
      CAPTURE(t);
      REQUIRE(max_entry_gap(g.state, dense) <= 1e-12);
      REQUIRE(validate(g.state, 1e-12).valid);
    }
  }
}

TEST_CASE("dense Gibbs route preserves the AS pattern") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Matrix6c rho = gibbs_oracle(random_params(seed), Temperature(0.7));
    CAPTURE(seed);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const bool diagonal = i == j;
        const bool block1 = (i == 1 && j == 3) || (i == 3 && j == 1);
        const bool block2 = (i == 2 && j == 4) || (i == 4 && j == 2);
        if (!diagonal && !block1 && !block2) {
          CHECK(std::abs(rho(i, j)) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("partition function equals the level sum of Boltzmann weights") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const HamiltonianParams p = random_params(seed);
    const double t = 0.3 + 0.01 * static_cast<double>(seed);
    const GibbsResult g = gibbs_state(p, Temperature(t));
    double z_direct = 0.0;
    for (double e : energy_levels(p).levels()) {
      z_direct += std::exp(-e / t);
    }
    CAPTURE(seed);
    CHECK(std::abs(g.partition_function - z_direct) <=
          1e-12 * std::abs(z_direct));
  }
}

TEST_CASE("deep-quantum regime evaluates without overflow") {
  // T above the snap threshold but far below every splitting
  const GibbsResult g = gibbs_state(isotropic_params(1.0), Temperature(2e-4));
  CHECK(validate(g.state, 1e-12).valid);
  // ground space: the two levels at -J, shared equally
  const Matrix6c dense = gibbs_oracle(isotropic_params(1.0), Temperature(2e-4));
  CHECK(max_entry_gap(g.state, dense) <= 1e-12);
}

TEST_CASE("ground-state snap matches between the two routes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HamiltonianParams p = random_params(seed);
    const Temperature t(5e-5);
    const GibbsResult g = gibbs_state(p, t);
    CAPTURE(seed);
    REQUIRE(validate(g.state, 1e-12).valid);
    CHECK(max_entry_gap(g.state, gibbs_oracle(p, t)) <= 1e-10);
  }

  // degenerate pair below the snap: uniform mixture over both levels
  const GibbsResult g = gibbs_state(isotropic_params(1.0), Temperature(5e-5));
  const ASSpectrum s = spectrum(g.state);
  const auto eig = oracle::eig_hermitian(to_dense(g.state));
  CHECK(eig.values.maxCoeff() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(s.p1) <= 1e-15);
  CHECK(std::abs(s.p6) <= 1e-15);
}

TEST_CASE("low-temperature correlations of the baseline couplings") {
  const GibbsResult g =
      gibbs_state(moderate_exchange_params(), Temperature(0.01));
  const CorrelationBranches c = correlations(g.state);
  CHECK(std::abs(c.U - 0.866093931662) <= 1e-9);
  CHECK(std::abs(c.F - 0.866093931662) <= 1e-9);
  CHECK(c.active_U == Branch::zero);
  CHECK(c.active_F == Branch::zero);
}
