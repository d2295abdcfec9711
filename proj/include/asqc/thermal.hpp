#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "asqc/as_state.hpp"

namespace asqc {

/// Couplings of the spin-1/2 / spin-1 Hamiltonian
///   H = B1 s1z + B2 s2z + J (s1x s2x + s1y s2y) + Jz s1z s2z
///     + K s2z^2 + K1 (s2x^2 + s2y^2) + K2 s1z s2z^2
///     + Dz (s1x s2y - s1y s2x)
///     + Gamma  (s1x {s2x,s2z} + s1y {s2y,s2z})
///     + Lambda (s1x {s2y,s2z} - s1y {s2x,s2z})
/// with s1 the qubit spin (sigma/2) and s2 the qutrit spin-1 operators.
struct HamiltonianParams {
  double B1 = 0.0;
  double B2 = 0.0;
  double J = 0.0;
  double Jz = 0.0;
  double K = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
  double Dz = 0.0;
  double Gamma = 0.0;
  double Lambda = 0.0;
};

struct NonpositiveTemperature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Strictly positive, finite temperature.
class Temperature {
 public:
  explicit Temperature(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw NonpositiveTemperature(
          "temperature must be positive and finite, got " +
          std::to_string(value));
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// Closed-form spectral summary of the Hamiltonian.  h1..h4, g1, g2 are the
/// entries of the two coherence blocks (same slots as a, b, c, d, u, v of an
/// AS state); R1, R2 the block splittings; E1..E6 the energy levels with E1,
/// E6 the corner levels, E2 >= E3 from block 1 and E4 >= E5 from block 2.
struct HamiltonianSummary {
  double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;
  Complex g1{0.0, 0.0}, g2{0.0, 0.0};
  double R1 = 0.0, R2 = 0.0;
  double E1 = 0.0, E2 = 0.0, E3 = 0.0, E4 = 0.0, E5 = 0.0, E6 = 0.0;

  std::array<double, 6> levels() const { return {E1, E2, E3, E4, E5, E6}; }
};

HamiltonianSummary energy_levels(const HamiltonianParams& p);

/// Dense 6x6 Hamiltonian assembled from the spin operators.  An independent
/// assembly from the closed-form block entries is checked against it to
/// 1e-13 (std::logic_error on mismatch; indicates an internal bug).
Matrix6c hamiltonian_matrix(const HamiltonianParams& p);

/// Below this temperature exp(-H/T) is numerically degenerate and the Gibbs
/// routines return the exact uniform mixture over the ground level(s).
inline constexpr double kGroundStateTemperature = 1e-4;

struct GibbsResult {
  ASDensityMatrix state;
  /// Z = sum_i exp(-E_i/T).  The state entries are computed shift-safely and
  /// never overflow, but this raw value can overflow to inf for very
  /// negative ground energies at small T.  In ground-state snap mode it is
  /// the limit value n * exp(-E_min/T) with n the ground degeneracy.
  double partition_function = 0.0;
};

/// Thermal state exp(-H/T)/Z in closed form (block-wise 2x2 exponentials,
/// evaluated with the energy shift E -> E - E_min so all exponents are
/// nonpositive).
GibbsResult gibbs_state(const HamiltonianParams& p, Temperature t);

/// Independent dense route: numerical eigendecomposition of the assembled
/// Hamiltonian, exponential weights on the eigenbasis.  Same ground-state
/// snap threshold as gibbs_state.
Matrix6c gibbs_oracle(const HamiltonianParams& p, Temperature t);

}  // namespace asqc
