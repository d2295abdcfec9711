#pragma once

#include "asqc/thermal.hpp"

namespace asqc {

/// Leading 1/T^2 coefficients of the four correlation branches for the
/// thermal state: branch_value(T) -> c / T^2 as T -> infinity.  The Fisher
/// coefficients are exactly twice the skew-information ones.
struct HighTCoefficients {
  double cU0 = 0.0;
  double cU1 = 0.0;
  double cF0 = 0.0;
  double cF1 = 0.0;
};

HighTCoefficients high_t_coefficients(const HamiltonianParams& p);

/// Exact LQFI of the thermal state of the isotropic exchange point
/// (J == Jz, all other couplings zero), valid at any temperature:
///   F(T) = (16/9) sinh(3J/4T) tanh(3J/4T) e^{3J/4T} / (2 + e^{3J/2T}),
/// evaluated in an overflow-safe rearrangement.  Throws
/// NonpositiveTemperature for T <= 0.
double xxx_f0(double j, double temperature);

/// T -> 0 limit of xxx_f0 for any J > 0 (independent of the magnitude of
/// J; antiferromagnetic-side couplings J < 0 approach 4/9 instead).
double xxx_zero_t_limit();

}  // namespace asqc
