#include "asqc/asymptotics.hpp"

#include <cmath>

namespace asqc {

HighTCoefficients high_t_coefficients(const HamiltonianParams& p) {
  HighTCoefficients c;
  const double transverse_sq = p.J * p.J + p.Dz * p.Dz + p.Gamma * p.Gamma +
                               p.Lambda * p.Lambda;
  c.cU0 = transverse_sq / 6.0;
  c.cU1 = (3.0 * p.B1 * p.B1 + 4.0 * p.B1 * p.K2 +
           2.0 * (p.J * p.J + p.Jz * p.Jz + p.K2 * p.K2 + p.Dz * p.Dz +
                  p.Gamma * p.Gamma + p.Lambda * p.Lambda)) /
          24.0;
  c.cF0 = 2.0 * c.cU0;
  c.cF1 = 2.0 * c.cU1;
  return c;
}

double xxx_f0(double j, double temperature) {
  const Temperature t(temperature);  // validates positivity
  const double x = 0.75 * j / t.value();
  // (16/9) sinh(x) tanh(x) e^x / (2 + e^{2x}), rearranged so that every
  // exponential argument is nonpositive on its branch.
  if (x >= 0.0) {
    const double e = std::exp(-2.0 * x);
    return (8.0 / 9.0) * std::tanh(x) * (1.0 - e) / (1.0 + 2.0 * e);
  }
  const double e = std::exp(2.0 * x);
  return (8.0 / 9.0) * std::tanh(x) * (e - 1.0) / (e + 2.0);
}

double xxx_zero_t_limit() { return 8.0 / 9.0; }

}  // namespace asqc
