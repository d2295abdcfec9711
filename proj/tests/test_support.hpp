#pragma once

#include <random>

#include "asqc/as_state.hpp"
#include "asqc/thermal.hpp"

namespace asqc_test {

/// Hand-checkable reference state: block 1 is a maximally coherent pure-part
/// (a = c = u = 1/4, eigenvalues 1/2 and 0), block 2 is proportional to the
/// identity (b = d = 1/8, v = 0), corners 1/8 each.  Known exact values:
/// U0 = 1/2, U1 = 1/4, F0 = 1/2, F1 = 7/20.
inline asqc::ASDensityMatrix reference_state() {
  asqc::ASDensityMatrix m;
  m.p1 = 0.125;
  m.a = 0.25;
  m.b = 0.125;
  m.c = 0.25;
  m.d = 0.125;
  m.p6 = 0.125;
  m.u = 0.25;
  m.v = 0.0;
  return m;
}

inline asqc::ASDensityMatrix maximally_mixed() {
  asqc::ASDensityMatrix m;
  m.p1 = m.a = m.b = m.c = m.d = m.p6 = 1.0 / 6.0;
  return m;
}

/// Baseline coupling set with every interaction switched on.  Used (with
/// variations) for the thermal and sweep behavior tests.
inline asqc::HamiltonianParams moderate_exchange_params() {
  asqc::HamiltonianParams p;
  p.B1 = 0.3;
  p.B2 = -0.7;
  p.J = -1.4;
  p.Jz = 1.0;
  p.K = 0.2;
  p.K1 = -0.1;
  p.K2 = 0.22;
  p.Dz = 0.32;
  p.Gamma = -0.87;
  p.Lambda = 0.31;
  return p;
}

/// Same fields/anisotropies but no transverse exchange: the branch ordering
/// never changes along a temperature sweep.
inline asqc::HamiltonianParams no_transverse_exchange_params() {
  asqc::HamiltonianParams p = moderate_exchange_params();
  p.J = 0.0;
  return p;
}

/// Stronger fields, weaker exchange: the LQU branch ordering switches twice
/// along a temperature sweep while the LQFI ordering never does.
inline asqc::HamiltonianParams reentrant_params() {
  asqc::HamiltonianParams p = moderate_exchange_params();
  p.B1 = 0.7;
  p.B2 = 0.3;
  p.J = -0.7;
  return p;
}

/// Base for the field sweeps: strong transverse exchange, inverted
/// longitudinal exchange, no qutrit field.
inline asqc::HamiltonianParams field_sweep_params() {
  asqc::HamiltonianParams p;
  p.B1 = 0.0;
  p.B2 = 0.0;
  p.J = -2.5;
  p.Jz = -1.0;
  p.K = 0.2;
  p.K1 = -0.1;
  p.K2 = 0.22;
  p.Dz = 0.32;
  p.Gamma = -0.87;
  p.Lambda = 0.31;
  return p;
}

/// Isotropic exchange point: J == Jz, everything else zero.  Both measures
/// coincide branch-wise and have a closed-form temperature profile.
inline asqc::HamiltonianParams isotropic_params(double j) {
  asqc::HamiltonianParams p;
  p.J = j;
  p.Jz = j;
  return p;
}

/// Deterministic random coupling draw for property tests, uniform in
/// [-scale, scale] per coupling.
inline asqc::HamiltonianParams random_params(std::uint64_t seed,
                                             double scale = 2.0) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng, scale] {
    return scale * (2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) -
                    1.0);
  };
  asqc::HamiltonianParams p;
  p.B1 = draw();
  p.B2 = draw();
  p.J = draw();
  p.Jz = draw();
  p.K = draw();
  p.K1 = draw();
  p.K2 = draw();
  p.Dz = draw();
  p.Gamma = draw();
  p.Lambda = draw();
  return p;
}

}  // namespace asqc_test
