#include "asqc/thermal.hpp"

#include <algorithm>
#include <cmath>

#include "asqc/oracle.hpp"

namespace asqc {

namespace {

using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;

constexpr double kAssemblyTol = 1e-13;

// Splittings below this are evaluated with the small-x series of
// sinh(R/2T)/R to avoid 0/0.
constexpr double kTinySplit = 1e-10;

Matrix6c kron(const Matrix2c& a, const Matrix3c& b) {
  Matrix6c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    }
  }
  return out;
}

// Hamiltonian assembled term by term from the spin operators.
Matrix6c spin_route(const HamiltonianParams& p) {
  const Complex im{0.0, 1.0};
  const double rt2 = std::sqrt(2.0);

  Matrix2c id2 = Matrix2c::Identity();
  Matrix2c sx2, sy2, sz2;  // qubit spin = sigma/2
  sx2 << 0.0, 0.5, 0.5, 0.0;
  sy2 << 0.0, -0.5 * im, 0.5 * im, 0.0;
  sz2 << 0.5, 0.0, 0.0, -0.5;

  Matrix3c id3 = Matrix3c::Identity();
  Matrix3c sx3, sy3, sz3;  // spin-1 operators
  sx3 << 0.0, 1.0 / rt2, 0.0, 1.0 / rt2, 0.0, 1.0 / rt2, 0.0, 1.0 / rt2, 0.0;
  sy3 << 0.0, -im / rt2, 0.0, im / rt2, 0.0, -im / rt2, 0.0, im / rt2, 0.0;
  sz3 << 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0;

  const Matrix3c axz = sx3 * sz3 + sz3 * sx3;
  const Matrix3c ayz = sy3 * sz3 + sz3 * sy3;

  Matrix6c h = Matrix6c::Zero();
  h += p.B1 * kron(sz2, id3);
  h += p.B2 * kron(id2, sz3);
  h += p.J * (kron(sx2, sx3) + kron(sy2, sy3));
  h += p.Jz * kron(sz2, sz3);
  h += p.K * kron(id2, sz3 * sz3);
  h += p.K1 * kron(id2, sx3 * sx3 + sy3 * sy3);
  h += p.K2 * kron(sz2, sz3 * sz3);
  h += p.Dz * (kron(sx2, sy3) - kron(sy2, sx3));
  h += p.Gamma * (kron(sx2, axz) + kron(sy2, ayz));
  h += p.Lambda * (kron(sx2, ayz) - kron(sy2, axz));
  return h;
}

// The same Hamiltonian from its closed-form AS-pattern entries.
Matrix6c block_route(const HamiltonianSummary& s) {
  Matrix6c h = Matrix6c::Zero();
  h(0, 0) = s.E1;
  h(1, 1) = s.h1;
  h(2, 2) = s.h2;
  h(3, 3) = s.h3;
  h(4, 4) = s.h4;
  h(5, 5) = s.E6;
  h(1, 3) = s.g1;
  h(3, 1) = std::conj(s.g1);
  h(2, 4) = s.g2;
  h(4, 2) = std::conj(s.g2);
  return h;
}

struct BlockThermal {
  double diag_top = 0.0;   // population on the block's top slot
  double diag_bot = 0.0;   // population on the bottom slot
  Complex off{0.0, 0.0};   // coherence
};

// Unnormalized entries of exp(-H_block/T) for one 2x2 block, shifted by the
// global minimum energy: every exponent is <= (E_max_scale)/T with
// nonpositive arguments, so nothing overflows.
BlockThermal block_thermal(double h_top, double h_bot, Complex g, double split,
                           double upper, double lower, double e_min,
                           double temperature) {
  const double zeta_upper = std::exp(-(upper - e_min) / temperature);
  const double zeta_lower = std::exp(-(lower - e_min) / temperature);
  // cosh(R/2T) and sinh(R/2T), both times exp(-(mean - e_min)/T).
  const double cosh_term = 0.5 * (zeta_upper + zeta_lower);
  const double sinh_term = 0.5 * (zeta_lower - zeta_upper);

  double sinh_over_split;
  if (split < kTinySplit) {
    const double mean = 0.5 * (h_top + h_bot);
    const double x = 0.5 * split / temperature;
    sinh_over_split = std::exp(-(mean - e_min) / temperature) *
                      (1.0 + x * x / 6.0) / (2.0 * temperature);
  } else {
    sinh_over_split = sinh_term / split;
  }

  BlockThermal out;
  out.diag_top = cosh_term + (h_bot - h_top) * sinh_over_split;
  out.diag_bot = cosh_term + (h_top - h_bot) * sinh_over_split;
  out.off = -2.0 * g * sinh_over_split;
  return out;
}

// Exact T -> 0 limit: uniform mixture over the ground level(s).
GibbsResult ground_state(const HamiltonianSummary& s, double temperature) {
  const std::array<double, 6> levels = s.levels();
  const double e_min = *std::min_element(levels.begin(), levels.end());
  double e_scale = 0.0;
  for (double e : levels) {
    e_scale = std::max(e_scale, std::abs(e));
  }
  const double tol = 1e-12 * std::max(1.0, e_scale);

  std::array<bool, 6> in_ground{};
  int n = 0;
  for (int i = 0; i < 6; ++i) {
    in_ground[i] = levels[i] - e_min <= tol;
    n += in_ground[i] ? 1 : 0;
  }
  const double share = 1.0 / n;

  GibbsResult out;
  ASDensityMatrix& m = out.state;
  if (in_ground[0]) {
    m.p1 += share;
  }
  if (in_ground[5]) {
    m.p6 += share;
  }

  // One coherence block: adds the projector of the selected eigenvector
  // (or both, which sums to the identity on the block).
  auto add_block = [share](bool upper_in, bool lower_in, double h_top,
                           double h_bot, Complex g, double split,
                           double& diag_top, double& diag_bot, Complex& off) {
    if (!upper_in && !lower_in) {
      return;
    }
    if (upper_in && lower_in) {
      diag_top += share;
      diag_bot += share;
      return;
    }
    const double qh = 0.5 * ((h_top - h_bot) + split);
    const double dh_sq = qh * qh + std::norm(g);
    if (dh_sq < 1e-24) {
      // diagonal block: the levels are the diagonal entries themselves
      const bool top_is_upper = h_top >= h_bot;
      if (upper_in == top_is_upper) {
        diag_top += share;
      } else {
        diag_bot += share;
      }
      return;
    }
    if (upper_in) {
      diag_top += share * qh * qh / dh_sq;
      diag_bot += share * std::norm(g) / dh_sq;
      off += share * qh * g / dh_sq;
    } else {
      diag_top += share * std::norm(g) / dh_sq;
      diag_bot += share * qh * qh / dh_sq;
      off -= share * qh * g / dh_sq;
    }
  };

  add_block(in_ground[1], in_ground[2], s.h1, s.h3, s.g1, s.R1, m.a, m.c,
            m.u);
  add_block(in_ground[3], in_ground[4], s.h2, s.h4, s.g2, s.R2, m.b, m.d,
            m.v);

  out.partition_function = n * std::exp(-e_min / temperature);
  return out;
}

}  // namespace

HamiltonianSummary energy_levels(const HamiltonianParams& p) {
  HamiltonianSummary s;
  s.h1 = 0.5 * p.B1 + 2.0 * p.K1;
  s.h2 = 0.5 * p.B1 - p.B2 - 0.5 * p.Jz + p.K + p.K1 + 0.5 * p.K2;
  s.h3 = -0.5 * p.B1 + p.B2 - 0.5 * p.Jz + p.K + p.K1 - 0.5 * p.K2;
  s.h4 = -0.5 * p.B1 + 2.0 * p.K1;

  const double rt2 = std::sqrt(2.0);
  s.g1 = Complex{p.J + p.Gamma, p.Dz + p.Lambda} / rt2;
  s.g2 = Complex{p.J - p.Gamma, p.Dz - p.Lambda} / rt2;

  const double corner_mean = 0.5 * p.Jz + p.K + p.K1;
  const double corner_split = 0.5 * p.B1 + p.B2 + 0.5 * p.K2;
  s.E1 = corner_mean + corner_split;
  s.E6 = corner_mean - corner_split;

  s.R1 = std::hypot(s.h1 - s.h3, 2.0 * std::abs(s.g1));
  s.R2 = std::hypot(s.h2 - s.h4, 2.0 * std::abs(s.g2));
  s.E2 = 0.5 * (s.h1 + s.h3) + 0.5 * s.R1;
  s.E3 = 0.5 * (s.h1 + s.h3) - 0.5 * s.R1;
  s.E4 = 0.5 * (s.h2 + s.h4) + 0.5 * s.R2;
  s.E5 = 0.5 * (s.h2 + s.h4) - 0.5 * s.R2;
  return s;
}

Matrix6c hamiltonian_matrix(const HamiltonianParams& p) {
  const Matrix6c from_spins = spin_route(p);
  const Matrix6c from_blocks = block_route(energy_levels(p));
  const double mismatch = (from_spins - from_blocks).cwiseAbs().maxCoeff();
  if (mismatch > kAssemblyTol) {
    throw std::logic_error(
        "hamiltonian_matrix: assembly routes disagree by " +
        std::to_string(mismatch));
  }
  return from_spins;
}

GibbsResult gibbs_state(const HamiltonianParams& p, Temperature t) {
  const HamiltonianSummary s = energy_levels(p);
  const double temperature = t.value();
  if (temperature < kGroundStateTemperature) {
    return ground_state(s, temperature);
  }

  const std::array<double, 6> levels = s.levels();
  const double e_min = *std::min_element(levels.begin(), levels.end());

  const double zeta1 = std::exp(-(s.E1 - e_min) / temperature);
  const double zeta6 = std::exp(-(s.E6 - e_min) / temperature);
  const BlockThermal block1 = block_thermal(s.h1, s.h3, s.g1, s.R1, s.E2,
                                            s.E3, e_min, temperature);
  const BlockThermal block2 = block_thermal(s.h2, s.h4, s.g2, s.R2, s.E4,
                                            s.E5, e_min, temperature);

  const double z_shifted = zeta1 + zeta6 + block1.diag_top + block1.diag_bot +
                           block2.diag_top + block2.diag_bot;

  GibbsResult out;
  out.state.p1 = zeta1 / z_shifted;
  out.state.p6 = zeta6 / z_shifted;
  out.state.a = block1.diag_top / z_shifted;
  out.state.c = block1.diag_bot / z_shifted;
  out.state.u = block1.off / z_shifted;
  out.state.b = block2.diag_top / z_shifted;
  out.state.d = block2.diag_bot / z_shifted;
  out.state.v = block2.off / z_shifted;
  out.partition_function = z_shifted * std::exp(-e_min / temperature);
  return out;
}

Matrix6c gibbs_oracle(const HamiltonianParams& p, Temperature t) {
  const Matrix6c h = hamiltonian_matrix(p);
  const oracle::Eig6 eig = oracle::eig_hermitian(h);
  const double temperature = t.value();
  const double e_min = eig.values.minCoeff();

  if (temperature < kGroundStateTemperature) {
    const double e_scale = eig.values.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * std::max(1.0, e_scale);
    Matrix6c projector = Matrix6c::Zero();
    int n = 0;
    for (int k = 0; k < 6; ++k) {
      if (eig.values[k] - e_min <= tol) {
        projector += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
        ++n;
      }
    }
    return projector / n;
  }

  Eigen::Matrix<double, 6, 1> weights;
  for (int k = 0; k < 6; ++k) {
    weights[k] = std::exp(-(eig.values[k] - e_min) / temperature);
  }
  weights /= weights.sum();
  return eig.vectors * weights.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace asqc
