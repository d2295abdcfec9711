#include "asqc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace asqc::oracle {

namespace {

double clip_nonnegative(double x) { return x < 0.0 ? 0.0 : x; }

// Eigenvalues clipped to [0, inf) after the gates pass.
Eigen::Matrix<double, 6, 1> density_spectrum(const Eig6& eig) {
  const double min_eig = eig.values.minCoeff();
  if (min_eig < -kDensityTol) {
    throw NotDensityMatrix("eigenvalue " + std::to_string(min_eig) +
                           " below -1e-10");
  }
  const double trace = eig.values.sum();
  if (std::abs(trace - 1.0) > kDensityTol) {
    throw NotDensityMatrix("trace " + std::to_string(trace) +
                           " deviates from 1 beyond 1e-10");
  }
  return eig.values.cwiseMax(0.0);
}

// One cycle of classical Jacobi rotations over the three off-diagonal
// positions of a symmetric 3x3 matrix.
double jacobi_max_eigenvalue(Eigen::Matrix3d a) {
  constexpr int kMaxSweeps = 64;
  constexpr double kOffTol = 1e-300;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                       a(1, 2) * a(1, 2);
    if (off < kOffTol) {
      break;
    }
    for (const auto& [p, q] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      if (a(p, q) == 0.0) {
        continue;
      }
      const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
      const double t =
          (theta >= 0.0 ? 1.0 : -1.0) /
          (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
      rot(p, p) = c;
      rot(q, q) = c;
      rot(p, q) = s;
      rot(q, p) = -s;
      a = (rot.transpose() * a * rot).eval();
      a = (0.5 * (a + a.transpose())).eval();
    }
  }
  return a.diagonal().maxCoeff();
}

}  // namespace

Eig6 eig_hermitian(const Matrix6c& a) {
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermiticityTol) {
    throw NotHermitian("max |A - A^dag| = " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<Matrix6c> solver(0.5 * (a + a.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

const std::array<Matrix6c, 3>& qubit_observables() {
  static const std::array<Matrix6c, 3> kObservables = [] {
    std::array<Matrix6c, 3> obs;
    obs.fill(Matrix6c::Zero());
    const Complex i_unit{0.0, 1.0};
    for (int k = 0; k < 3; ++k) {
      obs[0](k, k + 3) = 1.0;
      obs[0](k + 3, k) = 1.0;
      obs[1](k, k + 3) = -i_unit;
      obs[1](k + 3, k) = i_unit;
      obs[2](k, k) = 1.0;
      obs[2](k + 3, k + 3) = -1.0;
    }
    return obs;
  }();
  return kObservables;
}

Matrix6c sqrt_psd(const Matrix6c& a) {
  const Eig6 eig = eig_hermitian(a);
  Eigen::Matrix<double, 6, 1> roots;
  for (int k = 0; k < 6; ++k) {
    roots[k] = std::sqrt(clip_nonnegative(eig.values[k]));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

Eigen::Matrix3d w_matrix(const Matrix6c& rho) {
  density_spectrum(eig_hermitian(rho));  // gate only
  const Matrix6c root = sqrt_psd(rho);
  const auto& obs = qubit_observables();
  Eigen::Matrix3d kernel;
  for (int mu = 0; mu < 3; ++mu) {
    const Matrix6c left = root * obs[mu] * root;
    for (int nu = mu; nu < 3; ++nu) {
      const double value = (left * obs[nu]).trace().real();
      kernel(mu, nu) = value;
      kernel(nu, mu) = value;
    }
  }
  return kernel;
}

Eigen::Matrix3d m_matrix(const Matrix6c& rho, double pair_skip_tol) {
  const Eig6 eig = eig_hermitian(rho);
  const Eigen::Matrix<double, 6, 1> p = density_spectrum(eig);

  // A_mu = V^dag S_mu V; entry (mu,nu) accumulates the weighted sum of
  // A_mu(m,n) conj(A_nu(m,n)) over eigenvalue pairs.
  std::array<Matrix6c, 3> a;
  for (int mu = 0; mu < 3; ++mu) {
    a[mu] = eig.vectors.adjoint() * qubit_observables()[mu] * eig.vectors;
  }

  Eigen::Matrix3d kernel;
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = mu; nu < 3; ++nu) {
      double sum = 0.0;
      for (int m = 0; m < 6; ++m) {
        for (int n = 0; n < 6; ++n) {
          const double total = p[m] + p[n];
          if (total < pair_skip_tol) {
            continue;
          }
          sum += (2.0 * p[m] * p[n] / total) *
                 (a[mu](m, n) * std::conj(a[nu](m, n))).real();
        }
      }
      kernel(mu, nu) = sum;
      kernel(nu, mu) = sum;
    }
  }
  return kernel;
}

double max_eigenvalue_sym3(const Eigen::Matrix3d& a) {
  const double q = a.trace() / 3.0;
  const Eigen::Matrix3d b = a - q * Eigen::Matrix3d::Identity();
  const double p_sq = (b * b).trace() / 6.0;
  if (p_sq <= 0.0) {
    return q;  // exactly a multiple of the identity
  }
  const double p = std::sqrt(p_sq);
  double r = b.determinant() / (2.0 * p_sq * p);
  r = std::clamp(r, -1.0, 1.0);
  if (1.0 - r * r < 1e-12) {
    // Nearly degenerate characteristic cubic: acos is ill-conditioned here.
    return jacobi_max_eigenvalue(a);
  }
  return q + 2.0 * p * std::cos(std::acos(r) / 3.0);
}

double lqu_oracle(const Matrix6c& rho) {
  return 1.0 - max_eigenvalue_sym3(w_matrix(rho));
}

double lqfi_oracle(const Matrix6c& rho) {
  return 1.0 - max_eigenvalue_sym3(m_matrix(rho));
}

BasisTransforms basis_transforms(const ASDensityMatrix& m,
                                 const ASSpectrum& s) {
  BasisTransforms out;
  out.deg_block1 = s.deg_block1;
  out.deg_block2 = s.deg_block2;

  out.p34 = Matrix6c::Identity();
  out.p34(2, 2) = 0.0;
  out.p34(3, 3) = 0.0;
  out.p34(2, 3) = 1.0;
  out.p34(3, 2) = 1.0;

  // In the permuted ordering the coherence blocks occupy slots (1,2) and
  // (3,4); each gets the Hermitian involution [[q, off],[off*, -q]]/D.
  out.r = Matrix6c::Identity();
  auto fill_block = [&](int base, double qv, Complex off, bool degenerate) {
    if (degenerate) {
      return;  // identity-basis convention
    }
    const double dd = std::sqrt(qv * qv + std::norm(off));
    out.r(base, base) = qv / dd;
    out.r(base, base + 1) = off / dd;
    out.r(base + 1, base) = std::conj(off) / dd;
    out.r(base + 1, base + 1) = -qv / dd;
  };
  fill_block(1, s.q1, m.u, s.deg_block1);
  fill_block(3, s.q2, m.v, s.deg_block2);

  for (int mu = 0; mu < 3; ++mu) {
    out.sigma[mu] =
        out.r * out.p34 * qubit_observables()[mu] * out.p34 * out.r;
  }
  return out;
}

}  // namespace asqc::oracle
