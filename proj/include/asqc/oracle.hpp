#pragma once

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

#include "asqc/as_state.hpp"

namespace asqc::oracle {

/// Brute-force spectral implementations of the correlation measures for
/// arbitrary 6x6 density matrices.  This route shares no formulas with the
/// closed-form module: states are diagonalized numerically and the kernel
/// matrices are accumulated from the definition sums, so agreement between
/// the two routes is a meaningful cross-check.

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDensityMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hermiticity gate for eig_hermitian.
inline constexpr double kHermiticityTol = 1e-12;

/// Density-matrix gates for the kernel builders: eigenvalues may undershoot
/// zero and the trace may deviate from one by at most this much.
inline constexpr double kDensityTol = 1e-10;

/// Pairs of eigenvalues whose sum falls below this default threshold are
/// skipped in the Fisher kernel sum.
inline constexpr double kDefaultPairSkip = 1e-14;

struct Eig6 {
  Eigen::Matrix<double, 6, 1> values;  // ascending
  Matrix6c vectors;                    // columns, matching order
};

/// Numerical eigendecomposition.  Throws NotHermitian if max |A - A^dag|
/// exceeds kHermiticityTol.
Eig6 eig_hermitian(const Matrix6c& a);

/// The three local qubit observables sigma_x/y/z (x) I_3, in the product
/// basis ordering (up,1),(up,0),(up,-1),(down,1),(down,0),(down,-1).
const std::array<Matrix6c, 3>& qubit_observables();

/// Principal square root of a positive-semidefinite Hermitian matrix
/// (negative round-off eigenvalues are clipped to zero).
Matrix6c sqrt_psd(const Matrix6c& a);

/// Skew-information kernel W(mu,nu) = Tr[sqrt(rho) S_mu sqrt(rho) S_nu]
/// over the local qubit observables.  Throws NotDensityMatrix if rho fails
/// the PSD/trace gates.
Eigen::Matrix3d w_matrix(const Matrix6c& rho);

/// Fisher-information kernel M(mu,nu) = sum_{mn} 2 p_m p_n/(p_m+p_n)
/// <m|S_mu|n><n|S_nu|m>, skipping pairs with p_m+p_n < pair_skip_tol.
Eigen::Matrix3d m_matrix(const Matrix6c& rho,
                         double pair_skip_tol = kDefaultPairSkip);

/// Largest eigenvalue of a symmetric 3x3 matrix via the trigonometric
/// solution of the characteristic cubic, falling back to Jacobi sweeps when
/// the cubic discriminant is nearly degenerate.
double max_eigenvalue_sym3(const Eigen::Matrix3d& a);

/// LQU = 1 - max eigenvalue of W.
double lqu_oracle(const Matrix6c& rho);

/// LQFI = 1 - max eigenvalue of M.
double lqfi_oracle(const Matrix6c& rho);

/// Exact transformation pair that block-diagonalizes an AS state: P34 swaps
/// the middle basis states so the coherence blocks become adjacent, and the
/// involution R (built from the block eigenvectors) diagonalizes them.
/// sigma[mu] = R * P34 * (sigma_mu (x) I_3) * P34 * R are the observables in
/// the eigenbasis.  Degenerate blocks fall back to identity and are flagged.
struct BasisTransforms {
  Matrix6c p34;
  Matrix6c r;
  std::array<Matrix6c, 3> sigma;
  bool deg_block1 = false;
  bool deg_block2 = false;
};

BasisTransforms basis_transforms(const ASDensityMatrix& m,
                                 const ASSpectrum& s);

}  // namespace asqc::oracle
