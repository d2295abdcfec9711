#pragma once

#include <string>

#include "asqc/as_state.hpp"

namespace asqc {

/// Which local-observable branch realizes the minimum of a correlation
/// measure.  Branch 0 corresponds to the longitudinal (z) qubit direction,
/// branch 1 to the transverse (x,y) directions; `tie` marks a gap below
/// kTieEps.
enum class Branch { zero, one, tie };

std::string branch_label(Branch b);

/// Candidate values of one correlation measure: branch0 is the longitudinal
/// (z) candidate, branch1 the transverse (x,y) one; the measure itself is
/// their minimum.
struct BranchPair {
  double branch0 = 0.0;
  double branch1 = 0.0;
};

/// Diagonal entries of the two correlation kernels restricted to the qubit
/// observables: Wxx (= Wyy) and Wzz for the skew-information kernel, Mxx
/// (= Myy) and Mzz for the quantum Fisher information kernel.
struct WMDiagonal {
  double Wxx = 0.0;
  double Wzz = 0.0;
  double Mxx = 0.0;
  double Mzz = 0.0;
};

/// Full closed-form output for one state.
struct CorrelationBranches {
  double U0 = 0.0, U1 = 0.0;  // LQU branch candidates
  double F0 = 0.0, F1 = 0.0;  // LQFI branch candidates
  double U = 0.0, F = 0.0;    // minima
  Branch active_U = Branch::tie;
  Branch active_F = Branch::tie;
};

struct InvalidSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tolerance below which |p2-p3| or |p4-p5| makes the rational longitudinal
/// LQFI expression ill-conditioned; the spectral fallback is used instead.
inline constexpr double kSingularSplitEps = 1e-8;

/// Eigenvalue pairs with p_m + p_n below this threshold contribute nothing to
/// the Fisher kernel and are skipped.
inline constexpr double kPairSkipTol = 1e-14;

/// |branch0 - branch1| below this width is reported as a tie.
inline constexpr double kTieEps = 1e-12;

/// LQU branch candidates (U0, U1) from the closed-form expressions in the
/// eigenvalues.  Ratios whose denominator falls below kDegenerateBlockEps are
/// dropped (their numerators vanish identically in that limit).  Throws
/// InvalidSpectrum if the spectrum does not sum to 1 within 1e-9.
BranchPair lqu_branches(const ASDensityMatrix& m, const ASSpectrum& s);

/// LQFI branch candidates (F0, F1).  The rational form of F1 divides by
/// (p2-p3)(p4-p5); when either splitting falls below kSingularSplitEps the
/// routine evaluates F1 = 1 - Mxx from the spectral sums instead.
BranchPair lqfi_branches(const ASDensityMatrix& m, const ASSpectrum& s);

/// Kernel diagonals evaluated directly from the spectral decomposition
/// (explicit eigenvector sums, no algebraic simplification).  Serves as the
/// internal cross-check route for the compact branch formulas via
/// U0 = 1-Wzz, U1 = 1-Wxx, F0 = 1-Mzz, F1 = 1-Mxx.
WMDiagonal wm_diagonal_raw(const ASDensityMatrix& m, const ASSpectrum& s);

/// One-call evaluation: spectrum + both branch pairs + minima + active
/// branch labels.
CorrelationBranches correlations(const ASDensityMatrix& m);

}  // namespace asqc
