#include "asqc/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace asqc {

namespace {

constexpr double kSpectrumSumTol = 1e-9;

double clip_nonnegative(double x) { return x < 0.0 ? 0.0 : x; }

// num/den with the convention that terms whose denominator collapses below
// kDegenerateBlockEps are dropped; in every use the numerator vanishes at
// least as fast as the denominator in that limit.
double block_ratio(double num, double den) {
  return den < kDegenerateBlockEps ? 0.0 : num / den;
}

// num/den for eigenvalue-pair denominators; pairs with vanishing total
// weight contribute nothing to the Fisher kernel.
double pair_ratio(double num, double den) {
  return den < kPairSkipTol ? 0.0 : num / den;
}

// Harmonic pair weight p*q/(p+q) with the same skip convention.
double pair_weight(double p, double q) { return pair_ratio(p * q, p + q); }

void check_spectrum_sum(const ASSpectrum& s) {
  const double sum = s.p1 + s.p2 + s.p3 + s.p4 + s.p5 + s.p6;
  if (std::abs(sum - 1.0) > kSpectrumSumTol) {
    throw InvalidSpectrum("spectrum entries sum to " + std::to_string(sum) +
                          ", expected 1 within 1e-9");
  }
}

// Eigenpairs of one 2x2 block [[diag_top, off], [off*, diag_bot]] acting on
// its (top, bot) slot pair.  Nondegenerate blocks use the q-parameterized
// eigenvectors (q, off*)/D for lam_plus and (off, -q)/D for lam_minus;
// degenerate blocks (q^2 + |off|^2 below threshold) fall back to standard
// basis vectors with the diagonal entries as eigenvalues.
struct BlockBasis {
  double lam[2];
  Complex top[2];
  Complex bot[2];
};

BlockBasis block_basis(double diag_top, double diag_bot, Complex off,
                       double lam_plus, double lam_minus, double q,
                       bool degenerate) {
  BlockBasis b;
  if (degenerate) {
    b.lam[0] = clip_nonnegative(diag_top);
    b.lam[1] = clip_nonnegative(diag_bot);
    b.top[0] = 1.0;
    b.bot[0] = 0.0;
    b.top[1] = 0.0;
    b.bot[1] = 1.0;
    return b;
  }
  const double dd = std::sqrt(q * q + std::norm(off));
  b.lam[0] = lam_plus;
  b.lam[1] = lam_minus;
  b.top[0] = q / dd;
  b.bot[0] = std::conj(off) / dd;
  b.top[1] = off / dd;
  b.bot[1] = -q / dd;
  return b;
}

BlockBasis block1_basis(const ASDensityMatrix& m, const ASSpectrum& s) {
  return block_basis(m.a, m.c, m.u, s.p2, s.p3, s.q1, s.deg_block1);
}

BlockBasis block2_basis(const ASDensityMatrix& m, const ASSpectrum& s) {
  return block_basis(m.b, m.d, m.v, s.p4, s.p5, s.q2, s.deg_block2);
}

// Transverse kernel sums.  The x observable couples the corner eigenvectors
// to one component of each block and the two blocks to each other, giving
// the unordered-pair sums below; `weight` is sqrt(p*q) for the skew kernel
// and the harmonic weight for the Fisher kernel (with its extra factor 2).
template <typename PairWeight>
double transverse_sum(double p1, double p6, const BlockBasis& b1,
                      const BlockBasis& b2, PairWeight weight) {
  double sum = 0.0;
  for (int k = 0; k < 2; ++k) {
    sum += weight(p1, b1.lam[k]) * std::norm(b1.bot[k]);
    sum += weight(b2.lam[k], p6) * std::norm(b2.top[k]);
    for (int l = 0; l < 2; ++l) {
      sum += weight(b1.lam[k], b2.lam[l]) * std::norm(b1.top[k]) *
             std::norm(b2.bot[l]);
    }
  }
  return 2.0 * sum;
}

// Longitudinal kernel sums.  The z observable is diagonal (+1 on the top
// slot, -1 on the bottom slot of each block, +1/-1 on the corners), so only
// within-block matrix elements appear.
template <typename CrossWeight>
double longitudinal_sum(double p1, double p6, const BlockBasis& b1,
                        const BlockBasis& b2, CrossWeight cross_weight) {
  double sum = p1 + p6;
  for (const BlockBasis& b : {b1, b2}) {
    for (int k = 0; k < 2; ++k) {
      const double zdiag = std::norm(b.top[k]) - std::norm(b.bot[k]);
      sum += b.lam[k] * zdiag * zdiag;
    }
    const Complex zoff =
        std::conj(b.top[0]) * b.top[1] - std::conj(b.bot[0]) * b.bot[1];
    sum += cross_weight(b.lam[0], b.lam[1]) * std::norm(zoff);
  }
  return sum;
}

double raw_wxx(double p1, double p6, const BlockBasis& b1,
               const BlockBasis& b2) {
  return transverse_sum(p1, p6, b1, b2, [](double p, double q) {
    return std::sqrt(clip_nonnegative(p) * clip_nonnegative(q));
  });
}

double raw_mxx(double p1, double p6, const BlockBasis& b1,
               const BlockBasis& b2) {
  return transverse_sum(p1, p6, b1, b2, [](double p, double q) {
    return 2.0 * pair_weight(p, q);
  });
}

double raw_wzz(double p1, double p6, const BlockBasis& b1,
               const BlockBasis& b2) {
  return longitudinal_sum(p1, p6, b1, b2, [](double p, double q) {
    return 2.0 * std::sqrt(clip_nonnegative(p) * clip_nonnegative(q));
  });
}

double raw_mzz(double p1, double p6, const BlockBasis& b1,
               const BlockBasis& b2) {
  return longitudinal_sum(p1, p6, b1, b2, [](double p, double q) {
    return 4.0 * pair_weight(p, q);
  });
}

// Rational form of the transverse LQFI candidate.  Valid only when both
// block splittings p2-p3 and p4-p5 are resolved (caller guards).
double rational_f1(const ASDensityMatrix& m, const ASSpectrum& s) {
  const double d23 = s.p2 - s.p3;
  const double d45 = s.p4 - s.p5;
  const double ac = m.a - m.c;
  const double bd = m.b - m.d;

  auto corner_term = [](double num, double den_a, double den_b) {
    if (den_a < kPairSkipTol || den_b < kPairSkipTol) {
      return 0.0;
    }
    return num / (den_a * den_b);
  };
  const double corner1 = corner_term(s.p1 * (s.p2 * s.p3 + s.p1 * m.c),
                                     s.p1 + s.p2, s.p1 + s.p3);
  const double corner6 = corner_term(s.p6 * (s.p4 * s.p5 + s.p6 * m.b),
                                     s.p4 + s.p6, s.p5 + s.p6);

  const double inner4 = pair_ratio(s.p2 * (d23 + ac), s.p2 + s.p4) +
                        pair_ratio(s.p3 * (d23 - ac), s.p3 + s.p4);
  const double inner5 = pair_ratio(s.p2 * (d23 + ac), s.p2 + s.p5) +
                        pair_ratio(s.p3 * (d23 - ac), s.p3 + s.p5);
  const double tail =
      (s.p4 * (d45 - bd) * inner4 + s.p5 * (d45 + bd) * inner5) / (d23 * d45);

  return 1.0 - 4.0 * (corner1 + corner6) - tail;
}

}  // namespace

std::string branch_label(Branch b) {
  switch (b) {
    case Branch::zero:
      return "branch0";
    case Branch::one:
      return "branch1";
    case Branch::tie:
      return "tie";
  }
  return "invalid";
}

BranchPair lqu_branches(const ASDensityMatrix& m, const ASSpectrum& s) {
  check_spectrum_sum(s);
  const double sp2 = std::sqrt(clip_nonnegative(s.p2));
  const double sp3 = std::sqrt(clip_nonnegative(s.p3));
  const double sp4 = std::sqrt(clip_nonnegative(s.p4));
  const double sp5 = std::sqrt(clip_nonnegative(s.p5));
  const double sp1 = std::sqrt(clip_nonnegative(s.p1));
  const double sp6 = std::sqrt(clip_nonnegative(s.p6));

  const double u0 =
      (sp2 - sp3) * (sp2 - sp3) + (sp4 - sp5) * (sp4 - sp5) -
      block_ratio((m.a - m.c) * (m.a - m.c), (sp2 + sp3) * (sp2 + sp3)) -
      block_ratio((m.b - m.d) * (m.b - m.d), (sp4 + sp5) * (sp4 + sp5));

  const double u1 =
      1.0 - 2.0 * (block_ratio(m.c + sp2 * sp3, sp2 + sp3) * sp1 +
                   block_ratio(m.b + sp4 * sp5, sp4 + sp5) * sp6 +
                   block_ratio(m.a + sp2 * sp3, sp2 + sp3) *
                       block_ratio(m.d + sp4 * sp5, sp4 + sp5));

  return {u0, u1};
}

BranchPair lqfi_branches(const ASDensityMatrix& m, const ASSpectrum& s) {
  check_spectrum_sum(s);
  const double f0 = 4.0 * (block_ratio(std::norm(m.u), m.a + m.c) +
                           block_ratio(std::norm(m.v), m.b + m.d));

  double f1 = 0.0;
  if (std::abs(s.p2 - s.p3) > kSingularSplitEps &&
      std::abs(s.p4 - s.p5) > kSingularSplitEps) {
    f1 = rational_f1(m, s);
  } else {
    const BlockBasis b1 = block1_basis(m, s);
    const BlockBasis b2 = block2_basis(m, s);
    f1 = 1.0 - raw_mxx(s.p1, s.p6, b1, b2);
  }

  return {f0, f1};
}

WMDiagonal wm_diagonal_raw(const ASDensityMatrix& m, const ASSpectrum& s) {
  check_spectrum_sum(s);
  const BlockBasis b1 = block1_basis(m, s);
  const BlockBasis b2 = block2_basis(m, s);
  WMDiagonal out;
  out.Wxx = raw_wxx(s.p1, s.p6, b1, b2);
  out.Wzz = raw_wzz(s.p1, s.p6, b1, b2);
  out.Mxx = raw_mxx(s.p1, s.p6, b1, b2);
  out.Mzz = raw_mzz(s.p1, s.p6, b1, b2);
  return out;
}

namespace {

Branch pick_branch(double branch0, double branch1) {
  if (std::abs(branch0 - branch1) < kTieEps) {
    return Branch::tie;
  }
  return branch0 < branch1 ? Branch::zero : Branch::one;
}

}  // namespace

CorrelationBranches correlations(const ASDensityMatrix& m) {
  const ASSpectrum s = spectrum(m);
  const BranchPair lqu = lqu_branches(m, s);
  const BranchPair lqfi = lqfi_branches(m, s);

  CorrelationBranches out;
  out.U0 = lqu.branch0;
  out.U1 = lqu.branch1;
  out.F0 = lqfi.branch0;
  out.F1 = lqfi.branch1;
  out.U = std::min(out.U0, out.U1);
  out.F = std::min(out.F0, out.F1);
  out.active_U = pick_branch(out.U0, out.U1);
  out.active_F = pick_branch(out.F0, out.F1);
  return out;
}

}  // namespace asqc
