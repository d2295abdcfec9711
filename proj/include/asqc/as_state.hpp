#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace asqc {

using Complex = std::complex<double>;
using Matrix6c = Eigen::Matrix<Complex, 6, 6>;

/// Axially symmetric qubit-qutrit density matrix.
///
/// The state commutes with the total z-spin diag(3/2,1/2,-1/2,1/2,-1/2,-3/2)
/// and is therefore fully described by six real diagonal weights and the two
/// coherences u (rows/cols 2,4) and v (rows/cols 3,5):
///
///     [ p1  .   .   .   .   .  ]
///     [ .   a   .   u   .   .  ]
///     [ .   .   b   .   v   .  ]
///     [ .   u*  .   c   .   .  ]
///     [ .   .   v*  .   d   .  ]
///     [ .   .   .   .   .   p6 ]
///
/// Physical states satisfy p1+a+b+c+d+p6 = 1, nonnegative diagonal, and the
/// block positivity conditions a*c >= |u|^2, b*d >= |v|^2.
struct ASDensityMatrix {
  double p1 = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double p6 = 0.0;
  Complex u{0.0, 0.0};
  Complex v{0.0, 0.0};
};

/// Spectral data of an AS state.
///
/// p2 >= p3 come from the {a,c,u} block, p4 >= p5 from the {b,d,v} block.
/// q1, q2 parameterize the block eigenvectors and obey
/// q^2 = (a-c) q + |u|^2 (and the b,d,v analogue).  A deg flag marks a block
/// whose eigenvector parameterization q^2+|u|^2 collapses below threshold;
/// such blocks fall back to standard basis vectors.
struct ASSpectrum {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0, p5 = 0.0, p6 = 0.0;
  double q1 = 0.0, q2 = 0.0;
  bool deg_block1 = false;
  bool deg_block2 = false;
};

struct Violation {
  std::string constraint;
  double magnitude = 0.0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Threshold on q^2+|u|^2 below which a 2x2 block is treated as basis-aligned
/// (standard basis eigenvectors).  Below it the q-parameterized eigenvector
/// formulas are 0/0; the substitution changes W/M values by at most O(eps).
inline constexpr double kDegenerateBlockEps = 1e-12;

/// Checks nonnegativity of the diagonal, unit trace, and the two block
/// positivity conditions, each at tolerance tol.  Violations are reported,
/// never thrown.
ValidationReport validate(const ASDensityMatrix& m, double tol);

/// Closed-form spectral decomposition.
///
/// p2,p3 = ((a+c) +- sqrt((a-c)^2+4|u|^2))/2 and q1 = (a-c+sqrt(...))/2,
/// analogously for the second block.  Eigenvalues in [-1e-12, 0) from
/// round-off are clipped to 0.  Throws InvalidState if validate(m, 1e-9)
/// fails.
ASSpectrum spectrum(const ASDensityMatrix& m);

/// Deterministic random valid state.  Diagonal weights are drawn uniformly on
/// the simplex (normalized exponentials); u and v are drawn uniformly on the
/// discs |u| <= sqrt(a*c), |v| <= sqrt(b*d).  This measure is a convention
/// chosen for reproducible property tests, not canonical.
ASDensityMatrix random_state(std::uint64_t seed);

/// Assembles the dense 6x6 matrix with the AS sparsity pattern.  The result
/// is exactly Hermitian.
Matrix6c to_dense(const ASDensityMatrix& m);

/// Flat 10-real serialization order used by the CLI and CSV:
/// p1, a, b, c, d, p6, Re(u), Im(u), Re(v), Im(v).
std::array<double, 10> to_flat(const ASDensityMatrix& m);
ASDensityMatrix from_flat(const std::array<double, 10>& r);

}  // namespace asqc
