#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "asqc/closed_form.hpp"
#include "test_support.hpp"

using namespace asqc;
using asqc_test::maximally_mixed;
using asqc_test::reference_state;

namespace {

// Swaps the roles of the two coherence blocks: (p1,a,u,c) <-> (p6,d,v,b).
// The measures are invariant because this is a relabeling of the product
// basis that maps the observable family onto itself.
ASDensityMatrix swap_blocks(const ASDensityMatrix& m) {
  ASDensityMatrix out;
  out.p1 = m.p6;
  out.p6 = m.p1;
  out.a = m.d;
  out.d = m.a;
  out.b = m.c;
  out.c = m.b;
  out.u = m.v;
  out.v = m.u;
  return out;
}

ASDensityMatrix rephase(const ASDensityMatrix& m, double phi_u,
                        double phi_v) {
  ASDensityMatrix out = m;
  out.u = m.u * std::polar(1.0, phi_u);
  out.v = m.v * std::polar(1.0, phi_v);
  return out;
}

}  // namespace

TEST_CASE("reference state branch values are exact") {
  const ASDensityMatrix m = reference_state();
  const ASSpectrum s = spectrum(m);

  const BranchPair lqu = lqu_branches(m, s);
  CHECK(lqu.branch0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lqu.branch1 == doctest::Approx(0.25).epsilon(1e-14));

  const BranchPair lqfi = lqfi_branches(m, s);
  CHECK(lqfi.branch0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lqfi.branch1 == doctest::Approx(0.35).epsilon(1e-13));

  const CorrelationBranches c = correlations(m);
  CHECK(c.U == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(c.F == doctest::Approx(0.35).epsilon(1e-13));
  CHECK(c.active_U == Branch::one);
  CHECK(c.active_F == Branch::one);
}

TEST_CASE("reference state kernel diagonals are exact") {
  const ASDensityMatrix m = reference_state();
  const WMDiagonal wm = wm_diagonal_raw(m, spectrum(m));
  CHECK(wm.Wzz == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(wm.Wxx == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(wm.Mzz == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(wm.Mxx == doctest::Approx(0.65).epsilon(1e-13));
}

TEST_CASE("maximally mixed state carries no quantum correlations") {
  const CorrelationBranches c = correlations(maximally_mixed());
  CHECK(std::abs(c.U0) <= 1e-12);
  CHECK(std::abs(c.U1) <= 1e-12);
  CHECK(std::abs(c.F0) <= 1e-12);
  CHECK(std::abs(c.F1) <= 1e-12);
  CHECK(c.active_U == Branch::tie);
  CHECK(c.active_F == Branch::tie);

  const WMDiagonal wm =
      wm_diagonal_raw(maximally_mixed(), spectrum(maximally_mixed()));
  CHECK(wm.Wxx == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wm.Wzz == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wm.Mxx == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wm.Mzz == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pure product corner state carries no quantum correlations") {
  ASDensityMatrix m;
  m.p1 = 1.0;
  const CorrelationBranches c = correlations(m);
  CHECK(std::abs(c.U) <= 1e-12);
  CHECK(std::abs(c.F) <= 1e-12);
}

TEST_CASE("classical (coherence-free) states have vanishing measures") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ASDensityMatrix m = random_state(seed);
    m.u = 0.0;
    m.v = 0.0;
    const CorrelationBranches c = correlations(m);
    CAPTURE(seed);
    CHECK(std::abs(c.U) <= 1e-12);
    CHECK(std::abs(c.F) <= 1e-12);
  }
}

TEST_CASE("measures lie in [0, 1] and minima match branch pairs") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const ASDensityMatrix m = random_state(seed);
    const CorrelationBranches c = correlations(m);
    CAPTURE(seed);
    CHECK(c.U >= -1e-12);
    CHECK(c.U <= 1.0 + 1e-12);
    CHECK(c.F >= -1e-12);
    CHECK(c.F <= 1.0 + 1e-12);
    CHECK(c.U == std::min(c.U0, c.U1));
    CHECK(c.F == std::min(c.F0, c.F1));
  }
}

TEST_CASE("block swap leaves every branch value unchanged") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ASDensityMatrix m = random_state(seed);
    const CorrelationBranches a = correlations(m);
    const CorrelationBranches b = correlations(swap_blocks(m));
    CAPTURE(seed);
    CHECK(std::abs(a.U0 - b.U0) <= 1e-12);
    CHECK(std::abs(a.U1 - b.U1) <= 1e-12);
    CHECK(std::abs(a.F0 - b.F0) <= 1e-12);
    CHECK(std::abs(a.F1 - b.F1) <= 1e-12);
  }
}

TEST_CASE("coherence phases do not affect any branch value") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ASDensityMatrix m = random_state(seed);
    const CorrelationBranches a = correlations(m);
    const CorrelationBranches b = correlations(rephase(m, 1.234, -2.345));
    CAPTURE(seed);
    CHECK(std::abs(a.U0 - b.U0) <= 1e-12);
    CHECK(std::abs(a.U1 - b.U1) <= 1e-12);
    CHECK(std::abs(a.F0 - b.F0) <= 1e-12);
    CHECK(std::abs(a.F1 - b.F1) <= 1e-12);
  }
}

TEST_CASE("compact formulas agree with the spectral kernel sums") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ASDensityMatrix m = random_state(seed);
    const ASSpectrum s = spectrum(m);
    const BranchPair lqu = lqu_branches(m, s);
    const BranchPair lqfi = lqfi_branches(m, s);
    const WMDiagonal wm = wm_diagonal_raw(m, s);
    CAPTURE(seed);
    CHECK(std::abs(lqu.branch0 - (1.0 - wm.Wzz)) <= 1e-10);
    CHECK(std::abs(lqu.branch1 - (1.0 - wm.Wxx)) <= 1e-10);
    CHECK(std::abs(lqfi.branch0 - (1.0 - wm.Mzz)) <= 1e-10);
    CHECK(std::abs(lqfi.branch1 - (1.0 - wm.Mxx)) <= 1e-10);
  }
}

TEST_CASE("degenerate-split states use the spectral fallback consistently") {
  // p4 == p5 exactly: the rational longitudinal form is singular, the
  // fallback must still match the kernel sum.
  const ASDensityMatrix m = reference_state();
  const ASSpectrum s = spectrum(m);
  REQUIRE(std::abs(s.p4 - s.p5) <= kSingularSplitEps);
  const BranchPair lqfi = lqfi_branches(m, s);
  const WMDiagonal wm = wm_diagonal_raw(m, s);
  CHECK(std::abs(lqfi.branch1 - (1.0 - wm.Mxx)) <= 1e-14);
}

TEST_CASE("branch sums reject an inconsistent spectrum") {
  const ASDensityMatrix m = reference_state();
  ASSpectrum s = spectrum(m);
  s.p2 += 0.5;  // no longer sums to 1
  CHECK_THROWS_AS(lqu_branches(m, s), InvalidSpectrum);
  CHECK_THROWS_AS(lqfi_branches(m, s), InvalidSpectrum);
  CHECK_THROWS_AS(wm_diagonal_raw(m, s), InvalidSpectrum);
}

TEST_CASE("branch labels") {
  CHECK(branch_label(Branch::zero) == "branch0");
  CHECK(branch_label(Branch::one) == "branch1");
  CHECK(branch_label(Branch::tie) == "tie");
}
