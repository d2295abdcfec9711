#include "asqc/as_state.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace asqc {

namespace {

constexpr double kValidateTol = 1e-9;

// 53-bit uniform draw in [0,1).  Written out explicitly (rather than via
// std::uniform_real_distribution) so that seeded sequences are byte-stable
// across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Clips tiny negative round-off (>= -1e-12) to zero; larger negatives have
// already been rejected by validate().
double clip_nonnegative(double x) { return x < 0.0 ? 0.0 : x; }

}  // namespace

ValidationReport validate(const ASDensityMatrix& m, double tol) {
  ValidationReport report;
  auto require = [&report](bool ok, const char* constraint, double magnitude) {
    if (!ok) {
      report.valid = false;
      report.violations.push_back({constraint, magnitude});
    }
  };

  const std::array<std::pair<const char*, double>, 6> diag = {{
      {"p1 >= 0", m.p1},
      {"a >= 0", m.a},
      {"b >= 0", m.b},
      {"c >= 0", m.c},
      {"d >= 0", m.d},
      {"p6 >= 0", m.p6},
  }};
  for (const auto& [name, value] : diag) {
    require(value >= -tol, name, -value);
  }

  const double trace = m.p1 + m.a + m.b + m.c + m.d + m.p6;
  require(std::abs(trace - 1.0) <= tol, "trace == 1", std::abs(trace - 1.0));

  const double slack1 = m.a * m.c - std::norm(m.u);
  require(slack1 >= -tol, "a*c >= |u|^2", -slack1);
  const double slack2 = m.b * m.d - std::norm(m.v);
  require(slack2 >= -tol, "b*d >= |v|^2", -slack2);

  return report;
}

ASSpectrum spectrum(const ASDensityMatrix& m) {
  const ValidationReport report = validate(m, kValidateTol);
  if (!report.valid) {
    std::string what = "spectrum: state violates";
    for (const auto& violation : report.violations) {
      what += " [" + violation.constraint + "]";
    }
    throw InvalidState(what);
  }

  const double s1 = std::hypot(m.a - m.c, 2.0 * std::abs(m.u));
  const double s2 = std::hypot(m.b - m.d, 2.0 * std::abs(m.v));

  ASSpectrum s;
  s.p1 = clip_nonnegative(m.p1);
  s.p6 = clip_nonnegative(m.p6);
  s.p2 = clip_nonnegative(0.5 * ((m.a + m.c) + s1));
  s.p3 = clip_nonnegative(0.5 * ((m.a + m.c) - s1));
  s.p4 = clip_nonnegative(0.5 * ((m.b + m.d) + s2));
  s.p5 = clip_nonnegative(0.5 * ((m.b + m.d) - s2));
  s.q1 = 0.5 * ((m.a - m.c) + s1);
  s.q2 = 0.5 * ((m.b - m.d) + s2);
  s.deg_block1 = s.q1 * s.q1 + std::norm(m.u) < kDegenerateBlockEps;
  s.deg_block2 = s.q2 * s.q2 + std::norm(m.v) < kDegenerateBlockEps;
  return s;
}

ASDensityMatrix random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);

  // Exponential draws normalized to unit sum: uniform on the 5-simplex.
  std::array<double, 6> w;
  double total = 0.0;
  for (double& x : w) {
    x = -std::log1p(-next_unit(rng));
    total += x;
  }

  ASDensityMatrix m;
  m.p1 = w[0] / total;
  m.a = w[1] / total;
  m.b = w[2] / total;
  m.c = w[3] / total;
  m.d = w[4] / total;
  m.p6 = w[5] / total;

  // Area-uniform draw on the disc of radius sqrt(a*c): |u|^2 = a*c*t with
  // t uniform, then a uniform phase.  Same for v on sqrt(b*d).
  auto draw_disc = [&rng](double radius_sq) {
    const double r = std::sqrt(radius_sq * next_unit(rng));
    const double phi = 2.0 * std::numbers::pi * next_unit(rng);
    return Complex{r * std::cos(phi), r * std::sin(phi)};
  };
  m.u = draw_disc(m.a * m.c);
  m.v = draw_disc(m.b * m.d);
  return m;
}

Matrix6c to_dense(const ASDensityMatrix& m) {
  Matrix6c rho = Matrix6c::Zero();
  rho(0, 0) = m.p1;
  rho(1, 1) = m.a;
  rho(2, 2) = m.b;
  rho(3, 3) = m.c;
  rho(4, 4) = m.d;
  rho(5, 5) = m.p6;
  rho(1, 3) = m.u;
  rho(3, 1) = std::conj(m.u);
  rho(2, 4) = m.v;
  rho(4, 2) = std::conj(m.v);
  return rho;
}

std::array<double, 10> to_flat(const ASDensityMatrix& m) {
  return {m.p1,          m.a,           m.b,           m.c,          m.d,
          m.p6,          m.u.real(),    m.u.imag(),    m.v.real(),   m.v.imag()};
}

ASDensityMatrix from_flat(const std::array<double, 10>& r) {
  ASDensityMatrix m;
  m.p1 = r[0];
  m.a = r[1];
  m.b = r[2];
  m.c = r[3];
  m.d = r[4];
  m.p6 = r[5];
  m.u = Complex{r[6], r[7]};
  m.v = Complex{r[8], r[9]};
  return m;
}

}  // namespace asqc
