#include "statespace/quantum.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "statespace/errors.hpp"
#include "test_support.hpp"

namespace statespace::quantum {
namespace {

constexpr double kPi = std::numbers::pi;
using testing::Gen;
using testing::packet_p;
using testing::packet_x;
using testing::rel_diff;

PositionGrid standard_grid() { return PositionGrid(-10, 10, 512); }

// Cell 64 has midpoint exactly 0.
PositionGrid zero_centred_grid() { return PositionGrid(-8.0625, 7.9375, 128); }

QuantumState analytic_packet(const PositionGrid& g, double x0, double p0, double sigma) {
  return QuantumState::from_function(
      g, [&](double x) { return packet_x(x, x0, p0, sigma); });
}

double max_abs_diff(const QuantumState& a, const QuantumState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return worst;
}

TEST(PositionGrid, InvariantsAndConjugateGrid) {
  EXPECT_THROW(PositionGrid(0, 1, 1), DomainError);
  EXPECT_THROW(PositionGrid(1, 0, 8), DomainError);
  const PositionGrid g(-2, 2, 8);
  EXPECT_EQ(g.dx(), 0.5);
  EXPECT_NEAR(g.p_at(0), -kPi / g.dx(), 1e-15);
  EXPECT_EQ(g.p_at(4), 0.0);
  EXPECT_LT(g.p_at(7), kPi / g.dx());
  EXPECT_NEAR(g.dx() * g.dp(), 2 * kPi / 8, 1e-15);
}

TEST(QuantumMagnitude, Cases) {
  const auto g = standard_grid();
  EXPECT_EQ(magnitude(QuantumState::zero(g)).value(), 0.0);
  EXPECT_NEAR(magnitude(QuantumState::point(g, 17)).value(), 1.0, 1e-15);
  // Oracle: the analytic packet is normalized as a continuous function.
  EXPECT_NEAR(magnitude(analytic_packet(g, 0, 0, 1)).value(), 1.0, 1e-8);
}

TEST(QuantumInner, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0.5, 1.0, 1.0);
  const auto self = inner(s, s);
  EXPECT_NEAR(self.real(), 1.0, 1e-13);
  EXPECT_EQ(self.imag(), 0.0);

  EXPECT_EQ(inner(QuantumState::point(g, 3), QuantumState::point(g, 4)), Complex(0.0));

  // Oracle: single term conj(1/sqrt(dx)) (e^{i pi/3}/sqrt(dx)) dx.
  const auto a = QuantumState::point(g, 10, 0.0);
  const auto b = QuantumState::point(g, 10, kPi / 3);
  const Complex oracle = std::conj(a.amplitudes()[10]) * b.amplitudes()[10] * g.dx();
  EXPECT_NEAR(std::abs(inner(a, b) - oracle), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(a, b) - std::polar(1.0, kPi / 3)), 0.0, 1e-14);
}

TEST(QuantumInner, IncompatibleStatesRejected) {
  const auto s = QuantumState::zero(standard_grid());
  EXPECT_THROW(inner(s, QuantumState::zero(PositionGrid(-10, 10, 256))), IncompatibleStates);
  EXPECT_THROW(inner(s, QuantumState::zero(standard_grid(), Basis::momentum)),
               IncompatibleStates);
  EXPECT_THROW(combine(s, QuantumState::zero(PositionGrid(-10, 10.5, 512))),
               IncompatibleStates);
}

TEST(QuantumCombine, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_EQ(max_abs_diff(combine(s, QuantumState::zero(g)), s), 0.0);
  EXPECT_LE(magnitude(combine(s, apply_phase(kPi, s))).value(), 1e-20);
}

TEST(QuantumCombine, DisplacedGaussiansInterfere) {
  const auto g = standard_grid();
  const auto s1 = gaussian_wavepacket(g, -2, 0, 1);
  const auto s2 = gaussian_wavepacket(g, 2, 0, 1);
  // Oracle: direct summation of |psi1 + psi2|^2 dx.
  double direct = 0.0;
  for (std::size_t i = 0; i < g.n(); ++i) {
    direct += std::norm(s1.amplitudes()[i] + s2.amplitudes()[i]) * g.dx();
  }
  const double corr = correlation(s1, s2).value();
  const double m = magnitude(combine(s1, s2)).value();
  EXPECT_LE(rel_diff(m, direct), 1e-13);
  EXPECT_LE(rel_diff(m, 2 + 2 * corr), 1e-12);
  // Overlap of packets 4 sigma apart is e^{-d^2 / (8 sigma^2)} = e^{-2}.
  EXPECT_NEAR(corr, std::exp(-2.0), 1e-10);
}

TEST(QuantumGroup, Cases) {
  const PositionGrid g1(0, 1, 4);
  const PositionGrid g2(-3, 3, 6);
  const auto a = QuantumState::point(g1, 1, 0.3);
  const auto b = QuantumState::point(g2, 4, -1.1);
  const auto ab = group(a, b);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == 1 && j == 4) {
        EXPECT_EQ(ab.amplitude(i, j), a.amplitudes()[1] * b.amplitudes()[4]);
      } else {
        EXPECT_EQ(ab.amplitude(i, j), Complex(0.0));
      }
    }
  }
  EXPECT_NEAR(magnitude(ab).value(), 1.0, 1e-14);
  EXPECT_THROW(ab.amplitude(4, 0), IndexError);

  const auto n1 = gaussian_wavepacket(PositionGrid(-10, 10, 128), 1, 0.5, 1);
  const auto n2 = gaussian_wavepacket(PositionGrid(-6, 6, 96), -1, 0, 0.7);
  EXPECT_NEAR(magnitude(group(n1, n2)).value(), 1.0, 1e-12);
}

TEST(QuantumGroup, TwoCellKroneckerEnumeration) {
  const PositionGrid g(0, 1, 2);
  const Complex a(1, 2), b(-0.5, 0.25), c(3, -1), d(0, 0.75);
  const auto s1 = QuantumState::from_amplitudes(g, {a, b});
  const auto s2 = QuantumState::from_amplitudes(g, {c, d});
  const auto grouped = group(s1, s2);
  const Complex expected[] = {a * c, a * d, b * c, b * d};
  ASSERT_EQ(grouped.amplitudes().size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(grouped.amplitudes()[k], expected[k]);
  EXPECT_EQ(grouped.measure(), g.dx() * g.dx());
}

TEST(QuantumResize, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_EQ(max_abs_diff(resize(1.0, s), s), 0.0);
  const auto four = resize(4.0, s);
  for (std::size_t i = 0; i < g.n(); ++i) {
    EXPECT_EQ(four.amplitudes()[i], 2.0 * s.amplitudes()[i]);
  }
  EXPECT_NEAR(magnitude(four).value(), 4.0, 1e-12);
  EXPECT_EQ(magnitude(resize(0.0, s)).value(), 0.0);
  EXPECT_THROW(resize(-1.0, s), DomainError);
}

TEST(QuantumApplyPhase, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 1, 1);
  EXPECT_EQ(max_abs_diff(apply_phase(0.0, s), s), 0.0);
  EXPECT_LE(max_abs_diff(apply_phase(2 * kPi, s), s), 1e-15);
  // Oracle: Re(e^{-ib} <s|s>) / M = cos(b).
  const double b = kPi / 3;
  const double oracle = (std::polar(1.0, -b) * inner(s, s)).real() / magnitude(s).value();
  EXPECT_NEAR(correlation(apply_phase(b, s), s).value(), oracle, 1e-12);
  EXPECT_NEAR(correlation(apply_phase(b, s), s).value(), 0.5, 1e-12);
  EXPECT_THROW(apply_phase(std::nan(""), s), DomainError);
}

TEST(QuantumApplyPhase, ChangesCorrelationButNotOverlapModulus) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, -1, 0.5, 1);
  const auto t = gaussian_wavepacket(g, 1, -0.5, 1.3);
  const auto shifted = apply_phase(1.2, s);
  EXPECT_NEAR(std::abs(inner(shifted, t)), std::abs(inner(s, t)), 1e-14);
  EXPECT_GT(std::abs(correlation(shifted, t).value() - correlation(s, t).value()), 1e-3);
}

TEST(QuantumCorrelation, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_NEAR(correlation(s, s).value(), 1.0, 1e-15);
  EXPECT_NEAR(correlation(s, resize(1.0, apply_phase(kPi, s))).value(), -1.0, 1e-15);
  EXPECT_EQ(correlation(QuantumState::point(g, 1), QuantumState::point(g, 2)).value(), 0.0);
  EXPECT_THROW(correlation(s, QuantumState::zero(g)), DomainError);
  EXPECT_THROW(correlation(QuantumState::zero(g), s), DomainError);
}

TEST(QuantumCorrelationAngle, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_NEAR(correlation_angle(s, s).radians(), 0.0, 1e-7);
  EXPECT_NEAR(correlation_angle(s, apply_phase(kPi, s)).radians(), kPi, 1e-7);
  // Oracle: Re(e^{-i pi/2}) = 0, arccos(0) = pi/2.
  EXPECT_NEAR(correlation_angle(s, apply_phase(kPi / 2, s)).radians(), kPi / 2, 1e-12);
  EXPECT_THROW(correlation_angle(s, QuantumState::zero(g)), DomainError);
}

TEST(MomentumBasis, PointStateIsFlat) {
  const auto g = zero_centred_grid();
  ASSERT_EQ(g.x_at(64), 0.0);
  const auto phi = to_momentum_basis(QuantumState::point(g, 64));
  EXPECT_EQ(phi.basis(), Basis::momentum);
  // |phi_k|^2 = dx / (2 pi) everywhere.
  const double flat = g.dx() / (2 * kPi);
  for (const auto& a : phi.amplitudes()) EXPECT_NEAR(std::norm(a), flat, 1e-15);
}

TEST(MomentumBasis, ConstantIsPointAtZeroMomentum) {
  const auto g = PositionGrid(-5, 5, 64);
  const auto s = QuantumState::from_function(g, [](double) { return Complex(1.0); });
  const auto phi = to_momentum_basis(s);
  ASSERT_EQ(g.p_at(32), 0.0);
  for (std::size_t k = 0; k < g.n(); ++k) {
    if (k == 32) {
      EXPECT_NEAR(std::abs(phi.amplitudes()[k]), std::sqrt(magnitude(s).value() / g.dp()), 1e-12);
    } else {
      EXPECT_NEAR(std::abs(phi.amplitudes()[k]), 0.0, 1e-12);
    }
  }
}

TEST(MomentumBasis, GaussianMatchesAnalyticTransform) {
  for (const auto& g : {standard_grid(), PositionGrid(-7, 13, 512)}) {
    const auto phi = to_momentum_basis(analytic_packet(g, 1.5, 0, 1));
    for (std::size_t k = 0; k < g.n(); ++k) {
      EXPECT_NEAR(std::abs(phi.amplitudes()[k] - packet_p(g.p_at(k), 1.5, 0, 1)), 0.0, 1e-6)
          << "p=" << g.p_at(k);
    }
    EXPECT_NEAR(basis_stddev(phi), 0.5, 1e-8);
  }
}

TEST(MomentumBasis, WrongBasisRejected) {
  const auto g = standard_grid();
  EXPECT_THROW(to_momentum_basis(QuantumState::zero(g, Basis::momentum)), BasisError);
  EXPECT_THROW(to_position_basis(QuantumState::zero(g, Basis::position)), BasisError);
}

TEST(PositionBasis, RoundTripAndAnalyticInverse) {
  const auto g = standard_grid();
  Gen gen(11);
  const auto s = gen.amplitudes(g);
  EXPECT_LE(max_abs_diff(to_position_basis(to_momentum_basis(s)), s), 1e-10);

  const auto zero_p = to_position_basis(QuantumState::point(g, 256, 0.0, Basis::momentum));
  const double expected = std::sqrt(g.dp() / (2 * kPi));
  for (const auto& a : zero_p.amplitudes()) EXPECT_NEAR(std::abs(a), expected, 1e-14);

  const auto phi = QuantumState::from_function(
      g, [](double p) { return packet_p(p, 0, 0, 1); }, Basis::momentum);
  const auto psi = to_position_basis(phi);
  for (std::size_t i = 0; i < g.n(); ++i) {
    EXPECT_NEAR(std::abs(psi.amplitudes()[i] - packet_x(g.x_at(i), 0, 0, 1)), 0.0, 1e-6);
  }
  EXPECT_NEAR(basis_stddev(psi), 1.0, 1e-8);
}

TEST(QuantumNormalize, Cases) {
  const auto g = standard_grid();
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_LE(max_abs_diff(normalize(s), s), 1e-12);
  const auto big = resize(4.0, s);
  const auto halved = normalize(big);
  for (std::size_t i = 0; i < g.n(); ++i) {
    EXPECT_NEAR(std::abs(halved.amplitudes()[i] - 0.5 * big.amplitudes()[i]), 0.0, 1e-15);
  }
  Gen gen(3);
  const auto r = normalize(gen.amplitudes(g));
  double recomputed = 0.0;
  for (const auto& a : r.amplitudes()) recomputed += std::norm(a) * g.dx();
  EXPECT_NEAR(recomputed, 1.0, 1e-12);
  EXPECT_THROW(normalize(QuantumState::zero(g)), DomainError);
}

TEST(GaussianWavepacket, Moments) {
  const auto g = standard_grid();
  for (double x0 : {0.0, 2.0}) {
    const auto s = gaussian_wavepacket(g, x0, 0, 1);
    EXPECT_NEAR(magnitude(s).value(), 1.0, 1e-14);
    // Oracle: first moment summed directly over the grid.
    double first = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) first += g.x_at(i) * std::norm(s.amplitudes()[i]) * g.dx();
    EXPECT_NEAR(first, x0, 1e-8);
    EXPECT_NEAR(basis_mean(s), x0, 1e-8);
  }
}

TEST(GaussianWavepacket, MomentumPeakFollowsP0) {
  const auto g = standard_grid();
  const auto phi = to_momentum_basis(gaussian_wavepacket(g, 0, 3, 1));
  std::size_t best = 0;
  for (std::size_t k = 0; k < g.n(); ++k) {
    if (std::norm(phi.amplitudes()[k]) > std::norm(phi.amplitudes()[best])) best = k;
  }
  EXPECT_LE(std::abs(g.p_at(best) - 3.0), 0.5 * g.dp());
  EXPECT_NEAR(basis_mean(phi), 3.0, 1e-8);
}

TEST(GaussianWavepacket, Errors) {
  const auto g = standard_grid();
  EXPECT_THROW(gaussian_wavepacket(g, 0, 0, 0.0), DomainError);
  EXPECT_THROW(gaussian_wavepacket(g, 0, 0, -1.0), DomainError);
  ::testing::internal::CaptureStderr();
  gaussian_wavepacket(g, 8, 0, 1);
  EXPECT_NE(::testing::internal::GetCapturedStderr().find("warning"), std::string::npos);
  ::testing::internal::CaptureStderr();
  gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_TRUE(::testing::internal::GetCapturedStderr().empty());
}

TEST(BasisStddev, Cases) {
  const auto g = standard_grid();
  EXPECT_EQ(basis_stddev(QuantumState::point(g, 100)), 0.0);
  const auto s = gaussian_wavepacket(g, 0, 0, 1);
  EXPECT_NEAR(basis_stddev(s), 1.0, 1e-3);
  EXPECT_NEAR(basis_stddev(to_momentum_basis(s)), 0.5, 1e-3);
  EXPECT_THROW(basis_stddev(QuantumState::zero(g)), DomainError);
}

TEST(QuantumProperties, InterferenceLawAndFactorization) {
  Gen gen(1729);
  const PositionGrid g(-4, 4, 64);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s1 = gen.amplitudes(g);
    const auto s2 = gen.amplitudes(g);
    const auto m1 = magnitude(s1);
    const auto m2 = magnitude(s2);
    const double m = magnitude(combine(s1, s2)).value();
    EXPECT_LE(rel_diff(m, combined_magnitude(m1, m2, correlation(s1, s2)).value()), 1e-10);
    EXPECT_LE(rel_diff(m, combined_magnitude_factored(m1, m2, correlation_angle(s1, s2)).value()),
              1e-10);
    EXPECT_LE(std::abs(correlation(s1, s2).value()), 1.0 + 1e-12);

    const auto self = inner(s1, s1);
    EXPECT_LE(std::abs(self.imag()), 1e-13 * m1.value());
    EXPECT_LE(rel_diff(self.real(), m1.value()), 1e-13);
  }
}

TEST(QuantumProperties, PhaseAndResizeLaws) {
  Gen gen(99);
  const PositionGrid g(-4, 4, 64);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen.amplitudes(g);
    const auto unit = normalize(s);
    const double b = gen.uniform(-20, 20);
    EXPECT_LE(rel_diff(magnitude(apply_phase(b, s)).value(), magnitude(s).value()), 1e-13);
    EXPECT_NEAR(correlation(apply_phase(b, unit), unit).value(), std::cos(b), 1e-12);

    const double a = gen.uniform(0, 10);
    const double c = gen.uniform(0, 10);
    EXPECT_LE(rel_diff(magnitude(resize(a, s)).value(), a * magnitude(s).value()), 1e-12);
    const auto twice = resize(a, resize(c, s));
    const auto once = resize(a * c, s);
    for (std::size_t i = 0; i < g.n(); ++i) {
      EXPECT_LE(std::abs(twice.amplitudes()[i] - once.amplitudes()[i]),
                1e-13 * std::max(1.0, std::abs(once.amplitudes()[i])));
    }
  }
}

TEST(QuantumProperties, GroupLaws) {
  Gen gen(5);
  const PositionGrid g1(-2, 2, 16);
  const PositionGrid g2(0, 3, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen.amplitudes(g1);
    const auto a2 = gen.amplitudes(g1);
    const auto b = gen.amplitudes(g2);
    const auto b2 = gen.amplitudes(g2);
    EXPECT_LE(rel_diff(magnitude(group(a, b)).value(),
                       magnitude(a).value() * magnitude(b).value()),
              1e-12);
    const auto left_dist = group(combine(a, a2), b);
    const auto left_sum = combine(group(a, b), group(a2, b));
    const auto right_dist = group(a, combine(b, b2));
    const auto right_sum = combine(group(a, b), group(a, b2));
    for (std::size_t k = 0; k < left_dist.amplitudes().size(); ++k) {
      const double scale = std::max(1.0, std::abs(left_sum.amplitudes()[k]));
      EXPECT_LE(std::abs(left_dist.amplitudes()[k] - left_sum.amplitudes()[k]), 1e-12 * scale);
      const double rscale = std::max(1.0, std::abs(right_sum.amplitudes()[k]));
      EXPECT_LE(std::abs(right_dist.amplitudes()[k] - right_sum.amplitudes()[k]), 1e-12 * rscale);
    }
  }
  EXPECT_THROW(combine(group(gen.amplitudes(g1), gen.amplitudes(g2)),
                       group(gen.amplitudes(g2), gen.amplitudes(g1))),
               IncompatibleStates);
}

TEST(QuantumProperties, Unitarity) {
  Gen gen(42);
  for (std::size_t n : {16u, 64u, 200u}) {
    const PositionGrid g(gen.uniform(-10, -1), gen.uniform(1, 10), n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = gen.amplitudes(g);
      const auto phi = to_momentum_basis(s);
      EXPECT_LE(rel_diff(magnitude(phi).value(), magnitude(s).value()), 1e-10);
      EXPECT_LE(max_abs_diff(to_position_basis(phi), s), 1e-10);
    }
  }
}

TEST(QuantumProperties, UncertaintyProduct) {
  Gen gen(1927);
  for (int trial = 0; trial < 20; ++trial) {
    const double sigma = gen.uniform(0.5, 2.0);
    const PositionGrid g(-10 * sigma, 10 * sigma, 1024);
    const auto s = gaussian_wavepacket(g, gen.uniform(-sigma, sigma), gen.uniform(-2, 2), sigma);
    const double product = basis_stddev(s) * basis_stddev(to_momentum_basis(s));
    EXPECT_NEAR(product, 0.5, 0.01) << "sigma=" << sigma;
  }
  // Non-minimal states: superpositions of packets stay above the bound.
  const PositionGrid g(-20, 20, 1024);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = gaussian_wavepacket(g, gen.uniform(-5, 5), gen.uniform(-2, 2), gen.uniform(0.5, 2));
    for (int extra = 0; extra < 2; ++extra) {
      s = combine(s, apply_phase(gen.uniform(0, 2 * kPi),
                                 resize(gen.uniform(0.1, 2),
                                        gaussian_wavepacket(g, gen.uniform(-5, 5),
                                                            gen.uniform(-2, 2),
                                                            gen.uniform(0.5, 2)))));
    }
    const double product = basis_stddev(s) * basis_stddev(to_momentum_basis(s));
    EXPECT_GE(product, 0.5 * (1 - 0.02));
  }
}

}  // namespace
}  // namespace statespace::quantum
