#include "lsys/herglotz.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "test_support.hpp"

namespace lsys {
namespace {

using std::numbers::pi;
using testing::kI;

TEST(Cayley, MToS) {
  EXPECT_EQ(cayley_m_to_s(kI), complex(0.0, 0.0));
  EXPECT_COMPLEX_NEAR(cayley_m_to_s(kI / 3.0), -0.5, 1e-15);
  EXPECT_COMPLEX_NEAR(cayley_m_to_s(0.0), -1.0, 1e-15);
  EXPECT_ERRC(cayley_m_to_s(-kI), Errc::PoleAtCayleyCenter);
}

TEST(Cayley, SToM) {
  EXPECT_COMPLEX_NEAR(cayley_s_to_m(0.0), kI, 1e-15);
  EXPECT_COMPLEX_NEAR(cayley_s_to_m(-1.0), 0.0, 1e-15);
  EXPECT_COMPLEX_NEAR(cayley_s_to_m(-0.5), kI / 3.0, 1e-15);
  EXPECT_ERRC(cayley_s_to_m(1.0), Errc::PoleAtCayleyCenter);
}

TEST(Cayley, RoundTripOnRandomUpperHalfPlanePoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-5.0, 5.0);
  std::uniform_real_distribution<double> im(0.01, 5.0);
  for (int k = 0; k < 100; ++k) {
    const complex m(re(rng), im(rng));
    EXPECT_COMPLEX_NEAR(cayley_s_to_m(cayley_m_to_s(m)), m, 1e-12);
    EXPECT_LT(std::abs(cayley_m_to_s(m)), 1.0);
  }
}

TEST(AlphaTransform, ZeroIsIdentity) {
  const complex m(0.3, 1.7);
  EXPECT_EQ(alpha_transform(m, 0.0), m);
}

TEST(AlphaTransform, QuarterTurnIsNegativeReciprocal) {
  const complex m(0.3, 1.7);
  EXPECT_COMPLEX_NEAR(alpha_transform(m, pi / 2.0), -1.0 / m, 1e-15);
}

TEST(AlphaTransform, IIsAFixedPoint) {
  EXPECT_COMPLEX_NEAR(alpha_transform(kI, pi / 4.0), kI, 1e-15);
}

TEST(AlphaTransform, PoleIsReported) {
  // cos a + sin a m = 0 at m = -cot a.
  const double alpha = 0.4;
  EXPECT_ERRC(alpha_transform(-std::cos(alpha) / std::sin(alpha), alpha), Errc::MoebiusPole);
}

TEST(AlphaTransform, CanonicalizesModPi) {
  EXPECT_DOUBLE_EQ(canonical_alpha(pi + 0.25), 0.25);
  EXPECT_DOUBLE_EQ(canonical_alpha(-0.25), pi - 0.25);
  EXPECT_EQ(canonical_alpha(pi), 0.0);
  const complex m(0.1, 0.9);
  EXPECT_COMPLEX_NEAR(alpha_transform(m, 0.3 + pi), alpha_transform(m, 0.3), 1e-14);
}

TEST(AlphaTransform, GroupLaw) {
  const complex m(-0.4, 0.6);
  for (const double a : {0.1, 0.7, 2.0, 3.0}) {
    for (const double b : {0.2, 1.1, 2.5}) {
      EXPECT_COMPLEX_NEAR(alpha_transform(alpha_transform(m, a), b),
                          alpha_transform(m, std::fmod(a + b, pi)), 1e-10);
    }
  }
}

TEST(PhaseLaw, TrivialCases) {
  const complex s(0.2, -0.3);
  EXPECT_EQ(livsic_phase_law_check(s, 0.0), s);
  EXPECT_COMPLEX_NEAR(livsic_phase_law_check(s, pi / 2.0), -s, 1e-15);
}

TEST(PhaseLaw, MoebiusPathMatchesPhasePath) {
  const complex m = kI / 3.0;
  const complex moebius = cayley_m_to_s(alpha_transform(m, pi / 4.0));
  const complex phase = livsic_phase_law_check(cayley_m_to_s(m), pi / 4.0);
  // Independently: M_{pi/4} = (m - 1)/(1 + m), s = (M - i)/(M + i); e^{i pi/2}(-1/2) = -i/2.
  EXPECT_COMPLEX_NEAR(phase, complex(0.0, -0.5), 1e-15);
  EXPECT_COMPLEX_NEAR(moebius, phase, 1e-12);
}

TEST(HerglotzMap, ScaledByOneAndRotatedByZeroAreTransparent) {
  const HerglotzMap f =
      HerglotzMap::from_measure(SpectralMeasure({{-1.0, 0.7}, {2.0, 1.3}}, std::nullopt));
  for (const complex z : upper_half_plane_grid(30)) {
    EXPECT_EQ(HerglotzMap::scaled(1.0, f)(z), f(z));
    EXPECT_EQ(HerglotzMap::alpha_rotated(0.0, f)(z), f(z));
  }
}

TEST(HerglotzMap, ClosedFormRegistry) {
  EXPECT_ERRC(HerglotzMap::closed_form("nope"), Errc::UnknownClosedForm);
  EXPECT_ERRC(HerglotzMap::closed_form("interval_weyl"), Errc::ParameterOutOfRange);
  EXPECT_ERRC(HerglotzMap::closed_form("interval_weyl", {{"ell", -1.0}}), Errc::ParameterOutOfRange);
  EXPECT_ERRC(HerglotzMap::closed_form("neg_reciprocal", {{"x", 1.0}}), Errc::ParameterOutOfRange);
  const HerglotzMap recip = HerglotzMap::closed_form("neg_reciprocal");
  const HerglotzMap delta = HerglotzMap::from_measure(SpectralMeasure::point_mass(0.0));
  for (const complex z : upper_half_plane_grid(20)) EXPECT_COMPLEX_NEAR(recip(z), delta(z), 1e-14);
}

TEST(HerglotzMap, RealAxisIsRejected) {
  EXPECT_ERRC(HerglotzMap::closed_form("neg_reciprocal")(complex(1.0, 0.0)),
              Errc::RealAxisEvaluation);
}

TEST(HerglotzMap, StructuralEquality) {
  const SpectralMeasure sigma({{1.0, 1.0}, {-1.0, 1.0}});
  const SpectralMeasure permuted({{-1.0, 1.0}, {1.0, 1.0}});
  const HerglotzMap f = HerglotzMap::scaled(2.0, HerglotzMap::from_measure(sigma));
  EXPECT_EQ(f, HerglotzMap::scaled(2.0, HerglotzMap::from_measure(permuted)));
  EXPECT_FALSE(f == HerglotzMap::scaled(3.0, HerglotzMap::from_measure(sigma)));
  EXPECT_FALSE(f == HerglotzMap::alpha_rotated(0.5, HerglotzMap::from_measure(sigma)));
  EXPECT_EQ(f.underlying_measure(), &f.as_scaled().inner.as_from_measure().measure);
}

TEST(Classify, DonoghueFunction) {
  const ClassReport r = classify(HerglotzMap::closed_form("neg_reciprocal"));
  EXPECT_DOUBLE_EQ(r.a, 1.0);
  EXPECT_EQ(r.kappa, 0.0);
  EXPECT_EQ(r.class_tag, DonoghueClass::M_0);
}

TEST(Classify, ScaledBelowAndAbove) {
  const HerglotzMap m = HerglotzMap::closed_form("neg_reciprocal");
  const ClassReport below = classify(HerglotzMap::scaled(1.0 / 3.0, m));
  EXPECT_NEAR(below.a, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(below.kappa, 0.5, 1e-15);
  EXPECT_EQ(below.class_tag, DonoghueClass::M_kappa);
  const ClassReport above = classify(HerglotzMap::scaled(3.0, m));
  EXPECT_NEAR(above.a, 3.0, 1e-15);
  EXPECT_NEAR(above.kappa, 0.5, 1e-15);
  EXPECT_EQ(above.class_tag, DonoghueClass::M_kappa_inv);
}

TEST(Classify, ToleranceBand) {
  const HerglotzMap m = HerglotzMap::closed_form("neg_reciprocal");
  EXPECT_EQ(classify(HerglotzMap::scaled(1.0 + 5e-10, m)).class_tag, DonoghueClass::M_0);
  EXPECT_EQ(classify(HerglotzMap::scaled(1.0 + 5e-9, m)).class_tag, DonoghueClass::M_kappa_inv);
  EXPECT_EQ(classify(HerglotzMap::scaled(1.0 - 5e-9, m)).class_tag, DonoghueClass::M_kappa);
}

TEST(Classify, RejectsShiftedAndNonHerglotz) {
  const SpectralMeasure shifted({{0.0, 1.0}}, std::nullopt, 0.5);
  EXPECT_ERRC(classify(HerglotzMap::from_measure(shifted)), Errc::NotCentered);
  const SpectralMeasure constant({}, std::nullopt, 0.0);
  EXPECT_ERRC(classify(HerglotzMap::from_measure(constant)), Errc::NotHerglotz);
}

class MeasureBackedProperties : public ::testing::Test {
 protected:
  HerglotzMap random_map(std::size_t n) {
    return HerglotzMap::from_measure(SpectralMeasure(testing::random_atoms(rng, n)));
  }
  std::mt19937_64 rng{99};
};

TEST_F(MeasureBackedProperties, LivsicContractivity) {
  for (int trial = 0; trial < 10; ++trial) {
    const LivsicMap s(random_map(7));
    for (const complex z : upper_half_plane_grid(100)) EXPECT_LT(std::abs(s(z)), 1.0);
  }
}

TEST_F(MeasureBackedProperties, LivsicVanishesAtIForDonoghueFunctions) {
  const LivsicMap s(HerglotzMap::from_measure(
      SpectralMeasure(testing::donoghue_normalized(testing::random_atoms(rng, 9)))));
  EXPECT_LT(std::abs(s(kI)), 1e-14);
}

TEST_F(MeasureBackedProperties, MoebiusPhaseCommutation) {
  for (int trial = 0; trial < 5; ++trial) {
    const HerglotzMap f = random_map(6);
    for (const double alpha : {0.0, pi / 6.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0}) {
      double worst = 0.0;
      for (const complex z : upper_half_plane_grid(100)) {
        const complex m = f(z);
        worst = std::max(worst, std::abs(cayley_m_to_s(alpha_transform(m, alpha)) -
                                         livsic_phase_law_check(cayley_m_to_s(m), alpha)));
      }
      EXPECT_LE(worst, 1e-10) << "alpha = " << alpha;
    }
  }
}

// What the rotation formula actually does to the Cayley image.
TEST_F(MeasureBackedProperties, MoebiusRotationConjugatesThePhase) {
  const HerglotzMap f = random_map(6);
  for (const double alpha : {0.0, pi / 6.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0}) {
    for (const complex z : upper_half_plane_grid(100)) {
      const complex m = f(z);
      const complex expected = std::polar(1.0, -2.0 * alpha) * cayley_m_to_s(m);
      EXPECT_COMPLEX_NEAR(cayley_m_to_s(alpha_transform(m, alpha)), expected, 1e-10);
    }
  }
}

TEST_F(MeasureBackedProperties, ScalingReportsTheScale) {
  const HerglotzMap m = HerglotzMap::from_measure(
      SpectralMeasure(testing::donoghue_normalized(testing::random_atoms(rng, 12))));
  for (const double a : {0.05, 0.5, 1.0, 2.0, 40.0}) {
    EXPECT_NEAR(classify(HerglotzMap::scaled(a, m)).a, a, 1e-10);
  }
}

TEST(UpperHalfPlaneGrid, Shape) {
  const auto grid = upper_half_plane_grid(50);
  ASSERT_EQ(grid.size(), 50u);
  for (const complex z : grid) {
    EXPECT_GT(z.imag(), 0.1);
    EXPECT_LT(z.imag(), 3.1);
    EXPECT_GE(z.real(), -3.0);
    EXPECT_LT(z.real(), 3.0);
  }
}

}  // namespace
}  // namespace lsys
