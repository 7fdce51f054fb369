#include <gtest/gtest.h>

#include <array>

#include "foliage/fourier_scalar.hpp"
#include "test_util.hpp"

using namespace foliage;
using foliage::test::kPi;
using foliage::test::mode;

namespace {

FourierScalar random_scalar(int dims, int bandwidth, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierScalar f(dims);
  for (const ModeVector& m : truncated_modes(dims, bandwidth)) f.add_term(m, Complex(u(rng), u(rng)));
  return f;
}

}  // namespace

TEST(FourierScalar, ZeroTermsAreNotStored) {
  FourierScalar f = FourierScalar::mode(1, mode(2), 3.0);
  f.add_term(mode(2), -3.0);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f, FourierScalar(1));
  EXPECT_EQ(FourierScalar::constant(2, 0.0).size(), 0u);
}

TEST(FourierScalar, DifferentiateMultipliesByTwoPiIM) {
  const FourierScalar f = FourierScalar::mode(2, mode(3, -1), Complex(0.5, 0.25));
  const FourierScalar dx = f.differentiate(0), dy = f.differentiate(1);
  EXPECT_EQ(dx.size(), 1u);
  EXPECT_NEAR(std::abs(dx.coefficient(mode(3, -1)) - Complex(0, 2 * kPi * 3) * Complex(0.5, 0.25)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(dy.coefficient(mode(3, -1)) - Complex(0, -2 * kPi) * Complex(0.5, 0.25)), 0.0, 1e-14);
  EXPECT_TRUE(FourierScalar::constant(2, 4.0).differentiate(0).is_zero());
}

TEST(FourierScalar, DerivativeMatchesCentralDifference) {
  std::mt19937_64 rng(3);
  const FourierScalar f = random_scalar(2, 2, rng);
  const FourierScalar df = f.differentiate(1);
  const double h = 1e-5;
  for (int t = 0; t < 10; ++t) {
    std::array<double, 2> u{0.1 * t, 0.37 + 0.05 * t}, up = u, um = u;
    up[1] += h;
    um[1] -= h;
    const Complex fd = (f.evaluate(up) - f.evaluate(um)) / (2 * h);
    EXPECT_NEAR(std::abs(fd - df.evaluate(u)), 0.0, 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

TEST(FourierScalar, ProductIsPointwiseProduct) {
  std::mt19937_64 rng(5);
  const FourierScalar a = random_scalar(2, 2, rng), b = random_scalar(2, 1, rng);
  const FourierScalar ab = a * b;
  EXPECT_EQ(ab.bandwidth(), 3);
  EXPECT_EQ(ab.size(), 49u);  // Minkowski sum of the supports
  for (int t = 0; t < 10; ++t) {
    const std::array<double, 2> u{0.13 * t, 0.71 - 0.07 * t};
    EXPECT_NEAR(std::abs(ab.evaluate(u) - a.evaluate(u) * b.evaluate(u)), 0.0, 1e-12);
  }
}

TEST(FourierScalar, RealIffConjugateSymmetric) {
  FourierScalar f = FourierScalar::mode(1, mode(1), Complex(0.3, 0.2)) + FourierScalar::mode(1, mode(-1), Complex(0.3, -0.2));
  EXPECT_TRUE(f.is_real());
  for (double u : {0.0, 0.2, 0.77}) EXPECT_NEAR(f.evaluate(std::array<double, 1>{u}).imag(), 0.0, 1e-15);
  f.add_term(mode(1), Complex(0, 1e-3));
  EXPECT_FALSE(f.is_real());
  EXPECT_TRUE((f + f.conjugate()).is_real());
}

TEST(FourierScalar, ParsevalNorm) {
  const FourierScalar f = FourierScalar::mode(1, mode(1), 3.0) + FourierScalar::mode(1, mode(-2), Complex(0, 4.0));
  EXPECT_DOUBLE_EQ(f.l2_norm_squared(), 25.0);
  EXPECT_DOUBLE_EQ(f.l2_norm(), 5.0);
}

TEST(FourierScalar, MismatchedDimsThrow) {
  EXPECT_THROW(FourierScalar::constant(1, 1.0) + FourierScalar::constant(2, 1.0), ModelMismatchError);
}
