#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "ramopuc/duality.hpp"
#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

using namespace ramopuc;

namespace {

using Q = std::vector<Rational>;

VerblunskySequence vs(Q a) { return VerblunskySequence(std::move(a)); }

// Floating evaluation of an exact polynomial.
std::complex<double> eval(const Poly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

}  // namespace

TEST(MirrorDual, Examples) {
  EXPECT_EQ(mirror_dual(vs({Rational(-1, 4), Rational(-1, 3), Rational(-1, 2), -1})),
            vs({Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), -1}));
  EXPECT_EQ(mirror_dual(vs({0, 1})), vs({0, 1}));
  EXPECT_EQ(mirror_dual(vs({Rational(-2, 3), Rational(-1, 5), Rational(1, 4), 1})),
            vs({Rational(-1, 4), Rational(1, 5), Rational(2, 3), 1}));
  EXPECT_EQ(mirror_dual(vs({1})), vs({1}));
  EXPECT_EQ(mirror_dual(vs({-1})), vs({-1}));
}

TEST(MirrorDual, Involution) {
  for (std::uint64_t m = 1; m <= 40; ++m) {
    const auto sys = ramanujan_from_charpoly(KroneckerSpec({m}));
    EXPECT_EQ(mirror_dual(mirror_dual(sys.verblunsky)), sys.verblunsky) << m;
  }
}

TEST(Sturmian, Examples) {
  EXPECT_EQ(sturmian_from_charpoly(cyclotomic(5)).verblunsky,
            vs({Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), -1}));
  const auto anti = sturmian_from_charpoly(anti_cyclotomic(6));
  EXPECT_EQ(anti.verblunsky, vs({Rational(-2, 3), Rational(-1, 5), Rational(1, 4), 1}));
  EXPECT_EQ(anti.phis[2], Poly({Rational(1, 5), Rational(4, 5), 1}));
  const auto two = sturmian_from_charpoly(Poly({-1, 0, 1}));
  EXPECT_EQ(two.phis[1], Poly({0, 1}));
  EXPECT_EQ(two.verblunsky, vs({0, 1}));
}

TEST(Sturmian, SystemIsConsistent) {
  for (const auto& orders : std::vector<std::vector<std::uint64_t>>{{5}, {1, 2, 3}, {7, 8}, {1, 4, 9}, {1}, {2}}) {
    const KroneckerSpec spec(orders);
    const auto sys = sturmian_from_spec(spec);
    const auto check = check_system(sys);
    EXPECT_TRUE(check.ok()) << spec.to_string() << ": " << check.failures();
    for (std::size_t n = 1; n <= sys.n() + 1; ++n)
      EXPECT_EQ(sys.phis[n], Poly(oracle::opuc_by_linear_solve(sys.moments.values(), n))) << spec.to_string();
  }
}

TEST(Sturmian, RejectsNonKronecker) {
  EXPECT_THROW(sturmian_from_charpoly(Poly({-1, 1, 1})), InvalidCharacteristic);
  EXPECT_THROW(sturmian_from_charpoly(Poly({Rational(1, 2), 0, 1})), InvalidCharacteristic);
  EXPECT_THROW(sturmian_from_charpoly(Poly({1, 2})), InvalidCharacteristic);
  EXPECT_THROW(sturmian_from_charpoly(Poly({1, 3, 1})), InteriorCoefficientOutOfRange);
}

TEST(Ramanujan, Examples) {
  EXPECT_EQ(ramanujan_from_charpoly(KroneckerSpec({5})).verblunsky,
            vs({Rational(-1, 4), Rational(-1, 3), Rational(-1, 2), -1}));
  EXPECT_EQ(ramanujan_from_charpoly(KroneckerSpec({1, 2, 3})).verblunsky,
            vs({Rational(-1, 4), Rational(1, 5), Rational(2, 3), 1}));
  EXPECT_EQ(ramanujan_from_charpoly(KroneckerSpec({10})).verblunsky,
            vs({Rational(1, 4), Rational(-1, 3), Rational(1, 2), -1}));
}

TEST(DualPair, Examples) {
  const auto p5 = build_dual_pair(KroneckerSpec({5}));
  EXPECT_EQ(p5.charpoly, Poly({1, 1, 1, 1, 1}));
  EXPECT_TRUE(p5.checks.ok());
  const auto p12 = build_dual_pair(KroneckerSpec({1, 2}));
  EXPECT_EQ(p12.ramanujan.verblunsky, p12.sturmian.verblunsky);
  const auto p123 = build_dual_pair(KroneckerSpec({1, 2, 3}));
  EXPECT_EQ(p123.sturmian.phis[3], Poly({-1, 0, 3, 4}) * Rational(1, 4));
  EXPECT_EQ(p123.ramanujan.phis[1], Poly({Rational(1, 4), 1}));
  EXPECT_EQ(p123.ramanujan.h.back(), p123.sturmian.h.back());
}

TEST(DualPair, ChecksDetectTampering) {
  auto pair = build_dual_pair(KroneckerSpec({7}));
  auto broken = pair.sturmian;
  broken.phis[broken.n()] = broken.phis[broken.n()] + Poly({Rational(1, 7)});
  EXPECT_FALSE(check_dual(pair.spec, pair.ramanujan, broken).sturm_condition);
  EXPECT_FALSE(check_dual(pair.spec, pair.ramanujan, broken).ok());
  auto wrong_a = pair.sturmian;
  wrong_a.verblunsky = pair.ramanujan.verblunsky;
  EXPECT_FALSE(check_dual(pair.spec, pair.ramanujan, wrong_a).mirror_relation);
  EXPECT_FALSE(check_dual(pair.spec, pair.ramanujan, wrong_a).ok());
}

TEST(DualPair, AllSmallSpecs) {
  for (unsigned mask = 1; mask < (1u << 10); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<std::uint64_t> orders;
    for (unsigned k = 0; k < 10; ++k)
      if (mask >> k & 1) orders.push_back(k + 1);
    const KroneckerSpec spec(orders);
    const auto pair = build_dual_pair(spec);
    ASSERT_TRUE(pair.checks.ok()) << spec.to_string();
    const auto n = pair.sturmian.n();
    EXPECT_EQ(pair.sturmian.phis[n] * Rational(static_cast<unsigned long>(n + 1)), poly_derivative(pair.charpoly));
  }
}

TEST(NumericRoots, Examples) {
  auto values = [](const KroneckerSpec& spec) {
    std::vector<std::complex<double>> out;
    for (const auto& r : numeric_roots(spec, 15).roots) out.emplace_back(std::stod(r.re), std::stod(r.im));
    return out;
  };
  const auto two = values(KroneckerSpec({1, 2}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(std::abs(two[0] - 1.0), 0, 1e-14);
  EXPECT_NEAR(std::abs(two[1] + 1.0), 0, 1e-14);

  const auto five = values(KroneckerSpec({5}));
  ASSERT_EQ(five.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(five[k] - std::polar(1.0, 2 * M_PI * (k + 1) / 5)), 0, 1e-14);

  const auto six = values(KroneckerSpec({1, 2, 3}));
  ASSERT_EQ(six.size(), 4u);
  for (const auto& z : six) {
    EXPECT_NEAR(std::abs(z), 1, 1e-14);
    EXPECT_NEAR(std::abs(eval(anti_cyclotomic(6), z)), 0, 1e-13);
  }
}

TEST(NumericRoots, HighPrecisionStrings) {
  const auto set = numeric_roots(KroneckerSpec({8}), 40);
  ASSERT_EQ(set.roots.size(), 4u);
  EXPECT_EQ(set.roots[0].re.substr(0, 20), "0.707106781186547524");
  EXPECT_EQ(set.source, cyclotomic(8));
}

TEST(Weights, Examples) {
  const auto r5 = verify_weights(build_dual_pair(KroneckerSpec({5})), 12);
  EXPECT_TRUE(r5.passed);
  for (const auto& r : r5.roots) EXPECT_NEAR(r.w, 0.25, 1e-12);

  const auto r12 = verify_weights(build_dual_pair(KroneckerSpec({1, 2})), 12);
  EXPECT_TRUE(r12.passed);
  for (const auto& r : r12.roots) {
    EXPECT_NEAR(r.w, 0.5, 1e-12);
    EXPECT_NEAR(r.tw, 0.5, 1e-12);
  }

  const auto r123 = verify_weights(build_dual_pair(KroneckerSpec({1, 2, 3})), 12);
  EXPECT_TRUE(r123.passed);
  ASSERT_EQ(r123.roots.size(), 4u);
  for (const auto& r : r123.roots) {
    EXPECT_LT(r.product, 1e-12);
    EXPECT_TRUE(r.positive);
  }
}

TEST(Weights, SturmianWeightsMatchIndependentEvaluation) {
  const auto pair = build_dual_pair(KroneckerSpec({3, 4, 7}));
  const auto report = verify_weights(pair, 12);
  ASSERT_TRUE(report.passed);
  const auto dk = poly_derivative(pair.charpoly);
  const auto& phi_n = pair.ramanujan.phis[pair.ramanujan.n()];
  double sum = 0;
  for (const auto& r : report.roots) {
    const auto z = std::polar(1.0, 2 * M_PI * double(r.angle.numerator) / double(r.angle.order));
    const auto tw = eval(phi_n, z) / eval(dk, z);
    EXPECT_NEAR(tw.imag(), 0, 1e-12);
    EXPECT_NEAR(tw.real(), r.tw, 1e-12);
    sum += tw.real();
  }
  EXPECT_NEAR(sum, 1, 1e-12);
}

TEST(Weights, HighPrecision) {
  const auto report = verify_weights(build_dual_pair(KroneckerSpec({1, 2, 5})), 40);
  EXPECT_TRUE(report.passed);
  EXPECT_LT(report.max_residual, 1e-40);
  EXPECT_THROW(verify_weights(build_dual_pair(KroneckerSpec({5})), 0), InvalidArgument);
  EXPECT_THROW(verify_weights(build_dual_pair(KroneckerSpec({5})), 91), InvalidArgument);
}

TEST(Weights, RequireThrowsOnFailure) {
  WeightReport report;
  report.passed = false;
  EXPECT_THROW(report.require(), WeightCheckFailure);
  report.passed = true;
  EXPECT_NO_THROW(report.require());
}
