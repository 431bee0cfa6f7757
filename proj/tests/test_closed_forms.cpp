#include <gtest/gtest.h>

#include "ramopuc/closed_forms.hpp"
#include "ramopuc/duality.hpp"
#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

using namespace ramopuc;

namespace {

using Q = std::vector<Rational>;

std::vector<std::uint64_t> odd_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

void expect_szego_consistent(const PopucSystem& sys) {
  for (std::size_t n = 0; n <= sys.n(); ++n)
    EXPECT_EQ(szego_step(sys.phis[n], sys.verblunsky[n]), sys.phis[n + 1]) << sys.family << " n=" << n;
}

}  // namespace

TEST(FamilyId, Validation) {
  EXPECT_THROW(FamilyId(FamilyKind::RamanujanPrime, 9), InvalidArgument);
  EXPECT_THROW(FamilyId(FamilyKind::Ramanujan2p, 2), InvalidArgument);
  EXPECT_NO_THROW(FamilyId(FamilyKind::SingleMoment, 4));
  EXPECT_EQ(FamilyId(FamilyKind::RamanujanPrime, 5).name(), "ramanujan-prime:5");
  EXPECT_THROW(cf_ramanujan_prime(15), InvalidArgument);
  EXPECT_THROW(cf_ramanujan_2p(1), InvalidArgument);
  EXPECT_THROW(cf_sturmian_anti2p(4), InvalidArgument);
  EXPECT_THROW(cf_ramanujan_anti2p(21), InvalidArgument);
}

TEST(ClosedForms, RamanujanPrimeExamples) {
  const auto p5 = cf_ramanujan_prime(5);
  EXPECT_EQ(p5.phis[2], Poly({Rational(1, 3), Rational(1, 3), 1}));
  EXPECT_EQ(p5.delta[1], Rational(15, 16));
  EXPECT_EQ(cf_ramanujan_prime(3).verblunsky.values(), (Q{Rational(-1, 2), -1}));
}

TEST(ClosedForms, Ramanujan2pExamples) {
  EXPECT_EQ(cf_ramanujan_2p(5).verblunsky.values(), (Q{Rational(1, 4), Rational(-1, 3), Rational(1, 2), -1}));
  EXPECT_EQ(cf_ramanujan_2p(3).verblunsky.values(), (Q{Rational(1, 2), -1}));
  EXPECT_EQ(cf_ramanujan_2p(5).charpoly(), Poly({1, -1, 1, -1, 1}));
}

TEST(ClosedForms, SingleMomentExamples) {
  const auto s = cf_single_moment(3);
  EXPECT_EQ(s.phis[2], Poly({Rational(1, 3), Rational(2, 3), 1}));
  EXPECT_EQ(s.phis[0], Poly({1}));
  EXPECT_EQ(s.verblunsky.values(), (Q{Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), -1}));
  EXPECT_EQ(cf_single_moment(0).verblunsky.values(), (Q{-1}));
}

TEST(ClosedForms, SturmianAnti2pExamples) {
  const auto s = cf_sturmian_anti2p(3);
  EXPECT_EQ(s.phis[2], Poly({Rational(1, 5), Rational(4, 5), 1}));
  EXPECT_EQ(s.verblunsky.values(), (Q{Rational(-2, 3), Rational(-1, 5), Rational(1, 4), 1}));
  EXPECT_EQ(s.phis[3] * Rational(4), poly_derivative(Poly({-1, -1, 0, 1, 1})));
}

TEST(ClosedForms, RamanujanAnti2pExamples) {
  const auto r = cf_ramanujan_anti2p(3);
  EXPECT_EQ(r.phis[1], Poly({Rational(1, 4), 1}));
  EXPECT_EQ(r.phis[2], Poly({Rational(-1, 5), Rational(1, 5), 1}));
  EXPECT_EQ(r.verblunsky.values(), (Q{Rational(-1, 4), Rational(1, 5), Rational(2, 3), 1}));
}

TEST(ClosedForms, AntiTwoPRationalFormulaStopsBelowP) {
  // Φ_n = z^n + (z^n - (-1)^n)/((n+p)(z+1)) describes the ladder for n < p only.
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto sys = ramanujan_from_charpoly(KroneckerSpec({1, 2, p}));
    auto formula = [&](std::uint64_t n) {
      Poly num = Poly::monomial(n) - Poly({Rational(n % 2 ? -1 : 1)});
      return Poly::monomial(n) +
             poly_divexact(num, Poly({1, 1})) * Rational(1, static_cast<unsigned long>(n + p));
    };
    for (std::uint64_t n = 1; n < p; ++n) EXPECT_EQ(formula(n), sys.phis[n]) << "p=" << p << " n=" << n;
    EXPECT_NE(formula(p), sys.phis[p]) << "p=" << p;
  }
}

TEST(ClosedForms, EngineEquivalence) {
  for (auto p : odd_primes(31)) {
    const auto n_points = p - 1;
    EXPECT_TRUE(same_system_data(cf_ramanujan_prime(p), popuc_from_moments(moments_from_cyclotomic(p, n_points), n_points)))
        << p;
    EXPECT_TRUE(
        same_system_data(cf_ramanujan_2p(p), popuc_from_moments(moments_from_cyclotomic(2 * p, n_points), n_points)))
        << p;
    EXPECT_TRUE(same_system_data(cf_ramanujan_anti2p(p), ramanujan_from_charpoly(KroneckerSpec({1, 2, p})))) << p;
    EXPECT_TRUE(same_system_data(cf_sturmian_anti2p(p), sturmian_from_charpoly(anti_cyclotomic(2 * p)))) << p;
    EXPECT_TRUE(same_system_data(cf_single_moment(p - 2), sturmian_from_charpoly(cyclotomic(p)))) << p;
  }
}

TEST(ClosedForms, DualityClosure) {
  for (auto p : odd_primes(31)) {
    EXPECT_EQ(mirror_dual(cf_ramanujan_prime(p).verblunsky), cf_single_moment(p - 2).verblunsky) << p;
    EXPECT_EQ(mirror_dual(cf_ramanujan_anti2p(p).verblunsky), cf_sturmian_anti2p(p).verblunsky) << p;
    EXPECT_EQ(cf_sturmian_anti2p(p).verblunsky[0], Rational(1 - static_cast<long>(p), static_cast<unsigned long>(p)));
  }
}

TEST(ClosedForms, SzegoConsistentAndChecked) {
  for (auto p : odd_primes(23)) {
    for (const auto& sys : {cf_ramanujan_prime(p), cf_ramanujan_2p(p), cf_sturmian_anti2p(p), cf_ramanujan_anti2p(p),
                            cf_single_moment(p)}) {
      expect_szego_consistent(sys);
      const auto check = check_system(sys);
      EXPECT_TRUE(check.ok()) << sys.family << " " << p << ": " << check.failures();
    }
    const auto s = cf_sturmian_anti2p(p);
    EXPECT_EQ(s.phis[p] * Rational(static_cast<unsigned long>(p + 1)), poly_derivative(s.phis[p + 1])) << p;
  }
}

TEST(ClosedForms, DispatchByFamilyId) {
  EXPECT_TRUE(same_system_data(closed_form(FamilyId(FamilyKind::RamanujanPrime, 7)), cf_ramanujan_prime(7)));
  EXPECT_TRUE(same_system_data(closed_form(FamilyId(FamilyKind::SingleMoment, 4)), cf_single_moment(4)));
  EXPECT_EQ(closed_form(FamilyId(FamilyKind::Ramanujan2p, 7)).family, FamilyId(FamilyKind::Ramanujan2p, 7).name());
}

TEST(ClosedForms, PrimeDeltaFormula) {
  for (auto p : odd_primes(31)) {
    const auto sys = cf_ramanujan_prime(p);
    const auto engine = toeplitz_minors(moments_from_cyclotomic(p, p), p);
    for (std::uint64_t n = 1; n <= p - 1; ++n) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t(), n - 1);
      num *= static_cast<unsigned long>(p - n);
      mpz_pow_ui(den.get_mpz_t(), Integer(static_cast<unsigned long>(p - 1)).get_mpz_t(), n);
      Rational expected(num, den);
      expected.canonicalize();
      EXPECT_EQ(sys.delta[n - 1], expected);
      EXPECT_EQ(engine[n - 1], expected);
    }
    EXPECT_EQ(engine[p - 1], 0);
  }
}
