#include <gtest/gtest.h>

#include <random>

#include "ramopuc/duality.hpp"
#include "ramopuc/number_theory.hpp"
#include "ramopuc/opuc.hpp"
#include "ramopuc/poly.hpp"

using namespace ramopuc;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9, long max_den = 12) {
    Rational q(integer(-bound, bound), static_cast<unsigned long>(integer(1, max_den)));
    q.canonicalize();
    return q;
  }

  // Strictly inside (-1, 1).
  Rational interior() {
    const long den = integer(2, 15);
    Rational q(integer(-(den - 1), den - 1), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
  }

  Poly poly(int max_degree) {
    std::vector<Rational> c;
    const long deg = integer(0, max_degree);
    for (long k = 0; k <= deg; ++k) c.push_back(rational());
    return Poly(c);
  }

  Poly monic(int degree) {
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.push_back(rational());
    c.emplace_back(1);
    return Poly(c);
  }

  std::vector<Rational> verblunsky(int max_n) {
    std::vector<Rational> a;
    const long n = integer(0, max_n);
    for (long k = 0; k < n; ++k) a.push_back(interior());
    a.emplace_back(integer(0, 1) ? 1 : -1);
    return a;
  }

  KroneckerSpec spec(std::uint64_t max_order, std::uint64_t max_degree) {
    std::vector<std::uint64_t> orders;
    std::uint64_t deg = 0;
    for (std::uint64_t m = 1; m <= max_order; ++m)
      if (integer(0, 3) == 0 && deg + euler_totient(m) <= max_degree) {
        orders.push_back(m);
        deg += euler_totient(m);
      }
    if (orders.empty()) orders.push_back(static_cast<std::uint64_t>(integer(1, 6)));
    return KroneckerSpec(orders);
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kTrials = 150;

}  // namespace

TEST(Property, DivModReconstructs) {
  Gen g(1);
  for (int t = 0; t < kTrials; ++t) {
    const Poly a = g.poly(8);
    Poly b = g.poly(4);
    if (b.is_zero()) b = Poly({1});
    const auto [q, r] = poly_divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    ASSERT_EQ(poly_divexact(a * b, b), a);
  }
}

TEST(Property, ReverseIsInvolutionAndDerivativeIsLeibniz) {
  Gen g(2);
  for (int t = 0; t < kTrials; ++t) {
    const Poly a = g.poly(7), b = g.poly(7);
    const int n = 8;
    if (a.is_zero() || a[0] != 0) ASSERT_EQ(poly_reverse(poly_reverse(a, n), n), a);
    ASSERT_EQ(poly_derivative(a * b), poly_derivative(a) * b + a * poly_derivative(b));
  }
}

TEST(Property, StarIsInvolutiveOnNonzeroConstantTerm) {
  Gen g(3);
  for (int t = 0; t < kTrials; ++t) {
    const Poly p = g.monic(static_cast<int>(g.integer(0, 6)));
    if (p[0] == 0) continue;
    ASSERT_EQ(star(star(p)), p);
  }
}

TEST(Property, SzegoRoundTrip) {
  Gen g(4);
  for (int t = 0; t < kTrials; ++t) {
    const Poly p = g.monic(static_cast<int>(g.integer(0, 6)));
    const Rational a = g.interior();
    const auto d = inverse_szego_step(szego_step(p, a));
    ASSERT_EQ(d.phi, p);
    ASSERT_EQ(d.a, a);
  }
}

TEST(Property, VerblunskyMomentsRecoverParameters) {
  Gen g(5);
  for (int t = 0; t < 60; ++t) {
    const auto a = g.verblunsky(7);
    const auto m = moments_from_verblunsky(a, "explicit");
    const auto sys = popuc_from_moments(m, a.size());
    ASSERT_EQ(sys.verblunsky.values(), a);
    ASSERT_EQ(sys.phis, phis_from_verblunsky(a));
    ASSERT_EQ(sys.h, h_from_verblunsky(a));
    const auto check = check_system(sys);
    ASSERT_TRUE(check.ok()) << check.failures();
  }
}

TEST(Property, MirrorDualIsInvolution) {
  Gen g(6);
  for (int t = 0; t < kTrials; ++t) {
    const VerblunskySequence a(g.verblunsky(10));
    const auto ta = mirror_dual(a);
    ASSERT_EQ(ta.terminal(), a.terminal());
    ASSERT_EQ(mirror_dual(ta), a);
  }
}

TEST(Property, MirrorDualOfMomentSystemIsSturmian) {
  Gen g(7);
  for (int t = 0; t < 40; ++t) {
    const auto spec = g.spec(16, 20);
    const auto pair = build_dual_pair(spec);
    ASSERT_TRUE(pair.checks.ok()) << spec.to_string();
    const auto sys = popuc_from_moments(pair.sturmian.moments, spec.total_degree());
    ASSERT_TRUE(same_system_data(sys, pair.sturmian)) << spec.to_string();
  }
}

TEST(Property, RamanujanSumDivisorIdentity) {
  // Σ_{d | M} c_d(n) equals M when M | n and 0 otherwise.
  Gen g(8);
  for (int t = 0; t < kTrials; ++t) {
    const auto m = static_cast<std::uint64_t>(g.integer(1, 400));
    const long n = g.integer(-1000, 1000);
    Integer total = 0;
    for (auto d : divisors(m)) total += ramanujan_sum_fast(d, n);
    ASSERT_EQ(total, n % static_cast<long>(m) == 0 ? Integer(static_cast<unsigned long>(m)) : Integer(0)) << m << " " << n;
    ASSERT_EQ(ramanujan_sum_direct(m, n), ramanujan_sum_fast(m, n));
  }
}

TEST(Property, RamanujanSumDependsOnGcdOnly) {
  Gen g(9);
  for (int t = 0; t < kTrials; ++t) {
    const auto m = static_cast<std::uint64_t>(g.integer(1, 200));
    const long n = g.integer(0, 5000);
    ASSERT_EQ(ramanujan_sum_fast(m, n), ramanujan_sum_fast(m, static_cast<long>(std::gcd<std::uint64_t>(m, n))));
  }
}

TEST(Property, KroneckerSystemsAreSingularOneStepOut) {
  Gen g(10);
  for (int t = 0; t < 40; ++t) {
    const auto spec = g.spec(20, 24);
    const auto n = spec.total_degree();
    const auto m = moments_from_kronecker(spec, n + 1);
    ASSERT_EQ(toeplitz_det(m, n + 1), 0) << spec.to_string();
    ASSERT_GT(toeplitz_det(m, n), 0) << spec.to_string();
  }
}
