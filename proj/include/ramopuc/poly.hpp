#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramopuc/rational.hpp"

namespace ramopuc {

/// Dense univariate polynomial over ℚ, coefficients in ascending degree.
///
/// The zero polynomial is the empty coefficient vector; every constructor and
/// arithmetic operation trims trailing zeros, so `coeffs().back()` is nonzero
/// whenever the polynomial is.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c·z^k
  static Poly monomial(std::size_t k, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of z^k; zero beyond the degree.
  Rational operator[](std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& z) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form such as "z^2 - 1/3*z + 1".
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Quotient and remainder of Euclidean division; den must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// q with num = q·den exactly. Throws NonzeroRemainder otherwise, and
/// InvalidArgument for den = 0.
Poly poly_divexact(const Poly& num, const Poly& den);

Poly poly_derivative(const Poly& p);

/// z^n·p(1/z) (the real-coefficient star operation). Throws
/// DegreeExceedsBound if deg p > n.
Poly poly_reverse(const Poly& p, int n);

/// z^m - 1
Poly z_power_minus_one(std::uint64_t m);

/// Set of distinct positive orders m_1 < ... < m_k defining the admissible
/// Kronecker polynomial C_{m_1}·...·C_{m_k}.
class KroneckerSpec {
 public:
  /// Sorts the orders; throws InvalidArgument on duplicates, zero, or an empty
  /// list.
  explicit KroneckerSpec(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  /// Σ φ(m_i), the degree of the Kronecker polynomial.
  std::uint64_t total_degree() const { return total_degree_; }
  /// "1,2,3"
  std::string to_string() const;

  friend bool operator==(const KroneckerSpec&, const KroneckerSpec&) = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t total_degree_ = 0;
};

/// Parses "m1,m2,...". Throws InvalidArgument.
KroneckerSpec parse_kronecker_spec(const std::string& text);

/// C_M(z) = Π_{d | M} (z^d - 1)^{μ(M/d)}, memoized. Thread-safe.
Poly cyclotomic(std::uint64_t m);

/// (z^M - 1) / C_M(z)
Poly anti_cyclotomic(std::uint64_t m);

/// Π C_{m_i}(z)
Poly kronecker_poly(const KroneckerSpec& spec);

struct VietaCheck {
  std::uint64_t modulus = 1;
  Integer kappa1;
  Integer expected_kappa1;  // -μ(M)
  bool kappa1_ok = false;
  bool kappa2_checked = false;  // only when φ(M) ≥ 2
  Rational kappa2;
  Rational expected_kappa2;  // (c_M(1)² - c_M(2)) / 2
  bool kappa2_ok = false;

  bool ok() const { return kappa1_ok && (!kappa2_checked || kappa2_ok); }
};

/// Reads κ_1, κ_2 off C_M and compares them with the Ramanujan-sum
/// expressions -c_M(1) = -μ(M) and (c_M(1)² - c_M(2))/2.
VietaCheck vieta_checks(std::uint64_t m);

}  // namespace ramopuc
