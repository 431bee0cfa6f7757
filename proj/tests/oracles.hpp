#pragma once

// Brute-force oracles used only by tests. None of these share code paths
// with the library: sums are floating complex exponentials, determinants are
// plain rational Gaussian elimination, OPUC come from solving the
// orthogonality equations directly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ramopuc/rational.hpp"

namespace oracle {

using ramopuc::Rational;

inline std::uint64_t totient(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= m; ++k) c += std::gcd(k, m) == 1;
  return c;
}

inline int mobius(std::uint64_t m) {
  int primes = 0;
  for (std::uint64_t d = 2; d <= m; ++d) {
    bool prime = true;
    for (std::uint64_t e = 2; e * e <= d; ++e)
      if (d % e == 0) prime = false;
    if (!prime || m % d) continue;
    if (m % (d * d) == 0) return 0;
    ++primes;
  }
  return primes % 2 ? -1 : 1;
}

/// Σ_{(s,M)=1} exp(2πisn/M) in double precision, rounded to the nearest
/// integer (throws if it is not close to one).
inline long ramanujan_float(std::uint64_t m, long n) {
  std::complex<double> s = 0;
  for (std::uint64_t k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) s += std::polar(1.0, 2 * M_PI * double(k) * double(n) / double(m));
  const double r = std::round(s.real());
  if (std::abs(s.real() - r) > 1e-6 || std::abs(s.imag()) > 1e-6) throw std::logic_error("not an integer");
  return static_cast<long>(r);
}

/// Coefficients of Π (z - ζ) over the primitive M-th roots, rounded.
inline std::vector<long> cyclotomic_from_roots(std::uint64_t m) {
  std::vector<std::complex<double>> c{1.0};
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    const auto root = std::polar(1.0, 2 * M_PI * double(k) / double(m));
    std::vector<std::complex<double>> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<long> out;
  for (auto v : c) out.push_back(std::lround(v.real()));
  return out;
}

inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return d;
}

inline Rational sigma_at(const std::vector<Rational>& s, long k) { return s.at(static_cast<std::size_t>(k < 0 ? -k : k)); }

inline Rational toeplitz_det(const std::vector<Rational>& sigma, std::size_t n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = sigma_at(sigma, long(j) - long(i));
  return det(a);
}

/// Monic Φ_n (ascending coefficients) solving Σ_k c_k σ_{k-j} = 0 for
/// j = 0..n-1 by Cramer's rule.
inline std::vector<Rational> opuc_by_linear_solve(const std::vector<Rational>& sigma, std::size_t n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) a[j][k] = sigma_at(sigma, long(k) - long(j));
    rhs[j] = -sigma_at(sigma, long(n) - long(j));
  }
  const Rational d = det(a);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    auto ak = a;
    for (std::size_t j = 0; j < n; ++j) ak[j][k] = rhs[j];
    c[k] = det(ak) / d;
  }
  c[n] = 1;
  return c;
}

}  // namespace oracle
