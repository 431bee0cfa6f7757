#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramopuc/rational.hpp"

namespace ramopuc {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

bool is_prime(std::uint64_t m);

/// Positive divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// φ(M), with φ(1) = 1. Throws InvalidArgument for M = 0.
std::uint64_t euler_totient(std::uint64_t m);

/// μ(M) ∈ {-1, 0, 1}. Throws InvalidArgument for M = 0.
int mobius(std::uint64_t m);

/// c_M(n) by literal summation of the n-th powers of the primitive M-th roots
/// of unity inside ℤ[z]/C_M(z): the exponents s·n mod M for (s, M) = 1 are
/// collected into an integer polynomial which is then reduced modulo the
/// M-th cyclotomic polynomial (built here by recursive exact division of
/// z^M - 1). The remainder is the constant c_M(n).
///
/// Negative n is accepted; c_M is even and M-periodic in n.
Integer ramanujan_sum_direct(std::uint64_t m, std::int64_t n);

/// c_M(n) = Σ_{d | gcd(n, M)} d·μ(M/d).
Integer ramanujan_sum_fast(std::uint64_t m, std::int64_t n);

struct RamanujanTable {
  std::uint64_t modulus = 1;
  std::vector<Integer> values;  // c_M(0), ..., c_M(L)
};

/// c_M(0..L), each entry computed by both routes above. Throws
/// InternalInconsistency if they ever disagree.
RamanujanTable ramanujan_table(std::uint64_t m, std::uint64_t length);

}  // namespace ramopuc
