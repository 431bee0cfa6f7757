#pragma once

#include <cstdint>
#include <string>

#include "ramopuc/opuc.hpp"

namespace ramopuc {

/// The explicit families with known closed forms.
enum class FamilyKind {
  RamanujanPrime,   // equal masses on the primitive p-th roots, N = p - 2
  Ramanujan2p,      // equal masses on the primitive 2p-th roots, N = p - 2
  SingleMoment,     // Sturmian dual of RamanujanPrime, any size N
  SturmianAnti2p,   // Sturmian system ending in A_{2p} = (z^{2p} - 1)/C_{2p}, N = p
  RamanujanAnti2p,  // equal masses on the roots of A_{2p}, N = p
};

struct FamilyId {
  FamilyKind kind;
  std::uint64_t parameter;  // odd prime p, or N for SingleMoment

  /// Throws InvalidArgument unless the parameter is an odd prime (or, for
  /// SingleMoment, anything).
  FamilyId(FamilyKind kind, std::uint64_t parameter);

  /// e.g. "ramanujan-prime:5"
  std::string name() const;
};

/// Prime case: Φ_n = z^n + (z^{n-1} + ... + 1)/(N - n + 2),
/// a_n = -1/(N - n + 1), Δ_n = p^{n-1}(p - n)/(p - 1)^n, σ_n = -1/(p - 1).
PopucSystem cf_ramanujan_prime(std::uint64_t p);

/// M = 2p: a_n = (-1)^n/(N - n + 1), σ_n = (-1)^{n+1}/(p - 1); ladder by
/// forward Szegő steps.
PopucSystem cf_ramanujan_2p(std::uint64_t p);

/// Φ_n = Σ_{k ≤ n} (k + 1) z^k / (n + 1) for n ≤ N, Φ_{N+1} = 1 + z + ... +
/// z^{N+1}, a_n = -1/(n + 2), a_N = -1.
PopucSystem cf_single_moment(std::uint64_t big_n);

/// Sturmian A_{2p} system: tΦ_n = z^n + (2p - n) z^{n-1}/(2p - n + 1) +
/// (-1)^n/(2p - n + 1) for 1 ≤ n ≤ p, ta_0 = (1 - p)/p,
/// ta_n = (-1)^n/(2p - n), ta_p = 1.
PopucSystem cf_sturmian_anti2p(std::uint64_t p);

/// Ramanujan A_{2p} system: a_n = -ta_{p-n-1}; Φ_n = z^n +
/// (z^n - (-1)^n)/((n + p)(z + 1)) for n < p. That expression does not hold at
/// n = p, where Φ_p is one Szegő step above Φ_{p-1}.
PopucSystem cf_ramanujan_anti2p(std::uint64_t p);

PopucSystem closed_form(const FamilyId& id);

}  // namespace ramopuc
