#include "ramopuc/number_theory.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "ramopuc/errors.hpp"

namespace ramopuc {
namespace {

void require_modulus(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("modulus must be a positive integer, got 0");
}

std::uint64_t reduce(std::int64_t n, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  const std::int64_t r = n % sm;
  return static_cast<std::uint64_t>(r < 0 ? r + sm : r);
}

using IntPoly = std::vector<Integer>;  // ascending

// Quotient of num by the monic divisor den; the remainder must vanish.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly q(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw InternalInconsistency("cyclotomic recursion left a remainder");
  return q;
}

// C_M over ℤ via C_M = (z^M - 1) / Π_{d | M, d < M} C_d.
class RecursiveCyclotomics {
 public:
  IntPoly get(std::uint64_t m) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    }
    IntPoly p(m + 1, Integer(0));
    p[0] = -1;
    p[m] = 1;
    for (auto d : divisors(m))
      if (d < m) p = divide_monic(std::move(p), get(d));
    std::lock_guard lock(mutex_);
    return cache_.emplace(m, std::move(p)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, IntPoly> cache_;
};

RecursiveCyclotomics& recursive_cyclotomics() {
  static RecursiveCyclotomics instance;
  return instance;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1u);
  return out;
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  const auto f = factorize(m);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_totient(std::uint64_t m) {
  require_modulus(m);
  std::uint64_t phi = m;
  for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(std::uint64_t m) {
  require_modulus(m);
  int mu = 1;
  for (auto [p, e] : factorize(m)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Integer ramanujan_sum_direct(std::uint64_t m, std::int64_t n) {
  require_modulus(m);
  const std::uint64_t r = reduce(n, m);
  IntPoly power_sum(m, Integer(0));
  for (std::uint64_t s = 1; s <= m; ++s)
    if (std::gcd(s, m) == 1) ++power_sum[(s * r) % m];

  const IntPoly cyc = recursive_cyclotomics().get(m);
  const std::size_t dd = cyc.size() - 1;
  for (std::size_t i = power_sum.size(); i-- > dd;) {
    const Integer c = power_sum[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) power_sum[i - dd + j] -= c * cyc[j];
  }
  for (std::size_t i = 1; i < std::min(dd, power_sum.size()); ++i)
    if (power_sum[i] != 0)
      throw InternalInconsistency("primitive-root power sum did not reduce to a constant for M=" +
                                  std::to_string(m));
  return power_sum[0];
}

Integer ramanujan_sum_fast(std::uint64_t m, std::int64_t n) {
  require_modulus(m);
  const std::uint64_t g = std::gcd(reduce(n, m), m);
  Integer sum = 0;
  for (auto d : divisors(g)) sum += Integer(static_cast<unsigned long>(d)) * mobius(m / d);
  return sum;
}

RamanujanTable ramanujan_table(std::uint64_t m, std::uint64_t length) {
  require_modulus(m);
  RamanujanTable table{m, {}};
  table.values.reserve(length + 1);
  for (std::uint64_t n = 0; n <= length; ++n) {
    auto direct = ramanujan_sum_direct(m, static_cast<std::int64_t>(n));
    auto fast = ramanujan_sum_fast(m, static_cast<std::int64_t>(n));
    if (direct != fast)
      throw InternalInconsistency("c_" + std::to_string(m) + "(" + std::to_string(n) +
                                  "): direct " + direct.get_str() + " != fast " + fast.get_str());
    table.values.push_back(std::move(direct));
  }
  return table;
}

}  // namespace ramopuc
