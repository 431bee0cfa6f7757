#include "ramopuc/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

namespace ramopuc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << ramopuc::to_string(mag) << (k > 0 ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_sub(const Poly& a, const Poly& b) { return a - b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (num.degree() < den.degree()) return {Poly{}, num};
  std::vector<Rational> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<Rational> q(rem.size() - dd);
  const Rational inv_lead = 1 / den.leading();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const Rational c = rem[i] * inv_lead;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d[j];
  }
  rem.resize(dd);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero())
    throw NonzeroRemainder("(" + num.to_string() + ") is not divisible by (" + den.to_string() +
                           "), remainder " + r.to_string());
  return q;
}

Poly poly_derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(out));
}

Poly poly_reverse(const Poly& p, int n) {
  if (n < 0 || p.degree() > n)
    throw DegreeExceedsBound("cannot reverse a degree-" + std::to_string(p.degree()) +
                             " polynomial with bound " + std::to_string(n));
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[static_cast<std::size_t>(n) - k] = p.coeffs()[k];
  return Poly(std::move(out));
}

Poly z_power_minus_one(std::uint64_t m) { return Poly::monomial(m) - Poly::constant(1); }

KroneckerSpec::KroneckerSpec(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidArgument("Kronecker spec needs at least one order");
  std::sort(orders_.begin(), orders_.end());
  if (orders_.front() == 0) throw InvalidArgument("Kronecker orders must be positive");
  if (std::adjacent_find(orders_.begin(), orders_.end()) != orders_.end())
    throw InvalidArgument("Kronecker orders must be distinct: " + to_string());
  for (auto m : orders_) total_degree_ += euler_totient(m);
}

std::string KroneckerSpec::to_string() const {
  std::string s;
  for (auto m : orders_) {
    if (!s.empty()) s += ',';
    s += std::to_string(m);
  }
  return s;
}

KroneckerSpec parse_kronecker_spec(const std::string& text) {
  std::vector<std::uint64_t> orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("malformed Kronecker order list: '" + text + "'");
    orders.push_back(std::stoull(item));
  }
  return KroneckerSpec(std::move(orders));
}

namespace {

class CyclotomicCache {
 public:
  Poly get(std::uint64_t m) {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    return cache_.emplace(m, build(m)).first->second;
  }

 private:
  static Poly build(std::uint64_t m) {
    Poly num = Poly::constant(1);
    Poly den = Poly::constant(1);
    for (auto d : divisors(m)) {
      switch (mobius(m / d)) {
        case 1: num = num * z_power_minus_one(d); break;
        case -1: den = den * z_power_minus_one(d); break;
        default: break;
      }
    }
    return poly_divexact(num, den);
  }

  std::mutex mutex_;
  std::map<std::uint64_t, Poly> cache_;
};

}  // namespace

Poly cyclotomic(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("cyclotomic order must be positive");
  static CyclotomicCache cache;
  return cache.get(m);
}

Poly anti_cyclotomic(std::uint64_t m) { return poly_divexact(z_power_minus_one(m), cyclotomic(m)); }

Poly kronecker_poly(const KroneckerSpec& spec) {
  Poly k = Poly::constant(1);
  for (auto m : spec.orders()) k = k * cyclotomic(m);
  return k;
}

VietaCheck vieta_checks(std::uint64_t m) {
  const Poly c = cyclotomic(m);
  const auto l = static_cast<std::size_t>(c.degree());
  VietaCheck v;
  v.modulus = m;
  v.kappa1 = c[l - 1].get_num();
  v.expected_kappa1 = -ramanujan_sum_fast(m, 1);
  v.kappa1_ok = c[l - 1] == Rational(v.expected_kappa1) && v.expected_kappa1 == -mobius(m);
  if (l >= 2) {
    const Integer c1 = ramanujan_sum_fast(m, 1);
    const Integer c2 = ramanujan_sum_fast(m, 2);
    v.kappa2_checked = true;
    v.kappa2 = c[l - 2];
    v.expected_kappa2 = Rational(c1 * c1 - c2, 2);
    v.expected_kappa2.canonicalize();
    v.kappa2_ok = v.kappa2 == v.expected_kappa2;
  }
  return v;
}

}  // namespace ramopuc
