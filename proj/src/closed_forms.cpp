#include "ramopuc/closed_forms.hpp"

#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

namespace ramopuc {
namespace {

Rational frac(long num, unsigned long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

long sign_pow(std::uint64_t n) { return n % 2 ? -1 : 1; }

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("family parameter must be an odd prime, got " + std::to_string(p));
}

// Δ_1..Δ_{N+1} from h_0..h_N via Δ_{n+1} = Δ_n h_n.
std::vector<Rational> delta_from_h(const std::vector<Rational>& h) {
  std::vector<Rational> delta;
  Rational d = 1;
  for (const auto& hn : h) {
    d *= hn;
    delta.push_back(d);
  }
  return delta;
}

PopucSystem assemble(std::string family, std::string source, std::vector<Poly> phis, std::vector<Rational> a,
                     MomentSequence moments) {
  PopucSystem sys;
  sys.family = std::move(family);
  sys.source = std::move(source);
  sys.h = h_from_verblunsky(a);
  sys.delta = delta_from_h(sys.h);
  sys.verblunsky = VerblunskySequence(std::move(a));
  sys.phis = std::move(phis);
  sys.moments = std::move(moments);
  return sys;
}

Poly anti_2p(std::uint64_t p) {
  return Poly::monomial(p + 1) + Poly::monomial(p) - Poly::monomial(1) - Poly::constant(1);
}

}  // namespace

FamilyId::FamilyId(FamilyKind k, std::uint64_t param) : kind(k), parameter(param) {
  if (kind != FamilyKind::SingleMoment) require_odd_prime(parameter);
}

std::string FamilyId::name() const {
  const char* base = "";
  switch (kind) {
    case FamilyKind::RamanujanPrime: base = "ramanujan-prime"; break;
    case FamilyKind::Ramanujan2p: base = "ramanujan-2p"; break;
    case FamilyKind::SingleMoment: base = "single-moment"; break;
    case FamilyKind::SturmianAnti2p: base = "sturmian-anti2p"; break;
    case FamilyKind::RamanujanAnti2p: base = "ramanujan-anti2p"; break;
  }
  return std::string(base) + ":" + std::to_string(parameter);
}

PopucSystem cf_ramanujan_prime(std::uint64_t p) {
  const FamilyId id(FamilyKind::RamanujanPrime, p);
  const std::uint64_t big_n = p - 2;

  std::vector<Poly> phis;
  for (std::uint64_t n = 0; n <= big_n + 1; ++n) {
    std::vector<Rational> c(n + 1, frac(1, big_n - n + 2));
    c[n] = 1;
    phis.emplace_back(std::move(c));
  }
  std::vector<Rational> a;
  for (std::uint64_t n = 0; n <= big_n; ++n) a.push_back(frac(-1, big_n - n + 1));

  PopucSystem sys;
  sys.family = id.name();
  sys.source = "cyclotomic:" + std::to_string(p);
  sys.verblunsky = VerblunskySequence(std::move(a));
  sys.phis = std::move(phis);
  const Integer pz(static_cast<unsigned long>(p));
  for (std::uint64_t n = 1; n <= big_n + 1; ++n) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), pz.get_mpz_t(), n - 1);
    num *= static_cast<unsigned long>(p - n);
    mpz_ui_pow_ui(den.get_mpz_t(), p - 1, n);
    Rational d(num, den);
    d.canonicalize();
    sys.delta.push_back(d);
  }
  for (std::uint64_t n = 0; n <= big_n; ++n)
    sys.h.push_back(n == 0 ? sys.delta[0] : Rational(sys.delta[n] / sys.delta[n - 1]));
  std::vector<Rational> sigma(big_n + 2, frac(-1, p - 1));
  sigma[0] = 1;
  sys.moments = MomentSequence(std::move(sigma), "cyclotomic:" + std::to_string(p));
  return sys;
}

PopucSystem cf_ramanujan_2p(std::uint64_t p) {
  const FamilyId id(FamilyKind::Ramanujan2p, p);
  const std::uint64_t big_n = p - 2;
  std::vector<Rational> a;
  for (std::uint64_t n = 0; n <= big_n; ++n) a.push_back(frac(sign_pow(n), big_n - n + 1));
  std::vector<Rational> sigma{Rational(1)};
  for (std::uint64_t n = 1; n <= big_n + 1; ++n) sigma.push_back(frac(sign_pow(n + 1), p - 1));
  auto phis = phis_from_verblunsky(a);
  return assemble(id.name(), "cyclotomic:" + std::to_string(2 * p), std::move(phis), std::move(a),
                  MomentSequence(std::move(sigma), "cyclotomic:" + std::to_string(2 * p)));
}

PopucSystem cf_single_moment(std::uint64_t big_n) {
  const FamilyId id(FamilyKind::SingleMoment, big_n);
  std::vector<Poly> phis;
  for (std::uint64_t n = 0; n <= big_n; ++n) {
    std::vector<Rational> c;
    for (std::uint64_t k = 0; k <= n; ++k) c.push_back(frac(static_cast<long>(k + 1), n + 1));
    Poly phi(std::move(c));
    if (!phi.is_monic()) throw InternalInconsistency("single-moment polynomial of degree " + std::to_string(n) + " is not monic");
    phis.push_back(std::move(phi));
  }
  phis.emplace_back(std::vector<Rational>(big_n + 2, Rational(1)));
  std::vector<Rational> a;
  for (std::uint64_t n = 0; n < big_n; ++n) a.push_back(frac(-1, n + 2));
  a.push_back(-1);
  auto moments = moments_from_verblunsky(a, id.name());
  return assemble(id.name(), "cyclotomic-sturmian:" + std::to_string(big_n + 2), std::move(phis), std::move(a),
                  std::move(moments));
}

PopucSystem cf_sturmian_anti2p(std::uint64_t p) {
  const FamilyId id(FamilyKind::SturmianAnti2p, p);
  const long two_p = static_cast<long>(2 * p);
  std::vector<Poly> phis{Poly::constant(1)};
  for (std::uint64_t n = 1; n <= p; ++n) {
    const long m = two_p - static_cast<long>(n);
    phis.push_back(Poly::monomial(n) + Poly::monomial(n - 1, frac(m, static_cast<unsigned long>(m + 1))) +
                   Poly::constant(frac(sign_pow(n), static_cast<unsigned long>(m + 1))));
  }
  phis.push_back(anti_2p(p));
  std::vector<Rational> a{frac(1 - static_cast<long>(p), p)};
  for (std::uint64_t n = 1; n < p; ++n) a.push_back(frac(sign_pow(n), static_cast<unsigned long>(two_p) - n));
  a.push_back(1);
  auto moments = moments_from_verblunsky(a, id.name());
  return assemble(id.name(), "kronecker:1,2," + std::to_string(p), std::move(phis), std::move(a), std::move(moments));
}

PopucSystem cf_ramanujan_anti2p(std::uint64_t p) {
  const FamilyId id(FamilyKind::RamanujanAnti2p, p);
  const auto dual = cf_sturmian_anti2p(p);
  const auto& ta = dual.verblunsky.values();
  std::vector<Rational> a;
  for (std::uint64_t n = 0; n <= p; ++n) a.push_back(n == p ? Rational(1) : Rational(-ta[p - n - 1]));

  std::vector<Poly> phis;
  for (std::uint64_t n = 0; n < p; ++n) {
    // (z^n - (-1)^n)/(z + 1) = Σ_{k<n} (-1)^{n-1-k} z^k
    std::vector<Rational> c(n + 1);
    for (std::uint64_t k = 0; k < n; ++k) c[k] = frac(sign_pow(n - 1 - k), n + p);
    c[n] = 1;
    phis.emplace_back(std::move(c));
  }
  phis.push_back(szego_step(phis.back(), a[p - 1]));
  phis.push_back(anti_2p(p));

  // σ_n = (c_1(n) + c_2(n) + c_p(n))/(p + 1)
  std::vector<Rational> sigma;
  for (std::uint64_t n = 0; n <= p + 1; ++n) {
    const long cp = n % p == 0 ? static_cast<long>(p) - 1 : -1;
    sigma.push_back(frac(1 + sign_pow(n) + cp, p + 1));
  }
  return assemble(id.name(), "kronecker:1,2," + std::to_string(p), std::move(phis), std::move(a),
                  MomentSequence(std::move(sigma), "kronecker:1,2," + std::to_string(p)));
}

PopucSystem closed_form(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::RamanujanPrime: return cf_ramanujan_prime(id.parameter);
    case FamilyKind::Ramanujan2p: return cf_ramanujan_2p(id.parameter);
    case FamilyKind::SingleMoment: return cf_single_moment(id.parameter);
    case FamilyKind::SturmianAnti2p: return cf_sturmian_anti2p(id.parameter);
    case FamilyKind::RamanujanAnti2p: return cf_ramanujan_anti2p(id.parameter);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace ramopuc
