#include "ramopuc/duality.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

namespace ramopuc {
namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

template <class T>
struct Complex {
  T re{0};
  T im{0};

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const T d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex conj() const { return {re, -im}; }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

template <class T>
T to_real(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) {
    return q.get_d();
  } else {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

template <class T>
Complex<T> root_value(const RootAngle& r) {
  using std::cos;
  using std::sin;
  const T theta = 2 * boost::math::constants::pi<T>() * T(r.numerator) / T(r.order);
  return {cos(theta), sin(theta)};
}

template <class T>
Complex<T> evaluate(const Poly& p, const Complex<T>& z) {
  Complex<T> acc{};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + Complex<T>{to_real<T>(*it), T(0)};
  return acc;
}

template <class T>
double as_double(const T& v) {
  return static_cast<double>(v);
}

template <class T>
WeightReport run_weights(const DualPair& pair, unsigned digits) {
  using std::abs;
  WeightReport report;
  report.digits = digits;
  report.tolerance = std::pow(10.0, -static_cast<double>(digits));

  const std::size_t big_n = pair.ramanujan.n();
  const Poly& k = pair.charpoly;
  const Poly dk = poly_derivative(k);
  const Poly& phi_n = pair.ramanujan.phis[big_n];
  const Poly& tphi_n = pair.sturmian.phis[big_n];
  const T h_n = to_real<T>(pair.ramanujan.h[big_n]);
  const T th_n = to_real<T>(pair.sturmian.h[big_n]);
  const T equal_mass = T(1) / T(static_cast<unsigned long>(big_n + 1));
  T coeff_scale = 0;
  for (const auto& c : k.coeffs()) coeff_scale += to_real<T>(abs(c));

  Complex<T> tw_sum{};
  bool all_positive = true;
  for (const auto& angle : kronecker_root_angles(pair.spec)) {
    const auto z = root_value<T>(angle);
    const auto kz = evaluate(k, z);
    const auto dkz = evaluate(dk, z);
    const auto pz = evaluate(phi_n, z);
    const auto tpz = evaluate(tphi_n, z);

    const auto w = Complex<T>{h_n, 0} / (dkz.conj() * pz);
    const auto tw = pz / dkz;
    const auto tw_alt = Complex<T>{th_n, 0} / (dkz.conj() * tpz);
    const auto dual = tpz / dkz;
    const auto product = w * tw * Complex<T>{dkz.norm(), 0};

    RootResidual r;
    r.angle = angle;
    r.on_circle = as_double(abs(z.abs() - 1));
    r.charpoly_value = as_double(kz.abs() / coeff_scale);
    r.ramanujan_weight = as_double((w - Complex<T>{equal_mass, 0}).abs() / equal_mass);
    r.sturmian_imag = as_double(abs(tw.im) / tw.abs());
    r.sturmian_routes = as_double((tw - tw_alt).abs() / tw.abs());
    r.dual_weight = as_double((dual - Complex<T>{equal_mass, 0}).abs() / equal_mass);
    r.product = as_double((product - Complex<T>{h_n, 0}).abs() / h_n);
    r.w = as_double(w.re);
    r.tw = as_double(tw.re);
    r.positive = tw.re > 0;
    all_positive = all_positive && r.positive;
    tw_sum = tw_sum + tw;
    for (double v : {r.on_circle, r.charpoly_value, r.ramanujan_weight, r.sturmian_imag, r.sturmian_routes,
                     r.dual_weight, r.product})
      report.max_residual = std::max(report.max_residual, v);
    report.roots.push_back(r);
  }
  report.sturmian_sum_residual = as_double((tw_sum - Complex<T>{T(1), T(0)}).abs());
  report.max_residual = std::max(report.max_residual, report.sturmian_sum_residual);
  report.passed = all_positive && report.roots.size() == big_n + 1 && report.max_residual < report.tolerance;
  return report;
}

template <class T>
std::string format_real(const T& v, unsigned digits) {
  std::ostringstream os;
  os.precision(static_cast<int>(digits));
  os << v;
  return os.str();
}

}  // namespace

VerblunskySequence mirror_dual(const VerblunskySequence& a) {
  const std::size_t big_n = a.terminal_index();
  std::vector<Rational> ta(big_n + 1);
  for (std::size_t n = 0; n <= big_n; ++n) {
    const Rational prev = n == big_n ? Rational(-1) : a[big_n - n - 1];
    ta[n] = -a.terminal() * prev;
  }
  return VerblunskySequence(std::move(ta));
}

PopucSystem sturmian_from_charpoly(const Poly& charpoly, const std::string& source) {
  if (!charpoly.is_monic() || charpoly.degree() < 1)
    throw InvalidCharacteristic("characteristic polynomial must be monic of positive degree: " + charpoly.to_string());
  const auto big_n = static_cast<std::size_t>(charpoly.degree() - 1);
  const Rational a_terminal = -charpoly[0];
  if (!is_unimodular(a_terminal))
    throw InvalidCharacteristic("|Phi_{N+1}(0)| != 1 for " + charpoly.to_string());

  std::vector<Poly> phis(big_n + 2);
  std::vector<Rational> a(big_n + 1);
  phis[big_n + 1] = charpoly;
  phis[big_n] = poly_derivative(charpoly) * Rational(1, static_cast<unsigned long>(big_n + 1));
  a[big_n] = a_terminal;
  if (szego_step(phis[big_n], a_terminal) != charpoly)
    throw InvalidCharacteristic("K'/(N+1) is not one Szego step below " + charpoly.to_string());
  try {
    for (std::size_t n = big_n; n >= 1; --n) {
      auto [phi, an] = inverse_szego_step(phis[n]);
      phis[n - 1] = std::move(phi);
      a[n - 1] = std::move(an);
    }
  } catch (const UnimodularConstantTerm& e) {
    throw InvalidCharacteristic(std::string("inverse Szego descent stopped: ") + e.what());
  } catch (const NonzeroRemainder& e) {
    throw InvalidCharacteristic(std::string("inverse Szego descent stopped: ") + e.what());
  }

  PopucSystem sys;
  sys.family = "sturmian";
  sys.source = source;
  sys.verblunsky = VerblunskySequence(a);
  sys.phis = std::move(phis);
  sys.h = h_from_verblunsky(a);
  sys.moments = moments_from_verblunsky(a, "sturmian:" + source);
  sys.delta = toeplitz_minors(sys.moments, big_n + 1);
  return sys;
}

PopucSystem sturmian_from_spec(const KroneckerSpec& spec, const BuildOptions& options) {
  auto sys = sturmian_from_charpoly(kronecker_poly(spec), "kronecker:" + spec.to_string());
  if (options.paranoid) {
    const auto check = check_system(sys);
    if (!check.ok()) throw InternalInconsistency("Sturmian system fails: " + check.failures());
  }
  return sys;
}

PopucSystem ramanujan_from_charpoly(const KroneckerSpec& spec, const BuildOptions& options) {
  const std::size_t points = spec.total_degree();
  auto sys = popuc_from_moments(moments_from_kronecker(spec, points), points, options);
  if (sys.charpoly() != kronecker_poly(spec))
    throw InternalInconsistency("equal-mass ladder for {" + spec.to_string() + "} ends in " +
                                sys.charpoly().to_string() + ", not the Kronecker polynomial");
  return sys;
}

std::string DualChecks::failures() const {
  std::string s;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add(shared_charpoly, "shared characteristic polynomial");
  add(mirror_relation, "mirror map");
  add(mirror_involution, "mirror involution");
  add(sturm_condition, "Sturm derivative condition");
  add(h_terminal_equal, "h_N equality");
  add(equal_mass_moments, "equal-mass moments");
  return s;
}

DualChecks check_dual(const KroneckerSpec& spec, const PopucSystem& ram, const PopucSystem& stu) {
  DualChecks c;
  const Poly k = kronecker_poly(spec);
  const std::size_t big_n = ram.n();
  c.shared_charpoly = ram.charpoly() == k && stu.charpoly() == k;
  if (stu.n() != big_n) return c;
  c.mirror_relation = mirror_dual(ram.verblunsky) == stu.verblunsky;
  c.mirror_involution = mirror_dual(mirror_dual(ram.verblunsky)) == ram.verblunsky &&
                        mirror_dual(mirror_dual(stu.verblunsky)) == stu.verblunsky;
  c.sturm_condition = stu.phis[big_n] * Rational(static_cast<unsigned long>(big_n + 1)) == poly_derivative(k);
  c.h_terminal_equal = ram.h[big_n] == stu.h[big_n];
  c.equal_mass_moments = moments_from_power_sums(k, big_n + 1) == ram.moments;
  return c;
}

DualPair build_dual_pair(const KroneckerSpec& spec, const BuildOptions& options) {
  DualPair pair{spec, ramanujan_from_charpoly(spec, options), sturmian_from_spec(spec, options), kronecker_poly(spec), {}};
  pair.checks = check_dual(spec, pair.ramanujan, pair.sturmian);
  if (!pair.checks.ok())
    throw DualityViolation("duality fails for {" + spec.to_string() + "}: " + pair.checks.failures());
  return pair;
}

std::vector<RootAngle> kronecker_root_angles(const KroneckerSpec& spec) {
  std::vector<RootAngle> out;
  for (auto m : spec.orders())
    for (std::uint64_t s = 0; s < m; ++s)
      if (std::gcd(s, m) == 1) out.push_back({s, m});
  return out;
}

NumericRootSet numeric_roots(const KroneckerSpec& spec, unsigned digits) {
  if (digits == 0 || digits > 90) throw InvalidArgument("precision must be between 1 and 90 digits");
  NumericRootSet set{kronecker_poly(spec), digits, {}};
  for (const auto& angle : kronecker_root_angles(spec)) {
    if (digits <= 15) {
      const auto z = root_value<double>(angle);
      set.roots.push_back({angle, format_real(z.re, digits), format_real(z.im, digits)});
    } else {
      const auto z = root_value<BigFloat>(angle);
      set.roots.push_back({angle, format_real(z.re, digits), format_real(z.im, digits)});
    }
  }
  return set;
}

WeightReport verify_weights(const DualPair& pair, unsigned digits) {
  if (digits == 0 || digits > 90) throw InvalidArgument("precision must be between 1 and 90 digits");
  return digits <= 15 ? run_weights<double>(pair, digits) : run_weights<BigFloat>(pair, digits);
}

void WeightReport::require() const {
  if (passed) return;
  std::ostringstream os;
  os << "weight checks failed (tolerance " << tolerance << ", max residual " << max_residual
     << ", |sum tw - 1| = " << sturmian_sum_residual << ")";
  for (const auto& r : roots)
    os << "\n  z = exp(2 pi i " << r.angle.numerator << "/" << r.angle.order << "): w " << r.ramanujan_weight
       << ", tw-imag " << r.sturmian_imag << ", tw-routes " << r.sturmian_routes << ", dual " << r.dual_weight
       << ", product " << r.product << (r.positive ? "" : ", tw not positive");
  throw WeightCheckFailure(os.str());
}

}  // namespace ramopuc
