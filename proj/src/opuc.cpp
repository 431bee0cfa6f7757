#include "ramopuc/opuc.hpp"

#include <algorithm>
#include <string>

#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"

namespace ramopuc {
namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Fraction-free elimination with row pivoting.
Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return negate ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

// Toeplitz matrix scaled to integers: entry (i, j) = scale·σ_{j-i}.
IntMatrix scaled_toeplitz(const MomentSequence& m, std::size_t n, const Integer& scale) {
  IntMatrix a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = m.at(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)) * scale;
      a[i][j] = v.get_num();
    }
  return a;
}

Integer moment_scale(const MomentSequence& m, std::size_t n) {
  if (n == 0) return 1;
  if (m.max_index() + 1 < n)
    throw InsufficientMoments("a " + std::to_string(n) + "x" + std::to_string(n) +
                              " Toeplitz matrix needs moments up to index " + std::to_string(n - 1));
  return common_denominator({m.values().begin(), m.values().begin() + static_cast<std::ptrdiff_t>(n)});
}

Rational unscale(const Integer& det, const Integer& scale, std::size_t n) {
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), n);
  Rational r(det, denom);
  r.canonicalize();
  return r;
}

void require_monic(const Poly& phi, const char* what) {
  if (!phi.is_monic()) throw InvalidArgument(std::string(what) + ": polynomial must be monic, got " + phi.to_string());
}

// (T·g)_j = Σ_k g_k σ_{j-k}, j = 0..rows-1.
std::vector<Rational> moment_apply(const MomentSequence& m, const Poly& g, std::size_t rows) {
  std::vector<Rational> out(rows);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
      out[j] += g.coeffs()[k] * m.at(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k));
  return out;
}

Rational dot(const Poly& f, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t j = 0; j < f.coeffs().size() && j < v.size(); ++j) s += f.coeffs()[j] * v[j];
  return s;
}

}  // namespace

MomentSequence::MomentSequence(std::vector<Rational> sigma, std::string provenance)
    : sigma_(std::move(sigma)), provenance_(std::move(provenance)) {
  if (sigma_.empty() || sigma_[0] <= 0) throw InvalidArgument("moment sequence needs sigma_0 > 0");
}

const Rational& MomentSequence::at(std::int64_t n) const {
  const auto k = static_cast<std::uint64_t>(n < 0 ? -n : n);
  if (k >= sigma_.size())
    throw InsufficientMoments("moment sigma_" + std::to_string(n) + " requested but only sigma_0..sigma_" +
                              std::to_string(sigma_.size() - 1) + " are available");
  return sigma_[k];
}

VerblunskySequence::VerblunskySequence(std::vector<Rational> a) : a_(std::move(a)) {
  if (a_.empty()) throw InvalidArgument("empty Verblunsky sequence");
  for (std::size_t k = 0; k + 1 < a_.size(); ++k)
    if (abs(a_[k]) >= 1)
      throw InteriorCoefficientOutOfRange("|a_" + std::to_string(k) + "| = |" + to_string(a_[k]) + "| >= 1");
  if (!is_unimodular(a_.back()))
    throw TerminalMass("terminal Verblunsky parameter a_" + std::to_string(a_.size() - 1) + " = " +
                       to_string(a_.back()) + " is not unimodular");
}

MomentSequence moments_from_cyclotomic(std::uint64_t m, std::size_t length) {
  const auto table = ramanujan_table(m, length);
  const Integer phi(static_cast<unsigned long>(euler_totient(m)));
  std::vector<Rational> sigma;
  sigma.reserve(length + 1);
  for (const auto& c : table.values) {
    Rational q(c, phi);
    q.canonicalize();
    sigma.push_back(std::move(q));
  }
  return MomentSequence(std::move(sigma), "cyclotomic:" + std::to_string(m));
}

MomentSequence moments_from_kronecker(const KroneckerSpec& spec, std::size_t length) {
  std::vector<Integer> sums(length + 1);
  for (auto order : spec.orders()) {
    const auto table = ramanujan_table(order, length);
    for (std::size_t n = 0; n <= length; ++n) sums[n] += table.values[n];
  }
  const Integer total(static_cast<unsigned long>(spec.total_degree()));
  std::vector<Rational> sigma;
  sigma.reserve(length + 1);
  for (auto& s : sums) {
    Rational q(s, total);
    q.canonicalize();
    sigma.push_back(std::move(q));
  }
  return MomentSequence(std::move(sigma), "kronecker:" + spec.to_string());
}

MomentSequence moments_from_power_sums(const Poly& charpoly, std::size_t length) {
  if (!charpoly.is_monic() || charpoly.degree() < 1)
    throw InvalidArgument("power-sum moments need a monic polynomial of positive degree");
  if (charpoly[0] == 0) throw InvalidArgument("power-sum moments need a nonzero constant term");
  const auto d = static_cast<std::size_t>(charpoly.degree());
  // e_i: coefficient of z^{d-i}, so p(z) = Σ e_i z^{d-i} with e_0 = 1.
  auto e = [&](std::size_t i) { return charpoly[d - i]; };
  std::vector<Rational> p(length + 1);
  p[0] = static_cast<unsigned long>(d);
  for (std::size_t k = 1; k <= length; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i < k && i <= d; ++i) acc += e(i) * p[k - i];
    if (k <= d) acc += e(k) * static_cast<unsigned long>(k);
    p[k] = -acc;
  }
  for (auto& v : p) v /= static_cast<unsigned long>(d);
  return MomentSequence(std::move(p), "power-sums:" + charpoly.to_string());
}

MomentSequence moments_from_verblunsky(const std::vector<Rational>& a, std::string provenance) {
  std::vector<Rational> sigma{Rational(1)};
  Poly phi = Poly::constant(1);
  Rational h = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    // a_n h_n = Σ_{k ≤ n} c_k σ_{k+1} with c_n = 1.
    Rational s = a[n] * h;
    for (std::size_t k = 0; k < n; ++k) s -= phi[k] * sigma[k + 1];
    sigma.push_back(std::move(s));
    phi = szego_step(phi, a[n]);
    h *= 1 - a[n] * a[n];
  }
  return MomentSequence(std::move(sigma), std::move(provenance));
}

Rational toeplitz_det(const MomentSequence& m, std::size_t n) {
  if (n == 0) return 1;
  const Integer scale = moment_scale(m, n);
  return unscale(bareiss_det(scaled_toeplitz(m, n, scale)), scale, n);
}

std::vector<Rational> toeplitz_minors(const MomentSequence& m, std::size_t n) {
  std::vector<Rational> out;
  if (n == 0) return out;
  const Integer scale = moment_scale(m, n);
  IntMatrix a = scaled_toeplitz(m, n, scale);
  // Without pivoting the k-th Bareiss pivot is the leading (k+1)-minor.
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      for (std::size_t r = k + 1; r <= n; ++r) out.push_back(toeplitz_det(m, r));
      return out;
    }
    out.push_back(unscale(a[k][k], scale, k + 1));
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return out;
}

Poly determinant_phi(const MomentSequence& m, std::size_t n) {
  if (n == 0) return Poly::constant(1);
  const Integer scale = moment_scale(m, n + 1);
  // Rows 0..n-1 of the bordered matrix: scale·σ_{j-i}, j = 0..n.
  IntMatrix rows(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      rows[i][j] = Rational(m.at(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)) * scale).get_num();
  std::vector<Integer> cof(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix minor(n, std::vector<Integer>());
    for (std::size_t i = 0; i < n; ++i) {
      minor[i].reserve(n);
      for (std::size_t j = 0; j <= n; ++j)
        if (j != k) minor[i].push_back(rows[i][j]);
    }
    cof[k] = bareiss_det(std::move(minor));
    if ((n + k) % 2) cof[k] = -cof[k];
  }
  if (cof[n] == 0) throw SingularMoment("Delta_" + std::to_string(n) + " = 0; determinant formula undefined");
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = Rational(cof[k], cof[n]);
    c[k].canonicalize();
  }
  return Poly(std::move(c));
}

Rational inner_product(const MomentSequence& m, const Poly& f, const Poly& g) {
  Rational s = 0;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (f.coeffs()[j] == 0) continue;
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
      s += f.coeffs()[j] * g.coeffs()[k] * m.at(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k));
  }
  return s;
}

Poly star(const Poly& phi) { return poly_reverse(phi, std::max(phi.degree(), 0)); }

Poly szego_step(const Poly& phi, const Rational& a) {
  require_monic(phi, "szego_step");
  return Poly::monomial(1) * phi - a * star(phi);
}

SzegoDescent inverse_szego_step(const Poly& phi_next) {
  require_monic(phi_next, "inverse_szego_step");
  if (phi_next.degree() < 1) throw InvalidArgument("inverse_szego_step needs degree >= 1");
  const Rational a = -phi_next[0];
  if (is_unimodular(a))
    throw UnimodularConstantTerm("|Phi(0)| = 1 for " + phi_next.to_string() + "; descent cannot continue");
  Poly phi = poly_divexact(phi_next + a * star(phi_next), Poly{Rational(0), 1 - a * a});
  return {std::move(phi), a};
}

std::vector<Rational> h_from_verblunsky(const std::vector<Rational>& a) {
  std::vector<Rational> h{Rational(1)};
  for (std::size_t k = 0; k + 1 < a.size(); ++k) h.push_back(h.back() * (1 - a[k] * a[k]));
  return h;
}

std::vector<Poly> phis_from_verblunsky(const std::vector<Rational>& a) {
  std::vector<Poly> phis{Poly::constant(1)};
  for (const auto& ak : a) phis.push_back(szego_step(phis.back(), ak));
  return phis;
}

PopucSystem popuc_from_moments(const MomentSequence& m, std::size_t point_count, const BuildOptions& options) {
  if (point_count == 0) throw InvalidArgument("a para-orthogonal system needs at least one point");
  if (m.max_index() < point_count)
    throw InsufficientMoments("need sigma_0..sigma_" + std::to_string(point_count) + ", have sigma_0..sigma_" +
                              std::to_string(m.max_index()));
  const std::size_t big_n = point_count - 1;

  std::vector<Rational> delta = toeplitz_minors(m, point_count);
  for (std::size_t k = 0; k < delta.size(); ++k)
    if (delta[k] <= 0)
      throw SingularMoment("Delta_" + std::to_string(k + 1) + " = " + to_string(delta[k]) + " is not positive (" +
                           m.provenance() + ")");

  // Levinson: a_n = <zΦ_n, 1> / h_n, Φ_{n+1} = zΦ_n - a_n Φ_n^*.
  std::vector<Poly> phis{Poly::constant(1)};
  std::vector<Rational> a;
  std::vector<Rational> h{m.at(0)};
  for (std::size_t n = 0; n <= big_n; ++n) {
    const Poly& phi = phis.back();
    Rational num = 0;
    for (std::size_t k = 0; k < phi.coeffs().size(); ++k) num += phi.coeffs()[k] * m.at(static_cast<std::int64_t>(k) + 1);
    a.push_back(num / h.back());
    phis.push_back(szego_step(phi, a.back()));
    if (n < big_n) h.push_back(h.back() * (1 - a.back() * a.back()));
  }

  for (std::size_t n = 0; n <= big_n; ++n) {
    const Rational ratio = n == 0 ? delta[0] : delta[n] / delta[n - 1];
    if (ratio != h[n])
      throw InternalInconsistency("h_" + std::to_string(n) + ": Delta ratio " + to_string(ratio) +
                                  " != Verblunsky product " + to_string(h[n]));
  }

  PopucSystem sys;
  sys.family = "ramanujan";
  sys.source = m.provenance();
  sys.verblunsky = VerblunskySequence(a);  // TerminalMass if |a_N| != 1
  sys.phis = std::move(phis);
  sys.h = std::move(h);
  sys.delta = std::move(delta);
  sys.moments = MomentSequence({m.values().begin(), m.values().begin() + static_cast<std::ptrdiff_t>(point_count) + 1},
                               m.provenance());

  // Orthogonality of the ladder against the functional.
  std::vector<std::vector<Rational>> images;
  images.reserve(big_n + 1);
  for (std::size_t k = 0; k <= big_n; ++k) images.push_back(moment_apply(sys.moments, sys.phis[k], big_n + 1));
  for (std::size_t n = 0; n <= big_n; ++n)
    for (std::size_t k = 0; k <= big_n; ++k) {
      const Rational ip = dot(sys.phis[n], images[k]);
      if (ip != (n == k ? sys.h[n] : Rational(0)))
        throw InternalInconsistency("<Phi_" + std::to_string(n) + ", Phi_" + std::to_string(k) + "> = " + to_string(ip));
    }
  const auto terminal = moment_apply(sys.moments, sys.phis.back(), big_n + 1);
  for (std::size_t j = 0; j <= big_n; ++j)
    if (terminal[j] != 0) throw InternalInconsistency("Phi_{N+1} is not orthogonal to z^" + std::to_string(j));

  if (options.paranoid) {
    for (std::size_t n = 1; n <= point_count; ++n)
      if (determinant_phi(sys.moments, n) != sys.phis[n])
        throw InternalInconsistency("Szego ladder and determinant formula disagree at Phi_" + std::to_string(n));
  }
  return sys;
}

std::string SystemCheck::failures() const {
  std::string s;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add(monic_ladder, "monic ladder");
  add(szego_ladder, "Szego recurrence");
  add(verblunsky_from_phis, "a_n = -Phi_{n+1}(0)");
  add(orthogonality, "orthogonality");
  add(terminal_annihilates, "terminal orthogonality");
  add(h_routes_agree, "h_n routes");
  add(delta_matches_moments, "stored Delta");
  add(delta_positive, "Delta positivity");
  add(extension_singular, "Delta_{N+2} = 0");
  return s;
}

SystemCheck check_system(const PopucSystem& sys) {
  SystemCheck c;
  const std::size_t big_n = sys.n();
  const auto& a = sys.verblunsky.values();
  if (sys.phis.size() != big_n + 2 || sys.h.size() != big_n + 1 || sys.delta.size() != big_n + 1 ||
      sys.moments.max_index() < big_n + 1)
    return c;

  c.monic_ladder = true;
  for (std::size_t n = 0; n < sys.phis.size(); ++n)
    c.monic_ladder = c.monic_ladder && sys.phis[n].is_monic() && sys.phis[n].degree() == static_cast<int>(n);
  if (!c.monic_ladder) return c;

  c.szego_ladder = c.verblunsky_from_phis = true;
  for (std::size_t n = 0; n <= big_n; ++n) {
    c.szego_ladder = c.szego_ladder && szego_step(sys.phis[n], a[n]) == sys.phis[n + 1];
    c.verblunsky_from_phis = c.verblunsky_from_phis && a[n] == -sys.phis[n + 1][0];
  }

  std::vector<std::vector<Rational>> images;
  for (std::size_t k = 0; k <= big_n; ++k) images.push_back(moment_apply(sys.moments, sys.phis[k], big_n + 1));
  c.orthogonality = true;
  for (std::size_t n = 0; n <= big_n && c.orthogonality; ++n)
    for (std::size_t k = 0; k <= big_n; ++k)
      if (dot(sys.phis[n], images[k]) != (n == k ? sys.h[n] : Rational(0))) {
        c.orthogonality = false;
        break;
      }
  const auto terminal = moment_apply(sys.moments, sys.phis.back(), big_n + 1);
  c.terminal_annihilates = std::all_of(terminal.begin(), terminal.end(), [](const Rational& v) { return v == 0; });

  const auto minors = toeplitz_minors(sys.moments, big_n + 1);
  c.delta_matches_moments = minors == sys.delta;
  c.delta_positive = std::all_of(minors.begin(), minors.end(), [](const Rational& v) { return v > 0; });
  c.h_routes_agree = c.delta_positive;
  const auto product = h_from_verblunsky(a);
  for (std::size_t n = 0; n <= big_n && c.h_routes_agree; ++n) {
    const Rational ratio = n == 0 ? minors[0] : minors[n] / minors[n - 1];
    c.h_routes_agree = ratio == sys.h[n] && sys.moments.at(0) * product[n] == sys.h[n];
  }
  c.extension_singular = toeplitz_det(sys.moments, big_n + 2) == 0;
  return c;
}

bool same_system_data(const PopucSystem& a, const PopucSystem& b) {
  return a.phis == b.phis && a.verblunsky == b.verblunsky && a.h == b.h && a.delta == b.delta &&
         a.moments == b.moments;
}

}  // namespace ramopuc
