#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramopuc/poly.hpp"
#include "ramopuc/rational.hpp"

namespace ramopuc {

/// Trigonometric moments σ_0..σ_L of a real measure on the unit circle.
/// σ_{-n} = σ_n, and σ_0 > 0 is enforced at construction.
class MomentSequence {
 public:
  MomentSequence() = default;
  MomentSequence(std::vector<Rational> sigma, std::string provenance);

  const std::vector<Rational>& values() const { return sigma_; }
  const std::string& provenance() const { return provenance_; }
  /// Largest index L available.
  std::size_t max_index() const { return sigma_.size() - 1; }
  /// σ_n for |n| ≤ L. Throws InsufficientMoments otherwise.
  const Rational& at(std::int64_t n) const;

  friend bool operator==(const MomentSequence& a, const MomentSequence& b) { return a.sigma_ == b.sigma_; }

 private:
  std::vector<Rational> sigma_{Rational(1)};
  std::string provenance_ = "explicit";
};

/// a_0..a_N with |a_k| < 1 for k < N and |a_N| = 1.
class VerblunskySequence {
 public:
  VerblunskySequence() = default;
  /// Throws InteriorCoefficientOutOfRange or TerminalMass.
  explicit VerblunskySequence(std::vector<Rational> a);

  const std::vector<Rational>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }
  /// N, the index of the terminal unimodular parameter.
  std::size_t terminal_index() const { return a_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return a_[k]; }
  const Rational& terminal() const { return a_.back(); }

  friend bool operator==(const VerblunskySequence&, const VerblunskySequence&) = default;

 private:
  std::vector<Rational> a_{Rational(-1)};
};

/// A complete para-orthogonal ladder Φ_0..Φ_{N+1} with its data.
struct PopucSystem {
  std::string family;            // "ramanujan", "sturmian", or a closed-form family name
  std::string source;            // what generated it, e.g. "cyclotomic:5", "kronecker:1,2,3"
  std::vector<Poly> phis;        // Φ_0..Φ_{N+1}, monic, deg Φ_n = n
  VerblunskySequence verblunsky; // a_0..a_N
  std::vector<Rational> h;       // h_0..h_N
  std::vector<Rational> delta;   // Δ_1..Δ_{N+1}
  MomentSequence moments;        // σ_0..σ_{N+1}

  /// N
  std::size_t n() const { return verblunsky.terminal_index(); }
  const Poly& charpoly() const { return phis.back(); }

  friend bool operator==(const PopucSystem&, const PopucSystem&) = default;
};

MomentSequence moments_from_cyclotomic(std::uint64_t m, std::size_t length);
MomentSequence moments_from_kronecker(const KroneckerSpec& spec, std::size_t length);

/// Equal-mass moments (Σ_s z_s^n)/deg over the roots of a monic polynomial,
/// via Newton's identities. Throws InvalidArgument for non-monic input or a
/// zero constant term.
MomentSequence moments_from_power_sums(const Poly& charpoly, std::size_t length);

/// Moments σ_0..σ_{N+1} (σ_0 = 1) of the measure whose Verblunsky parameters
/// are a_0..a_N, by running the Levinson relation backwards.
MomentSequence moments_from_verblunsky(const std::vector<Rational>& a, std::string provenance);

/// Δ_n = det[σ_{j-i}]_{i,j<n}, Δ_0 = 1. Exact fraction-free elimination.
Rational toeplitz_det(const MomentSequence& m, std::size_t n);

/// Δ_1..Δ_n from a single elimination pass.
std::vector<Rational> toeplitz_minors(const MomentSequence& m, std::size_t n);

/// Φ_n as the bordered Toeplitz determinant divided by Δ_n (cofactor
/// expansion along the row 1, z, ..., z^n). Throws SingularMoment if Δ_n = 0.
Poly determinant_phi(const MomentSequence& m, std::size_t n);

/// Σ_{j,k} f_j g_k σ_{j-k}
Rational inner_product(const MomentSequence& m, const Poly& f, const Poly& g);

/// Φ^*(z) = z^n Φ(1/z) for n = deg Φ.
Poly star(const Poly& phi);

/// z·Φ - a·Φ^*. Throws InvalidArgument unless phi is monic.
Poly szego_step(const Poly& phi, const Rational& a);

struct SzegoDescent {
  Poly phi;
  Rational a;
};

/// Recovers (Φ_n, a_n) from Φ_{n+1}: a_n = -Φ_{n+1}(0) and
/// Φ_n = (Φ_{n+1} + a_n Φ_{n+1}^*) / (z(1 - a_n²)).
/// Throws UnimodularConstantTerm when |Φ_{n+1}(0)| = 1.
SzegoDescent inverse_szego_step(const Poly& phi_next);

struct BuildOptions {
  /// Also compare each Φ_n with the determinant formula.
  bool paranoid = false;
};

/// Builds the para-orthogonal system with N + 1 = point_count points from
/// σ_0..σ_{N+1}. Every Δ_k (k ≤ N+1) must be positive (SingularMoment) and
/// the last Verblunsky parameter unimodular (TerminalMass). Orthogonality and
/// the two h_n routes are always verified (InternalInconsistency).
PopucSystem popuc_from_moments(const MomentSequence& m, std::size_t point_count,
                               const BuildOptions& options = {});

/// Field-by-field exact audit of a system.
struct SystemCheck {
  bool monic_ladder = false;      // deg Φ_n = n, monic
  bool szego_ladder = false;      // Φ_{n+1} = zΦ_n - a_n Φ_n^*
  bool verblunsky_from_phis = false;  // a_n = -Φ_{n+1}(0)
  bool orthogonality = false;     // <Φ_n, Φ_k> = h_n δ_nk, n,k ≤ N
  bool terminal_annihilates = false;  // <Φ_{N+1}, z^j> = 0, j ≤ N
  bool h_routes_agree = false;    // Δ_{n+1}/Δ_n = Π(1 - a_k²)
  bool delta_matches_moments = false;  // stored Δ_n equal the Toeplitz minors
  bool delta_positive = false;
  bool extension_singular = false;  // Δ_{N+2} = 0

  bool ok() const {
    return monic_ladder && szego_ladder && verblunsky_from_phis && orthogonality &&
           terminal_annihilates && h_routes_agree && delta_matches_moments && delta_positive &&
           extension_singular;
  }
  std::string failures() const;
};

SystemCheck check_system(const PopucSystem& system);

/// Exact equality of the mathematical content (ladder, Verblunsky
/// parameters, h, Δ, moments), ignoring family and source labels.
bool same_system_data(const PopucSystem& a, const PopucSystem& b);

/// Π_{k<n} (1 - a_k²) for n = 0..N.
std::vector<Rational> h_from_verblunsky(const std::vector<Rational>& a);

/// Φ_0..Φ_{N+1} by forward Szegő steps.
std::vector<Poly> phis_from_verblunsky(const std::vector<Rational>& a);

}  // namespace ramopuc
