#pragma once

#include <string>
#include <vector>

#include "ramopuc/opuc.hpp"
#include "ramopuc/poly.hpp"

namespace ramopuc {

/// ta_n = -a_N·a_{N-n-1}, n = 0..N, with a_{-1} = -1. Involutive.
/// Throws TerminalMass if |a_N| ≠ 1 (enforced by VerblunskySequence itself).
VerblunskySequence mirror_dual(const VerblunskySequence& a);

/// Sturmian system ending in charpoly: Φ_{N+1} = charpoly,
/// Φ_N = charpoly'/(N+1), then inverse Szegő descent to Φ_0.
/// Throws InvalidCharacteristic if the pair (Φ_{N+1}, Φ_N) is not one Szegő
/// step apart or the descent fails; InteriorCoefficientOutOfRange if some
/// |a_k| ≥ 1 for k < N.
PopucSystem sturmian_from_charpoly(const Poly& charpoly, const std::string& source = "charpoly");
PopucSystem sturmian_from_spec(const KroneckerSpec& spec, const BuildOptions& options = {});

/// Equal-mass system on the roots of the Kronecker polynomial of spec.
/// Throws InternalInconsistency if the terminal polynomial does not come out
/// as kronecker_poly(spec).
PopucSystem ramanujan_from_charpoly(const KroneckerSpec& spec, const BuildOptions& options = {});

struct DualChecks {
  bool shared_charpoly = false;    // both ladders end in K(z)
  bool mirror_relation = false;    // mirror_dual(a) = ta
  bool mirror_involution = false;  // mirror_dual(mirror_dual(a)) = a
  bool sturm_condition = false;    // (N+1)·tΦ_N = K'
  bool h_terminal_equal = false;   // th_N = h_N
  bool equal_mass_moments = false; // Ramanujan moments = power sums of K / deg

  bool ok() const {
    return shared_charpoly && mirror_relation && mirror_involution && sturm_condition && h_terminal_equal &&
           equal_mass_moments;
  }
  std::string failures() const;
};

struct DualPair {
  KroneckerSpec spec;
  PopucSystem ramanujan;
  PopucSystem sturmian;
  Poly charpoly;
  DualChecks checks;
};

DualChecks check_dual(const KroneckerSpec& spec, const PopucSystem& ramanujan, const PopucSystem& sturmian);

/// Builds both systems and runs check_dual. Throws DualityViolation if any
/// exact assertion fails.
DualPair build_dual_pair(const KroneckerSpec& spec, const BuildOptions& options = {});

/// Unit-circle root at angle 2π·numerator/order.
struct RootAngle {
  std::uint64_t numerator = 0;
  std::uint64_t order = 1;
};

/// Roots of the Kronecker polynomial, enumerated by angle: e^{2πis/m} for
/// each order m and each s in [0, m) coprime to m. Never iterates.
std::vector<RootAngle> kronecker_root_angles(const KroneckerSpec& spec);

/// Root values to the requested number of decimal digits, as (re, im)
/// decimal strings. Up to 15 digits uses double; beyond, a 100-digit binary
/// float.
struct NumericRoot {
  RootAngle angle;
  std::string re;
  std::string im;
};
struct NumericRootSet {
  Poly source;
  unsigned digits = 15;
  std::vector<NumericRoot> roots;
};
NumericRootSet numeric_roots(const KroneckerSpec& spec, unsigned digits = 15);

struct RootResidual {
  RootAngle angle;
  double on_circle = 0;        // ||z_s| - 1|
  double charpoly_value = 0;   // |K(z_s)|
  double ramanujan_weight = 0; // relative |w_s - 1/(N+1)|, w_s from h_N/(conj(K'(z_s))·Φ_N(z_s))
  double sturmian_imag = 0;    // |Im tw_s| / |tw_s| for tw_s = Φ_N(z_s)/K'(z_s)
  double sturmian_routes = 0;  // relative gap to th_N/(conj(K'(z_s))·tΦ_N(z_s))
  double dual_weight = 0;      // relative |tΦ_N(z_s)/K'(z_s) - 1/(N+1)|
  double product = 0;          // relative |w_s·tw_s·|K'(z_s)|² - h_N|
  double w = 0;                // w_s (real part)
  double tw = 0;               // tw_s (real part)
  bool positive = false;       // tw_s > 0
};

struct WeightReport {
  unsigned digits = 12;
  double tolerance = 1e-12;
  std::vector<RootResidual> roots;
  double sturmian_sum_residual = 0;  // |Σ tw_s - 1|
  double max_residual = 0;
  bool passed = false;

  /// Throws WeightCheckFailure listing per-root residuals when !passed.
  void require() const;
};

/// Floating-point corroboration at the roots of the characteristic
/// polynomial, to a relative tolerance of 10^-digits. digits ≤ 15 runs in
/// double precision, larger values (up to 90) in 100-digit arithmetic.
WeightReport verify_weights(const DualPair& pair, unsigned digits = 12);

}  // namespace ramopuc
