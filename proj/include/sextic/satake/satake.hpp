#pragma once

// Power sums of the Satake coordinates, the Satake sextic and its
// discriminant, reconstruction of Rosenhain roots from Satake roots, and the
// moduli map Phi taking a genus-two curve to its Satake sextic.

#include <array>
#include <optional>

#include "sextic/exactmath/polynomial.hpp"
#include "sextic/exactmath/roots.hpp"
#include "sextic/invariants/igusa.hpp"
#include "sextic/thetafn/theta.hpp"

namespace sextic {

/// s_1 .. s_6; s[j - 1] = sum_i x_i^j.
template <class T>
struct PowerSums {
  std::array<T, 6> s{};

  const T& operator()(int j) const { return s.at(static_cast<std::size_t>(j - 1)); }
  friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

template <class T>
PowerSums<T> power_sums_from_igusa(const IgusaTuple<T>& I) {
  const T s2 = T(T(3) * I.I4);
  const T w = T(I.I2 * I.I4 - T(3) * I.I6);
  const T s3 = T(T(3) * w / T(2));
  const T s5 = T(T(15) * I.I4 * w / T(8) + T(1215) * I.I10);
  const T s6 = T(T(27) * I.I4 * I.I4 * I.I4 / T(16) + T(3) * w * w / T(8) + T(729) * I.I2 * I.I10 / T(4));
  return {{T(0), s2, s3, T(s2 * s2 / T(4)), s5, s6}};
}

/// The same power sums written in psi4, psi6, chi10, chi12; defined on H1 too.
PowerSums<Rational> power_sums_from_siegel(const SiegelForms& s);

/// Throws InversionSingular when 5 s2 s3 - 12 s5 = 0.
IgusaInvariants igusa_from_power_sums(const PowerSums<Rational>& s);

/// Complete Bell polynomial B_i(z_1, ..., z_i), 1 <= i <= 6.
Rational complete_bell(int i, const std::array<Rational, 6>& z);

/// x^6 + sum_i (-1)^i / i! B_i(Z) x^(6-i) with Z = (s1, -s2, 2! s3, -3! s4, 4! s5, -5! s6).
RationalPolynomial satake_sextic_bell(const PowerSums<Rational>& s);

/// (x^3 - s2/4 x - s3/6)^2 + (s2 s3/12 - s5/5) x + s2^3/96 + s3^2/36 - s6/6.
RationalPolynomial satake_sextic_closed(const PowerSums<Rational>& s);

/// Both constructions; throws IdentityViolation when they differ, which
/// happens for power sums off the Igusa quartic (s1 != 0 or s2^2 != 4 s4).
RationalPolynomial satake_sextic(const PowerSums<Rational>& s);

/// (x^3 - 3 psi4 x - 2 psi6)^2 + 2^14 3^5 (chi10 x - 3 chi12).
RationalPolynomial satake_sextic_siegel(const SiegelForms& s);

struct DiscriminantIdentity {
  Rational discriminant;
  Rational Q;
  bool holds = false;
};

/// disc(f) against 2^52 3^21 Q(s); throws IdentityViolation on mismatch.
DiscriminantIdentity check_discriminant_identity(const RationalPolynomial& f, const SiegelForms& s);

DiscriminantIdentity satake_discriminant_identity(const IgusaInvariants& I);

using RootOrdering = std::array<int, 6>;

inline constexpr double kMinPicardDenominator = 1e-6;

/// Rosenhain roots from Satake roots labelled by ordering (x_k = roots[ordering[k]]).
/// Throws OrderingRejected when a Picard denominator is below min_denominator
/// relative to max |theta^4|^2, DegeneratePoint when all roots vanish, and
/// DomainError when the roots do not sum to zero.
theta::RosenhainTriple reconstruct_from_satake_roots(const std::array<Complex, 6>& roots, const RootOrdering& ordering,
                                                     double min_denominator = kMinPicardDenominator);

struct Reconstruction {
  theta::RosenhainTriple lambda{};
  RootOrdering ordering{};
  int attempts = 0;
};

/// Tries orderings in lexicographic order starting from the identity.
Reconstruction reconstruct_with_search(const std::array<Complex, 6>& roots,
                                       double min_denominator = kMinPicardDenominator);

/// Weight-zero invariants of a complex tuple: the absolute invariants when
/// I2 != 0, otherwise (I4 I6 / I10, I4^5 / I10^2, 0).
std::array<Complex, 3> projective_signature(const IgusaTuple<Complex>& I);

struct RoundTrip {
  std::array<Complex, 6> satake_roots{};
  Reconstruction reconstruction;
  std::array<Complex, 3> original{};
  std::array<Complex, 3> recovered{};
  double max_rel_err = 0.0;
};

/// Rosenhain curve -> Satake sextic -> numeric roots -> theta fourth powers ->
/// Picard ratios -> invariants, compared with the starting invariants.
RoundTrip satake_roundtrip(const RosenhainCurve& c, const RootOptions& options = {});

struct RescalingFit {
  /// r^2 in s_j(theta) = r^(2j) s_j(model).
  Complex r2{};
  /// Relative residuals for j = 2, 3, 5, 6.
  std::array<double, 4> residuals{};
  double max_residual = 0.0;
};

RescalingFit fit_power_sum_rescaling(const PowerSums<Complex>& from_theta, const PowerSums<Complex>& model);

struct ThetaLoop {
  theta::ThetaConstants constants;
  theta::FrobeniusReport frobenius;
  theta::SatakeCoordinates satake;
  PowerSums<Complex> power_sums;
  double sum_residual = 0.0;
  /// |s2^2 - 4 s4| / |s2|^2.
  double quartic_residual = 0.0;
  theta::RosenhainTriple lambda{};
  theta::RosenhainTriple lambda4{};
  RescalingFit fit;
};

/// Everything reachable from tau numerically. Throws DegeneratePoint off the
/// domain of the Picard ratios.
ThetaLoop theta_closed_loop(const theta::PeriodMatrix& tau, int radius = theta::kDefaultRadius,
                            double frobenius_tol = 1e-10);

struct PhiDiagnostics {
  Rational K;
  Rational L;
  Rational M;
  Rational psi4_prime;
  Rational psi6_prime;
  Rational chi10_prime;
  Rational chi12_prime;
  Rational Q;
  Rational Q_prime;
  /// Q(tau') / (2^210 3^132 Q(tau)^3).
  Rational N_squared;
  std::optional<Rational> N;
  bool chi10_relation = false;
  bool chi12_relation = false;
  /// Q I2^-30 = 2^-63 j1^-15 q.
  bool q_relation = false;
  /// m, k, l recovered from M, K, L match the polynomial factors of g1, g2, g3.
  bool proof_form = false;
  /// m^2 (l + 4 k m) / (2187 q).
  Rational j3_proof;
  bool j3_forms_agree = false;
};

struct PhiResult {
  AbsoluteInvariants j_image;
  AbsoluteInvariants oracle;
  Rational q;
  RationalPolynomial sextic;
  PhiDiagnostics diagnostics;
};

/// The appendix polynomials of the map.
Rational phi_q(const AbsoluteInvariants& j);
Rational phi_m(const AbsoluteInvariants& j);
Rational phi_g1(const AbsoluteInvariants& j);
Rational phi_g2(const AbsoluteInvariants& j);
Rational phi_g3(const AbsoluteInvariants& j);

/// Polynomial path, oracle path through the Satake sextic, and diagnostics.
/// Throws DomainError when j1 = 0, DivisorError when q = 0, and
/// IdentityViolation when the two paths disagree.
PhiResult phi_map(const AbsoluteInvariants& j);

/// As above; the Q relation is checked against this tuple (I10 != 0, I2 != 0).
PhiResult phi_map(const IgusaInvariants& I);

/// Throws IdentityViolation unless the two triples are equal.
void compare_phi_paths(const AbsoluteInvariants& polynomial_path, const AbsoluteInvariants& oracle_path);

}  // namespace sextic
