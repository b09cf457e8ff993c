#pragma once

// Genus-two theta constants with half-integer characteristics, the Frobenius
// relations among the ten even ones, level-two Satake coordinates and the
// Picard formulas for Rosenhain roots.

#include <array>
#include <cstdint>

#include "sextic/errors.hpp"
#include "sextic/exactmath/rational.hpp"

namespace sextic::theta {

inline constexpr int kDefaultRadius = 12;
inline constexpr double kTailWarning = 1e-12;

/// tau = [[tau1, z], [z, tau2]] in the Siegel upper half space.
class PeriodMatrix {
 public:
  /// Throws DomainError unless Im(tau1) Im(tau2) > Im(z)^2 and Im(tau2) > 0.
  PeriodMatrix(Complex tau1, Complex z, Complex tau2);

  Complex tau1() const noexcept { return tau1_; }
  Complex z() const noexcept { return z_; }
  Complex tau2() const noexcept { return tau2_; }

 private:
  Complex tau1_;
  Complex z_;
  Complex tau2_;
};

/// Half-integer characteristic [a1 a2; b1 b2], each entry 0 or 1/2, stored as
/// the numerators 0/1.
class ThetaCharacteristic {
 public:
  constexpr ThetaCharacteristic(int a1, int a2, int b1, int b2) : a1_(a1), a2_(a2), b1_(b1), b2_(b2) {
    if ((a1 | a2 | b1 | b2) & ~1) throw DomainError("characteristic entries must be 0 or 1/2");
  }

  constexpr int a1() const noexcept { return a1_; }
  constexpr int a2() const noexcept { return a2_; }
  constexpr int b1() const noexcept { return b1_; }
  constexpr int b2() const noexcept { return b2_; }

  /// e_*(gamma) = (-1)^(4 a.b) = +1.
  constexpr bool even() const noexcept { return ((a1_ * b1_ + a2_ * b2_) & 1) == 0; }

  friend constexpr bool operator==(const ThetaCharacteristic&, const ThetaCharacteristic&) = default;

 private:
  int a1_;
  int a2_;
  int b1_;
  int b2_;
};

/// The ten even characteristics in the fixed order theta_1 ... theta_10.
inline constexpr std::array<ThetaCharacteristic, 10> kEvenCharacteristics{{
    {0, 0, 0, 0},
    {0, 0, 1, 1},
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {1, 0, 0, 0},
    {1, 0, 0, 1},
    {0, 1, 0, 0},
    {1, 1, 0, 0},
    {0, 1, 1, 0},
    {1, 1, 1, 1},
}};

inline constexpr std::array<ThetaCharacteristic, 6> kOddCharacteristics{{
    {0, 1, 0, 1},
    {0, 1, 1, 1},
    {1, 0, 1, 0},
    {1, 1, 1, 0},
    {1, 0, 1, 1},
    {1, 1, 0, 1},
}};

struct ThetaValue {
  Complex value;
  /// Sum of |term| over the first shell outside the truncation box.
  double tail = 0.0;
  bool precision_warning = false;
};

/// Truncated series over u in Z^2 with max(|u1|, |u2|) <= radius, at z = 0.
/// Odd characteristics return exactly zero.
ThetaValue theta_constant(const ThetaCharacteristic& ch, const PeriodMatrix& tau, int radius = kDefaultRadius);

using ThetaFourth = std::array<Complex, 10>;

class ThetaConstants {
 public:
  explicit ThetaConstants(const std::array<Complex, 10>& values, double max_tail = 0.0, bool warning = false);

  /// theta_k, k = 1..10.
  Complex operator()(int k) const;
  const std::array<Complex, 10>& values() const noexcept { return values_; }
  double max_tail() const noexcept { return max_tail_; }
  bool precision_warning() const noexcept { return warning_; }

  ThetaFourth fourth_powers() const;

 private:
  std::array<Complex, 10> values_;
  double max_tail_;
  bool warning_;
};

ThetaConstants even_theta_constants(const PeriodMatrix& tau, int radius = kDefaultRadius);

struct FrobeniusReport {
  /// Six identities of the first block, then the two mixed relations;
  /// residuals are relative to max_k |theta_k|^4.
  std::array<double, 8> identities{};
  /// theta_6^4 ... theta_10^4 against their expressions in theta_1^4..theta_5^4.
  std::array<double, 5> reductions{};
  double max_identity = 0.0;
  double max_reduction = 0.0;
  bool passed = false;
};

FrobeniusReport check_frobenius(const ThetaConstants& tc, double tol);

/// Reduction residuals only; usable on bare fourth powers.
std::array<double, 5> reduction_residuals(const ThetaFourth& t4);

/// Level-two Satake coordinates x_1..x_6 as linear forms in theta fourth powers.
template <class T>
std::array<T, 6> satake_from_theta4(const std::array<T, 10>& t) {
  const T& f1 = t[0];
  const T& f2 = t[1];
  const T& f3 = t[2];
  const T& f4 = t[3];
  const T& f5 = t[4];
  const T two(2);
  const T three(3);
  return {
      T(-f1 + two * f2 + two * f3 - f4 + three * f5),
      T(-f1 + two * f2 - f3 - f4),
      T(-f1 - f2 - f3 + two * f4),
      T(two * f1 - f2 - f3 - f4),
      T(-f1 - f2 + two * f3 - f4),
      T(two * f1 - f2 - f3 + two * f4 - three * f5),
  };
}

/// Inverse of satake_from_theta4 on the image: the ten signed triple averages.
template <class T>
std::array<T, 10> theta4_from_satake(const std::array<T, 6>& x) {
  const T three(3);
  return {
      T(-(x[1] + x[2] + x[4]) / three), T(-(x[2] + x[3] + x[4]) / three), T(-(x[1] + x[2] + x[3]) / three),
      T(-(x[1] + x[3] + x[4]) / three), T((x[0] + x[2] + x[3]) / three),  T(-(x[0] + x[1] + x[4]) / three),
      T((x[0] + x[3] + x[4]) / three),  T((x[0] + x[1] + x[3]) / three),  T(-(x[0] + x[1] + x[2]) / three),
      T(-(x[0] + x[2] + x[4]) / three),
  };
}

struct SatakeCoordinates {
  std::array<Complex, 6> x{};

  Complex sum() const;
  /// s_j = sum_i x_i^j.
  Complex power_sum(int j) const;
};

SatakeCoordinates satake_from_theta(const ThetaConstants& tc);

using RosenhainTriple = std::array<Complex, 3>;

/// Squared-theta ratios of Picard's lemma. Throws DegeneratePoint when a
/// denominator is below min_denominator relative to max |theta|^4.
RosenhainTriple rosenhain_from_theta(const ThetaConstants& tc, double min_denominator = 1e-12);

/// The same roots from fourth powers only: 1/2 + (..)/(2 ..) ratios. Throws
/// DegeneratePoint when a denominator is below min_denominator relative to
/// max |theta^4|^2.
RosenhainTriple rosenhain_from_theta4(const ThetaFourth& t4, double min_denominator = 1e-12);

}  // namespace sextic::theta
